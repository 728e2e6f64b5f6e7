"""Exception types raised by the analysis routines."""


class SemigroupError(Exception):
    """Base class for every error raised by this package."""


class AssociativityError(SemigroupError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        i, j, k = self.triple
        super().__init__(f"table is not associative at ({i}, {j}, {k})")


class BudgetExceeded(SemigroupError):
    pass


class NotSimpleError(SemigroupError):
    pass


class NullFactorError(NotSimpleError):
    pass


class RegularityError(SemigroupError):
    pass


class NotDiagonalError(SemigroupError):
    pass


class NotGroupHClassError(SemigroupError):
    pass


class NotNormalError(SemigroupError):
    pass


class NotSemisimpleError(SemigroupError):
    pass


class NotCompletelyRegularError(SemigroupError):
    pass


class WellDefinednessError(SemigroupError):
    pass


class TheoremViolation(SemigroupError):
    """A proved structural statement failed on a concrete input; always a bug."""


class FormatError(SemigroupError):
    pass
