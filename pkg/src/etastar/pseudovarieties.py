"""Structural predicates and membership in the nilpotency-related pseudovarieties."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import NotCompletelyRegularError, TheoremViolation
from .etastar import eta_star, g_eta_star
from .green import FactorKind, GreenData, compute_green, principal_series
from .groups import is_nilpotent_group, maximal_subgroup
from .malcev import is_malcev_nilpotent, is_neumann_taylor, is_positively_engel
from .rees import is_cs_diagonal, rees_coordinates
from .representation import upper_nonnilpotent_graph
from .semigroup import (Congruence, FiniteSemigroup, SemigroupMorphism, generate_subsemigroup,
                        quotient, restrict)

PSEUDOVARIETIES = ("MN", "NT", "PE", "BGNIL", "BI", "EDS", "EUNNG")


def inverses_of(S: FiniteSemigroup, x: int) -> frozenset[int]:
    t = S.table
    return frozenset(y for y in S.elements if t[t[x][y]][x] == x and t[t[y][x]][y] == y)


def _two_inverses(S: FiniteSemigroup) -> Optional[tuple[int, tuple[int, int]]]:
    for x in S.elements:
        inv = sorted(inverses_of(S, x))
        if len(inv) > 1:
            return x, (inv[0], inv[1])
    return None


def is_block_group(S: FiniteSemigroup) -> bool:
    return _two_inverses(S) is None


def is_regular_semigroup(S: FiniteSemigroup) -> bool:
    return all(inverses_of(S, x) for x in S.elements)


def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    return is_block_group(S) and is_regular_semigroup(S)


def is_completely_regular(S: FiniteSemigroup, green: Optional[GreenData] = None) -> bool:
    """Every x is H-related to x², i.e. lies in a subgroup."""
    green = green or compute_green(S)
    return all(green.H.same(x, S.table[x][x]) for x in S.elements)


def is_clifford(S: FiniteSemigroup) -> bool:
    return is_inverse_semigroup(S) and is_completely_regular(S)


def maximal_subgroups(S: FiniteSemigroup, green: Optional[GreenData] = None):
    """One maximal subgroup per idempotent, as (idempotent, GroupData)."""
    green = green or compute_green(S)
    return [(e, maximal_subgroup(S, green.H.block(e))) for e in S.idempotents()]


@dataclass(frozen=True)
class SemilatticeDecomposition:
    semilattice: FiniteSemigroup
    projection: SemigroupMorphism
    components: tuple[tuple[int, ...], ...]  # component k maps to element k of the semilattice
    # per component: (|G_{η*}| of the component, order of its image group in S/η*)
    group_orders: tuple[tuple[int, int], ...]


def semilattice_decomposition(S: FiniteSemigroup) -> SemilatticeDecomposition:
    """S/J as a semilattice of completely simple components, with the η*-image audit.

    For each component C the restriction of η*(S) must be coarser than η*(C),
    and the image of C in S/η* must be a group onto which C/η*(C) maps.
    """
    green = compute_green(S)
    if not is_completely_regular(S, green):
        raise NotCompletelyRegularError("some element lies in no subgroup")
    J = green.J
    if not J.is_compatible(S):
        raise TheoremViolation("J is not a congruence on a completely regular semigroup")
    Y, proj = quotient(S, J)
    if not all(Y.table[a][b] == Y.table[b][a] and Y.table[a][a] == a
               for a in Y.elements for b in Y.elements):
        raise TheoremViolation("S/J is not a semilattice")
    eta = eta_star(S).congruence
    comps = tuple(J.classes)
    orders = []
    for comp in comps:
        C, ids = restrict(S, comp)
        series = principal_series(C)
        if len(series.factors) != 1 or series.factors[0].kind is not FactorKind.COMPLETELY_SIMPLE:
            raise TheoremViolation("component is not completely simple")
        ge = g_eta_star(rees_coordinates(series.factors[0]))
        inner = eta_star(C).congruence
        outer = Congruence.from_labels([eta.class_of(x) for x in ids])
        if not inner.refines(outer):
            raise TheoremViolation("η* of S does not contain η* of a component")
        image, _ = quotient(C, outer)
        if not image.is_group():
            raise TheoremViolation("component image in S/η* is not a group")
        if inner.class_count != ge.group.order or ge.group.order % image.order:
            raise TheoremViolation("component image is not a quotient of its G_{η*}")
        orders.append((ge.group.order, image.order))
    return SemilatticeDecomposition(Y, proj, comps, tuple(orders))


def is_eds(S: FiniteSemigroup) -> bool:
    """Each regular J-class has complete bipartite incidence components."""
    return all(is_cs_diagonal(rees_coordinates(f)) for f in principal_series(S).factors
               if f.kind is not FactorKind.NULL)


def ds_violation(S: FiniteSemigroup) -> Optional[tuple[int, int]]:
    """Idempotents e, f in one J-class with ef or fe outside it, if any."""
    green = compute_green(S)
    t = S.table
    idem = S.idempotents()
    for e in idem:
        for f in idem:
            if green.J.same(e, f) and not (green.J.same(t[e][f], e) and green.J.same(t[f][e], e)):
                return e, f
    return None


def idempotent_generated_in_ds(S: FiniteSemigroup) -> bool:
    """⟨E(S)⟩ ∈ DS, the defining form of EDS."""
    T, _ = restrict(S, generate_subsemigroup(S, S.idempotents()))
    return ds_violation(T) is None


@dataclass(frozen=True)
class MembershipReport:
    name: str
    verdict: bool
    witness: object = None
    detail: dict = field(default_factory=dict)

    def as_dict(self, S: FiniteSemigroup) -> dict:
        w = self.witness
        if hasattr(w, "as_dict"):
            w = w.as_dict(S)
        return {"verdict": self.verdict, "witness": w, **self.detail}


def _subgroup_check(S: FiniteSemigroup, name: str, accept) -> MembershipReport:
    # Every subgroup sits inside a maximal one, and both predicates used here
    # (nilpotent, trivial) pass to subgroups, so maximal subgroups suffice.
    pair = _two_inverses(S)
    if pair is not None:
        x, (y1, y2) = pair
        return MembershipReport(name, False, {"element": S.label(x), "inverses": [S.label(y1), S.label(y2)]})
    for e, G in maximal_subgroups(S):
        if not accept(G):
            return MembershipReport(name, False, {"idempotent": S.label(e), "subgroup_order": G.order})
    return MembershipReport(name, True)


def membership(S: FiniteSemigroup, which: str) -> MembershipReport:
    which = which.upper()
    if which == "MN":
        r = is_malcev_nilpotent(S)
        return MembershipReport("MN", r.verdict, r.witness, {"class": r.class_n})
    if which == "NT":
        r = is_neumann_taylor(S)
        return MembershipReport("NT", r.verdict, r.witness, {"class": r.class_n})
    if which == "PE":
        r = is_positively_engel(S)
        return MembershipReport("PE", r.verdict, r.witness, {"class": r.class_n})
    if which == "BGNIL":
        return _subgroup_check(S, "BGNIL", is_nilpotent_group)
    if which == "BI":
        return _subgroup_check(S, "BI", lambda G: G.is_trivial())
    if which == "EDS":
        for p, f in enumerate(principal_series(S).factors):
            if f.kind is not FactorKind.NULL and not is_cs_diagonal(rees_coordinates(f)):
                return MembershipReport("EDS", False, {"factor": p})
        return MembershipReport("EDS", True)
    if which == "EUNNG":
        g = upper_nonnilpotent_graph(S)
        edge = g.edge_list()[0] if g.edges else None
        return MembershipReport("EUNNG", not g.edges,
                                [S.label(edge[0]), S.label(edge[1])] if edge else None)
    raise ValueError(f"unknown pseudovariety {which!r}; choose from {', '.join(PSEUDOVARIETIES)}")


def memberships(S: FiniteSemigroup, which: Iterable[str] = PSEUDOVARIETIES) -> dict[str, MembershipReport]:
    return {w: membership(S, w) for w in which}


IMPLICATIONS = (("MN", "EUNNG"), ("EUNNG", "PE"), ("PE", "BGNIL"), ("BI", "PE"))
# (inside, outside): a member of the first class that misses the second shows the inclusion is proper
STRICTNESS = (("EUNNG", "MN"), ("PE", "EUNNG"), ("BGNIL", "PE"), ("MN", "BI"), ("PE", "BI"))


@dataclass(frozen=True)
class ContainmentReport:
    verdicts: dict[str, dict[str, bool]]
    violations: tuple[tuple[str, str, str], ...]  # (member, premise, conclusion)
    witnesses: dict[str, str]  # "A\\B" -> member name or "not found in corpus"

    def as_dict(self) -> dict:
        return {"members": len(self.verdicts),
                "violations": [list(v) for v in self.violations],
                "strictness_witnesses": dict(self.witnesses)}


AUDITED = ("MN", "EUNNG", "PE", "BGNIL", "BI")


def audit_member(name: str, S: FiniteSemigroup) -> tuple[dict[str, bool], list[tuple[str, str, str]]]:
    """Verdicts and implication violations for one member; independent of the rest of the corpus."""
    v = {w: membership(S, w).verdict for w in AUDITED}
    violations = []
    if is_inverse_semigroup(S) and not is_block_group(S):
        violations.append((name, "inverse", "block group"))
    if is_clifford(S) and not (is_inverse_semigroup(S) and is_completely_regular(S)):
        violations.append((name, "Clifford", "inverse and completely regular"))
    for a, b in IMPLICATIONS:
        if v[a] and not v[b]:
            violations.append((name, a, b))
    return v, violations


def containment_report(rows: Sequence[tuple[str, dict[str, bool], list]]) -> ContainmentReport:
    """Combine per-member ``(name, verdicts, violations)`` rows into a report."""
    verdicts = {name: v for name, v, _ in rows}
    violations = tuple(x for _, _, vs in rows for x in vs)
    witnesses = {}
    for inside, outside in STRICTNESS:
        found = next((n for n, v in verdicts.items() if v[inside] and not v[outside]), None)
        witnesses[f"{inside}\\{outside}"] = found or "not found in corpus"
    return ContainmentReport(verdicts, violations, witnesses)


def containment_audit(corpus: Sequence[tuple[str, FiniteSemigroup]]) -> ContainmentReport:
    """Check the inclusion chain on every member and look for proper-inclusion witnesses."""
    return containment_report([(name, *audit_member(name, S)) for name, S in corpus])
