"""The least congruence with nilpotent quotient, its Rees-matrix form, and η*-roots."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (BudgetExceeded, NotSemisimpleError, NullFactorError,
                     TheoremViolation, WellDefinednessError)
from .green import FactorKind, PrincipalSeries, is_semisimple, principal_series
from .groups import GroupData, group_quotient, nilpotent_residual, normal_closure
from .malcev import eta_pairs, nilpotency_class
from .rees import (ComponentPartition, ReesStructure, build_rees, component_partition,
                   is_cs_diagonal, rees_coordinates, rees_element_ids)
from .semigroup import (Congruence, FiniteSemigroup, SemigroupMorphism, congruence_closure,
                        quotient, restricted_growth_strings)

BRUTEFORCE_CAP = 8


@dataclass(frozen=True)
class EtaStarResult:
    congruence: Congruence
    quotient: FiniteSemigroup
    projection: SemigroupMorphism

    @property
    def class_count(self) -> int:
        return self.congruence.class_count


def eta_star(S: FiniteSemigroup) -> EtaStarResult:
    """Congruence generated by the pairs lying on cycles of the pair graph.

    The quotient is checked to be nilpotent before returning.
    """
    c = congruence_closure(S, eta_pairs(S))
    Q, proj = quotient(S, c)
    if nilpotency_class(Q) is None:
        raise TheoremViolation("quotient by the cycle-pair congruence is not nilpotent")
    return EtaStarResult(c, Q, proj)


def eta_star_bruteforce(S: FiniteSemigroup, cap: int = BRUTEFORCE_CAP) -> Congruence:
    """Meet of every congruence whose quotient is nilpotent, found by listing all partitions."""
    if S.order > cap:
        raise BudgetExceeded(f"partition enumeration is capped at order {cap}")
    meet = Congruence.universal(S.order)
    for rgs in restricted_growth_strings(S.order):
        c = Congruence.from_labels(rgs)
        if meet.refines(c):
            continue  # meeting with c changes nothing
        if not c.is_compatible(S):
            continue
        if nilpotency_class(quotient(S, c)[0]) is not None:
            meet = meet.meet(c)
    if not meet.is_compatible(S) or nilpotency_class(quotient(S, meet)[0]) is None:
        raise TheoremViolation("meet of nilpotent-quotient congruences is not one itself")
    return meet


@dataclass(frozen=True)
class GEtaStar:
    group: GroupData
    phi: dict[int, int]  # element of r.group -> element of group.ambient
    partition: ComponentPartition
    source: ReesStructure

    def _ratio_col(self, row: int, c1: int, c2: int) -> int:
        P, G = self.source.P, self.source.G
        return self.phi[G.mul(G.inv(P[row][c1]), P[row][c2])]

    def _ratio_row(self, col: int, d1: int, d2: int) -> int:
        P, G = self.source.P, self.source.G
        return self.phi[G.mul(P[d2][col], G.inv(P[d1][col]))]

    def beta(self, a: int, c1: int, c2: int) -> int:
        """Image of p_{β,c1}⁻¹ p_{β,c2} for columns c1, c2 of class ``a``."""
        return self._ratio_col(self.partition.least_row(a), c1, c2)

    def alpha(self, b: int, d1: int, d2: int) -> int:
        """Image of p_{d2,α} p_{d1,α}⁻¹ for rows d1, d2 of class ``b``."""
        return self._ratio_row(self.partition.least_column(b), d1, d2)

    def verify(self) -> None:
        part = self.partition
        H = self.group
        for a, cols in enumerate(part.column_classes):
            rows = part.row_classes[a]
            for c1 in cols:
                for c2 in cols:
                    want = self.beta(a, c1, c2)
                    if any(self._ratio_col(r, c1, c2) != want for r in rows):
                        raise WellDefinednessError("column ratio depends on the chosen row")
                    if c1 == c2 and want != H.identity:
                        raise WellDefinednessError("column cocycle is not normalized")
                    for c3 in cols:
                        if H.mul(self.beta(a, c3, c1), want) != self.beta(a, c3, c2):
                            raise WellDefinednessError("column cocycle law fails")
            for d1 in rows:
                for d2 in rows:
                    want = self.alpha(a, d1, d2)
                    if any(self._ratio_row(c, d1, d2) != want for c in cols):
                        raise WellDefinednessError("row ratio depends on the chosen column")
                    if d1 == d2 and want != H.identity:
                        raise WellDefinednessError("row cocycle is not normalized")
                    for d3 in rows:
                        if H.mul(want, self.alpha(a, d3, d1)) != self.alpha(a, d3, d2):
                            raise WellDefinednessError("row cocycle law fails")


def g_eta_star(r: ReesStructure) -> GEtaStar:
    """G modulo its nilpotent residual and the same-class ratio relators."""
    part = component_partition(r)  # raises NotDiagonalError
    G = r.G
    P = r.P
    inv, mul = G.inv, G.mul
    relators = set(nilpotent_residual(G))
    for a, cols in enumerate(part.column_classes):
        rows = part.row_classes[a]
        base_r, base_c = rows[0], cols[0]
        for c1 in cols:
            for c2 in cols:
                ref = mul(inv(P[base_r][c1]), P[base_r][c2])
                for x in rows:
                    relators.add(mul(mul(inv(P[x][c1]), P[x][c2]), inv(ref)))
        for d1 in rows:
            for d2 in rows:
                ref = mul(P[d2][base_c], inv(P[d1][base_c]))
                for y in cols:
                    relators.add(mul(mul(P[d2][y], inv(P[d1][y])), inv(ref)))
    K = normal_closure(G, relators)
    H, index = group_quotient(G, K)
    out = GEtaStar(H, dict(index), part, r)
    out.verify()
    return out


def _quotient_structure(r: ReesStructure, ge: GEtaStar) -> ReesStructure:
    H = ge.group
    k = ge.partition.n_eta
    e = H.identity
    P = tuple(tuple(e if i == j else None for i in range(k)) for j in range(k))
    return ReesStructure(H.ambient, k, k, P, r.has_zero, f"{r.name}/eta*" if r.name else "")


def rees_eta_star_quotient(r: ReesStructure) -> FiniteSemigroup:
    """M⁰(G_{η*}, k, k; I_k) with k the number of incidence components."""
    return build_rees(_quotient_structure(r, g_eta_star(r)))


def canonical_projection(r: ReesStructure, verify: bool = True) -> SemigroupMorphism:
    """Explicit morphism from build_rees(r) onto its η*-quotient in Rees form.

    ``(g; c, d)`` goes to ``(β_{a*,c} φ(g) α_{b*,d} φ(p_{b*,c*}); a, b)`` where
    ``a``/``b`` are the component classes of column ``c`` / row ``d``,
    ``a*`` is the least column of class ``a``, ``b*`` the least row of class
    ``b`` and ``c*`` the least column of class ``b``.  The last factor turns
    the block-diagonal sandwich into the identity one.
    """
    ge = g_eta_star(r)
    part = ge.partition
    qr = _quotient_structure(r, ge)
    M = build_rees(r)
    Q = build_rees(qr)
    src_coords, src_zero = rees_element_ids(r)
    q_coords, q_zero = rees_element_ids(qr)
    q_index = {c: k for k, c in enumerate(q_coords) if c is not None}
    Hm = ge.group.mul
    images = []
    for coord in src_coords:
        if coord is None:
            images.append(q_zero)
            continue
        g, c, d = coord
        a, b = part.column_class(c), part.row_class(d)
        a_star, b_star = part.least_column(a), part.least_row(b)
        fix = ge.phi[r.P[b_star][part.least_column(b)]]
        h = Hm(Hm(Hm(ge.beta(a, a_star, c), ge.phi[g]), ge.alpha(b, b_star, d)), fix)
        images.append(q_index[(h, a, b)])
    f = SemigroupMorphism(M, Q, tuple(images))
    if verify:
        if not f.is_morphism() or not f.is_surjective():
            raise TheoremViolation("canonical projection is not a surjective morphism")
        if f.kernel() != eta_star(M).congruence:
            raise TheoremViolation("kernel of the canonical projection differs from eta*")
    return f


@dataclass(frozen=True)
class RootResult:
    source_factor: int
    root: Optional[int]  # factor index, or None for the zero
    phi_map: Optional[tuple[int, ...]] = None
    phi_prime_map: Optional[tuple[int, ...]] = None

    @property
    def is_theta(self) -> bool:
        return self.root is None

    def as_dict(self) -> dict:
        return {"factor": self.source_factor,
                "root": "theta" if self.is_theta else self.root,
                "phi": list(self.phi_map) if self.phi_map is not None else None,
                "phi_prime": list(self.phi_prime_map) if self.phi_prime_map is not None else None}


def eta_star_root(S: FiniteSemigroup, series: PrincipalSeries, p: int,
                  eta: Optional[Congruence] = None) -> RootResult:
    """Locate the deepest factor absorbing the η*-classes of factor ``p``.

    The zero of S is the root when one of the factor's elements is
    η*-equivalent to it; without a zero that case cannot arise.
    """
    factor = series.factors[p]
    if factor.kind is FactorKind.NULL:
        raise NullFactorError(f"factor {p} is null")
    eta = eta if eta is not None else eta_star(S).congruence
    diff = series.difference(p)
    z = S.zero
    if z is not None and any(eta.same(a, z) for a in diff):
        if not all(eta.same(a, z) for a in diff):
            raise TheoremViolation("factor meets the zero class only partially")
        return RootResult(p, None)
    reps = {eta.class_of(a) for a in diff}
    touched = [q for q in range(len(series.factors))
               if any(eta.class_of(x) in reps for x in series.difference(q))]
    q = max(touched)
    target = series.difference(q)
    deeper = series.below(q)
    # (1) every element has a partner in the root factor
    if any(not any(eta.same(a, b) for b in target) for a in diff):
        raise TheoremViolation("an element has no partner in the root factor")
    # (2) neither difference set is identified with anything deeper
    deeper_reps = {eta.class_of(x) for x in deeper}
    if any(eta.class_of(x) in deeper_reps for x in diff | target):
        raise TheoremViolation("root factor classes leak into the deeper ideal")
    # (3) the root factor is CS-diagonal
    root_factor = series.factors[q]
    if root_factor.kind is FactorKind.NULL:
        raise TheoremViolation("root factor is null")
    root_rs = rees_coordinates(root_factor)
    if not is_cs_diagonal(root_rs):
        raise TheoremViolation("root factor is not CS-diagonal")
    part = component_partition(root_rs)
    src_rs = rees_coordinates(factor)
    root_coords = root_rs.coords_of()
    phi: dict[int, int] = {}
    phi_p: dict[int, int] = {}
    for (g, i, j), x in src_rs.elements.items():
        for y in target:
            if not eta.same(x, y):
                continue
            _, i2, j2 = root_coords[y]
            for table, key, val in ((phi, i, part.column_class(i2)), (phi_p, j, part.row_class(j2))):
                if table.setdefault(key, val) != val:
                    raise TheoremViolation("root index maps are not single-valued")
    # (4) nonzero sandwich entries land on matching classes
    for j in range(src_rs.m):
        for i in range(src_rs.n):
            if src_rs.P[j][i] is not None and phi[i] != phi_p[j]:
                raise TheoremViolation("root maps are not compatible with the product")
    return RootResult(p, q, tuple(phi[i] for i in range(src_rs.n)),
                      tuple(phi_p[j] for j in range(src_rs.m)))


def all_roots(S: FiniteSemigroup, series: Optional[PrincipalSeries] = None,
              eta: Optional[Congruence] = None) -> list[Optional[RootResult]]:
    """Root of every factor, None for null factors; η* is computed once."""
    series = series or principal_series(S)
    eta = eta if eta is not None else eta_star(S).congruence
    return [None if f.kind is FactorKind.NULL else eta_star_root(S, series, p, eta)
            for p, f in enumerate(series.factors)]


def semisimple_class_audit(S: FiniteSemigroup) -> dict[int, Optional[int]]:
    """Assign every η*-class (by least member) to the zero (None) or to a root factor."""
    series = principal_series(S)
    if not is_semisimple(S, series):
        raise NotSemisimpleError("semigroup has a null principal factor")
    eta = eta_star(S).congruence
    roots = all_roots(S, series, eta)
    out: dict[int, Optional[int]] = {}
    for cls in eta.classes:
        owners = {roots[series.factor_of(x)].root for x in cls}
        if len(owners) != 1:
            raise TheoremViolation(f"class {cls} spans factors with different roots")
        owner = owners.pop()
        if owner is None:
            if S.zero not in cls:
                raise TheoremViolation("zero-rooted class does not contain the zero")
        elif not set(cls) & series.difference(owner):
            raise TheoremViolation("class misses its root factor")
        out[cls[0]] = owner
    return out
