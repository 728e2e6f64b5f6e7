"""Left action on a CS-diagonal ideal, orbit notation, and the upper non-nilpotent graph."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import FormatError, NotDiagonalError, TheoremViolation, WellDefinednessError
from .etastar import eta_star_root
from .green import FactorKind, PrincipalSeries
from .malcev import nilpotency_class
from .rees import ReesStructure, component_partition, is_cs_diagonal, rees_coordinates
from .semigroup import FiniteSemigroup, generate_subsemigroup, rees_quotient, restrict

THETA = "θ"


@dataclass(frozen=True)
class PartialTransformation:
    """Self-map of ``{0..k-1} ∪ {θ}``; ``None`` stands for θ, which is fixed."""

    k: int
    map: tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.map) != self.k:
            raise ValueError("map length must equal k")
        hit = [v for v in self.map if v is not None]
        if len(hit) != len(set(hit)):
            raise WellDefinednessError("transformation is not injective off θ")

    def __call__(self, i: Optional[int]) -> Optional[int]:
        return None if i is None else self.map[i]

    def compose(self, first: "PartialTransformation") -> "PartialTransformation":
        """``self ∘ first``: apply ``first``, then ``self``."""
        return PartialTransformation(self.k, tuple(self(first(i)) for i in range(self.k)))

    def is_zero(self) -> bool:
        return all(v is None for v in self.map)


def _name(i: int, names: Optional[Sequence[str]]) -> str:
    return names[i] if names else str(i + 1)


def orbit_notation(t: PartialTransformation, names: Optional[Sequence[str]] = None) -> str:
    """Cycles and θ-terminated chains, sorted by least member.

    Chains ``(i,θ)`` of an unreached point are left out; the all-θ map is ``θ``.
    """
    if t.is_zero():
        return THETA
    has_pre = {v for v in t.map if v is not None}
    orbits: list[list[int]] = []
    chains: set[int] = set()
    for start in range(t.k):
        if start in has_pre:
            continue
        chain, x = [], start
        while x is not None:
            chain.append(x)
            x = t.map[x]
        chains.update(chain)
        if len(chain) > 1:
            orbits.append(chain + [None])
    seen = set(chains)
    for start in range(t.k):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = t.map[x]
        orbits.append(cyc)
    orbits.sort(key=lambda o: min(v for v in o if v is not None))
    parts = []
    for o in orbits:
        parts.append("(" + ",".join(THETA if v is None else _name(v, names) for v in o) + ")")
    return "".join(parts)


def parse_orbit_notation(text: str, k: int, names: Optional[Sequence[str]] = None) -> PartialTransformation:
    """Inverse of orbit_notation; unmentioned points go to θ."""
    text = text.strip()
    lookup = {_name(i, names): i for i in range(k)}
    out: list[Optional[int]] = [None] * k
    if text == THETA:
        return PartialTransformation(k, tuple(out))
    groups = re.findall(r"\(([^()]*)\)", text)
    if "".join(f"({g})" for g in groups) != text.replace(" ", ""):
        raise FormatError(f"malformed orbit string {text!r}")
    for g in groups:
        toks = [s.strip() for s in g.split(",")]
        if toks[-1] == THETA:
            pts = [lookup[s] for s in toks[:-1]]
            for a, b in zip(pts, pts[1:]):
                out[a] = b
            out[pts[-1]] = None
        else:
            pts = [lookup[s] for s in toks]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                out[a] = b
    return PartialTransformation(k, tuple(out))


@dataclass(frozen=True)
class Representation:
    images: dict[int, PartialTransformation]  # element id of the host -> Γ(s)
    k: int
    class_names: Optional[tuple[str, ...]] = None

    def notation(self, s: int) -> str:
        return orbit_notation(self.images[s], self.class_names)


def min_nonnilpotent_representation(S: FiniteSemigroup, ideal: ReesStructure,
                                    class_names: Optional[Sequence[str]] = None) -> Representation:
    """Γ(s)(i) is the component class of α' in ``s·(g;α,β) = (g';α',β)``, α in class i.

    ``ideal.elements`` must map coordinates to ids of S; S's zero plays θ.
    Every choice of ``g, α, β`` is tried and must agree; Γ is then checked
    to be a homomorphism into the partial injections.
    """
    if not is_cs_diagonal(ideal):
        raise NotDiagonalError("ideal is not CS-diagonal")
    part = component_partition(ideal)
    k = part.n_eta
    coords = ideal.coords_of()
    zero = S.zero
    t = S.table
    images: dict[int, PartialTransformation] = {}
    for s in S.elements:
        row: list[Optional[int]] = []
        for i in range(k):
            found: set = set()
            for (g, a, b), x in ideal.elements.items():
                if part.column_class(a) != i:
                    continue
                y = t[s][x]
                if y == zero:
                    found.add(None)
                    continue
                if y not in coords:
                    raise WellDefinednessError("left action leaves the ideal")
                _, a2, b2 = coords[y]
                if b2 != b:
                    raise WellDefinednessError("left action changed the row index")
                found.add(part.column_class(a2))
            if len(found) != 1:
                raise WellDefinednessError(f"Γ({S.label(s)}) is not well defined at class {i + 1}")
            row.append(found.pop())
        images[s] = PartialTransformation(k, tuple(row))
    for s in S.elements:
        for u in S.elements:
            if images[t[s][u]] != images[s].compose(images[u]):
                raise WellDefinednessError("Γ is not a homomorphism")
    names = tuple(class_names) if class_names else None
    return Representation(images, k, names)


def factor_ideal(S: FiniteSemigroup, series: PrincipalSeries, p: int):
    """S/S_{p+1} and the coordinates of factor p as an ideal of it.

    Returns ``(T, proj, rees)`` with ``proj`` the S-to-T id map.
    """
    factor = series.factors[p]
    if factor.kind is FactorKind.NULL:
        raise NotDiagonalError(f"factor {p} is null")
    T, proj = rees_quotient(S, series.below(p))
    rs = rees_coordinates(factor)
    elements = {c: proj[x] for c, x in rs.elements.items()}
    return T, proj, ReesStructure(rs.group, rs.n, rs.m, rs.P, rs.has_zero, rs.name, elements)


def factor_representation(S: FiniteSemigroup, series: PrincipalSeries, p: int,
                          class_names: Optional[Sequence[str]] = None):
    """Γ of S/S_{p+1} over factor p, re-indexed by the ids of S outside S_{p+1}."""
    T, proj, rs = factor_ideal(S, series, p)
    rep = min_nonnilpotent_representation(T, rs, class_names)
    below = series.below(p)
    images = {x: rep.images[proj[x]] for x in S.elements if x not in below}
    return Representation(images, rep.k, rep.class_names)


def default_class_names(S: FiniteSemigroup, series: PrincipalSeries, p: int) -> Optional[tuple[str, ...]]:
    """Class names read off labels shaped like ``[c,d]`` or ``(c,d)``, if every class agrees."""
    rs = rees_coordinates(series.factors[p])
    part = component_partition(rs)
    names = []
    for cols in part.column_classes:
        firsts = set()
        for (g, a, b), x in rs.elements.items():
            if a in cols:
                m = re.fullmatch(r"[\[(]([^,;\[\]()]+),[^,]+[\])]", S.label(x))
                if not m:
                    return None
                firsts.add(m.group(1))
        if len(firsts) != 1:
            return None
        names.append(firsts.pop())
    return tuple(names) if len(set(names)) == len(names) else None


@dataclass(frozen=True)
class PatternWitness:
    v1: int
    v2: int
    k1: int
    k2: int
    k3: int
    k4: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.v1, self.v2, self.k1, self.k2, self.k3, self.k4)


def gamma_pattern_search(S: FiniteSemigroup, series: PrincipalSeries, p: int) -> Optional[PatternWitness]:
    """Least ``(v1, v2, k1, k2, k3, k4)`` with v1: k1→k2, k3→k4 and v2: k1→k4, k3→k2."""
    rep = factor_representation(S, series, p)
    elems = sorted(rep.images)
    for v1 in elems:
        g1 = rep.images[v1]
        for v2 in elems:
            g2 = rep.images[v2]
            for k1, k3 in itertools.permutations(range(rep.k), 2):
                k2, k4 = g1(k1), g1(k3)
                if k2 is None or k4 is None:
                    continue
                if g2(k1) == k4 and g2(k3) == k2:
                    return PatternWitness(v1, v2, k1, k2, k3, k4)
    return None


def theorem_d2_audit(S: FiniteSemigroup, series: PrincipalSeries, p: int, eta=None) -> dict:
    """Check that a crossed Γ-pattern forces a deeper root with merged classes, or the zero."""
    w = gamma_pattern_search(S, series, p)
    if w is None:
        raise ValueError("no Γ-pattern witness; the audit does not apply")
    root = eta_star_root(S, series, p, eta)
    report = {"witness": w.as_tuple(), "root": "theta" if root.is_theta else root.root}
    if root.is_theta:
        report["case"] = 2
        return report
    part = component_partition(rees_coordinates(series.factors[p]))
    cols = {root.phi_map[c] for k in (w.k1, w.k3) for c in part.column_classes[k]}
    rows = {root.phi_prime_map[r] for k in (w.k2, w.k4) for r in part.row_classes[k]}
    if root.root == p or len(cols) != 1 or len(rows) != 1:
        raise TheoremViolation("crossed pattern without a merging root")
    report["case"] = 1
    report["phi"] = cols.pop()
    report["phi_prime"] = rows.pop()
    return report


@dataclass(frozen=True)
class NonNilpotentGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def is_empty(self) -> bool:
        return not self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_dot(self, S: FiniteSemigroup, name: str = "nonnilpotent") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        for v in self.vertices:
            lines.append(f'  v{v} [label="{S.label(v)}"];')
        for a, b in self.edge_list():
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name)
    return safe if safe and not safe[0].isdigit() else f"g_{safe}"


def upper_nonnilpotent_graph(S: FiniteSemigroup) -> NonNilpotentGraph:
    """Edges join x, y when ⟨x, y⟩ is not nilpotent.

    Verdicts are cached per generated subset, which many pairs share.
    """
    verdict: dict[frozenset[int], bool] = {}
    edges = set()
    for x in S.elements:
        for y in range(x, S.order):
            sub = generate_subsemigroup(S, (x, y))
            if sub not in verdict:
                T, _ = restrict(S, sub)
                verdict[sub] = nilpotency_class(T) is not None
            if not verdict[sub]:
                if x == y:
                    raise AssertionError("a monogenic subsemigroup cannot be non-nilpotent")
                edges.add(frozenset((x, y)))
    return NonNilpotentGraph(tuple(S.elements), frozenset(edges))


def is_eunng(S: FiniteSemigroup) -> bool:
    return upper_nonnilpotent_graph(S).is_empty()
