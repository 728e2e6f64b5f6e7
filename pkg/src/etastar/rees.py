"""Rees matrix coordinates of completely (0-)simple semigroups.

Conventions: elements are ``(g; i, j)`` with ``i`` the column index
(``0..n-1``, the R-class) and ``j`` the row index (``0..m-1``, the
L-class).  The sandwich matrix is stored row-major as ``P[j][i]``; ``None``
stands for θ.  Labels render indices 1-based.  The product is
``(g;i,j)(h;k,l) = (g·P[j][k]·h; i, l)`` or θ when ``P[j][k]`` is θ.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NotDiagonalError, NotSimpleError, NullFactorError, RegularityError
from .green import FactorDescriptor, FactorKind, compute_green
from .groups import GroupData, group_of
from .semigroup import FiniteSemigroup, UnionFind, restrict

Coord = tuple[int, int, int]


@dataclass(frozen=True)
class ReesStructure:
    group: FiniteSemigroup
    n: int  # columns, first coordinate
    m: int  # rows, second coordinate
    P: tuple[tuple[Optional[int], ...], ...]
    has_zero: bool = True
    name: str = ""
    # coordinates -> ids of the semigroup this structure was read off, if any
    elements: Optional[dict[Coord, int]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.P) != self.m or any(len(row) != self.n for row in self.P):
            raise ValueError(f"sandwich matrix must be {self.m}x{self.n}")
        for row in self.P:
            for v in row:
                if v is not None and not 0 <= v < self.group.order:
                    raise ValueError(f"sandwich entry {v} is not a group element")

    @property
    def G(self) -> GroupData:
        return group_of(self.group)

    def entry(self, row: int, col: int) -> Optional[int]:
        return self.P[row][col]

    def is_regular(self) -> bool:
        rows_ok = all(any(v is not None for v in row) for row in self.P)
        cols_ok = all(any(self.P[j][i] is not None for j in range(self.m)) for i in range(self.n))
        return rows_ok and cols_ok

    def needs_zero(self) -> bool:
        return self.has_zero or any(v is None for row in self.P for v in row)

    def coords_of(self) -> dict[int, Coord]:
        if self.elements is None:
            raise ValueError("structure is not attached to a semigroup")
        return {x: c for c, x in self.elements.items()}


def _label(r: ReesStructure, g: int, i: int, j: int) -> str:
    return f"({r.group.label(g)};{i + 1},{j + 1})"


def rees_element_ids(r: ReesStructure) -> tuple[list[Optional[Coord]], Optional[int]]:
    """Element order used by build_rees: i, then j, then g; θ last."""
    coords: list[Optional[Coord]] = [(g, i, j) for i in range(r.n) for j in range(r.m)
                                     for g in range(r.group.order)]
    zero = None
    if r.needs_zero():
        zero = len(coords)
        coords.append(None)
    return coords, zero


def build_rees(r: ReesStructure) -> FiniteSemigroup:
    if not r.is_regular():
        raise RegularityError("every row and column of the sandwich matrix needs a nonzero entry")
    coords, zero = rees_element_ids(r)
    index = {c: k for k, c in enumerate(coords) if c is not None}
    gt = r.group.table
    table = []
    for a in coords:
        row = []
        for b in coords:
            if a is None or b is None:
                row.append(zero)
                continue
            g, i, j = a
            h, k, l = b
            p = r.P[j][k]
            row.append(zero if p is None else index[(gt[gt[g][p]][h], i, l)])
        table.append(tuple(row))
    labels = tuple("θ" if c is None else _label(r, *c) for c in coords)
    return FiniteSemigroup(tuple(table), labels, r.name)


def rees_coordinates(factor: FactorDescriptor, verify: bool = True) -> ReesStructure:
    """Coordinatize a completely simple or completely 0-simple principal factor.

    The idempotent ``e`` with least id fixes ``G = H_e``; R- and L-classes are
    numbered by least element; ``(g; i, j) = r_i g q_j`` with ``r_i`` the least
    element of ``R_i ∩ L_e`` and ``q_j`` the least of ``R_e ∩ L_j``.  The
    resulting ``elements`` map points at the ambient ids of ``factor``.
    """
    if factor.kind is FactorKind.NULL:
        raise NullFactorError("a null factor has no Rees coordinates")
    F = factor.factor_semigroup
    theta = factor.theta
    nonzero = [x for x in F.elements if x != theta]
    green = compute_green(F)
    idem = [x for x in nonzero if F.table[x][x] == x]
    if not idem:
        raise NotSimpleError("factor has no idempotent")
    e = idem[0]
    rclasses = [c for c in green.R.classes if c[0] != theta]
    lclasses = [c for c in green.L.classes if c[0] != theta]
    Le = set(green.L.block(e))
    Re = set(green.R.block(e))
    He = sorted(Le & Re)
    t = F.table
    G, _ = restrict(F, He, name="G")
    gpos = {x: k for k, x in enumerate(He)}
    r_reps = [min(set(c) & Le) for c in rclasses]
    q_reps = [min(set(c) & Re) for c in lclasses]
    n, m = len(rclasses), len(lclasses)
    P = []
    for q in q_reps:
        row = []
        for r_ in r_reps:
            v = t[q][r_]
            row.append(gpos[v] if v in gpos else None)
        P.append(tuple(row))
    local: dict[Coord, int] = {}
    for i, r_ in enumerate(r_reps):
        for j, q in enumerate(q_reps):
            for g, h in enumerate(He):
                local[(g, i, j)] = t[t[r_][h]][q]
    if sorted(local.values()) != sorted(nonzero):
        raise NotSimpleError("coordinate map is not a bijection onto the factor")
    has_zero = theta is not None
    elements = {c: factor.embedding[x] for c, x in local.items()}
    rs = ReesStructure(G, n, m, tuple(P), has_zero, elements=elements)
    if verify:
        _verify_coordinates(rs, F, local, theta)
    return rs


def _verify_coordinates(r: ReesStructure, F: FiniteSemigroup, local: dict[Coord, int], theta) -> None:
    built = build_rees(r)
    coords, zero = rees_element_ids(r)
    image = [theta if c is None else local[c] for c in coords]
    for a in built.elements:
        for b in built.elements:
            if image[built.table[a][b]] != F.table[image[a]][image[b]]:
                raise NotSimpleError("Rees coordinates do not reproduce the factor's product")


@dataclass(frozen=True)
class IncidenceGraph:
    n: int
    m: int
    edges: frozenset[tuple[int, int]]  # (column i, row j) with P[j][i] nonzero

    def components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Connected components as (columns, rows), ordered by least column."""
        uf = UnionFind(self.n + self.m)
        for i, j in self.edges:
            uf.union(i, self.n + j)
        groups: dict[int, tuple[list[int], list[int]]] = {}
        for v in range(self.n + self.m):
            cols, rows = groups.setdefault(uf.find(v), ([], []))
            (cols if v < self.n else rows).append(v if v < self.n else v - self.n)
        comps = [(tuple(c), tuple(r)) for c, r in groups.values()]
        return sorted(comps, key=lambda cr: (cr[0][:1] or (self.n,), cr[1][:1]))

    def components_complete_bipartite(self) -> bool:
        return all((i, j) in self.edges for cols, rows in self.components() for i in cols for j in rows)

    def to_dot(self, name: str = "incidence") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        for i in range(self.n):
            lines.append(f'  c{i + 1} [label="col {i + 1}", shape=box];')
        for j in range(self.m):
            lines.append(f'  r{j + 1} [label="row {j + 1}", shape=ellipse];')
        for i, j in sorted(self.edges):
            lines.append(f"  c{i + 1} -- r{j + 1};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name)
    return safe if safe and not safe[0].isdigit() else f"g_{safe}"


def incidence_graph(r: ReesStructure) -> IncidenceGraph:
    edges = frozenset((i, j) for j in range(r.m) for i in range(r.n) if r.P[j][i] is not None)
    return IncidenceGraph(r.n, r.m, edges)


def _cs_diagonal_quantified(r: ReesStructure) -> bool:
    nz = [[v is not None for v in row] for row in r.P]
    for a in range(r.m):
        for t in range(r.n):
            if not nz[a][t]:
                continue
            for b in range(r.m):
                if not nz[b][t]:
                    continue
                for u in range(r.n):
                    if nz[a][u] and not nz[b][u]:
                        return False
    return True


def is_cs_diagonal(r: ReesStructure) -> bool:
    """Nonzero p[r][t], p[r'][t], p[r][t'] force p[r'][t'] nonzero.

    Computed both by the quantifier and by asking that every incidence
    component be complete bipartite; the two must agree.
    """
    direct = _cs_diagonal_quantified(r)
    via_graph = incidence_graph(r).components_complete_bipartite()
    if direct != via_graph:
        raise AssertionError("CS-diagonal deciders disagree")
    return direct


@dataclass(frozen=True)
class ComponentPartition:
    column_classes: tuple[tuple[int, ...], ...]
    row_classes: tuple[tuple[int, ...], ...]

    @property
    def n_eta(self) -> int:
        return len(self.column_classes)

    def column_class(self, i: int) -> int:
        return next(k for k, c in enumerate(self.column_classes) if i in c)

    def row_class(self, j: int) -> int:
        return next(k for k, c in enumerate(self.row_classes) if j in c)

    def least_column(self, k: int) -> int:
        return self.column_classes[k][0]

    def least_row(self, k: int) -> int:
        return self.row_classes[k][0]


def component_partition(r: ReesStructure) -> ComponentPartition:
    if not is_cs_diagonal(r):
        raise NotDiagonalError("sandwich matrix is not CS-diagonal")
    comps = incidence_graph(r).components()
    part = ComponentPartition(tuple(c for c, _ in comps), tuple(rw for _, rw in comps))
    for a, cols in enumerate(part.column_classes):
        for b, rows in enumerate(part.row_classes):
            for i in cols:
                for j in rows:
                    if (r.P[j][i] is not None) != (a == b):
                        raise AssertionError("block structure of a CS-diagonal matrix violated")
    return part


def rees(group: FiniteSemigroup, P: Sequence[Sequence[Optional[int]]], has_zero: bool = True,
         name: str = "") -> ReesStructure:
    """Shorthand constructor taking the sandwich matrix row by row."""
    P = tuple(tuple(row) for row in P)
    return ReesStructure(group, len(P[0]), len(P), P, has_zero, name)
