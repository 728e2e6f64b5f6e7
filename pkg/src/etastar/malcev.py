"""Mal'cev's λ/ρ words, the pair graph, and the MN / NT / PE identity checks.

A z-symbol is either an element id or ``SKIP`` (``None``), the formal
identity of S¹: ``x·SKIP·y = xy``.  The pair graph has a node for every
ordered pair ``(x, y)`` and an edge ``(x, y) -> (xzy, yzx)`` for every
symbol ``z``.  Node ``(x, y)`` is numbered ``x·N + y``; column 0 of the
successor matrix is SKIP and column ``z + 1`` is element ``z``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .scc import strongly_connected_components
from .semigroup import Congruence, FiniteSemigroup, congruence_closure

SKIP = None
ZSymbol = Optional[int]


def symbol_label(S: FiniteSemigroup, z: ZSymbol) -> str:
    return "1" if z is SKIP else S.label(z)


def pair_step(S: FiniteSemigroup, pair: tuple[int, int], z: ZSymbol) -> tuple[int, int]:
    x, y = pair
    t = S.table
    if z is SKIP:
        return t[x][y], t[y][x]
    return t[t[x][z]][y], t[t[y][z]][x]


def lambda_rho(S: FiniteSemigroup, x: int, y: int, word: Sequence[ZSymbol]) -> tuple[int, int]:
    pair = (x, y)
    for z in word:
        pair = pair_step(S, pair, z)
    return pair


@dataclass(frozen=True)
class NilpotencyWitness:
    x: int
    y: int
    word: tuple[ZSymbol, ...]

    def check(self, S: FiniteSemigroup) -> bool:
        return self.x != self.y and lambda_rho(S, self.x, self.y, self.word) == (self.x, self.y)

    def as_dict(self, S: FiniteSemigroup) -> dict:
        return {"x": S.label(self.x), "y": S.label(self.y),
                "word": [symbol_label(S, z) for z in self.word]}


@dataclass(frozen=True)
class FailingAssignment:
    """Seeds and symbols whose λ_n and ρ_n still differ when the iteration cycles."""

    x: int
    y: int
    word: tuple[ZSymbol, ...]
    c: Optional[ZSymbol] = None  # the Engel element, PE only
    engel: bool = False

    def holds(self, S: FiniteSemigroup) -> bool:
        """The assignment really separates λ and ρ."""
        lam, rho = lambda_rho(S, self.x, self.y, self.word)
        return lam != rho

    def as_dict(self, S: FiniteSemigroup) -> dict:
        out = {"x": S.label(self.x), "y": S.label(self.y),
               "word": [symbol_label(S, z) for z in self.word]}
        if self.engel:
            out["c"] = symbol_label(S, self.c)
        return out


@dataclass(frozen=True)
class IdentityReport:
    verdict: bool
    class_n: Optional[int] = None
    witness: object = None

    def as_dict(self, S: FiniteSemigroup) -> dict:
        return {"verdict": self.verdict, "class": self.class_n,
                "witness": self.witness.as_dict(S) if self.witness is not None else None}


def pair_successors(S: FiniteSemigroup) -> np.ndarray:
    """``succ[x*N + y, 0]`` is the SKIP successor, ``succ[., z+1]`` the one for ``z``."""
    a = S.array
    n = S.order
    lam = a[a].transpose(0, 2, 1)  # lam[x, y, z] = (xz)y
    rho = lam.transpose(1, 0, 2)  # rho[x, y, z] = (yz)x
    by_elem = (lam * n + rho).reshape(n * n, n)
    skip = (a * n + a.T).reshape(n * n, 1)
    return np.hstack([skip, by_elem])


def _diagonal_mask(n: int) -> np.ndarray:
    d = np.zeros(n * n, dtype=bool)
    d[np.arange(n) * (n + 1)] = True
    return d


def _column_symbol(col: int) -> ZSymbol:
    return SKIP if col == 0 else col - 1


class _Trail:
    """Per-step back pointers so a surviving pair can be traced to its seed."""

    def __init__(self):
        self.steps: list[tuple[np.ndarray, np.ndarray]] = []  # (parent node, column) per node

    def record(self, succ: np.ndarray, nodes: np.ndarray, cols: Sequence[int], size: int):
        parent = np.full(size, -1, dtype=np.int64)
        column = np.full(size, -1, dtype=np.int64)
        for c in reversed(list(cols)):  # earliest column wins
            parent[succ[nodes, c]] = nodes
            column[succ[nodes, c]] = c
        self.steps.append((parent, column))

    def trace(self, node: int) -> tuple[int, list[int]]:
        cols = []
        for parent, column in reversed(self.steps):
            cols.append(int(column[node]))
            node = int(parent[node])
        return node, cols[::-1]


def _image(succ: np.ndarray, mask: np.ndarray, cols, offdiag: np.ndarray) -> np.ndarray:
    nodes = np.flatnonzero(mask)
    out = np.zeros_like(mask)
    out[succ[np.ix_(nodes, list(cols))].ravel()] = True
    return out & offdiag


def nilpotency_class(S: FiniteSemigroup, succ: Optional[np.ndarray] = None) -> Optional[int]:
    """Least ``k >= 1`` with every ``λ_k = ρ_k``, or None when there is none.

    Iterates ``P_{k+1} = {step(p, z)}`` from all distinct pairs.  The sets
    decrease, so a repeated set means the diagonal is never reached.
    """
    n = S.order
    succ = pair_successors(S) if succ is None else succ
    offdiag = ~_diagonal_mask(n)
    cols = range(n + 1)
    mask = offdiag.copy()
    seen = {mask.tobytes()}
    k = 0
    while mask.any():
        nxt = _image(succ, mask, cols, offdiag)
        if (nxt & ~mask).any():
            raise AssertionError("pair sets must decrease along the iteration")
        k += 1
        key = nxt.tobytes()
        if key in seen:
            return None
        seen.add(key)
        mask = nxt
    return max(k, 1)


def is_malcev_nilpotent(S: FiniteSemigroup) -> IdentityReport:
    """Verdict and class from the set iteration; a cycle witness when it fails."""
    succ = pair_successors(S)
    k = nilpotency_class(S, succ)
    if k is not None:
        return IdentityReport(True, k, None)
    witness = nonnilpotent_witness(S, succ)
    if witness is None:
        raise AssertionError("set iteration and cycle search disagree")
    return IdentityReport(False, None, witness)


def _offdiag_adjacency(succ: np.ndarray, n: int) -> list[list[int]]:
    diag = _diagonal_mask(n)
    adj = []
    for row in succ:
        adj.append(sorted({int(v) for v in row if not diag[v]}))
    return adj


def cyclic_pairs(S: FiniteSemigroup, succ: Optional[np.ndarray] = None) -> list[int]:
    """Off-diagonal pair nodes lying on a cycle of the pair graph, ascending."""
    n = S.order
    succ = pair_successors(S) if succ is None else succ
    adj = _offdiag_adjacency(succ, n)
    diag = _diagonal_mask(n)
    nodes = [v for v in range(n * n) if not diag[v]]
    on_cycle = []
    for comp in strongly_connected_components(nodes, adj):
        if len(comp) > 1 or comp[0] in adj[comp[0]]:
            on_cycle.extend(comp)
    return sorted(on_cycle)


def _shortest_cycle(succ: np.ndarray, start: int) -> list[int]:
    """Columns along a shortest cycle through ``start``; SKIP edges tried first."""
    parent: dict[int, tuple[int, int]] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        v = queue.popleft()
        for c, w in enumerate(succ[v]):
            w = int(w)
            if w == start:
                cols = [c]
                while v != start:
                    v, pc = parent[v]
                    cols.append(pc)
                return cols[::-1]
            if w not in seen:
                seen.add(w)
                parent[w] = (v, c)
                queue.append(w)
    raise ValueError("node is not on a cycle")


def nonnilpotent_witness(S: FiniteSemigroup, succ: Optional[np.ndarray] = None) -> Optional[NilpotencyWitness]:
    """A distinct pair returning to itself, or None exactly when S is nilpotent.

    The least pair (by node number) on a cycle is used, with a shortest word.
    """
    n = S.order
    succ = pair_successors(S) if succ is None else succ
    cyc = cyclic_pairs(S, succ)
    if not cyc:
        return None
    start = cyc[0]
    word = tuple(_column_symbol(c) for c in _shortest_cycle(succ, start))
    return NilpotencyWitness(start // n, start % n, word)


def eta_pairs(S: FiniteSemigroup) -> frozenset[tuple[int, int]]:
    """The diagonal together with every pair on a pair-graph cycle."""
    n = S.order
    pairs = {(x, x) for x in S.elements}
    pairs.update((v // n, v % n) for v in cyclic_pairs(S))
    return frozenset(pairs)


def _seed_failure(S: FiniteSemigroup, trail: _Trail, mask: np.ndarray, prefix: tuple[int, ...] = ()):
    n = S.order
    node = int(np.flatnonzero(mask)[0])
    seed, cols = trail.trace(node)
    return seed // n, seed % n, tuple(_column_symbol(c) for c in prefix + tuple(cols))


def is_neumann_taylor(S: FiniteSemigroup) -> IdentityReport:
    """``λ_n(a, b, 1, c_2, ..., c_n) = ρ_n(...)`` for some n >= 2.

    ``P_1`` is the SKIP image of all pairs; later steps range over every
    symbol.  Reported n counts the forced first position.
    """
    n = S.order
    succ = pair_successors(S)
    offdiag = ~_diagonal_mask(n)
    trail = _Trail()
    everything = np.ones(n * n, dtype=bool)
    trail.record(succ, np.flatnonzero(everything), [0], n * n)
    mask = _image(succ, everything, [0], offdiag)
    k = 1
    seen = {mask.tobytes()}
    cols = range(n + 1)
    while mask.any():
        trail.record(succ, np.flatnonzero(mask), cols, n * n)
        mask = _image(succ, mask, cols, offdiag)
        k += 1
        key = mask.tobytes()
        if key in seen:
            x, y, word = _seed_failure(S, trail, mask)
            return IdentityReport(False, None, FailingAssignment(x, y, word))
        seen.add(key)
    return IdentityReport(True, max(k, 2), None)


def _engel_for(S: FiniteSemigroup, succ: np.ndarray, offdiag: np.ndarray, c: ZSymbol):
    """Least n with ``λ_n(a, b, 1, 1, c, c², ..., c^{n-2})`` diagonal for all a, b."""
    n = S.order
    trail = _Trail()
    mask = np.ones(n * n, dtype=bool)
    for _ in range(2):
        trail.record(succ, np.flatnonzero(mask), [0], n * n)
        mask = _image(succ, mask, [0], offdiag)
    k = 2
    z = c  # symbol used for the next step
    seen = set()
    while mask.any():
        key = (mask.tobytes(), z)
        if key in seen:
            x, y, word = _seed_failure(S, trail, mask)
            return None, FailingAssignment(x, y, word, c, engel=True)
        seen.add(key)
        col = 0 if z is SKIP else z + 1
        trail.record(succ, np.flatnonzero(mask), [col], n * n)
        mask = _image(succ, mask, [col], offdiag)
        k += 1
        z = SKIP if c is SKIP else S.table[z][c]
    return max(k, 2), None


def is_positively_engel(S: FiniteSemigroup) -> IdentityReport:
    n = S.order
    succ = pair_successors(S)
    offdiag = ~_diagonal_mask(n)
    worst = 2
    for c in [SKIP, *S.elements]:
        n_c, failure = _engel_for(S, succ, offdiag, c)
        if n_c is None:
            return IdentityReport(False, None, failure)
        worst = max(worst, n_c)
    return IdentityReport(True, worst, None)


def gamma_star(S: FiniteSemigroup) -> Congruence:
    """Least congruence with commutative quotient."""
    t = S.table
    return congruence_closure(S, {(t[x][y], t[y][x]) for x in S.elements for y in S.elements})
