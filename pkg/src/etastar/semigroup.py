"""Finite semigroups given by Cayley tables.

Elements are the dense ids ``0..N-1``; ``table[i][j]`` is the id of the
product of element ``i`` and element ``j``.  Labels are for display only.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import AssociativityError, BudgetExceeded

ISOMORPHISM_ORDER_CAP = 64
ISOMORPHISM_NODE_BUDGET = 500_000


def first_associativity_failure(table) -> Optional[tuple[int, int, int]]:
    """Return the lexicographically first triple breaking associativity."""
    a = np.asarray(table, dtype=np.int64)
    n = a.shape[0]
    if n == 0:
        return None
    left = a[a]  # left[i, j, k] = (ij)k
    right = a[np.arange(n)[:, None, None], a[None, :, :]]  # i(jk)
    bad = np.argwhere(left != right)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None
    name: str = ""
    zero: Optional[int] = field(default=None, init=False)
    identity: Optional[int] = field(default=None, init=False)

    def __post_init__(self):
        arr = np.array(self.table, dtype=np.int64).reshape(len(self.table), len(self.table))
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)
        object.__setattr__(self, "zero", _find_zero(arr))
        object.__setattr__(self, "identity", _find_identity(arr))

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<FiniteSemigroup{name} of order {self.order}>"

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs: Iterable[int]) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index_of(self, label: str) -> int:
        if not self.labels:
            return int(label)
        return self.labels.index(label)

    def idempotents(self) -> list[int]:
        return [x for x in self.elements if self.table[x][x] == x]

    def is_commutative(self) -> bool:
        return bool((self.array == self.array.T).all())

    def is_group(self) -> bool:
        if self.identity is None:
            return False
        e = self.identity
        return all(e in row for row in self.table)


def _find_zero(arr) -> Optional[int]:
    n = arr.shape[0]
    for z in range(n):
        if (arr[z, :] == z).all() and (arr[:, z] == z).all():
            return z
    return None


def _find_identity(arr) -> Optional[int]:
    n = arr.shape[0]
    ids = np.arange(n)
    for e in range(n):
        if (arr[e, :] == ids).all() and (arr[:, e] == ids).all():
            return e
    return None


def make_semigroup(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                   name: str = "") -> FiniteSemigroup:
    """Validate a Cayley table and wrap it.

    Raises IndexError on entries outside ``0..N-1`` and AssociativityError
    carrying the first failing triple otherwise.
    """
    n = len(table)
    if n < 1:
        raise ValueError("a semigroup needs at least one element")
    rows = []
    for i, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexError(f"entry ({i}, {j}) = {v} is out of range 0..{n - 1}")
        rows.append(row)
    bad = first_associativity_failure(rows)
    if bad is not None:
        raise AssociativityError(bad)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError(f"{len(labels)} labels for {n} elements")
    return FiniteSemigroup(tuple(rows), labels, name)


def product(S: FiniteSemigroup, x: int, y: int) -> int:
    return S.table[x][y]


def generate_subsemigroup(S: FiniteSemigroup, gens: Iterable[int]) -> frozenset[int]:
    gens = set(gens)
    if not gens:
        raise ValueError("need at least one generator")
    found = set(gens)
    frontier = list(found)
    t = S.table
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                for p in (t[x][g], t[g][x]):
                    if p not in found:
                        found.add(p)
                        new.append(p)
        frontier = new
    return frozenset(found)


def is_closed(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    t = S.table
    return all(t[x][y] in sub for x in sub for y in sub)


class UnionFind:
    """Array union-find; the root of every class is its least member."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Congruence:
    """An equivalence on element ids, stored as the least member of each class."""

    reps: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Congruence":
        first = {}
        return cls(tuple(first.setdefault(lab, i) for i, lab in enumerate(labels)))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Congruence":
        reps = list(range(n))
        for block in classes:
            block = sorted(block)
            for x in block:
                reps[x] = block[0]
        return cls(tuple(reps))

    def __len__(self):
        return len(self.reps)

    def class_of(self, x: int) -> int:
        return self.reps[x]

    def same(self, a: int, b: int) -> bool:
        return self.reps[a] == self.reps[b]

    @property
    def classes(self) -> list[tuple[int, ...]]:
        blocks: dict[int, list[int]] = {}
        for x, r in enumerate(self.reps):
            blocks.setdefault(r, []).append(x)
        return [tuple(blocks[r]) for r in sorted(blocks)]

    @property
    def class_count(self) -> int:
        return len(set(self.reps))

    def block(self, x: int) -> tuple[int, ...]:
        r = self.reps[x]
        return tuple(y for y, s in enumerate(self.reps) if s == r)

    def refines(self, other: "Congruence") -> bool:
        """True when every class of ``self`` lies inside a class of ``other``."""
        return all(other.reps[x] == other.reps[r] for x, r in enumerate(self.reps))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(list(zip(self.reps, other.reps)))

    def is_identity(self) -> bool:
        return all(r == x for x, r in enumerate(self.reps))

    def is_compatible(self, S: FiniteSemigroup) -> bool:
        cls = np.array(self.reps)
        a = S.array
        # x ~ rep(x) must give s x ~ s rep(x) and x s ~ rep(x) s
        return bool((cls[a] == cls[a[:, cls]]).all() and (cls[a] == cls[a[cls, :]]).all())


def congruence_closure(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs`` (union-find with a pair worklist)."""
    uf = UnionFind(S.order)
    t = S.table
    work = deque(pairs)
    while work:
        a, b = work.popleft()
        if uf.union(a, b):
            for s in S.elements:
                work.append((t[s][a], t[s][b]))
                work.append((t[a][s], t[b][s]))
    return Congruence(tuple(uf.find(x) for x in S.elements))


@dataclass(frozen=True)
class SemigroupMorphism:
    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_morphism(self) -> bool:
        f = np.array(self.map)
        return bool((f[self.source.array] == self.target.array[f[:, None], f[None, :]]).all())

    def is_surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)

    def is_bijective(self) -> bool:
        return len(self.map) == self.target.order and self.is_surjective()

    def kernel(self) -> Congruence:
        return Congruence.from_labels(self.map)

    def compose(self, after: "SemigroupMorphism") -> "SemigroupMorphism":
        """Return ``after ∘ self``."""
        return SemigroupMorphism(self.source, after.target, tuple(after.map[y] for y in self.map))


def quotient(S: FiniteSemigroup, c: Congruence) -> tuple[FiniteSemigroup, SemigroupMorphism]:
    """Quotient by ``c``; class ``k`` is the class with the ``k``-th smallest representative."""
    if len(c) != S.order or not c.is_compatible(S):
        raise ValueError("partition is not a congruence of this semigroup")
    reps = sorted(set(c.reps))
    index = {r: k for k, r in enumerate(reps)}
    table = [[index[c.reps[S.table[r][s]]] for s in reps] for r in reps]
    labels = [S.label(r) for r in reps] if S.labels else None
    Q = FiniteSemigroup(tuple(tuple(row) for row in table),
                        tuple(labels) if labels else None, f"{S.name}/~" if S.name else "")
    proj = SemigroupMorphism(S, Q, tuple(index[c.reps[x]] for x in S.elements))
    return Q, proj


def restrict(S: FiniteSemigroup, subset: Iterable[int], name: str = "") -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Subsemigroup on a product-closed subset; returns it and the embedding (sorted ids)."""
    ids = tuple(sorted(set(subset)))
    pos = {x: k for k, x in enumerate(ids)}
    try:
        table = tuple(tuple(pos[S.table[x][y]] for y in ids) for x in ids)
    except KeyError:
        raise ValueError("subset is not closed under the product") from None
    labels = tuple(S.label(x) for x in ids) if S.labels else None
    return FiniteSemigroup(table, labels, name), ids


def rees_quotient(S: FiniteSemigroup, ideal: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Rees quotient ``S/I``: collapse the ideal ``I`` to one zero.

    Returns the quotient and the projection as a tuple indexed by ``S`` ids.
    The surviving elements keep their relative order; the zero comes last.
    An empty ideal gives ``S`` back unchanged.
    """
    ideal = set(ideal)
    if not ideal:
        return S, tuple(S.elements)
    keep = [x for x in S.elements if x not in ideal]
    zero = len(keep)
    pos = {x: k for k, x in enumerate(keep)}
    proj = tuple(pos.get(x, zero) for x in S.elements)
    table = [[proj[S.table[x][y]] for y in keep] + [zero] for x in keep]
    table.append([zero] * (zero + 1))
    labels = None
    if S.labels:
        labels = tuple(S.label(x) for x in keep) + ("θ",)
    return FiniteSemigroup(tuple(tuple(r) for r in table), labels, ""), proj


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    n, m = S.order, T.order
    table = tuple(
        tuple(S.table[a][c] * m + T.table[b][d] for c in range(n) for d in range(m))
        for a in range(n) for b in range(m)
    )
    labels = tuple(f"{S.label(a)}x{T.label(b)}" for a in range(n) for b in range(m))
    return FiniteSemigroup(table, labels, f"{S.name}x{T.name}")


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``0..n-1`` as restricted growth strings, lexicographically."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def all_congruences(S: FiniteSemigroup) -> Iterator[Congruence]:
    for rgs in restricted_growth_strings(S.order):
        c = Congruence.from_labels(rgs)
        if c.is_compatible(S):
            yield c


def element_signatures(S: FiniteSemigroup) -> list[tuple]:
    """Isomorphism-invariant data per element."""
    t = S.table
    n = S.order
    right = [frozenset(t[x]) | {x} for x in S.elements]
    left = [frozenset(t[y][x] for y in S.elements) | {x} for x in S.elements]
    two = [frozenset(t[a][b] for a in left[x] for b in S.elements) | left[x] for x in S.elements]
    r_size = [sum(right[y] == right[x] for y in S.elements) for x in S.elements]
    l_size = [sum(left[y] == left[x] for y in S.elements) for x in S.elements]
    j_size = [sum(two[y] == two[x] for y in S.elements) for x in S.elements]
    sigs = []
    for x in S.elements:
        # index and period of the monogenic subsemigroup
        seen = {}
        p, k = x, 1
        while p not in seen:
            seen[p] = k
            p = t[p][x]
            k += 1
        index, period = seen[p], k - seen[p]
        sigs.append((t[x][x] == x, index, period, len(right[x]), len(left[x]), len(two[x]),
                     r_size[x], l_size[x], j_size[x],
                     sum(t[x][y] == y for y in range(n)), sum(t[y][x] == y for y in range(n))))
    return sigs


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup,
                  budget: int = ISOMORPHISM_NODE_BUDGET) -> Optional[SemigroupMorphism]:
    """Find an isomorphism ``S -> T`` by backtracking with product propagation.

    Returns None when none exists.  Orders above 64 or searches visiting more
    than ``budget`` nodes raise BudgetExceeded.
    """
    if S.order != T.order:
        return None
    n = S.order
    if n > ISOMORPHISM_ORDER_CAP:
        raise BudgetExceeded(f"isomorphism testing is limited to order {ISOMORPHISM_ORDER_CAP}")
    sig_s, sig_t = element_signatures(S), element_signatures(T)
    if sorted(sig_s) != sorted(sig_t):
        return None
    by_sig: dict[tuple, list[int]] = {}
    for y in T.elements:
        by_sig.setdefault(sig_t[y], []).append(y)
    # rarest signatures first: fewest candidates, most propagation
    order = sorted(S.elements, key=lambda x: (len(by_sig[sig_s[x]]), x))
    ts, tt = S.table, T.table
    nodes = 0

    def extend(fwd, bwd, a, b):
        fwd, bwd = fwd[:], bwd[:]
        assigned = [x for x in S.elements if fwd[x] is not None]
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if fwd[x] is not None:
                if fwd[x] != y:
                    return None
                continue
            if bwd[y] is not None or sig_s[x] != sig_t[y]:
                return None
            fwd[x], bwd[y] = y, x
            queue.append((ts[x][x], tt[y][y]))
            for u in assigned:
                queue.append((ts[x][u], tt[y][fwd[u]]))
                queue.append((ts[u][x], tt[fwd[u]][y]))
            assigned.append(x)
        return fwd, bwd

    def search(fwd, bwd):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"isomorphism search exceeded {budget} nodes")
        x = next((x for x in order if fwd[x] is None), None)
        if x is None:
            return fwd
        for y in by_sig[sig_s[x]]:
            if bwd[y] is None:
                ext = extend(fwd, bwd, x, y)
                if ext is not None:
                    found = search(*ext)
                    if found is not None:
                        return found
        return None

    found = search([None] * n, [None] * n)
    if found is None:
        return None
    iso = SemigroupMorphism(S, T, tuple(found))
    assert iso.is_morphism() and iso.is_bijective()
    return iso


def canonical_table(S: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabelled table; exhaustive over permutations, so tiny orders only."""
    n = S.order
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(tuple(perm[S.table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best
