"""Finite groups living inside Cayley tables.

A group is an id-set in an ambient semigroup table together with its
identity and inverse map, so maximal subgroups of a semigroup and
standalone groups share one representation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import NotGroupHClassError, NotNormalError
from .semigroup import FiniteSemigroup, generate_subsemigroup, make_semigroup, restrict


@dataclass(frozen=True)
class GroupData:
    ambient: FiniteSemigroup
    carrier: frozenset[int]
    identity: int
    inverse: dict[int, int]

    @property
    def order(self) -> int:
        return len(self.carrier)

    @property
    def elements(self) -> list[int]:
        return sorted(self.carrier)

    def mul(self, x: int, y: int) -> int:
        return self.ambient.table[x][y]

    def prod(self, xs: Iterable[int]) -> int:
        acc = self.identity
        for x in xs:
            acc = self.ambient.table[acc][x]
        return acc

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def label(self, x: int) -> str:
        return self.ambient.label(x)

    def is_trivial(self) -> bool:
        return len(self.carrier) == 1

    def subgroup(self, gens: Iterable[int]) -> frozenset[int]:
        gens = set(gens) | {self.identity}
        return generate_subsemigroup(self.ambient, gens)

    def as_semigroup(self) -> tuple[FiniteSemigroup, tuple[int, ...]]:
        """Standalone table on the carrier (ids in increasing ambient order)."""
        return restrict(self.ambient, self.carrier)


def _group_on(S: FiniteSemigroup, carrier: frozenset[int], identity: int) -> GroupData:
    t = S.table
    inverse = {}
    for x in carrier:
        for y in carrier:
            if t[x][y] == identity and t[y][x] == identity:
                inverse[x] = y
                break
        else:
            raise NotGroupHClassError(f"element {x} has no inverse in the subset")
    return GroupData(S, frozenset(carrier), identity, inverse)


def group_of(S: FiniteSemigroup) -> GroupData:
    """View a semigroup that is a group as GroupData."""
    if not S.is_group():
        raise NotGroupHClassError("semigroup is not a group")
    return _group_on(S, frozenset(S.elements), S.identity)


def maximal_subgroup(S: FiniteSemigroup, hclass: Iterable[int]) -> GroupData:
    hclass = frozenset(hclass)
    idem = [x for x in hclass if S.table[x][x] == x]
    if len(idem) != 1:
        raise NotGroupHClassError("H-class does not contain an idempotent")
    e = idem[0]
    t = S.table
    if any(t[x][y] not in hclass for x in hclass for y in hclass):
        raise NotGroupHClassError("H-class is not closed under the product")
    return _group_on(S, hclass, e)


def commutator(G: GroupData, x: int, y: int) -> int:
    """[x, y] = x⁻¹y⁻¹xy."""
    return G.prod((G.inv(x), G.inv(y), x, y))


def normal_closure(G: GroupData, seed: Iterable[int]) -> frozenset[int]:
    seed = set(seed) | {G.identity}
    conj = {G.prod((G.inv(g), s, g)) for s in seed for g in G.carrier}
    return G.subgroup(conj)


def is_normal(G: GroupData, N: Iterable[int]) -> bool:
    N = frozenset(N)
    if G.identity not in N or G.subgroup(N) != N:
        return False
    return all(G.prod((G.inv(g), x, g)) in N for x in N for g in G.carrier)


@dataclass(frozen=True)
class NormalSubgroupChain:
    terms: tuple[frozenset[int], ...]
    stabilized: int  # index of the first term equal to its successor

    @property
    def last(self) -> frozenset[int]:
        return self.terms[-1]


def lower_central_series(G: GroupData) -> NormalSubgroupChain:
    terms = [frozenset(G.carrier)]
    while True:
        nxt = normal_closure(G, {commutator(G, x, g) for x in terms[-1] for g in G.carrier})
        if nxt == terms[-1]:
            return NormalSubgroupChain(tuple(terms), len(terms) - 1)
        terms.append(nxt)


def nilpotent_residual(G: GroupData) -> frozenset[int]:
    return lower_central_series(G).last


def is_nilpotent_group(G: GroupData) -> bool:
    return nilpotent_residual(G) == {G.identity}


def cosets(G: GroupData, N: Iterable[int]) -> list[frozenset[int]]:
    N = frozenset(N)
    seen, out = set(), []
    for g in G.elements:
        if g not in seen:
            c = frozenset(G.mul(g, n) for n in N)
            seen |= c
            out.append(c)
    return out


def group_quotient(G: GroupData, N: Iterable[int]) -> tuple[GroupData, dict[int, int]]:
    """G/N as a standalone group; cosets are numbered by their least element."""
    N = frozenset(N)
    if not is_normal(G, N):
        raise NotNormalError("subgroup is not normal")
    cs = cosets(G, N)
    index = {g: k for k, c in enumerate(cs) for g in c}
    reps = [min(c) for c in cs]
    table = [[index[G.mul(a, b)] for b in reps] for a in reps]
    labels = [G.label(r) for r in reps]
    Q = make_semigroup(table, labels)
    return group_of(Q), index


def conjugacy_classes(G: GroupData) -> list[frozenset[int]]:
    seen, out = set(), []
    for x in G.elements:
        if x not in seen:
            c = frozenset(G.prod((G.inv(g), x, g)) for g in G.carrier)
            seen |= c
            out.append(c)
    return out


def normal_subgroups(G: GroupData, max_order: int = 24) -> list[frozenset[int]]:
    """All normal subgroups, as closed unions of conjugacy classes."""
    if G.order > max_order:
        raise ValueError(f"normal subgroup enumeration is limited to order {max_order}")
    classes = [c for c in conjugacy_classes(G) if G.identity not in c]
    found = set()
    for r in range(len(classes) + 1):
        for combo in itertools.combinations(classes, r):
            cand = frozenset({G.identity}.union(*combo))
            if G.subgroup(cand) == cand:
                found.add(cand)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _from_elements(elements: Sequence, mul: Callable, labels: Sequence[str], name: str) -> FiniteSemigroup:
    index = {e: k for k, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return make_semigroup(table, labels, name)


def cyclic_group(n: int) -> FiniteSemigroup:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, labels[:n], f"Z{n}")


def klein_group() -> FiniteSemigroup:
    els = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return _from_elements(els, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
                          ["1", "a", "b", "ab"], "V4")


def _perm_mul(p, q):
    # apply p first, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_label(p) -> str:
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "1"


def symmetric_group_3() -> FiniteSemigroup:
    els = sorted(itertools.permutations(range(3)))
    return _from_elements(els, _perm_mul, [_perm_label(p) for p in els], "S3")


def dihedral_group_4() -> FiniteSemigroup:
    """Symmetries of a square as permutations of its corners."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    els = {tuple(range(4))}
    frontier = list(els)
    while frontier:
        nxt = []
        for p in frontier:
            for g in (r, s):
                q = _perm_mul(p, g)
                if q not in els:
                    els.add(q)
                    nxt.append(q)
        frontier = nxt
    els = sorted(els)
    return _from_elements(els, _perm_mul, [_perm_label(p) for p in els], "D4")


def quaternion_group() -> FiniteSemigroup:
    # unit quaternions ±1, ±i, ±j, ±k as (sign, unit)
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    els = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(a, b):
        sign, u = units[(a[1], b[1])]
        return (a[0] * b[0] * sign, u)

    labels = [("" if s == 1 else "-") + u for s, u in els]
    return _from_elements(els, mul, labels, "Q8")


GROUP_BUILDERS: dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": lambda: cyclic_group(1),
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z5": lambda: cyclic_group(5),
    "Z6": lambda: cyclic_group(6),
    "V4": klein_group,
    "S3": symmetric_group_3,
    "D4": dihedral_group_4,
    "Q8": quaternion_group,
}


def builtin_group(name: str) -> Optional[FiniteSemigroup]:
    for key, build in GROUP_BUILDERS.items():
        if key.lower() == name.lower():
            G = build()
            return FiniteSemigroup(G.table, G.labels, key)
    return None
