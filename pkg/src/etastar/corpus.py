"""Built-in example semigroups, small-order enumeration and random Rees generators."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import BudgetExceeded
from .groups import GROUP_BUILDERS, builtin_group, cyclic_group
from .rees import ReesStructure, build_rees, is_cs_diagonal, rees
from .semigroup import FiniteSemigroup, canonical_table, direct_product, make_semigroup

ENUMERATION_CAP = 4


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    semigroup: FiniteSemigroup
    provenance: str  # builtin | file | enumerated
    notes: str = ""
    rees: Optional[ReesStructure] = field(default=None, compare=False)


def _named(S: FiniteSemigroup, name: str) -> FiniteSemigroup:
    return make_semigroup(S.table, S.labels, name)


def _from_rule(elements: list, labels: list[str], mul: Callable, name: str) -> FiniteSemigroup:
    index = {e: k for k, e in enumerate(elements)}
    return make_semigroup([[index[mul(a, b)] for b in elements] for a in elements], labels, name)


def null_semigroup(n: int) -> FiniteSemigroup:
    """Every product is the last element."""
    labels = [chr(ord("a") + k) for k in range(n - 1)] + ["θ"]
    return make_semigroup([[n - 1] * n for _ in range(n)], labels, f"null{n}")


def left_zero(n: int) -> FiniteSemigroup:
    labels = [chr(ord("a") + k) for k in range(n)]
    return make_semigroup([[x] * n for x in range(n)], labels, f"leftzero{n}")


def chain_semilattice(n: int) -> FiniteSemigroup:
    """Chain ``0 > 1 > ... > n-1`` under meet; larger id is lower."""
    return make_semigroup([[max(x, y) for y in range(n)] for x in range(n)],
                          [f"e{k}" for k in range(n)], f"semilattice{n}")


def left_zero_chain_band() -> FiniteSemigroup:
    """Two 2-element left-zero bands, the second an ideal; ``xy`` is x pushed down to y's level."""
    els = [(0, 0), (0, 1), (1, 0), (1, 1)]  # (level, position)

    def mul(a, b):
        return (max(a[0], b[0]), a[1])

    return _from_rule(els, ["a", "b", "c", "d"], mul, "leftzerochain")


def build_f7() -> FiniteSemigroup:
    """B2 with the group {1, u} acting by swapping the column (left) and row (right) index."""
    els = ["1", "u"] + [(i, j) for i in (1, 2) for j in (1, 2)] + ["θ"]

    def swap(i):
        return 3 - i

    def mul(x, y):
        if x == "θ" or y == "θ":
            return "θ"
        if x == "1":
            return y
        if y == "1":
            return x
        if x == "u" and y == "u":
            return "1"
        if x == "u":
            return (swap(y[0]), y[1])
        if y == "u":
            return (x[0], swap(x[1]))
        return (x[0], y[1]) if x[1] == y[0] else "θ"

    labels = [e if isinstance(e, str) else f"(1;{e[0]},{e[1]})" for e in els]
    return _from_rule(els, labels, mul, "f7")


def build_paper_example() -> FiniteSemigroup:
    """23 elements: the 2x2 and 4x4 Brandt parts, two nilpotent elements v1, v2 and θ.

    Ids: (α,β) are 0..3, [γ,λ] are 4..19 (both lexicographic), v1 = 20,
    v2 = 21, θ = 22.  Products follow the defining relations directly, so
    a transcription slip shows up as an associativity failure.
    """
    small = ["a", "b"]
    big = ["i", "j", "k", "l"]
    fold = {"i": "a", "j": "a", "k": "b", "l": "b"}
    els = ([("m1", x, y) for x in small for y in small] + [("m2", x, y) for x in big for y in big]
           + ["v1", "v2", "θ"])

    def m1(x, y):
        if x == "θ" or y == "θ":
            return "θ"
        return ("m1", x[1], y[2]) if x[2] == y[1] else "θ"

    def down(x):
        return ("m1", fold[x[1]], fold[x[2]]) if x[0] == "m2" else x

    left_v = {"v1": {"i": "l", "j": "k"}, "v2": {"i": "k", "j": "l"}}
    right_v = {"v1": {"k": "j", "l": "i"}, "v2": {"k": "i", "l": "j"}}

    def mul(x, y):
        if x == "θ" or y == "θ":
            return "θ"
        xv, yv = isinstance(x, str), isinstance(y, str)
        if xv and yv:
            return "θ"
        if xv:
            if y[0] == "m1":
                return ("m1", "b", y[2]) if y[1] == "a" else "θ"
            tgt = left_v[x].get(y[1])
            return ("m2", tgt, y[2]) if tgt else "θ"
        if yv:
            if x[0] == "m1":
                return ("m1", x[1], "a") if x[2] == "b" else "θ"
            tgt = right_v[y].get(x[2])
            return ("m2", x[1], tgt) if tgt else "θ"
        if x[0] == "m2" and y[0] == "m2" and x[2] == y[1]:
            return ("m2", x[1], y[2])
        return m1(down(x), down(y))

    labels = []
    for e in els:
        if isinstance(e, str):
            labels.append(e)
        else:
            o, c = ("(", ")") if e[0] == "m1" else ("[", "]")
            labels.append(f"{o}{e[1]},{e[2]}{c}")
    return _from_rule(els, labels, mul, "paper23")


def _rees_structures() -> dict[str, ReesStructure]:
    T = builtin_group("trivial")
    Z2 = builtin_group("Z2")
    return {
        "b2": rees(T, [[0, None], [None, 0]], name="b2"),
        "allones22": rees(T, [[0, 0], [0, 0]], name="allones22"),
        "noncsd22": rees(T, [[0, 0], [None, 0]], name="noncsd22"),
        "rectband22": rees(T, [[0, 0], [0, 0]], has_zero=False, name="rectband22"),
        "csz2": rees(Z2, [[0, 0], [0, 1]], has_zero=False, name="csz2"),
    }


def builtin_rees(name: str) -> Optional[ReesStructure]:
    """The Rees structure behind a builtin, when it is given by one."""
    return _rees_structures().get(name.lower())


def _rees_builtin(name: str) -> Callable[[], FiniteSemigroup]:
    return lambda: _named(build_rees(_rees_structures()[name]), name)


def _group_builtin(key: str) -> Callable[[], FiniteSemigroup]:
    return lambda: _named(builtin_group(key), key.lower())


BUILTINS: dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": lambda: make_semigroup([[0]], ["e"], "trivial"),
    "null2": lambda: null_semigroup(2),
    "null3": lambda: null_semigroup(3),
    "leftzero2": lambda: left_zero(2),
    "semilattice2": lambda: chain_semilattice(2),
    "semilattice3": lambda: chain_semilattice(3),
    **{k.lower(): _group_builtin(k) for k in GROUP_BUILDERS if k not in ("trivial",)},
    "b2": _rees_builtin("b2"),
    "f7": build_f7,
    "paper23": build_paper_example,
    **{k: _rees_builtin(k) for k in ("allones22", "noncsd22", "rectband22", "csz2")},
    "leftzerochain": left_zero_chain_band,
    "z2xsemilattice2": lambda: _named(direct_product(cyclic_group(2), chain_semilattice(2)),
                                      "z2xsemilattice2"),
}


def builtin(name: str) -> FiniteSemigroup:
    try:
        return BUILTINS[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None


def builtin_entries() -> list[CorpusEntry]:
    return [CorpusEntry(name, build(), "builtin", rees=builtin_rees(name))
            for name, build in BUILTINS.items()]


def _associative_so_far(t: list[list[int]], n: int) -> bool:
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy < 0:
                continue
            for z in range(n):
                yz = t[y][z]
                if yz < 0:
                    continue
                left, right = t[xy][z], t[x][yz]
                if left >= 0 and right >= 0 and left != right:
                    return False
    return True


def associative_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every associative table on ``0..n-1``, by row-major backtracking."""
    t = [[-1] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        x, y = cells[k]
        for v in range(n):
            t[x][y] = v
            if _associative_so_far(t, n):
                yield from rec(k + 1)
        t[x][y] = -1

    yield from rec(0)


def enumerate_small(n: int) -> list[FiniteSemigroup]:
    """One semigroup per isomorphism class of order ``n``, sorted by canonical table."""
    if n > ENUMERATION_CAP:
        raise BudgetExceeded(f"enumeration is limited to order {ENUMERATION_CAP}")
    if n < 1:
        return []
    reps = {}
    for table in associative_tables(n):
        S = FiniteSemigroup(table)
        reps.setdefault(canonical_table(S), S)
    return [FiniteSemigroup(c, None, f"enum{n}_{k}") for k, c in enumerate(sorted(reps))]


def enumerated_entries(max_order: int = ENUMERATION_CAP) -> list[CorpusEntry]:
    return [CorpusEntry(S.name, S, "enumerated") for n in range(1, max_order + 1)
            for S in enumerate_small(n)]


RANDOM_GROUPS = ("trivial", "Z2", "Z3", "Z4", "V4", "S3", "Z6")


def random_sandwich(rng: random.Random, G: FiniteSemigroup, n: int, m: int,
                    zero_prob: float = 0.4) -> tuple[tuple[Optional[int], ...], ...]:
    return tuple(tuple(None if rng.random() < zero_prob else rng.randrange(G.order) for _ in range(n))
                 for _ in range(m))


def random_rees(rng: random.Random, kind: str, max_dim: int = 3, max_group: int = 6) -> ReesStructure:
    """A random regular Rees structure of the requested ``kind``.

    ``kind`` is ``cs-diagonal`` (with zero), ``non-cs-diagonal`` (with zero)
    or ``completely-simple`` (no zero, all entries nonzero).  Rejection
    sampling; CS-diagonal draws are built from random blocks so they are
    not limited to the identity pattern.
    """
    groups = [g for g in RANDOM_GROUPS if builtin_group(g).order <= max_group]
    while True:
        G = builtin_group(rng.choice(groups))
        n, m = rng.randint(1, max_dim), rng.randint(1, max_dim)
        if kind == "completely-simple":
            P = random_sandwich(rng, G, n, m, zero_prob=0.0)
            return rees(G, P, has_zero=False)
        if kind == "cs-diagonal":
            k = rng.randint(1, min(n, m))
            cols = [rng.randrange(k) for _ in range(n)]
            rows = [rng.randrange(k) for _ in range(m)]
            if len(set(cols)) < k or len(set(rows)) < k:
                continue
            P = tuple(tuple(rng.randrange(G.order) if cols[i] == rows[j] else None for i in range(n))
                      for j in range(m))
            r = rees(G, P)
        else:
            r = rees(G, random_sandwich(rng, G, n, m))
            if not r.is_regular() or is_cs_diagonal(r):
                continue
        return r
