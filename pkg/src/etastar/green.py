"""Green's relations, principal series and principal factors."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .semigroup import Congruence, FiniteSemigroup


class FactorKind(enum.Enum):
    NULL = "null"
    COMPLETELY_SIMPLE = "completely-simple"
    COMPLETELY_0_SIMPLE = "completely-0-simple"


@dataclass(frozen=True)
class GreenData:
    R: Congruence
    L: Congruence
    J: Congruence
    H: Congruence
    # (a, b) with J_a < J_b, keyed by class representatives
    j_order: frozenset[tuple[int, int]]
    regular_j: dict[int, bool]
    ideal_masks: np.ndarray  # ideal_masks[x, y]: y lies in S¹xS¹

    def j_classes(self) -> list[tuple[int, ...]]:
        return self.J.classes

    def j_below(self, a: int, b: int) -> bool:
        """J_a <= J_b."""
        return bool(self.ideal_masks[b, a])


def _class_labels(mask: np.ndarray) -> Congruence:
    return Congruence.from_labels([row.tobytes() for row in mask])


def compute_green(S: FiniteSemigroup) -> GreenData:
    n = S.order
    a = S.array
    eye = np.eye(n, dtype=bool)
    right = eye.copy()
    right[np.arange(n)[:, None], a] = True  # xS¹
    left = eye.copy()
    left[np.arange(n)[:, None], a.T] = True  # S¹x, row x
    # S¹xS¹ = S¹x ∪ (S¹x)S
    two = left.copy()
    for x in range(n):
        members = np.flatnonzero(left[x])
        two[x, a[members].ravel()] = True
    R = _class_labels(right)
    L = _class_labels(left)
    J = _class_labels(two)
    H = R.meet(L)
    reps = sorted(set(J.reps))
    order = set()
    for p in reps:
        for q in reps:
            if p != q and two[q, p]:
                order.add((p, q))
    idem = [x for x in range(n) if a[x, x] == x]
    regular = {r: False for r in reps}
    for e in idem:
        regular[J.reps[e]] = True
    return GreenData(R, L, J, H, frozenset(order), regular, two)


@dataclass(frozen=True)
class FactorDescriptor:
    jclass: tuple[int, ...]
    kind: FactorKind
    factor_semigroup: FiniteSemigroup
    embedding: tuple[Optional[int], ...]  # factor id -> S id; None for the adjoined θ
    theta: Optional[int]  # factor id of θ, if any

    @property
    def size(self) -> int:
        return len(self.jclass)

    def local(self, x: int) -> int:
        return self.embedding.index(x)


@dataclass(frozen=True)
class PrincipalSeries:
    ideals: tuple[frozenset[int], ...]  # S_1 ⊃ S_2 ⊃ ... ⊃ S_o; S_{o+1} = ∅ is implicit
    factors: tuple[FactorDescriptor, ...]

    def __len__(self):
        return len(self.factors)

    def difference(self, p: int) -> frozenset[int]:
        return frozenset(self.factors[p].jclass)

    def below(self, p: int) -> frozenset[int]:
        """The ideal S_{p+1} (empty after the last factor)."""
        return self.ideals[p + 1] if p + 1 < len(self.ideals) else frozenset()

    def factor_of(self, x: int) -> int:
        for p, f in enumerate(self.factors):
            if x in f.jclass:
                return p
        raise KeyError(x)


def principal_factor(S: FiniteSemigroup, jclass, below) -> FactorDescriptor:
    """The factor (J ∪ below)/below, with θ adjoined when ``below`` is nonempty."""
    jclass = tuple(sorted(jclass))
    pos = {x: k for k, x in enumerate(jclass)}
    t = S.table
    if not below:
        table = tuple(tuple(pos[t[x][y]] for y in jclass) for x in jclass)
        labels = tuple(S.label(x) for x in jclass) if S.labels else None
        F = FiniteSemigroup(table, labels)
        return FactorDescriptor(jclass, FactorKind.COMPLETELY_SIMPLE, F, jclass, None)
    z = len(jclass)
    rows = [[pos.get(t[x][y], z) for y in jclass] + [z] for x in jclass]
    rows.append([z] * (z + 1))
    labels = (tuple(S.label(x) for x in jclass) + ("θ",)) if S.labels else None
    F = FiniteSemigroup(tuple(tuple(r) for r in rows), labels)
    null = all(v == z for row in rows for v in row)
    kind = FactorKind.NULL if null else FactorKind.COMPLETELY_0_SIMPLE
    return FactorDescriptor(jclass, kind, F, jclass + (None,), z)


def principal_series(S: FiniteSemigroup, green: Optional[GreenData] = None) -> PrincipalSeries:
    """Delete a maximal J-class at a time; ties go to the class with the least id."""
    green = green or compute_green(S)
    classes = {c[0]: c for c in green.J.classes}
    remaining = set(classes)
    ideals, removed = [], []
    while remaining:
        ideals.append(frozenset(x for r in remaining for x in classes[r]))
        maximal = [r for r in remaining
                   if not any((r, q) in green.j_order for q in remaining)]
        top = min(maximal)
        remaining.discard(top)
        removed.append(top)
    factors = []
    for p, r in enumerate(removed):
        below = ideals[p + 1] if p + 1 < len(ideals) else frozenset()
        factors.append(principal_factor(S, classes[r], below))
    return PrincipalSeries(tuple(ideals), tuple(factors))


def is_ideal(S: FiniteSemigroup, subset) -> bool:
    sub = set(subset)
    t = S.table
    return all(t[x][s] in sub and t[s][x] in sub for x in sub for s in S.elements)


def is_semisimple(S: FiniteSemigroup, series: Optional[PrincipalSeries] = None) -> bool:
    series = series or principal_series(S)
    return all(f.kind is not FactorKind.NULL for f in series.factors)
