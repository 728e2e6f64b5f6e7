from etastar.corpus import builtin
from etastar.green import FactorKind, compute_green, is_semisimple, principal_series
from etastar.semigroup import Congruence

from .helpers import ids


def brute_green(S):
    """Green's relations from explicit principal ideals."""
    t = S.table
    E = list(S.elements)
    right = [frozenset([x] + [t[x][s] for s in E]) for x in E]
    left = [frozenset([x] + [t[s][x] for s in E]) for x in E]
    two = [frozenset([x] + [t[a][x] for a in E] + [t[x][b] for b in E]
                     + [t[t[a][x]][b] for a in E for b in E]) for x in E]
    R = Congruence.from_labels(right)
    L = Congruence.from_labels(left)
    J = Congruence.from_labels(two)
    H = Congruence.from_labels(list(zip(right, left)))
    return R, L, J, H


def test_green_matches_ideal_oracle(corpus):
    for name, S in corpus:
        g = compute_green(S)
        assert (g.R, g.L, g.J, g.H) == brute_green(S), name


def test_group_is_one_class():
    g = compute_green(builtin("s3"))
    assert g.R.class_count == g.L.class_count == g.J.class_count == g.H.class_count == 1


def test_b2_classes():
    B = builtin("b2")
    g = compute_green(B)
    assert sorted(g.J.classes) == [(0, 1, 2, 3), (4,)]
    assert g.H.is_identity()


def test_semilattice_order():
    S = builtin("semilattice2")
    g = compute_green(S)
    assert g.J.is_identity()
    assert g.j_below(1, 0) and not g.j_below(0, 1)


def test_factor_sizes_partition_the_semigroup(corpus):
    for name, S in corpus:
        series = principal_series(S)
        seen = sorted(x for f in series.factors for x in f.jclass)
        assert seen == list(S.elements), name
        for p in range(len(series.factors)):
            below = series.below(p)
            assert all(S.mul(a, x) in below and S.mul(x, a) in below
                       for x in below for a in S.elements), name


def test_f7_series(f7):
    series = principal_series(f7)
    assert [f.size for f in series.factors] == [2, 4, 1]
    assert series.factors[0].jclass == ids(f7, "1", "u")
    assert [f.kind for f in series.factors[:2]] == [FactorKind.COMPLETELY_0_SIMPLE] * 2


def test_paper23_series(paper23):
    series = principal_series(paper23)
    kinds = [f.kind for f in series.factors]
    assert kinds[:2] == [FactorKind.NULL, FactorKind.NULL]
    assert {x for f in series.factors[:2] for x in f.jclass} == set(ids(paper23, "v1", "v2"))
    assert [f.size for f in series.factors[2:]] == [16, 4, 1]
    assert not is_semisimple(paper23, series)


def test_group_series_is_single_completely_simple():
    series = principal_series(builtin("q8"))
    assert len(series.factors) == 1 and series.factors[0].kind is FactorKind.COMPLETELY_SIMPLE


def test_semisimple_examples():
    assert is_semisimple(builtin("b2"))
    assert is_semisimple(builtin("z5"))
    assert not is_semisimple(builtin("null3"))
