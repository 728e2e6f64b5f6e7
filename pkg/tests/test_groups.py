import pytest

from etastar.corpus import builtin
from etastar.green import compute_green
from etastar.groups import (GROUP_BUILDERS, builtin_group, commutator, cosets, group_of,
                            group_quotient, is_nilpotent_group, is_normal, lower_central_series,
                            maximal_subgroup, nilpotent_residual, normal_closure, normal_subgroups)
from etastar.malcev import is_malcev_nilpotent

from .helpers import ids


def G(name):
    return group_of(builtin_group(name))


def brute_commutator_subgroup(g):
    """Subgroup generated by [x, y] over all pairs, closed by repeated products."""
    sub = {commutator(g, x, y) for x in g.elements for y in g.elements}
    while True:
        more = {g.mul(a, b) for a in sub for b in sub} | sub
        if more == sub:
            return frozenset(sub)
        sub = more


def test_abelian_series_stops_at_identity():
    for name in ("Z4", "V4", "Z6"):
        g = G(name)
        series = lower_central_series(g)
        assert series.last == frozenset({g.identity})
        assert len(series.terms) == 2


def test_s3_series_stabilizes_at_a3():
    g = G("S3")
    A3 = frozenset(ids(builtin_group("S3"), "1", "(123)", "(132)"))
    series = lower_central_series(g)
    assert series.terms[1] == A3 == brute_commutator_subgroup(g)
    assert series.last == A3
    assert nilpotent_residual(g) == A3


def test_d4_series_reaches_identity_through_center():
    g = G("D4")
    series = lower_central_series(g)
    center = frozenset(z for z in g.elements if all(g.mul(z, x) == g.mul(x, z) for x in g.elements))
    assert series.terms[1] == center == brute_commutator_subgroup(g)
    assert len(center) == 2
    assert series.last == frozenset({g.identity})


def test_nilpotency_of_builtins():
    assert is_nilpotent_group(G("Z4"))
    assert is_nilpotent_group(G("Q8"))
    assert is_nilpotent_group(G("D4"))
    assert not is_nilpotent_group(G("S3"))
    assert is_nilpotent_group(G("Z6"))


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_group_nilpotency_matches_malcev(name):
    S = builtin_group(name)
    assert is_nilpotent_group(group_of(S)) == is_malcev_nilpotent(S).verdict


@pytest.mark.parametrize("name", sorted(GROUP_BUILDERS))
def test_residual_is_least_normal_subgroup_with_nilpotent_quotient(name):
    g = group_of(builtin_group(name))
    R = nilpotent_residual(g)
    assert is_normal(g, R)
    assert is_nilpotent_group(group_quotient(g, R)[0])
    for N in normal_subgroups(g):
        if is_nilpotent_group(group_quotient(g, N)[0]):
            assert R <= N


def test_normal_closure():
    S3 = builtin_group("S3")
    g = group_of(S3)
    assert normal_closure(g, {g.identity}) == frozenset({g.identity})
    assert normal_closure(g, ids(S3, "(123)")) == frozenset(ids(S3, "1", "(123)", "(132)"))
    assert normal_closure(g, g.elements) == frozenset(g.elements)
    assert len(normal_closure(g, ids(S3, "(12)"))) == 6


def test_group_quotient():
    g = G("S3")
    q, f = group_quotient(g, {g.identity})
    assert q.order == 6
    q, f = group_quotient(g, nilpotent_residual(g))
    assert q.order == 2
    assert len(cosets(g, nilpotent_residual(g))) == 2
    q, f = group_quotient(g, g.elements)
    assert q.is_trivial()


def test_maximal_subgroups_in_semigroups(f7):
    B = builtin("b2")
    green = compute_green(B)
    assert maximal_subgroup(B, green.H.block(0)).is_trivial()
    green = compute_green(f7)
    H = maximal_subgroup(f7, green.H.block(f7.index_of("1")))
    assert H.order == 2 and H.carrier == frozenset(ids(f7, "1", "u"))
    S3 = builtin("s3")
    assert maximal_subgroup(S3, S3.elements).order == 6


def test_maximal_subgroup_rejects_non_group_h_class():
    B = builtin("b2")
    with pytest.raises(Exception):
        maximal_subgroup(B, [B.index_of("(1;1,2)")])
