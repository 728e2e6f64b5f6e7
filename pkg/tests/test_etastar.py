import random

import pytest
from hypothesis import given, settings, strategies as st

from etastar.corpus import builtin, builtin_rees, random_rees
from etastar.errors import BudgetExceeded, NotDiagonalError, NotSemisimpleError
from etastar.etastar import (all_roots, canonical_projection, eta_star, eta_star_bruteforce,
                             eta_star_root, g_eta_star, rees_eta_star_quotient,
                             semisimple_class_audit)
from etastar.green import principal_series
from etastar.groups import builtin_group
from etastar.malcev import nilpotency_class
from etastar.rees import build_rees, rees
from etastar.semigroup import Congruence, all_congruences, is_isomorphic, quotient

from .helpers import ids


def test_b2_is_its_own_quotient():
    B = builtin("b2")
    res = eta_star(B)
    assert res.congruence.is_identity() and res.class_count == 5
    assert is_isomorphic(res.quotient, B) is not None


def test_non_cs_diagonal_collapses():
    assert eta_star(builtin("noncsd22")).class_count == 1


def test_s3_and_z6():
    res = eta_star(builtin("s3"))
    assert sorted(res.congruence.classes) == [(0, 3, 4), (1, 2, 5)]
    assert res.quotient.order == 2
    assert eta_star(builtin("z6")).congruence.is_identity()


def test_bruteforce_basics():
    assert eta_star_bruteforce(builtin("trivial")).is_identity()
    assert eta_star_bruteforce(builtin("null2")).is_identity()
    with pytest.raises(BudgetExceeded):
        eta_star_bruteforce(builtin("paper23"))


def test_oracle_on_small_corpus(corpus):
    for name, S in corpus:
        if S.order <= 6:
            assert eta_star(S).congruence == eta_star_bruteforce(S), name


def test_eta_star_is_least_among_all_congruences(enumerated):
    # a second oracle: scan the congruence lattice instead of raw partitions
    for S in enumerated:
        if S.order > 3:
            continue
        eta = eta_star(S).congruence
        for c in all_congruences(S):
            if nilpotency_class(quotient(S, c)[0]) is not None:
                assert eta.refines(c), S.name


def test_g_eta_star_examples():
    Z2 = builtin_group("Z2")
    assert g_eta_star(builtin_rees("b2")).group.is_trivial()
    assert g_eta_star(builtin_rees("csz2")).group.is_trivial()
    assert g_eta_star(rees(Z2, [[0, None], [None, 0]])).group.order == 2
    with pytest.raises(NotDiagonalError):
        g_eta_star(builtin_rees("noncsd22"))


def test_rees_quotient_examples():
    B = builtin("b2")
    assert is_isomorphic(rees_eta_star_quotient(builtin_rees("b2")), B) is not None
    assert rees_eta_star_quotient(builtin_rees("allones22")).order == 2
    assert rees_eta_star_quotient(builtin_rees("rectband22")).order == 1


def test_canonical_projection_examples():
    r = builtin_rees("b2")
    f = canonical_projection(r)
    M = build_rees(r)
    assert f(M.zero) == f.target.zero
    assert f.target.label(f(M.index_of("(1;1,2)"))) == "(1;1,2)"
    r = builtin_rees("allones22")
    f = canonical_projection(r)
    M = build_rees(r)
    assert f.target.label(f(M.index_of("(1;2,2)"))) == "(1;1,1)"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_random_cs_diagonal_quotients(seed):
    r = random_rees(random.Random(seed), "cs-diagonal", max_dim=3, max_group=6)
    M = build_rees(r)
    res = eta_star(M)
    assert is_isomorphic(res.quotient, rees_eta_star_quotient(r)) is not None
    assert canonical_projection(r).kernel() == res.congruence


def test_paper23_classes(paper23):
    eta = eta_star(paper23).congruence
    ik, jl, ab, ii, ij, aa = ids(paper23, "[i,k]", "[j,l]", "(a,b)", "[i,i]", "[i,j]", "(a,a)")
    assert eta.same(ik, jl) and eta.same(ik, ab)
    assert eta.same(ii, ij) and eta.same(ii, aa) and not eta.same(ii, ab)
    brackets = [x for x in paper23.elements if paper23.label(x).startswith("[")]
    assert not any(eta.same(x, paper23.zero) for x in brackets)
    assert eta.class_count == 7


def test_paper23_root(paper23):
    series = principal_series(paper23)
    root = eta_star_root(paper23, series, 2)
    assert root.root == 3
    i, j, k, l = range(4)
    assert root.phi_map[i] == root.phi_map[j] != root.phi_map[k] == root.phi_map[l]
    assert root.phi_prime_map[i] == root.phi_prime_map[j] != root.phi_prime_map[k]


def test_root_examples(f7):
    S = builtin("noncsd22")
    assert eta_star_root(S, principal_series(S), 0).is_theta
    B = builtin("b2")
    assert eta_star_root(B, principal_series(B), 0).root == 0
    roots = all_roots(f7)
    assert roots[0].root == 0 and roots[1].is_theta


def test_semisimple_class_audit(f7, paper23):
    B = builtin("b2")
    audit = semisimple_class_audit(B)
    assert audit == {0: 0, 1: 0, 2: 0, 3: 0, 4: None}
    S3 = builtin("s3")
    assert semisimple_class_audit(S3) == {0: 0, 1: 0}
    audit = semisimple_class_audit(f7)
    assert audit[f7.index_of("1")] == 0 and audit[f7.index_of("(1;1,1)")] is None
    with pytest.raises(NotSemisimpleError):
        semisimple_class_audit(paper23)


def test_roots_exist_for_every_semisimple_member(corpus):
    for name, S in corpus:
        series = principal_series(S)
        roots = all_roots(S, series)
        for p, r in enumerate(roots):
            if r is not None and not r.is_theta:
                assert r.root >= p, name


def test_quotient_by_eta_is_nilpotent_and_minimal_on_projection(corpus):
    for name, S in corpus:
        res = eta_star(S)
        assert nilpotency_class(res.quotient) is not None
        assert res.projection.kernel() == res.congruence
        assert isinstance(res.congruence, Congruence)
