import itertools

import pytest
from hypothesis import given, settings, strategies as st

from etastar.corpus import builtin, null_semigroup
from etastar.errors import AssociativityError
from etastar.groups import builtin_group
from etastar.semigroup import (Congruence, all_congruences, canonical_table, congruence_closure,
                               direct_product, first_associativity_failure, generate_subsemigroup,
                               is_isomorphic, make_semigroup, quotient, rees_quotient,
                               restricted_growth_strings)

from .helpers import brute_associative, ids


def test_trivial_semigroup_has_identity_and_zero():
    S = make_semigroup([[0]])
    assert S.identity == 0 and S.zero == 0


def test_left_zero_has_neither():
    S = make_semigroup([[0, 0], [1, 1]])
    assert S.identity is None and S.zero is None


def test_bad_table_rejected_exactly_when_a_triple_fails():
    table = [[0, 1], [0, 0]]
    assert not brute_associative(table)
    with pytest.raises(AssociativityError):
        make_semigroup(table)


def test_out_of_range_entry_rejected():
    with pytest.raises(Exception):
        make_semigroup([[0, 2], [1, 1]])


def test_first_failure_agrees_with_brute_force(enumerated):
    for S in enumerated:
        assert first_associativity_failure(S.table) is None
    t = [[1, 0], [0, 0]]
    assert (first_associativity_failure(t) is None) == brute_associative(t)


def test_b2_products():
    B = builtin("b2")
    a12, a22, a21, a11 = ids(B, "(1;1,2)", "(1;2,2)", "(1;2,1)", "(1;1,1)")
    assert B.prod([a12, a22, a21, a11]) == a11
    assert B.prod([a12, a11, a21, a22]) == B.zero
    assert all(B.mul(B.zero, x) == B.zero == B.mul(x, B.zero) for x in B.elements)


def test_generate_subsemigroup(f7):
    one, u = ids(f7, "1", "u")
    assert generate_subsemigroup(f7, {u}) == frozenset({one, u})
    assert generate_subsemigroup(f7, {one}) == frozenset({one})
    assert generate_subsemigroup(f7, f7.elements) == frozenset(f7.elements)


def test_congruence_closure_basics():
    N = null_semigroup(2)
    assert congruence_closure(N, []).is_identity()
    c = congruence_closure(N, [(0, 1)])
    assert c.class_count == 1
    S3 = builtin("s3")
    t = S3.table
    c = congruence_closure(S3, {(t[x][y], t[y][x]) for x in S3.elements for y in S3.elements})
    assert sorted(c.classes) == [(0, 3, 4), (1, 2, 5)]


def test_closure_is_least_compatible_equivalence(enumerated):
    # oracle: every congruence containing the pair contains the closure
    for S in enumerated[:40]:
        cons = list(all_congruences(S))
        for a, b in itertools.combinations(S.elements, 2):
            c = congruence_closure(S, [(a, b)])
            assert c.is_compatible(S) and c.same(a, b)
            assert all(c.refines(d) for d in cons if d.same(a, b))


def test_quotients():
    S3 = builtin("s3")
    Q, f = quotient(S3, Congruence.identity(6))
    assert is_isomorphic(Q, S3) is not None
    Q, f = quotient(S3, Congruence.universal(6))
    assert Q.order == 1
    Q, f = quotient(S3, Congruence.from_classes(6, [(0, 3, 4), (1, 2, 5)]))
    assert Q.order == 2 and Q.is_group()
    assert f.is_morphism() and f.is_surjective()
    assert f.kernel() == Congruence.from_classes(6, [(0, 3, 4), (1, 2, 5)])


def test_quotient_rejects_non_congruence():
    S3 = builtin("s3")
    with pytest.raises(Exception):
        quotient(S3, Congruence.from_classes(6, [(0, 1)]))


def test_isomorphism():
    S = builtin("b2")
    iso = is_isomorphic(S, S)
    assert iso is not None and iso.is_bijective()
    assert is_isomorphic(null_semigroup(2), builtin("semilattice2")) is None
    M1 = make_semigroup([[0, 1], [1, 1]])
    Q, _ = quotient(builtin("allones22"), Congruence.from_classes(5, [(0, 1, 2, 3)]))
    assert is_isomorphic(Q, M1) is not None


def test_rees_quotient_collapses_ideal(f7):
    T, proj = rees_quotient(f7, range(2, 7))
    assert T.order == 3 and T.zero == proj[6]


def test_direct_product_order():
    P = direct_product(builtin_group("Z2"), builtin("semilattice2"))
    assert P.order == 4 and brute_associative(P.table)


def test_restricted_growth_strings_are_bell_numbers():
    assert [sum(1 for _ in restricted_growth_strings(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_table_is_an_isomorphism_invariant(enumerated, data):
    S = data.draw(st.sampled_from(enumerated))
    perm = data.draw(st.permutations(list(S.elements)))
    inv = {p: k for k, p in enumerate(perm)}
    T = make_semigroup([[inv[S.table[perm[a]][perm[b]]] for b in S.elements] for a in S.elements])
    assert canonical_table(T) == canonical_table(S)
    assert is_isomorphic(S, T) is not None
