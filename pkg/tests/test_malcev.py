import itertools

from etastar.corpus import builtin
from etastar.malcev import (SKIP, cyclic_pairs, eta_pairs, gamma_star, is_malcev_nilpotent,
                            is_neumann_taylor, is_positively_engel, lambda_rho, nilpotency_class,
                            nonnilpotent_witness, pair_step)
from etastar.etastar import eta_star

from .helpers import ids


def all_words(S, length):
    return itertools.product([SKIP, *S.elements], repeat=length)


def identity_holds(S, words) -> bool:
    return all(len(set(lambda_rho(S, x, y, w))) == 1
               for w in words for x in S.elements for y in S.elements)


def engel_word(S, c, n):
    word, z = [SKIP, SKIP], c
    while len(word) < n:
        word.append(z)
        z = SKIP if c is SKIP else S.mul(z, c)
    return word


def test_lambda_rho_basics():
    B = builtin("allones22")
    x, y = ids(B, "(1;1,1)", "(1;1,2)")
    assert lambda_rho(B, x, y, []) == (x, y)
    assert lambda_rho(B, x, y, [SKIP, SKIP]) == (x, y)
    assert lambda_rho(B, x, y, [SKIP]) == (y, x)
    assert all(len(set(lambda_rho(B, x, x, w))) == 1 for w in all_words(B, 3))


def test_pair_step_examples():
    L = builtin("leftzero2")
    assert pair_step(L, (0, 1), SKIP) == (0, 1)
    B = builtin("b2")
    a11, a22 = ids(B, "(1;1,1)", "(1;2,2)")
    assert pair_step(B, (a11, a22), SKIP) == (B.zero, B.zero)
    assert all(pair_step(B, (a, a), z)[0] == pair_step(B, (a, a), z)[1]
               for a in B.elements for z in [SKIP, *B.elements])


def test_malcev_examples(f7):
    r = is_malcev_nilpotent(builtin("b2"))
    assert r.verdict and r.class_n >= 1
    r = is_malcev_nilpotent(f7)
    assert not r.verdict and r.witness.x != r.witness.y and r.witness.check(f7)
    assert is_malcev_nilpotent(builtin("null3")).class_n == 1
    assert is_malcev_nilpotent(builtin("trivial")).class_n == 1


def test_witness_examples():
    L = builtin("leftzero2")
    w = nonnilpotent_witness(L)
    assert (w.x, w.y, w.word) == (0, 1, (SKIP,))
    assert nonnilpotent_witness(builtin("b2")) is None
    A = builtin("allones22")
    w = nonnilpotent_witness(A)
    assert (w.x, w.y) == ids(A, "(1;1,1)", "(1;1,2)") and w.word == (SKIP, SKIP)


def test_malcev_class_against_word_enumeration(enumerated):
    for S in enumerated:
        if S.order > 3:
            continue
        r = is_malcev_nilpotent(S)
        if not r.verdict:
            assert r.witness.check(S)
            continue
        c = r.class_n
        assert identity_holds(S, all_words(S, c)), S.name
        if c > 1:
            assert not identity_holds(S, all_words(S, c - 1)), S.name


def test_b2_class_is_exact():
    B = builtin("b2")
    c = is_malcev_nilpotent(B).class_n
    assert identity_holds(B, all_words(B, c))
    assert c == 1 or not identity_holds(B, all_words(B, c - 1))


def test_eta_pairs_of_nilpotent_semigroup_are_diagonal(corpus):
    for name, S in corpus:
        if nilpotency_class(S) is not None:
            assert eta_pairs(S) == frozenset((x, x) for x in S.elements), name
            assert cyclic_pairs(S) == []


def test_all_ones_eta_pairs():
    A = builtin("allones22")
    x, y = ids(A, "(1;1,1)", "(1;1,2)")
    assert (x, y) in eta_pairs(A) and (y, x) in eta_pairs(A)


def test_neumann_taylor_and_engel_classes(enumerated):
    for S in enumerated:
        if S.order > 3:
            continue
        nt = is_neumann_taylor(S)
        if nt.verdict:
            words = ((SKIP, *w) for w in all_words(S, nt.class_n - 1))
            assert identity_holds(S, words), S.name
        else:
            w = nt.witness
            assert w.word[0] is SKIP and w.holds(S)
        pe = is_positively_engel(S)
        if pe.verdict:
            for c in [SKIP, *S.elements]:
                assert identity_holds(S, [engel_word(S, c, pe.class_n)]), S.name
        else:
            w = pe.witness
            assert list(w.word) == engel_word(S, w.c, len(w.word)) and w.holds(S)


def test_identity_implications(corpus):
    for name, S in corpus:
        mn, nt, pe = (is_malcev_nilpotent(S).verdict, is_neumann_taylor(S).verdict,
                      is_positively_engel(S).verdict)
        assert (not mn or nt) and (not nt or pe), name


def test_commutative_semigroups_are_neumann_taylor(corpus):
    for name, S in corpus:
        if S.is_commutative():
            r = is_neumann_taylor(S)
            assert r.verdict and r.class_n == 2, name


def test_engel_examples(f7):
    assert not is_positively_engel(f7).verdict
    assert is_positively_engel(builtin("semilattice2")).verdict
    assert is_positively_engel(builtin("b2")).verdict


def test_gamma_star(corpus):
    assert gamma_star(builtin("semilattice3")).is_identity()
    assert sorted(gamma_star(builtin("s3")).classes) == [(0, 3, 4), (1, 2, 5)]
    for name, S in corpus:
        assert eta_star(S).congruence.refines(gamma_star(S)), name
