import pytest
from hypothesis import given, settings, strategies as st

from etastar.corpus import BUILTINS, builtin, builtin_rees
from etastar.errors import AssociativityError, FormatError
from etastar.formats import emit_cayley, emit_rees, load, parse_any, parse_cayley, parse_rees
from etastar.rees import build_rees
from etastar.semigroup import make_semigroup

GOOD = """# two-element semilattice
semigroup sl2
order 2
elements e f
table
0 1
1 1
"""


def test_parse_cayley():
    S = parse_cayley(GOOD)
    assert S.name == "sl2" and S.labels == ("e", "f") and S.table == ((0, 1), (1, 1))


def test_parse_without_elements_line():
    S = parse_cayley("semigroup x\norder 1\ntable\n0\n")
    assert S.order == 1 and S.labels is None


@pytest.mark.parametrize("text, message", [
    ("semigroup x\norder 2\ntable\n0 1\n", "table rows"),
    ("semigroup x\norder 2\ntable\n0 1\n1\n", "entries"),
    ("semigroup x\norder two\ntable\n0\n", "integer"),
    ("semigroup x\norder 2\nelements a b\n", "missing .table."),
    ("semigroup x\norder 2\n", "short"),
    ("semigroup x\norder 1\nelements a\n0\n", "table"),
    ("group x\norder 1\ntable\n0\n", "semigroup"),
    ("semigroup x\norder 2\ntable\n0 5\n1 1\n", "out of range"),
])
def test_malformed_cayley(text, message):
    with pytest.raises(FormatError, match=message):
        parse_cayley(text)


def test_non_associative_table():
    with pytest.raises(AssociativityError):
        parse_cayley("semigroup x\norder 2\ntable\n0 1\n0 0\n")


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtin_roundtrip_is_bit_exact(name):
    S = builtin(name)
    text = emit_cayley(S)
    T = parse_cayley(text)
    assert T.table == S.table and T.labels == S.labels
    assert emit_cayley(T) == text


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_enumerated_roundtrip(enumerated, data):
    S = data.draw(st.sampled_from(enumerated))
    labels = data.draw(st.lists(st.text("abcxyz019θ", min_size=1, max_size=3),
                                min_size=S.order, max_size=S.order, unique=True))
    S = make_semigroup(S.table, labels, S.name)
    text = emit_cayley(S)
    assert text.endswith("\n")
    T = parse_cayley(text)
    assert (T.table, T.labels, T.name) == (S.table, S.labels, S.name)
    assert emit_cayley(T) == text


def test_rees_roundtrip():
    for name in ("b2", "allones22", "noncsd22", "rectband22", "csz2"):
        r = builtin_rees(name)
        back = parse_rees(emit_rees(r))
        assert back == r
        assert build_rees(back).table == builtin(name).table


def test_rees_with_group_file(tmp_path):
    (tmp_path / "g.txt").write_text(emit_cayley(builtin("z3")), encoding="utf-8")
    text = "rees0 m\ngroup g.txt\nrows 1\ncols 2\nP\n0 2\n"
    r = parse_rees(text, str(tmp_path))
    assert r.group.order == 3 and r.P == ((0, 2),)


@pytest.mark.parametrize("text", [
    "rees0 m\ngroup Z9\nrows 1\ncols 1\nP\n0\n",
    "rees m\ngroup Z2\nrows 1\ncols 1\nP\n.\n",
    "rees0 m\ngroup Z2\nrows 1\ncols 1\nP\n2\n",
    "rees0 m\ngroup Z2\nrows 2\ncols 1\nP\n0\n",
    "rees0 m\ngroup Z2\ncols 1\nrows 1\nP\n0\n",
])
def test_malformed_rees(text, tmp_path):
    with pytest.raises(FormatError):
        parse_rees(text, str(tmp_path))


def test_parse_any_and_load(tmp_path):
    entry = parse_any(emit_rees(builtin_rees("b2")))
    assert entry.rees is not None and entry.semigroup.order == 5
    p = tmp_path / "s.txt"
    p.write_text(GOOD, encoding="utf-8")
    assert load(str(p)).semigroup.order == 2
    with pytest.raises(FormatError):
        parse_any("# nothing\n")
