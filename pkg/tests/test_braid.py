import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taftknot.braid import (
    BraidParseError,
    BraidWord,
    DimensionCapError,
    closure_components,
    format_braid,
    free_reduce,
    markov_conjugate,
    markov_stabilize,
    parse,
    permutation,
    rho,
    writhe,
)
from taftknot.matrix import Matrix


@st.composite
def words(draw, max_strands=5, max_len=10):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1, ())
    gens = st.integers(1, n - 1).flatmap(lambda j: st.sampled_from((j, -j)))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len))))


class TestParse:
    def test_grammar_a(self):
        assert parse("B3: s1^-1 s2 s1^-1") == BraidWord(3, (-1, 2, -1))
        assert parse("s1 s1 s1") == BraidWord(2, (1, 1, 1))
        assert parse("B1:") == BraidWord(1, ())
        assert parse("B4: s1") == BraidWord(4, (1,))

    def test_grammar_b(self):
        assert parse("[-1, 2, -1]") == BraidWord(3, (-1, 2, -1))
        assert parse("[]") == BraidWord(1, ())
        assert parse("[1]", strands=4) == BraidWord(4, (1,))
        assert parse("[]", strands=3) == BraidWord(3, ())

    @pytest.mark.parametrize("text,token", [
        ("s0", "s0"), ("B2: s1 t2", "t2"), ("s1^2", "s1^2"), ("[1, x]", "x"),
    ])
    def test_bad_token_is_named(self, text, token):
        with pytest.raises(BraidParseError, match=token.replace("^", r"\^")):
            parse(text)

    def test_other_errors(self):
        with pytest.raises(BraidParseError):
            parse("[0]")
        with pytest.raises(BraidParseError, match="out of range"):
            parse("B2: s2")
        with pytest.raises(BraidParseError):
            parse("B2: s1", strands=3)
        with pytest.raises(BraidParseError):
            parse("[1, 2")

    def test_canonical_format(self):
        assert format_braid(BraidWord(2, (1, 1, 1))) == "B2: s1 s1 s1"
        assert format_braid(BraidWord(1, ())) == "B1:"
        assert str(BraidWord(3, (-1, 2))) == "B3: s1^-1 s2"

    @given(words())
    def test_round_trip(self, w):
        assert parse(format_braid(w)) == w


def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(0, ())


def test_writhe():
    assert writhe(BraidWord(3, (-1, 2, -1))) == -1
    assert writhe(BraidWord(1, ())) == 0
    assert writhe(BraidWord(2, (1, 1, 1))) == 3


def test_permutation_and_components():
    assert permutation(BraidWord(2, ())) == (0, 1)
    assert closure_components(BraidWord(2, ())) == 2
    assert permutation(BraidWord(2, (1, 1, 1))) == (1, 0)
    assert closure_components(BraidWord(2, (1, 1, 1))) == 1
    assert closure_components(BraidWord(2, (1, 1))) == 2
    assert closure_components(BraidWord(3, (1, -2, 1, -2))) == 1


@given(words())
def test_permutation_ignores_signs(w):
    flipped = BraidWord(w.strands, tuple(abs(x) for x in w.letters))
    assert permutation(w) == permutation(flipped)


def test_markov_moves():
    assert markov_conjugate(BraidWord(2, ()), BraidWord(2, (1,))) == BraidWord(2, (1, -1))
    assert free_reduce(BraidWord(2, (1, -1))) == BraidWord(2, ())
    s = markov_stabilize(BraidWord(2, (1, 1, 1)), 1)
    assert s == BraidWord(3, (1, 1, 1, 2))
    assert writhe(s) == 4
    with pytest.raises(ValueError):
        markov_stabilize(s, 0)


@given(words(), words())
def test_conjugation_keeps_writhe(w, a):
    if a.strands != w.strands:
        a = BraidWord(w.strands, ())
    assert writhe(markov_conjugate(w, a)) == writhe(w)


def test_free_reduce_cascades():
    assert free_reduce(BraidWord(3, (1, 2, -2, -1, 2))) == BraidWord(3, (2,))


class TestRho:
    def test_identities(self, rd1):
        eye = Matrix.identity(8, rd1.c.matrix[0, 0] * 0 + 1)
        assert rho(BraidWord(3, ()), rd1.c, rd1.c_inv).matrix == eye
        assert rho(BraidWord(3, (1, -1)), rd1.c, rd1.c_inv).matrix == eye

    def test_braid_relation(self, rd1):
        a = rho(BraidWord(3, (1, 2, 1)), rd1.c, rd1.c_inv)
        b = rho(BraidWord(3, (2, 1, 2)), rd1.c, rd1.c_inv)
        assert a == b

    def test_far_commutation(self, rd1):
        a = rho(BraidWord(4, (1, 3)), rd1.c, rd1.c_inv)
        b = rho(BraidWord(4, (3, 1)), rd1.c, rd1.c_inv)
        assert a == b
        assert rho(BraidWord(4, (1, 2)), rd1.c, rd1.c_inv) != rho(BraidWord(4, (2, 1)), rd1.c, rd1.c_inv)

    def test_homomorphism(self, rd1):
        rng = random.Random(7)
        for _ in range(10):
            w1 = BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 4))))
            w2 = BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 4))))
            m1 = rho(w1, rd1.c, rd1.c_inv).matrix
            m2 = rho(w2, rd1.c, rd1.c_inv).matrix
            # first letter acts first
            assert rho(w1 * w2, rd1.c, rd1.c_inv).matrix == m2 @ m1

    def test_cap(self, rd1):
        with pytest.raises(DimensionCapError):
            rho(BraidWord(5, (1,)), rd1.c, rd1.c_inv, cap=16)
