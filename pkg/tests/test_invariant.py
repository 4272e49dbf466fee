import pytest

from taftknot.braid import BraidWord, markov_stabilize, parse
from taftknot.invariant import (
    JONES_EPSILON,
    EvaluationError,
    InvariantResult,
    NormalizationMode,
    b2_closed_form,
    batch_evaluate,
    evaluate_closure,
    jones_via_v1,
    kauffman_bracket_oracle,
)
from taftknot.scalars import LaurentScalar, q_pow
from taftknot.suites import markov_suite, mirror_suite, skein_suite

LEFT = BraidWord(2, (-1, -1, -1))
RIGHT = BraidWord(2, (1, 1, 1))
LEFT_VALUE = LaurentScalar({18: -1, 10: 1, 6: 1, 2: 1})
UNKNOT = BraidWord(1, ())


def t(*pairs):
    """Jones-variable polynomial from (power of t, coefficient) pairs."""
    return LaurentScalar({int(4 * e): c for e, c in pairs})


def test_left_trefoil():
    assert evaluate_closure(LEFT, 1).value == LEFT_VALUE


def test_right_trefoil_is_the_mirror():
    value = evaluate_closure(RIGHT, 1).value
    assert value == LEFT_VALUE.mirror()
    assert value.render() == "q^(-1/2) + q^(-3/2) + q^(-5/2) - q^(-9/2)"


def test_unknot_modes():
    assert evaluate_closure(UNKNOT, 1, "balanced").value == q_pow(1, 2) + q_pow(-1, 2)
    assert evaluate_closure(UNKNOT, 1, "reduced").value == 1
    assert evaluate_closure(UNKNOT, 1, "framed").value == q_pow(1, 2) + q_pow(-1, 2)
    assert evaluate_closure(UNKNOT, 2, "reduced").value == 1
    assert evaluate_closure(BraidWord(2, (1,)), 1, "reduced").value == 1
    assert evaluate_closure(BraidWord(3, (1, -2)), 1, "reduced").value == 1
    # sigma_1 sigma_1^-1 closes to the two-component unlink
    assert evaluate_closure(BraidWord(2, (1, -1)), 1, "reduced").value == q_pow(1, 2) + q_pow(-1, 2)


def test_framed_mode_detects_kinks():
    w = BraidWord(2, (1,))
    framed = evaluate_closure(w, 1, "framed").value
    assert framed == q_pow(3, 4) * evaluate_closure(UNKNOT, 1, "framed").value
    assert evaluate_closure(w, 1, "balanced").value == evaluate_closure(UNKNOT, 1).value


def test_reduced_is_balanced_over_qdim():
    for w in (LEFT, RIGHT, BraidWord(3, (1, -2, 1, -2))):
        bal = evaluate_closure(w, 1).value
        red = evaluate_closure(w, 1, NormalizationMode.REDUCED).value
        assert red * (q_pow(1, 2) + q_pow(-1, 2)) == bal


def test_reduced_failure_is_reported(monkeypatch):
    import taftknot.invariant as inv

    def bad_trace(*args, **kwargs):
        return LaurentScalar.from_int(1)

    monkeypatch.setattr(inv, "closure_trace", bad_trace)
    with pytest.raises(EvaluationError, match="not divisible"):
        evaluate_closure(LEFT, 1, "reduced")


def test_higher_modules_distinguish_trefoils():
    for n in (2, 3):
        left = evaluate_closure(LEFT, n).value
        assert left != evaluate_closure(RIGHT, n).value
        assert evaluate_closure(RIGHT, n).value == left.mirror()


@pytest.mark.parametrize("k", range(8))
@pytest.mark.parametrize("sign", (1, -1))
def test_b2_closed_form(k, sign):
    assert evaluate_closure(BraidWord(2, (sign,) * k), 1).value == b2_closed_form(sign, k, 1)


def test_jones_values():
    assert JONES_EPSILON == -1
    assert jones_via_v1(UNKNOT) == 1
    assert jones_via_v1(RIGHT) == t((4, -1), (3, 1), (1, 1))
    fig8 = t((2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1))
    assert jones_via_v1(BraidWord(3, (1, -2, 1, -2))) == fig8


def test_oracle_values():
    assert kauffman_bracket_oracle(UNKNOT) == 1
    assert kauffman_bracket_oracle(BraidWord(2, (1,))) == 1
    assert kauffman_bracket_oracle(BraidWord(2, (1, -1))) == t((0.5, -1), (-0.5, -1))
    assert kauffman_bracket_oracle(RIGHT) == t((4, -1), (3, 1), (1, 1))
    assert kauffman_bracket_oracle(LEFT) == t((-4, -1), (-3, 1), (-1, 1))
    # Hopf link
    assert kauffman_bracket_oracle(BraidWord(2, (1, 1))) == t((2.5, -1), (0.5, -1))
    with pytest.raises(EvaluationError):
        kauffman_bracket_oracle(BraidWord(2, (1,) * 21))


def test_links_differ_from_jones_by_sign():
    # for a c-component link the V_1 value is (-1)^(c-1) times the Jones polynomial
    hopf = BraidWord(2, (1, 1))
    ours = evaluate_closure(hopf, 1, "reduced").value.mirror()
    assert ours == -kauffman_bracket_oracle(hopf)


def test_skein_relation_of_oracle():
    assert skein_suite(seed=11, cases=40).ok


def test_markov_and_mirror_properties():
    assert markov_suite(seed=5, cases=25).ok
    assert markov_suite(seed=6, n=2, cases=10, max_len=5, max_strands=3).ok
    assert mirror_suite(seed=3, cases=25).ok


def test_stabilization_on_v2():
    w = BraidWord(2, (1, -1, 1))
    for sign in (1, -1):
        assert evaluate_closure(markov_stabilize(w, sign), 2).value == evaluate_closure(w, 2).value


def test_free_reduction_toggle():
    w = BraidWord(3, (1, 2, -2, -1, 1, 1, 1))
    assert evaluate_closure(w, 1, reduce=False).value == evaluate_closure(w, 1).value


def test_record():
    rec = evaluate_closure(LEFT, 1).to_record()
    assert rec == {
        "braid": "B2: s1^-1 s1^-1 s1^-1",
        "n": 1,
        "mode": "balanced",
        "components": 1,
        "writhe": -3,
        "value": [[18, -1], [10, 1], [6, 1], [2, 1]],
        "value_pretty": "-q^(9/2) + q^(5/2) + q^(3/2) + q^(1/2)",
    }
    link = evaluate_closure(BraidWord(2, (1, 1)), 1).to_record()
    assert link["components"] == 2 and link["writhe_convention"] == "total"


def test_batch():
    assert batch_evaluate([]) == []
    out = batch_evaluate([("B2: s1 s1 s1", 1, "balanced"), (LEFT, 1, "balanced"), ("s0", 1, "balanced")])
    assert isinstance(out[0], InvariantResult) and isinstance(out[1], InvariantResult)
    assert out[0].value == out[1].value.mirror()
    assert isinstance(out[2], Exception)
    threaded = batch_evaluate([("B2: s1 s1 s1", 1, "balanced"), (LEFT, 2, "reduced")], workers=2)
    assert threaded[0].value == out[0].value
    assert threaded[1].value == evaluate_closure(LEFT, 2, "reduced").value


def test_dimension_cap():
    from taftknot.braid import DimensionCapError

    with pytest.raises(DimensionCapError):
        evaluate_closure(parse("[1]", strands=6), 1, cap=32)
