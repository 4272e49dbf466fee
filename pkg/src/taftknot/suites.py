"""Seeded property suites over braid closures.

Each suite returns a :class:`Report`; the same seed gives the same report.
"""

from __future__ import annotations

import itertools
import random

from .braid import BraidWord, closure_components, markov_conjugate, markov_stabilize
from .invariant import (
    NormalizationMode,
    evaluate_closure,
    jones_via_v1,
    kauffman_bracket_oracle,
)
from .report import Report
from .ribbon import ribbon_data
from .scalars import LaurentScalar

__all__ = ["random_word", "markov_suite", "jones_suite", "skein_suite", "mirror_suite", "all_words"]


def random_word(rng: random.Random, strands: int, max_len: int, min_len: int = 0) -> BraidWord:
    if strands < 2:
        return BraidWord(strands, ())
    length = rng.randint(min_len, max_len)
    return BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)))


def _balanced(w: BraidWord, n: int) -> LaurentScalar:
    return evaluate_closure(w, n, NormalizationMode.BALANCED).value


def markov_suite(seed: int = 0, n: int = 1, cases: int = 100, max_len: int = 8,
                 max_strands: int = 4, conj_len: int = 4) -> Report:
    """Conjugation and stabilization leave the balanced value unchanged; the
    framed value picks up exactly ``theta^{+-1}`` under stabilization."""
    rng = random.Random(seed)
    rd = ribbon_data(n)
    report = Report(f"Markov invariance V_{n} (seed {seed})")

    bad = None
    for _ in range(cases):
        strands = rng.randint(1, max_strands)
        w = random_word(rng, strands, max_len)
        a = random_word(rng, strands, conj_len)
        if _balanced(markov_conjugate(w, a), n) != _balanced(w, n):
            bad = bad or f"w={w}, a={a}"
    report.add("conjugation", bad is None, bad, detail=f"{cases} cases")

    bad = None
    bad_framed = None
    for _ in range(cases):
        strands = rng.randint(1, max_strands)
        w = random_word(rng, strands, max_len)
        sign = rng.choice((1, -1))
        s = markov_stabilize(w, sign)
        if _balanced(s, n) != _balanced(w, n):
            bad = bad or f"w={w}, sign={sign:+d}"
        framed_w = evaluate_closure(w, rd, NormalizationMode.FRAMED).value
        framed_s = evaluate_closure(s, rd, NormalizationMode.FRAMED).value
        if framed_s != framed_w * rd.theta**sign:
            bad_framed = bad_framed or f"w={w}, sign={sign:+d}"
    report.add("stabilization", bad is None, bad, detail=f"{cases} cases")
    report.add("framed stabilization picks up theta^{+-1}", bad_framed is None, bad_framed)
    return report


def mirror_suite(seed: int = 0, n: int = 1, cases: int = 50, max_len: int = 8, max_strands: int = 4) -> Report:
    """Balanced value of the mirror word is the mirror of the balanced value."""
    rng = random.Random(seed)
    report = Report(f"mirror property V_{n} (seed {seed})")
    bad = None
    for _ in range(cases):
        w = random_word(rng, rng.randint(1, max_strands), max_len)
        mirrored = BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))
        if _balanced(mirrored, n) != _balanced(w, n).mirror():
            bad = bad or str(w)
    report.add("value(mirror w) = mirror(value(w))", bad is None, bad, detail=f"{cases} cases")
    return report


def all_words(strands: int, max_len: int):
    gens = [s * j for j in range(1, strands) for s in (1, -1)]
    for length in range(max_len + 1):
        for letters in itertools.product(gens, repeat=length):
            yield BraidWord(strands, letters)


FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
FIGURE_EIGHT_JONES = LaurentScalar({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})


def jones_suite(max_len: int = 6, strand_counts: tuple[int, ...] = (2, 3)) -> Report:
    """Reduced ``V_1`` value versus the bracket oracle on every knot-closing word."""
    report = Report(f"Jones recovery (words of length <= {max_len})")
    for strands in strand_counts:
        checked = 0
        bad = None
        for w in all_words(strands, max_len):
            if closure_components(w) != 1:
                continue
            checked += 1
            ours = jones_via_v1(w)
            oracle = kauffman_bracket_oracle(w)
            if ours != oracle:
                bad = bad or f"{w}: {ours.render('t')} vs {oracle.render('t')}"
        report.add(f"B_{strands}", bad is None, bad, detail=f"{checked} knot closures")
    fig8 = jones_via_v1(FIGURE_EIGHT)
    report.add("figure-eight = t^2 - t + 1 - t^-1 + t^-2", fig8 == FIGURE_EIGHT_JONES,
               None if fig8 == FIGURE_EIGHT_JONES else fig8.render("t"))
    return report


def skein_suite(seed: int = 0, cases: int = 100, max_len: int = 7, max_strands: int = 4) -> Report:
    """The oracle obeys ``t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0)``."""
    rng = random.Random(seed)
    report = Report(f"bracket oracle skein relation (seed {seed})")
    lhs_pos = LaurentScalar.monomial(-4)
    lhs_neg = LaurentScalar.monomial(4)
    rhs = LaurentScalar({2: 1, -2: -1})
    bad = None
    for _ in range(cases):
        strands = rng.randint(2, max_strands)
        u = random_word(rng, strands, max_len // 2)
        v = random_word(rng, strands, max_len // 2)
        j = rng.randint(1, strands - 1)
        plus = BraidWord(strands, u.letters + (j,) + v.letters)
        minus = BraidWord(strands, u.letters + (-j,) + v.letters)
        zero = BraidWord(strands, u.letters + v.letters)
        left = lhs_pos * kauffman_bracket_oracle(plus) - lhs_neg * kauffman_bracket_oracle(minus)
        if left != rhs * kauffman_bracket_oracle(zero):
            bad = bad or str(plus)
    report.add("skein triples", bad is None, bad, detail=f"{cases} cases")
    return report
