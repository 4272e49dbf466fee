"""Compiled vs pure-Python kernels, plus the exact dict engine for reference.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

import numpy as np

from taftknot import _pykernels, kernels
from taftknot.braid import BraidWord
from taftknot.invariant import closure_trace
from taftknot.ribbon import ribbon_data

try:
    from taftknot import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    return BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)))


def with_backend(module, fn):
    saved = kernels.apply_sparse, kernels.bracket_state_counts
    kernels.apply_sparse, kernels.bracket_state_counts = module.apply_sparse, module.bracket_state_counts
    try:
        return fn()
    finally:
        kernels.apply_sparse, kernels.bracket_state_counts = saved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    else:
        print("compiled kernels not built; showing the Python fallback only")

    rows = []

    # raw sparse product on a random batch
    state = np.random.default_rng(args.seed).integers(-3, 4, size=(64, 256, 48), dtype=np.int64)
    trans = np.array([(rng.randrange(256), rng.randrange(256), rng.randint(-2, 2), rng.choice((1, -1)))
                      for _ in range(768)], dtype=np.int64)
    for name, mod in backends:
        rows.append(("apply_sparse 64x256x48, 768 terms", name, best_of(lambda: mod.apply_sparse(state, trans), args.repeat)))

    # bracket state sum
    word = random_word(rng, 4, 14)
    letters = np.array(word.letters, dtype=np.int64)
    for name, mod in backends:
        rows.append(("bracket_state_counts 14 crossings", name,
                     best_of(lambda: mod.bracket_state_counts(letters, 4), args.repeat)))

    # whole closures
    cases = [(1, 6, 16), (1, 8, 20), (2, 5, 12)]
    for n, strands, length in cases:
        rd = ribbon_data(n)
        words = [random_word(rng, strands, length) for _ in range(3)]
        label = f"closure V_{n}, {strands} strands, {length} letters (x3)"
        for name, mod in backends:
            t = best_of(lambda: with_backend(mod, lambda: [closure_trace(w, rd, engine="kernel") for w in words]),
                        args.repeat)
            rows.append((label, name, t))
        rows.append((label, "exact", best_of(lambda: [closure_trace(w, rd, engine="exact") for w in words], 1)))

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark'.ljust(width)}  {'engine':8}  seconds")
    for label, name, t in rows:
        print(f"{label.ljust(width)}  {name:8}  {t:.4f}")


if __name__ == "__main__":
    main()
