"""Reference implementations of the hot kernels (no compilation needed).

Same signatures and results as the compiled ``_ckernels`` module.
"""

from __future__ import annotations

import numpy as np


def apply_sparse(state: np.ndarray, trans: np.ndarray) -> np.ndarray:
    """Multiply a batch of Laurent vectors by a sparse Laurent matrix.

    ``state`` has shape ``(batch, S, E)``; the last axis holds coefficients of
    consecutive powers of ``q^(1/4)``.  Each row of ``trans`` is
    ``(dst, src, shift, coef)``: the matrix entry at ``(dst, src)`` contains
    the term ``coef * u^shift``.  Terms shifted out of the window are dropped,
    so callers size ``E`` to hold every intermediate exponent.
    """
    C, S, E = state.shape
    out = np.zeros_like(state)
    if trans.shape[0] == 0:
        return out
    # one vectorised scatter per distinct (shift, coef)
    keys = trans[:, 2:4]
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    for g, (shift, coef) in enumerate(uniq.tolist()):
        sel = trans[inverse == g]
        dst, src = sel[:, 0], sel[:, 1]
        if shift >= 0:
            contrib = coef * state[:, src, : E - shift]
            np.add.at(out, (slice(None), dst, slice(shift, None)), contrib)
        else:
            contrib = coef * state[:, src, -shift:]
            np.add.at(out, (slice(None), dst, slice(None, E + shift)), contrib)
    return out


def bracket_state_counts(letters: np.ndarray, strands: int) -> np.ndarray:
    """Histogram of Kauffman states of a braid closure.

    ``counts[a + k, loops]`` is the number of smoothing states with total
    ``A``-exponent ``a`` and ``loops`` closed curves, ``k = len(letters)``.
    Smoothing choice 0 keeps the strands vertical (weight ``A^sign``),
    choice 1 is the cup-cap (weight ``A^-sign``).
    """
    letters = [int(x) for x in letters]
    k = len(letters)
    n = strands
    counts = np.zeros((2 * k + 1, max(n, k * n) + 1), dtype=np.int64)
    if k == 0:
        counts[0, n] = 1
        return counts
    nodes = k * n
    for state in range(1 << k):
        parent = list(range(nodes))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        a_exp = 0
        for level, x in enumerate(letters):
            i = abs(x) - 1
            sgn = 1 if x > 0 else -1
            cur = level * n
            nxt = ((level + 1) % k) * n
            for p in range(n):
                if p != i and p != i + 1:
                    union(cur + p, nxt + p)
            if (state >> level) & 1:
                union(cur + i, cur + i + 1)
                union(nxt + i, nxt + i + 1)
                a_exp -= sgn
            else:
                union(cur + i, nxt + i)
                union(cur + i + 1, nxt + i + 1)
                a_exp += sgn
        loops = sum(1 for v in range(nodes) if find(v) == v)
        counts[a_exp + k, loops] += 1
    return counts
