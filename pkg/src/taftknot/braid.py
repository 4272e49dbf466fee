"""Braid words, Markov moves and the representation ``rho_n``.

A braid word on ``n`` strands is a sequence of nonzero integers: ``j > 0``
is ``sigma_j`` and ``j < 0`` is ``sigma_|j|^-1``.  Words are read top to
bottom, so the first letter is the first crossing applied; ``rho`` composes
the slot operators accordingly (``rho(w) = C_last ... C_first``).

Two text grammars are accepted:

* ``B3: s1^-1 s2 s1^-1`` (header optional)
* ``[-1, 2, -1]`` (strand count inferred as ``1 + max|j|`` unless given)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .matrix import Matrix

__all__ = [
    "BraidWord",
    "BraidParseError",
    "DimensionCapError",
    "DEFAULT_CAP",
    "parse",
    "format_braid",
    "writhe",
    "permutation",
    "closure_components",
    "free_reduce",
    "markov_conjugate",
    "markov_stabilize",
    "rho",
    "apply_word",
]

DEFAULT_CAP = 2**20

_HEADER = re.compile(r"^\s*B(\d+)\s*:(.*)$", re.S)
_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


class BraidParseError(ValueError):
    pass


class DimensionCapError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        """Switch every crossing; the closure is the mirror image."""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def __str__(self) -> str:
        return format_braid(self)


def format_braid(w: BraidWord) -> str:
    tokens = [f"s{x}" if x > 0 else f"s{-x}^-1" for x in w.letters]
    return " ".join([f"B{w.strands}:"] + tokens)


def parse(text: str, strands: int | None = None) -> BraidWord:
    """Parse either grammar; ``strands`` overrides inference (and must agree with a header)."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise BraidParseError(f"unterminated list: {text!r}")
        body = text[1:-1].strip()
        letters = []
        if body:
            for tok in body.split(","):
                tok = tok.strip()
                try:
                    x = int(tok)
                except ValueError:
                    raise BraidParseError(f"malformed token {tok!r}") from None
                if x == 0:
                    raise BraidParseError("zero letter: generators start at 1")
                letters.append(x)
        n = strands if strands is not None else 1 + max((abs(x) for x in letters), default=0)
        return _build(n, letters)

    header = _HEADER.match(text)
    declared = None
    if header:
        declared = int(header.group(1))
        text = header.group(2)
        if strands is not None and strands != declared:
            raise BraidParseError(f"header says B{declared} but {strands} strands were requested")
    letters = []
    for tok in text.split():
        hit = _TOKEN.match(tok)
        if hit is None:
            raise BraidParseError(f"malformed token {tok!r}")
        k = int(hit.group(1))
        if k == 0:
            raise BraidParseError(f"bad token {tok!r}: generators start at s1")
        letters.append(-k if hit.group(2) else k)
    if declared is not None:
        n = declared
    elif strands is not None:
        n = strands
    else:
        n = 1 + max((abs(x) for x in letters), default=0)
    return _build(n, letters)


def _build(n: int, letters: list[int]) -> BraidWord:
    if n < 1:
        raise BraidParseError(f"strand count must be positive, got {n}")
    for x in letters:
        if abs(x) > n - 1:
            raise BraidParseError(f"generator s{abs(x)} out of range for B{n}")
    return BraidWord(n, tuple(letters))


def writhe(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Where each strand ends up: ``perm[p]`` is the bottom position of the strand
    entering at top position ``p`` (0-based)."""
    pos = list(range(w.strands))  # pos[p] = strand currently at position p
    for x in w.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.strands
    for p, strand in enumerate(pos):
        perm[strand] = p
    return tuple(perm)


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p]
    return cycles


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``sigma_j sigma_j^-1`` pairs."""
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def markov_conjugate(w: BraidWord, a: BraidWord) -> BraidWord:
    """``a w a^-1``."""
    return a * w * a.inverse()


def markov_stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """``w`` on one more strand followed by ``sigma_n^{+-1}``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(w.strands + 1, w.letters + (sign * w.strands,))


# ---------------------------------------------------------------------------
# the representation


def check_cap(dim: int, strands: int, cap: int = DEFAULT_CAP) -> int:
    total = dim**strands
    if total > cap:
        raise DimensionCapError(f"dim V^{strands} = {total} exceeds the cap {cap}")
    return total


def _layer(c: Matrix, j: int, d: int, n: int) -> Matrix:
    one = next(iter(c.data.values())) * 0 + 1
    return Matrix.identity(d**j, one).kron(c).kron(Matrix.identity(d ** (n - j - 2), one))


def rho(w: BraidWord, c, c_inv, cap: int = DEFAULT_CAP):
    """Matrix of ``w`` on ``V^{(x)n}``: ``sigma_j -> c`` in slots ``j, j+1``.

    ``c``/``c_inv`` may be Morphisms or bare matrices; a Morphism in gives a
    Morphism out.
    """
    from .ribbon import Morphism

    cm = c.matrix if isinstance(c, Morphism) else c
    cim = c_inv.matrix if isinstance(c_inv, Morphism) else c_inv
    d = int(round(cm.nrows**0.5))
    n = w.strands
    size = check_cap(d, n, cap)
    one = next(iter(cm.data.values())) * 0 + 1
    out = Matrix.identity(size, one)
    layers: dict = {}
    for x in w.letters:
        key = x
        if key not in layers:
            layers[key] = _layer(cm if x > 0 else cim, abs(x) - 1, d, n)
        out = layers[key] @ out
    if isinstance(c, Morphism):
        factors = (c.source[0],) * n
        return Morphism(factors, factors, out)
    return out


def _columns(c: Matrix, d: int) -> list[list[tuple[int, object]]]:
    cols: list[list] = [[] for _ in range(d * d)]
    for (r, col), v in c.data.items():
        cols[col].append((r, v))
    return cols


def apply_word(w: Iterable[int], strands: int, c: Matrix, c_inv: Matrix, d: int,
               vec: dict[int, object]) -> dict[int, object]:
    """Apply ``rho(w)`` to a sparse vector without forming the full matrix."""
    pos_cols = _columns(c, d)
    neg_cols = _columns(c_inv, d)
    dd = d * d
    for x in w:
        j = abs(x) - 1
        stride = d ** (strands - 2 - j)
        cols = pos_cols if x > 0 else neg_cols
        out: dict = {}
        for k, val in vec.items():
            pair = (k // stride) % dd
            base = k - pair * stride
            for r, a in cols[pair]:
                key = base + r * stride
                t = a * val
                if key in out:
                    s = out[key] + t
                    if s:
                        out[key] = s
                    else:
                        del out[key]
                else:
                    out[key] = t
        vec = out
    return vec
