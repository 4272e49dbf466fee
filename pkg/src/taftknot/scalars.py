"""Exact coefficient rings.

Two rings live here:

* :class:`LaurentScalar` -- Laurent polynomials with integer coefficients in
  ``u = q^(1/4)``.  Every generic computation (braidings, twists, closures)
  happens in this ring, so fractional powers of ``q`` down to quarters are
  plain integer exponents.
* :class:`CycloScalar` -- elements of ``Q[q]/Phi_m(q)``, i.e. ``q`` a
  primitive ``m``-th root of unity for odd ``m``.  Used when the Taft
  relations ``x^m = 0`` and ``g^m = 1`` actually matter.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "LaurentScalar",
    "CycloRing",
    "CycloScalar",
    "cyclo_ring",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_pow",
    "mirror",
    "specialize",
]


class LaurentScalar:
    """Laurent polynomial in ``u = q^(1/4)`` with integer coefficients.

    Exponents are stored in quarter units: the key ``k`` stands for
    ``u^k = q^(k/4)``.  Zero coefficients are never stored, so equality of
    the term dictionaries is equality of polynomials.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(k): int(v) for k, v in terms.items() if v}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentScalar:
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentScalar:
        return cls._raw({exponent: coefficient} if coefficient else {})

    @classmethod
    def from_int(cls, value: int) -> LaurentScalar:
        return cls._raw({0: value} if value else {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentScalar:
        acc: dict[int, int] = {}
        for exp, coef in pairs:
            acc[exp] = acc.get(exp, 0) + coef
        return cls(acc)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of ``Z[u, u^-1]`` are exactly ``+-u^k``."""
        if len(self._terms) != 1:
            return False
        (coef,) = self._terms.values()
        return coef in (1, -1)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentScalar | None:
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, int):
            return LaurentScalar.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentScalar:
        return LaurentScalar._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentScalar._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((kb, vb),) = b.items()
            return LaurentScalar._raw({ka + kb: va * vb for ka, va in a.items()})
        out: dict[int, int] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                out[k] = out.get(k, 0) + va * vb
        return LaurentScalar._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentScalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.is_monomial():
            ((k, v),) = self._terms.items()
            return LaurentScalar._raw({k * exponent: v**exponent})
        result = LaurentScalar.from_int(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> LaurentScalar:
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit of Z[q^(1/4), q^(-1/4)]")
        ((k, v),) = self._terms.items()
        return LaurentScalar._raw({-k: v})

    def shift(self, k: int) -> LaurentScalar:
        """Multiply by ``u^k``."""
        return LaurentScalar._raw({e + k: v for e, v in self._terms.items()})

    def divexact(self, other: LaurentScalar | int) -> LaurentScalar:
        """Exact quotient ``self / other``; raises ArithmeticError if inexact."""
        other = self._coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._terms:
            return self
        if other.is_monomial():
            ((kb, vb),) = other._terms.items()
            out = {}
            for k, v in self._terms.items():
                qv, r = divmod(v, vb)
                if r:
                    raise ArithmeticError(f"{self} is not divisible by {other}")
                out[k - kb] = qv
            return LaurentScalar._raw(out)
        # long division from the top degree down
        rem = dict(self._terms)
        dmax = other.max_exp
        dlead = other._terms[dmax]
        dmin = other.min_exp
        quot: dict[int, int] = {}
        low = self.min_exp
        while rem:
            top = max(rem)
            if top - dmax + dmin < low:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            c, r = divmod(rem[top], dlead)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            shift = top - dmax
            quot[shift] = c
            for k, v in other._terms.items():
                e = k + shift
                s = rem.get(e, 0) - c * v
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return LaurentScalar._raw(quot)

    def mirror(self) -> LaurentScalar:
        return LaurentScalar._raw({-k: v for k, v in self._terms.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- formatting ---------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """``[[exponent_in_quarters, coefficient], ...]``, exponents descending."""
        return [[k, self._terms[k]] for k in sorted(self._terms, reverse=True)]

    def render(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, k in enumerate(sorted(self._terms, reverse=True)):
            coef = self._terms[k]
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            exp = Fraction(k, 4)
            if k == 0:
                body = str(mag)
            else:
                if exp == 1:
                    power = var
                elif exp.denominator == 1 and exp > 0:
                    power = f"{var}^{exp.numerator}"
                else:
                    power = f"{var}^({exp})"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentScalar({self.render()})"


def q_pow(numerator: int, denominator: int = 1) -> LaurentScalar:
    """``q^(numerator/denominator)`` for a denominator dividing 4."""
    if denominator not in (1, 2, 4):
        raise ValueError(f"denominator must be 1, 2 or 4, got {denominator}")
    return LaurentScalar.monomial(numerator * (4 // denominator))


def q_int(k: int) -> LaurentScalar:
    """The q-integer ``(k)_q = 1 + q + ... + q^(k-1)``."""
    if k < 0:
        raise ValueError(f"q_int needs k >= 0, got {k}")
    return LaurentScalar({4 * i: 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> LaurentScalar:
    if k < 0:
        raise ValueError(f"q_factorial needs k >= 0, got {k}")
    if k == 0:
        return LaurentScalar.from_int(1)
    return q_factorial(k - 1) * q_int(k)


def q_binomial(n: int, k: int) -> LaurentScalar:
    """Gaussian binomial ``[n choose k]_q`` (zero outside ``0 <= k <= n``)."""
    if k < 0 or k > n:
        return LaurentScalar()
    return q_factorial(n).divexact(q_factorial(k) * q_factorial(n - k))


def mirror(a: LaurentScalar) -> LaurentScalar:
    """Substitute ``q^(1/4) -> q^(-1/4)``."""
    return a.mirror()


# ---------------------------------------------------------------------------
# cyclotomic quotient rings


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, coefficient lists low -> high, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def _cyclotomic_poly(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]  # q^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, list(_cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


class CycloRing:
    """``Q[q] / Phi_m(q)`` for odd ``m >= 3``; obtain instances via :func:`cyclo_ring`."""

    def __init__(self, m: int):
        if m < 3 or m % 2 == 0:
            raise ValueError(f"m must be odd and >= 3, got {m}")
        self.m = m
        self.cyclotomic = _cyclotomic_poly(m)
        self.degree = len(self.cyclotomic) - 1
        self.inv2 = (m + 1) // 2
        self.inv4 = (self.inv2 * self.inv2) % m
        # q^k mod Phi_m for 0 <= k < m
        table = []
        for k in range(m):
            vec = [0] * (k + 1)
            vec[k] = 1
            if k >= self.degree:
                _, vec = _poly_divmod(vec, list(self.cyclotomic))
            vec = (list(vec) + [0] * self.degree)[: self.degree]
            table.append(tuple(vec))
        self._powers = table
        self.zero = CycloScalar(self, (0,) * self.degree, 1)
        self.one = self.q_power(0)
        self.q = self.q_power(1)
        self.q_half = self.q_power(self.inv2)
        self.u = self.q_power(self.inv4)

    def __repr__(self) -> str:
        return f"CycloRing(m={self.m})"

    def q_power(self, k: int) -> CycloScalar:
        return CycloScalar(self, self._powers[k % self.m], 1)

    def u_power(self, k: int) -> CycloScalar:
        """``q^(k/4)`` with ``1/4`` read as the inverse of 4 modulo ``m``."""
        return self.q_power(k * self.inv4)

    def from_int(self, value: int) -> CycloScalar:
        return CycloScalar(self, (value,) + (0,) * (self.degree - 1), 1)

    def from_fractions(self, coeffs: Iterable[Fraction | int]) -> CycloScalar:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError("wrong number of coefficients")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycloScalar(self, tuple(int(c * den) for c in coeffs), den)

    def reduce(self, vec: list[int]) -> list[int]:
        """Reduce a coefficient list of any length to ``degree`` entries."""
        out = [0] * self.degree
        for k, c in enumerate(vec):
            if c:
                if k < self.degree:
                    out[k] += c
                else:
                    for j, p in enumerate(self._powers[k % self.m]):
                        if p:
                            out[j] += c * p
        return out


@lru_cache(maxsize=None)
def cyclo_ring(m: int) -> CycloRing:
    return CycloRing(m)


class CycloScalar:
    """Element ``(num_0 + num_1 q + ...) / den`` of a :class:`CycloRing`."""

    __slots__ = ("ring", "_num", "_den")

    def __init__(self, ring: CycloRing, num: tuple[int, ...], den: int = 1):
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.ring = ring
        self._num = tuple(num)
        self._den = den

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def _check(self, other) -> CycloScalar | None:
        if isinstance(other, CycloScalar):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return CycloScalar(self.ring, tuple(a + b for a, b in zip(self._num, other._num)), self._den)
        d1, d2 = self._den, other._den
        return CycloScalar(self.ring, tuple(a * d2 + b * d1 for a, b in zip(self._num, other._num)), d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> CycloScalar:
        return CycloScalar(self.ring, tuple(-a for a in self._num), self._den)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self._num, other._num
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycloScalar(self.ring, tuple(self.ring.reduce(conv)), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycloScalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> CycloScalar:
        """Ring inverse via the extended Euclidean algorithm over Q."""
        if not self:
            raise ZeroDivisionError("zero has no inverse")

        def trim(p):
            p = list(p)
            while p and p[-1] == 0:
                p.pop()
            return p

        def sub_mul(a, b, c, shift):
            out = list(a) + [Fraction(0)] * max(0, len(b) + shift - len(a))
            for i, x in enumerate(b):
                out[i + shift] -= c * x
            return trim(out)

        r0, r1 = trim(Fraction(c) for c in self.ring.cyclotomic), trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            while len(r0) >= len(r1):
                c = r0[-1] / r1[-1]
                shift = len(r0) - len(r1)
                r0 = sub_mul(r0, r1, c, shift)
                s0 = sub_mul(s0, s1, c, shift)
            r0, r1, s0, s1 = r1, r0, s1, s0
        # r1 is a nonzero constant
        inv = [c / r1[0] for c in s1]
        vec = (inv + [Fraction(0)] * self.ring.degree)[: max(len(inv), self.ring.degree)]
        den = 1
        for c in vec:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycloScalar(self.ring, tuple(self.ring.reduce([int(c * den) for c in vec])), den)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self.ring is other.ring and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self.ring.m, self._num, self._den))

    def __bool__(self) -> bool:
        return any(self._num)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{k}" if k else f"{c}")
        return f"CycloScalar(m={self.m}: {' + '.join(terms) or '0'})"


def specialize(a: LaurentScalar, m: int) -> CycloScalar:
    """Ring map ``Z[u, u^-1] -> Q[q]/Phi_m`` sending ``u`` to ``q^(4^-1 mod m)``."""
    ring = cyclo_ring(m)
    vec = [0] * m
    for k, c in a.items():
        vec[(k * ring.inv4) % m] += c
    return CycloScalar(ring, tuple(ring.reduce(vec)), 1)
