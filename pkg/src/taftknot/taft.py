"""The Taft Hopf algebra.

``H`` is generated by ``g`` and ``x`` with ``gx = q xg``, ``x^m = 0``,
``g^m = 1`` for ``q`` a primitive ``m``-th root of unity.  Basis elements are
the normal-ordered monomials ``x^i g^j`` and are addressed by the pair
``(i, j)``.

Two concrete algebras share the same code:

* :class:`TaftAlgebra` -- the honest ``m^2``-dimensional algebra over
  :class:`~taftknot.scalars.CycloScalar`.
* :class:`GenericTaft` -- ``q`` kept formal (LaurentScalar coefficients),
  ``x`` not truncated, and ``g`` allowed half-integer exponents so that the
  coaction of odd ``V_n`` (which involves ``g^(-1/2)``) is expressible.  In
  this algebra the index ``j`` stores *twice* the exponent of ``g``.
"""

from __future__ import annotations

from functools import lru_cache

from .report import Report
from .scalars import CycloScalar, LaurentScalar, cyclo_ring, q_binomial, specialize

__all__ = [
    "HElement",
    "HTensorElement",
    "TaftAlgebra",
    "GenericTaft",
    "GENERIC",
    "verify_hopf",
]


class HElement:
    """Sparse linear combination of basis monomials ``x^i g^j``."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: _TaftBase, coeffs: dict):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    def __add__(self, other: HElement) -> HElement:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return HElement(self.algebra, out)

    def __neg__(self) -> HElement:
        return HElement(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: HElement) -> HElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HElement):
            return self.algebra.mul(self, other)
        return HElement(self.algebra, {k: v * other for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        return HElement(self.algebra, {k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v!r})*{self.algebra.basis_name(k)}" for k, v in sorted(self.coeffs.items()))


class HTensorElement:
    """Element of ``H^{(x)r}``; keys are ``r``-tuples of basis indices."""

    __slots__ = ("algebra", "rank", "coeffs")

    def __init__(self, algebra: _TaftBase, rank: int, coeffs: dict):
        self.algebra = algebra
        self.rank = rank
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    def __add__(self, other: HTensorElement) -> HTensorElement:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return HTensorElement(self.algebra, self.rank, out)

    def __mul__(self, other: HTensorElement) -> HTensorElement:
        """Factorwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        alg = self.algebra
        out: dict = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                coef = va * vb
                key = []
                for a, b in zip(ka, kb):
                    hit = alg.basis_mul(a, b)
                    if hit is None:
                        break
                    s, idx = hit
                    coef = coef * s
                    key.append(idx)
                else:
                    key = tuple(key)
                    out[key] = out[key] + coef if key in out else coef
        return HTensorElement(alg, self.rank, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HTensorElement):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.rank, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        names = self.algebra.basis_name
        return " + ".join(
            f"({v!r})*" + "(x)".join(names(i) for i in k) for k, v in sorted(self.coeffs.items())
        ) or "0"


class _TaftBase:
    """Structure maps shared by the generic and the specialized algebra.

    Subclasses provide scalar constants, the ``g``-exponent arithmetic and
    the commutation scalar of ``g^j x^k = c * x^k g^j``.
    """

    one_index = (0, 0)
    x_index = (1, 0)
    g_index: tuple[int, int]

    def __init__(self):
        self._delta_cache: dict = {}
        self._s_cache: dict = {}
        self._sinv_cache: dict = {}

    # -- hooks ---------------------------------------------------------------
    one: object
    zero: object

    def g_add(self, j1: int, j2: int) -> int:
        raise NotImplementedError

    def g_neg(self, j: int) -> int:
        raise NotImplementedError

    def commute(self, j: int, k: int):
        raise NotImplementedError

    def x_vanishes(self, i: int) -> bool:
        raise NotImplementedError

    def g_action(self, j: int, glog: int):
        """Scalar by which ``g^j`` acts on a vector where ``g`` acts by ``u^glog``."""
        raise NotImplementedError

    def basis_name(self, idx) -> str:
        raise NotImplementedError

    # -- elements --------------------------------------------------------------

    def element(self, coeffs: dict) -> HElement:
        return HElement(self, coeffs)

    def basis(self, i: int, j: int = 0) -> HElement:
        return HElement(self, {(i, j): self.one})

    @property
    def unit(self) -> HElement:
        return self.basis(0, 0)

    @property
    def x(self) -> HElement:
        return HElement(self, {self.x_index: self.one})

    @property
    def g(self) -> HElement:
        return HElement(self, {self.g_index: self.one})

    def scalar(self, value: int):
        return self.one * value

    # -- algebra -----------------------------------------------------------------

    def basis_mul(self, a, b):
        """``(x^i g^j)(x^k g^l) = q^{jk} x^{i+k} g^{j+l}``; None when it vanishes."""
        i, j = a
        k, l = b
        if self.x_vanishes(i + k):
            return None
        return self.commute(j, k), (i + k, self.g_add(j, l))

    def mul(self, a: HElement, b: HElement) -> HElement:
        out: dict = {}
        for ka, va in a.coeffs.items():
            for kb, vb in b.coeffs.items():
                hit = self.basis_mul(ka, kb)
                if hit is None:
                    continue
                s, idx = hit
                t = va * vb * s
                out[idx] = out[idx] + t if idx in out else t
        return HElement(self, out)

    def power(self, a: HElement, n: int) -> HElement:
        result = self.unit
        for _ in range(n):
            result = self.mul(result, a)
        return result

    # -- coalgebra -----------------------------------------------------------------

    def delta_x(self) -> HTensorElement:
        return HTensorElement(self, 2, {(self.g_index, self.x_index): self.one,
                                        (self.x_index, self.one_index): self.one})

    def delta_g_power(self, j: int) -> HTensorElement:
        return HTensorElement(self, 2, {((0, j), (0, j)): self.one})

    def coproduct_basis(self, idx) -> HTensorElement:
        hit = self._delta_cache.get(idx)
        if hit is None:
            i, j = idx
            out = self.delta_g_power(j)
            dx = self.delta_x()
            for _ in range(i):
                out = dx * out
            self._delta_cache[idx] = hit = out
        return hit

    def coproduct(self, a: HElement) -> HTensorElement:
        out = HTensorElement(self, 2, {})
        for idx, v in a.coeffs.items():
            d = self.coproduct_basis(idx)
            out = out + HTensorElement(self, 2, {k: w * v for k, w in d.coeffs.items()})
        return out

    def coproduct2_basis(self, idx) -> HTensorElement:
        """``(Delta (x) id) Delta`` of a basis element, as a rank-3 tensor."""
        out: dict = {}
        for (a, b), v in self.coproduct_basis(idx).coeffs.items():
            for (a1, a2), w in self.coproduct_basis(a).coeffs.items():
                key = (a1, a2, b)
                t = v * w
                out[key] = out[key] + t if key in out else t
        return HTensorElement(self, 3, out)

    def counit_basis(self, idx):
        return self.one if idx[0] == 0 else self.zero

    def counit(self, a: HElement):
        total = self.zero
        for (i, _), v in a.coeffs.items():
            if i == 0:
                total = total + v
        return total

    # -- antipode ------------------------------------------------------------------

    def _antipode_generators(self) -> tuple[HElement, HElement]:
        g_inv = HElement(self, {(0, self.g_neg(self.g_index[1])): self.one})
        return g_inv, -self.mul(g_inv, self.x)

    def antipode_basis(self, idx) -> HElement:
        hit = self._s_cache.get(idx)
        if hit is None:
            i, j = idx
            s_g, s_x = self._antipode_generators()
            hit = HElement(self, {(0, self.g_neg(j)): self.one})
            for _ in range(i):
                hit = self.mul(hit, s_x)
            self._s_cache[idx] = hit
        return hit

    def antipode(self, a: HElement) -> HElement:
        out = HElement(self, {})
        for idx, v in a.coeffs.items():
            out = out + v * self.antipode_basis(idx)
        return out

    def antipode_inv_basis(self, idx) -> HElement:
        """Closed anti-morphism form: ``S^-1(g) = g^-1``, ``S^-1(x) = -x g^-1``."""
        hit = self._sinv_cache.get(idx)
        if hit is None:
            i, j = idx
            g_inv = HElement(self, {(0, self.g_neg(self.g_index[1])): self.one})
            sinv_x = -self.mul(self.x, g_inv)
            hit = HElement(self, {(0, self.g_neg(j)): self.one})
            for _ in range(i):
                hit = self.mul(hit, sinv_x)
            self._sinv_cache[idx] = hit
        return hit

    def antipode_inv(self, a: HElement) -> HElement:
        out = HElement(self, {})
        for idx, v in a.coeffs.items():
            out = out + v * self.antipode_inv_basis(idx)
        return out


class TaftAlgebra(_TaftBase):
    """The ``m^2``-dimensional Taft algebra over ``Q(zeta_m)``.

    ``delta_x`` overrides the coproduct of ``x`` (used to feed corrupted
    structure maps to the verifier).
    """

    def __init__(self, m: int, delta_x: dict | None = None):
        super().__init__()
        self.ring = cyclo_ring(m)
        self.m = m
        self.one = self.ring.one
        self.zero = self.ring.zero
        self.g_index = (0, 1)
        self._qpow = [self.ring.q_power(k) for k in range(m)]
        self._delta_x_override = delta_x

    def __repr__(self) -> str:
        return f"TaftAlgebra(m={self.m})"

    @property
    def dimension(self) -> int:
        return self.m * self.m

    def basis_indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in range(self.m)]

    def g_add(self, j1, j2):
        return (j1 + j2) % self.m

    def g_neg(self, j):
        return (-j) % self.m

    def commute(self, j, k) -> CycloScalar:
        return self._qpow[(j * k) % self.m]

    def x_vanishes(self, i):
        return i >= self.m

    def g_action(self, j, glog) -> CycloScalar:
        return self.ring.u_power(j * glog)

    def coerce(self, value):
        if isinstance(value, LaurentScalar):
            return specialize(value, self.m)
        return value

    def g_exponent(self, gx2: int) -> int:
        """Map a generic (doubled) ``g`` exponent into ``Z/m`` via ``1/2 = (m+1)/2``."""
        return (gx2 * self.ring.inv2) % self.m

    def delta_x(self) -> HTensorElement:
        if self._delta_x_override is not None:
            return HTensorElement(self, 2, dict(self._delta_x_override))
        return super().delta_x()

    def basis_name(self, idx) -> str:
        i, j = idx
        parts = []
        if i:
            parts.append("x" if i == 1 else f"x^{i}")
        if j:
            parts.append("g" if j == 1 else f"g^{j}")
        return "".join(parts) or "1"

    def antipode_matrix_inverse(self, idx) -> HElement:
        """``S^-1`` of a basis element by inverting the matrix of ``S``."""
        from .matrix import Matrix

        basis = self.basis_indices()
        pos = {b: n for n, b in enumerate(basis)}
        data = {}
        for c, b in enumerate(basis):
            for k, v in self.antipode_basis(b).coeffs.items():
                data[(pos[k], c)] = v
        mat = Matrix(len(basis), len(basis), data, self.zero)
        inv = mat.inverse(divexact=lambda a, b: a * b.inverse())
        col = inv.column(pos[idx])
        return HElement(self, {basis[r]: v for r, v in col.items()})


class GenericTaft(_TaftBase):
    """Taft relations with ``q`` formal; ``j`` is twice the exponent of ``g``."""

    def __init__(self):
        super().__init__()
        self.one = LaurentScalar.from_int(1)
        self.zero = LaurentScalar()
        self.g_index = (0, 2)

    def __repr__(self) -> str:
        return "GenericTaft()"

    def g_add(self, j1, j2):
        return j1 + j2

    def g_neg(self, j):
        return -j

    def commute(self, j, k) -> LaurentScalar:
        # g^(j/2) x^k = q^(jk/2) x^k g^(j/2)
        return LaurentScalar.monomial(2 * j * k)

    def x_vanishes(self, i):
        return False

    def g_action(self, j, glog) -> LaurentScalar:
        if (j * glog) % 2:
            raise ArithmeticError(f"g^({j}/2) has no action on weight u^{glog}")
        return LaurentScalar.monomial(j * glog // 2)

    def coerce(self, value):
        return value

    def basis_name(self, idx) -> str:
        i, j = idx
        parts = []
        if i:
            parts.append("x" if i == 1 else f"x^{i}")
        if j:
            parts.append("g" if j == 2 else (f"g^{j // 2}" if j % 2 == 0 else f"g^({j}/2)"))
        return "".join(parts) or "1"


GENERIC = GenericTaft()


@lru_cache(maxsize=None)
def taft_algebra(m: int) -> TaftAlgebra:
    return TaftAlgebra(m)


def _tensor_from_closed_form(alg: TaftAlgebra, i: int) -> HTensorElement:
    """``Delta(x^i) = sum_k [i k]_q x^k g^(i-k) (x) x^(i-k)``."""
    out = {}
    for k in range(i + 1):
        c = specialize(q_binomial(i, k), alg.m)
        out[((k, (i - k) % alg.m), (i - k, 0))] = c
    return HTensorElement(alg, 2, out)


def verify_hopf(m: int | TaftAlgebra) -> Report:
    """Check every Hopf axiom of the Taft algebra on all ``m^2`` basis elements."""
    alg = m if isinstance(m, TaftAlgebra) else TaftAlgebra(m)
    m = alg.m
    basis = alg.basis_indices()
    report = Report(f"hopf m={m}")
    one_idx = alg.one_index

    def h(idx):
        return alg.basis(*idx)

    def name(idx):
        return alg.basis_name(idx)

    # relations
    gx = alg.mul(alg.g, alg.x)
    qxg = alg.ring.q * alg.mul(alg.x, alg.g)
    witness = None
    if gx != qxg:
        witness = "g*x != q*x*g"
    elif alg.power(alg.x, m):
        witness = "x^m != 0"
    elif alg.power(alg.g, m) != alg.unit:
        witness = "g^m != 1"
    report.add("relations", witness is None, witness)

    # Delta, epsilon algebra maps
    witness = None
    for a in basis:
        for b in basis:
            hit = alg.basis_mul(a, b)
            lhs = HTensorElement(alg, 2, {})
            if hit is not None:
                s, idx = hit
                lhs = HTensorElement(alg, 2, {k: s * v for k, v in alg.coproduct_basis(idx).coeffs.items()})
            if lhs != alg.coproduct_basis(a) * alg.coproduct_basis(b):
                witness = f"Delta({name(a)}*{name(b)})"
                break
        if witness:
            break
    report.add("coproduct multiplicative", witness is None, witness)

    witness = None
    for a in basis:
        for b in basis:
            prod = alg.mul(h(a), h(b))
            if alg.counit(prod) != alg.counit_basis(a) * alg.counit_basis(b):
                witness = f"eps({name(a)}*{name(b)})"
                break
        if witness:
            break
    report.add("counit multiplicative", witness is None, witness)

    # coassociativity
    witness = None
    for a in basis:
        left: dict = {}
        right: dict = {}
        for (b, c), v in alg.coproduct_basis(a).coeffs.items():
            for (b1, b2), w in alg.coproduct_basis(b).coeffs.items():
                key = (b1, b2, c)
                left[key] = left[key] + v * w if key in left else v * w
            for (c1, c2), w in alg.coproduct_basis(c).coeffs.items():
                key = (b, c1, c2)
                right[key] = right[key] + v * w if key in right else v * w
        if HTensorElement(alg, 3, left) != HTensorElement(alg, 3, right):
            witness = name(a)
            break
    report.add("coassociativity", witness is None, witness)

    # counit laws
    witness = None
    for a in basis:
        left = HElement(alg, {})
        right = HElement(alg, {})
        for (b, c), v in alg.coproduct_basis(a).coeffs.items():
            left = left + HElement(alg, {c: v * alg.counit_basis(b)})
            right = right + HElement(alg, {b: v * alg.counit_basis(c)})
        if left != h(a) or right != h(a):
            witness = name(a)
            break
    report.add("counit laws", witness is None, witness)

    # antipode axiom
    witness = None
    for a in basis:
        eps_one = HElement(alg, {one_idx: alg.counit_basis(a)})
        left = HElement(alg, {})
        right = HElement(alg, {})
        for (b, c), v in alg.coproduct_basis(a).coeffs.items():
            left = left + v * alg.mul(alg.antipode_basis(b), h(c))
            right = right + v * alg.mul(h(b), alg.antipode_basis(c))
        if left != eps_one or right != eps_one:
            witness = name(a)
            break
    report.add("antipode axiom", witness is None, witness)

    # S anti-morphism
    witness = None
    for a in basis:
        for b in basis:
            lhs = alg.antipode(alg.mul(h(a), h(b)))
            rhs = alg.mul(alg.antipode_basis(b), alg.antipode_basis(a))
            if lhs != rhs:
                witness = f"S({name(a)}*{name(b)})"
                break
        if witness:
            break
    report.add("antipode anti-morphism", witness is None, witness)

    # S^-1
    witness = None
    for a in basis:
        if alg.antipode(alg.antipode_inv_basis(a)) != h(a) or alg.antipode_inv(alg.antipode_basis(a)) != h(a):
            witness = name(a)
            break
    report.add("antipode inverse", witness is None, witness)

    # closed-form coproduct of x^i
    witness = None
    for i in range(m):
        if alg.coproduct_basis((i, 0)) != _tensor_from_closed_form(alg, i):
            witness = f"x^{i}"
            break
    report.add("q-binomial coproduct", witness is None, witness)

    # order of S on the basis
    order = None
    for k in range(1, 4 * m + 1):
        ok = True
        for a in basis:
            img = h(a)
            for _ in range(k):
                img = alg.antipode(img)
            if img != h(a):
                ok = False
                break
        if ok:
            order = k
            break
    report.add("antipode order", order is not None, None if order else "order > 4m",
               detail=f"S has order {order}")
    return report
