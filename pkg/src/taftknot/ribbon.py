"""Ribbon data of ``V_n``: braidings, duality maps, twist and the minus caps.

Morphisms are matrices over :class:`~taftknot.scalars.LaurentScalar`
(rows = target basis, columns = source basis) tagged with the tensor
factors they map between.  Tensor bases are ordered lexicographically with
the leftmost factor most significant.

Conventions fixed here:

* ``c_{V,W}(v (x) w) = v_{-1}.w (x) v_0``, computed straight from the
  coaction.  For ``V_1`` in the basis ``(v_-1 v_-1, v_-1 v_1, v_1 v_-1, v_1 v_1)``
  this is the familiar 4x4 matrix with ``q^(1/4) - q^(-3/4)`` in the middle.
* ``b: 1 -> V (x) V*`` and ``e: V* (x) V -> 1`` are the canonical
  coevaluation and evaluation.
* ``b^- = theta^-1 * c_{V*,V}^-1 b`` and ``e^- = theta * e c_{V,V*}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .matrix import Matrix
from .report import Report
from .scalars import LaurentScalar
from .ydmod import YDModule, dual_module, make_vn

__all__ = [
    "Morphism",
    "RibbonData",
    "braiding",
    "braiding_inverse",
    "braiding_inverse_yd",
    "cap_cup",
    "dual_braidings",
    "composed_dual_braidings",
    "twist_scalar",
    "minus_cap_cup",
    "ribbon_data",
    "verify_braid_equation",
    "verify_mixed_braid_equation",
    "verify_zigzag",
    "verify_ribbon",
]

ONE = LaurentScalar.from_int(1)
ZERO = LaurentScalar()

Factor = tuple[str, int]


def _size(factors: tuple[Factor, ...]) -> int:
    n = 1
    for _, d in factors:
        n *= d
    return n


@dataclass(frozen=True, eq=False)
class Morphism:
    """Linear map between tensor products of labelled factors ``(name, dim)``."""

    source: tuple[Factor, ...]
    target: tuple[Factor, ...]
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (_size(self.target), _size(self.source)):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match {self.target} <- {self.source}")

    @classmethod
    def identity(cls, factors: tuple[Factor, ...] | Factor) -> Morphism:
        if factors and isinstance(factors[0], str):
            factors = (factors,)
        factors = tuple(factors)
        return cls(factors, factors, Matrix.identity(_size(factors), ONE))

    @property
    def is_square(self) -> bool:
        return self.source == self.target

    def __matmul__(self, other: Morphism) -> Morphism:
        """``self o other``: apply ``other`` first."""
        if other.target != self.source:
            raise ValueError(f"cannot compose: {self.source} != {other.target}")
        return Morphism(other.source, self.target, self.matrix @ other.matrix)

    def tensor(self, other: Morphism) -> Morphism:
        return Morphism(self.source + other.source, self.target + other.target,
                        self.matrix.kron(other.matrix))

    def scale(self, s: LaurentScalar) -> Morphism:
        return Morphism(self.source, self.target, self.matrix.scale(s))

    def inverse(self) -> Morphism:
        return Morphism(self.target, self.source, self.matrix.inverse())

    def __pow__(self, k: int) -> Morphism:
        if not self.is_square:
            raise ValueError("only endomorphisms have powers")
        base = self if k >= 0 else self.inverse()
        out = Morphism.identity(self.source)
        for _ in range(abs(k)):
            out = base @ out
        return out

    def scalar(self) -> LaurentScalar:
        """Value of a map ``1 -> 1``."""
        if self.matrix.shape != (1, 1):
            raise ValueError("not a scalar morphism")
        return self.matrix[0, 0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self) -> str:
        src = "(x)".join(n for n, _ in self.source) or "1"
        tgt = "(x)".join(n for n, _ in self.target) or "1"
        return f"Morphism({src} -> {tgt}, {self.matrix!r})"


def _factor(V: YDModule) -> Factor:
    return (V.name, V.dim)


def _id(V: YDModule) -> Morphism:
    return Morphism.identity(_factor(V))


# ---------------------------------------------------------------------------
# braidings


def braiding(V: YDModule, W: YDModule) -> Morphism:
    """``c_{V,W}(v (x) w) = v_{-1}.w (x) v_0``.

    Works in either scalar mode; ribbon data itself uses generic modules.
    """
    if V.algebra is not W.algebra:
        raise ValueError("braiding needs modules in the same scalar mode")
    data: dict = {}
    for c in range(V.dim):
        for d in range(W.dim):
            col = c * W.dim + d
            for hidx, r, s in V.coaction[c]:
                for w, val in W.act_basis_on(hidx, d).items():
                    key = (w * V.dim + r, col)
                    data[key] = data[key] + s * val if key in data else s * val
    mat = Matrix(V.dim * W.dim, V.dim * W.dim, {k: v for k, v in data.items() if v}, V.zero)
    return Morphism((_factor(V), _factor(W)), (_factor(W), _factor(V)), mat)


def braiding_inverse(c: Morphism) -> Morphism:
    """Exact inverse over ``Z[q^(1/4), q^(-1/4)]``; SingularMatrixError if none exists."""
    return c.inverse()


def braiding_inverse_yd(V: YDModule, W: YDModule) -> Morphism:
    """``c_{V,W}^-1(w (x) v) = v_0 (x) S^-1(v_{-1}).w``, straight from the YD data."""
    alg = V.algebra
    data: dict = {}
    for d in range(W.dim):
        for c in range(V.dim):
            col = d * V.dim + c
            for hidx, r, s in V.coaction[c]:
                for hk, hv in alg.antipode_inv_basis(hidx).coeffs.items():
                    for w, val in W.act_basis_on(hk, d).items():
                        key = (r * W.dim + w, col)
                        t = s * hv * val
                        data[key] = data[key] + t if key in data else t
    mat = Matrix(V.dim * W.dim, V.dim * W.dim, data, ZERO)
    return Morphism((_factor(W), _factor(V)), (_factor(V), _factor(W)), mat)


def cap_cup(V: YDModule, Vd: YDModule | None = None) -> tuple[Morphism, Morphism]:
    """``b: 1 -> V (x) V*`` (``sum v_i (x) f_i``) and ``e: V* (x) V -> 1`` (evaluation)."""
    Vd = Vd or dual_module(V)
    n = V.dim
    b = Matrix(n * n, 1, {(i * n + i, 0): ONE for i in range(n)}, ZERO)
    e = Matrix(1, n * n, {(0, i * n + i): ONE for i in range(n)}, ZERO)
    return (Morphism((), (_factor(V), _factor(Vd)), b),
            Morphism((_factor(Vd), _factor(V)), (), e))


def dual_braidings(V: YDModule, Vd: YDModule | None = None) -> tuple[Morphism, Morphism, Morphism]:
    """``(c_{V*,V}, c_{V,V*}, c_{V*,V*})`` from the dual module's YD structure."""
    Vd = Vd or dual_module(V)
    return braiding(Vd, V), braiding(V, Vd), braiding(Vd, Vd)


def _zigzag_conjugate(mid: Morphism, b: Morphism, e: Morphism, x: Factor) -> Morphism:
    """``(e (x) id_X (x) id_V*)(id_V* (x) mid (x) id_V*)(id_V* (x) id_X (x) b)``.

    ``mid: X (x) V -> V (x) X``; the result maps ``V* (x) X -> X (x) V*``.
    """
    vd = e.source[0]
    id_vd = Morphism.identity(vd)
    id_x = Morphism.identity(x)
    bottom = id_vd.tensor(id_x).tensor(b)
    middle = id_vd.tensor(mid).tensor(id_vd)
    top = e.tensor(id_x).tensor(id_vd)
    return top @ middle @ bottom


def composed_dual_braidings(c: Morphism, b: Morphism, e: Morphism) -> dict[str, Morphism]:
    """Braidings with the dual assembled from ``c``, ``b`` and ``e`` alone.

    ``naive`` is the zig-zag conjugate of ``c`` itself; it equals
    ``c_{V,V*}^-1``.  Conjugating ``c^-1`` instead yields ``c_{V*,V}``, and
    conjugating the naive map once more yields ``c_{V*,V*}``.
    """
    v = c.source[0]
    vd = e.source[0]
    c_inv = c.inverse()
    naive = _zigzag_conjugate(c, b, e, v)
    c_dv = _zigzag_conjugate(c_inv, b, e, v)
    c_dd = _zigzag_conjugate(naive, b, e, vd)
    return {"naive": naive, "c_dv": c_dv, "c_vd": naive.inverse(), "c_dd": c_dd}


# ---------------------------------------------------------------------------
# twist and minus caps


def twist_scalar(n: int) -> LaurentScalar:
    """``theta_n = q^((n^2 + 2n)/4)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentScalar.monomial(n * n + 2 * n)


def minus_cap_cup(b: Morphism, e: Morphism, c_dv: Morphism, c_vd: Morphism,
                  theta: LaurentScalar) -> tuple[Morphism, Morphism]:
    """``b^- = theta^-1 c_{V*,V}^-1 b : 1 -> V* (x) V`` and ``e^- = theta e c_{V,V*} : V (x) V* -> 1``."""
    b_minus = (c_dv.inverse() @ b).scale(theta.inverse())
    e_minus = (e @ c_vd).scale(theta)
    return b_minus, e_minus


@dataclass(frozen=True, eq=False)
class RibbonData:
    module: YDModule
    dual: YDModule
    c: Morphism
    c_inv: Morphism
    b: Morphism
    e: Morphism
    b_minus: Morphism
    e_minus: Morphism
    theta: LaurentScalar
    qdim: LaurentScalar
    c_dv: Morphism
    c_vd: Morphism
    c_dd: Morphism

    @property
    def n(self) -> int:
        return self.module.dim - 1

    @property
    def closure_operator(self) -> Matrix:
        """``D`` with ``e^- (f (x) id)(b) = tr(D f)`` for every ``f: V -> V``.

        Read off as ``v_a -> sum_i e^-(v_a (x) f_i) v_i``, i.e. ``e^-`` applied
        to ``V (x)`` the flipped coevaluation ``sum f_i (x) v_i``.
        """
        d = self.module.dim
        flipped_b = Matrix(d * d, 1, {(i * d + i, 0): ONE for i in range(d)}, ZERO)
        # (e^- (x) id_V) o (id_V (x) flipped b): V -> V (x) V* (x) V -> V
        lift = Matrix.identity(d, ONE).kron(flipped_b)
        return self.e_minus.matrix.kron(Matrix.identity(d, ONE)) @ lift


@lru_cache(maxsize=None)
def ribbon_data(n: int) -> RibbonData:
    """Ribbon data of the generic module ``V_n``."""
    V = make_vn(n)
    Vd = dual_module(V)
    c = braiding(V, V)
    c_inv = braiding_inverse(c)
    b, e = cap_cup(V, Vd)
    c_dv, c_vd, c_dd = dual_braidings(V, Vd)
    theta = twist_scalar(n)
    b_minus, e_minus = minus_cap_cup(b, e, c_dv, c_vd, theta)
    qdim = (e @ b_minus).scalar()
    return RibbonData(V, Vd, c, c_inv, b, e, b_minus, e_minus, theta, qdim, c_dv, c_vd, c_dd)


# ---------------------------------------------------------------------------
# verification


def verify_braid_equation(c: Morphism) -> Report:
    """``(c (x) id)(id (x) c)(c (x) id) == (id (x) c)(c (x) id)(id (x) c)``."""
    report = Report("braid equation")
    if not c.is_square or len(c.source) != 2 or c.source[0] != c.source[1]:
        report.add("shape", False, "c must be an endomorphism of V (x) V")
        return report
    idv = Morphism.identity(c.source[0])
    c1 = c.tensor(idv)
    c2 = idv.tensor(c)
    lhs = c1 @ c2 @ c1
    rhs = c2 @ c1 @ c2
    witness = None
    if lhs != rhs:
        diff = (lhs.matrix - rhs.matrix).data
        witness = f"entry {min(diff)}"
    report.add("braid equation", witness is None, witness, detail=f"dim {lhs.matrix.nrows}")
    return report


def verify_mixed_braid_equation(V: YDModule, W: YDModule, X: YDModule) -> Report:
    """Hexagon-derived identity on ``V (x) W (x) X``."""
    c_vw, c_vx, c_wx = braiding(V, W), braiding(V, X), braiding(W, X)
    lhs = c_wx.tensor(_id(V)) @ _id(W).tensor(c_vx) @ c_vw.tensor(_id(X))
    rhs = _id(X).tensor(c_vw) @ c_vx.tensor(_id(W)) @ _id(V).tensor(c_wx)
    report = Report(f"mixed braid equation ({V.name}, {W.name}, {X.name})")
    report.add("mixed braid equation", lhs == rhs)
    return report


def verify_zigzag(V: YDModule, b: Morphism, e: Morphism) -> Report:
    """Snake identities for ``(b, e)``."""
    Vd_f = e.source[0]
    idv, idd = _id(V), Morphism.identity(Vd_f)
    report = Report(f"zig-zag {V.name}")
    report.add("(id_V (x) e)(b (x) id_V) = id_V", (idv.tensor(e) @ b.tensor(idv)) == idv)
    report.add("(e (x) id_V*)(id_V* (x) b) = id_V*", (e.tensor(idd) @ idd.tensor(b)) == idd)
    return report


def verify_ribbon(rd: RibbonData, recurrence_bound: int = 4) -> Report:
    V = rd.module
    idv, idd = _id(V), Morphism.identity(rd.e.source[0])
    report = Report(f"ribbon {V.name}")

    # (a) zig-zag, for both pairs of duality maps
    report.extend(verify_zigzag(V, rd.b, rd.e))
    report.add("(e^- (x) id_V)(id_V (x) b^-) = id_V", (rd.e_minus.tensor(idv) @ idv.tensor(rd.b_minus)) == idv)
    report.add("(id_V* (x) e^-)(b^- (x) id_V*) = id_V*",
               (idd.tensor(rd.e_minus) @ rd.b_minus.tensor(idd)) == idd)

    # (b) inverse pair
    ident = Morphism.identity(rd.c.source)
    report.add("c c^-1 = id = c^-1 c", (rd.c @ rd.c_inv) == ident and (rd.c_inv @ rd.c) == ident)

    # (c) twist recurrence
    witness = None
    for a in range(recurrence_bound + 1):
        for b in range(recurrence_bound + 1):
            if twist_scalar(a + b) != LaurentScalar.monomial(2 * a * b) * twist_scalar(a) * twist_scalar(b):
                witness = f"n={a}, m={b}"
    report.add("theta_{n+m} = q^{nm/2} theta_n theta_m", witness is None and twist_scalar(0) == 1, witness,
               detail=f"n, m <= {recurrence_bound}")

    # (d) both loop closures of the identity strand
    left = (rd.e @ rd.b_minus).scalar()
    right = (rd.e_minus @ rd.b).scalar()
    report.add("e b^- = e^- b", left == right, None if left == right else f"{left} vs {right}",
               detail=f"qdim = {left}")

    # (e) stabilization: closing one strand of c^{+-1} gives theta^{+-1} id
    for sign, cc in ((1, rd.c), (-1, rd.c_inv)):
        expect = idv.scale(rd.theta ** sign)
        right_close = idv.tensor(rd.e_minus) @ cc.tensor(idd) @ idv.tensor(rd.b)
        left_close = rd.e.tensor(idv) @ idd.tensor(cc) @ rd.b_minus.tensor(idv)
        label = "c" if sign > 0 else "c^-1"
        report.add(f"right closure of {label} = theta^{sign} id", right_close == expect)
        report.add(f"left closure of {label} = theta^{sign} id", left_close == expect)

    # dual braidings assembled from c, b, e agree with the YD ones
    composed = composed_dual_braidings(rd.c, rd.b, rd.e)
    report.add("c_{V*,V} from c^-1, b, e", composed["c_dv"] == rd.c_dv)
    report.add("c_{V,V*} from c, b, e", composed["c_vd"] == rd.c_vd)
    report.add("c_{V*,V*} from c, b, e", composed["c_dd"] == rd.c_dd)
    return report
