"""Yetter-Drinfeld modules over the Taft algebra.

Every module built here is a weight module: ``g`` acts diagonally, by
``u^glog[r]`` on basis vector ``r`` (``u = q^(1/4)``).  The action of a
general basis element ``x^i g^j`` is ``X^i G^j``, assembled lazily from the
matrix ``X`` of ``x``.  The coaction of basis vector ``c`` is stored as a list
of ``(H-basis index, r, scalar)`` triples meaning
``delta(v_c) = sum scalar * h (x) v_r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrix import Matrix
from .report import Report
from .scalars import LaurentScalar, q_factorial, q_int
from .taft import GENERIC, HElement, TaftAlgebra, _TaftBase, taft_algebra

__all__ = [
    "YDModule",
    "alpha",
    "alpha_table",
    "make_vn",
    "dual_module",
    "tensor_product",
    "verify_yd",
    "is_yd_morphism",
]

Coaction = tuple[tuple[tuple[tuple[int, int], int, object], ...], ...]


@dataclass(eq=False)
class YDModule:
    algebra: _TaftBase
    name: str
    labels: tuple[str, ...]
    glog: tuple[int, ...]
    x_action: Matrix
    coaction: Coaction
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def generic(self) -> bool:
        return not isinstance(self.algebra, TaftAlgebra)

    @property
    def one(self):
        return self.algebra.one

    @property
    def zero(self):
        return self.algebra.zero

    def g_matrix(self, j: int) -> Matrix:
        alg = self.algebra
        return Matrix(self.dim, self.dim, {(r, r): alg.g_action(j, w) for r, w in enumerate(self.glog)},
                      self.zero)

    def action_matrix(self, idx: tuple[int, int]) -> Matrix:
        """Matrix of ``x^i g^j``; entry ``(r, c)`` is the ``v_r`` coefficient of ``h . v_c``."""
        hit = self._cache.get(idx)
        if hit is None:
            i, j = idx
            hit = self.g_matrix(j)
            for _ in range(i):
                hit = self.x_action @ hit
            self._cache[idx] = hit
        return hit

    def act(self, h: HElement) -> Matrix:
        out = Matrix(self.dim, self.dim, {}, self.zero)
        for idx, v in h.coeffs.items():
            out = out + self.action_matrix(idx).scale(v)
        return out

    def act_basis_on(self, idx, c: int) -> dict[int, object]:
        """``(x^i g^j) . v_c`` as a sparse vector."""
        i, j = idx
        vec = {c: self.algebra.g_action(j, self.glog[c])}
        for _ in range(i):
            vec = self.x_action.apply(vec)
            if not vec:
                break
        return vec

    def coact(self, c: int) -> dict:
        """``delta(v_c)`` as ``{(h_index, r): scalar}``."""
        out: dict = {}
        for hidx, r, s in self.coaction[c]:
            key = (hidx, r)
            out[key] = out[key] + s if key in out else s
        return {k: v for k, v in out.items() if v}

    def __repr__(self) -> str:
        return f"YDModule({self.name}, dim={self.dim}, {self.algebra!r})"


# ---------------------------------------------------------------------------
# the simple modules V_n


def alpha(n: int, k: int) -> LaurentScalar:
    """``alpha_k = q^{-(k+n+2)/2} (q-1) ((k+n+2)/2)_q ((n-k)/2)_q`` for ``V_n``."""
    if (k + n) % 2 or abs(k) > n:
        raise ValueError(f"k={k} is not a weight of V_{n}")
    return (LaurentScalar.monomial(-2 * (k + n + 2))
            * LaurentScalar({4: 1, 0: -1})
            * q_int((k + n + 2) // 2)
            * q_int((n - k) // 2))


def alpha_table(n: int) -> dict[int, LaurentScalar]:
    return {k: alpha(n, k) for k in range(-n, n + 1, 2)}


def vn_coaction_terms(n: int, k: int) -> list[tuple[int, int, LaurentScalar]]:
    """Terms ``(i, doubled g exponent, coefficient)`` of ``delta(v_k)`` in ``V_n``.

    The coefficient is ``prod_{j<i} alpha_{k+2j} / (i)!_q``; the division is
    exact and any remainder raises.  The sum stops at ``i = (n-k)/2`` because
    the next product would contain ``alpha_n = 0``.
    """
    alphas = alpha_table(n)
    terms = []
    prod = LaurentScalar.from_int(1)
    i = 0
    while True:
        coef = prod.divexact(q_factorial(i))
        if not coef:
            break
        terms.append((i, -(k + 2 * i), coef))
        if k + 2 * i >= n:
            break
        prod = prod * alphas[k + 2 * i]
        i += 1
    return terms


def make_vn(n: int, m: int | None = None) -> YDModule:
    """The simple module ``V_n``; generic if ``m`` is None, else over ``Q(zeta_m)``.

    Basis ``v_{-n}, v_{-n+2}, ..., v_n``; ``g.v_k = q^{-k/2} v_k``,
    ``x.v_k = v_{k-2}`` (and ``x.v_{-n} = 0``).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m is None:
        alg: _TaftBase = GENERIC
    else:
        if n >= m:
            raise ValueError(f"V_{n} is not defined over the Taft algebra with m={m} (need n <= m-1)")
        alg = taft_algebra(m)
    weights = list(range(-n, n + 1, 2))
    index = {k: r for r, k in enumerate(weights)}
    labels = tuple(f"v_{k}" for k in weights)
    glog = tuple(-2 * k for k in weights)
    one = alg.one
    x_action = Matrix(n + 1, n + 1, {(r - 1, r): one for r in range(1, n + 1)}, alg.zero)
    coaction = []
    for k in weights:
        col = []
        for i, gx2, coef in vn_coaction_terms(n, k):
            if m is None:
                hidx = (i, gx2)
            else:
                hidx = (i, alg.g_exponent(gx2))
            col.append((hidx, index[k + 2 * i], alg.coerce(coef)))
        coaction.append(tuple(col))
    return YDModule(alg, f"V_{n}", labels, glog, x_action, tuple(coaction))


# ---------------------------------------------------------------------------
# duals and tensor products


def dual_module(V: YDModule) -> YDModule:
    """Left dual ``V*`` on the dual basis.

    ``h`` acts by the transpose of ``S(h)``; if ``delta(v_j) = sum_i h_ij (x) v_i``
    then ``delta(f_i) = sum_j S^-1(h_ij) (x) f_j``.
    """
    alg = V.algebra
    s_x = alg.antipode(alg.x)
    x_action = V.act(s_x).transpose()
    glog = tuple(-w for w in V.glog)
    cols: list[dict] = [dict() for _ in range(V.dim)]
    for j in range(V.dim):
        for hidx, i, s in V.coaction[j]:
            for hidx2, v in alg.antipode_inv_basis(hidx).coeffs.items():
                key = (hidx2, j)
                t = s * v
                cols[i][key] = cols[i][key] + t if key in cols[i] else t
    coaction = tuple(tuple((h, r, s) for (h, r), s in sorted(col.items()) if s) for col in cols)
    if V.name.endswith("*"):
        name = V.name[:-1] + "**"
    else:
        name = V.name + "*"
    labels = tuple(f"f[{lab}]" for lab in V.labels)
    return YDModule(alg, name, labels, glog, x_action, coaction)


def tensor_product(V: YDModule, W: YDModule) -> YDModule:
    """``V (x) W`` with action through the coproduct and coaction ``v_-1 w_-1 (x) v_0 (x) w_0``.

    Basis index of ``v_a (x) w_b`` is ``a * dim W + b``.
    """
    if V.algebra is not W.algebra:
        raise ValueError("modules live over different algebras (mode mismatch)")
    alg = V.algebra
    x_action = Matrix(V.dim * W.dim, V.dim * W.dim, {}, alg.zero)
    for (h1, h2), v in alg.coproduct_basis(alg.x_index).coeffs.items():
        x_action = x_action + V.action_matrix(h1).kron(W.action_matrix(h2)).scale(v)
    glog = tuple(a + b for a in V.glog for b in W.glog)
    coaction = []
    for a in range(V.dim):
        for b in range(W.dim):
            acc: dict = {}
            for ha, ra, sa in V.coaction[a]:
                for hb, rb, sb in W.coaction[b]:
                    hit = alg.basis_mul(ha, hb)
                    if hit is None:
                        continue
                    s, hidx = hit
                    key = (hidx, ra * W.dim + rb)
                    t = sa * sb * s
                    acc[key] = acc[key] + t if key in acc else t
            coaction.append(tuple((h, r, s) for (h, r), s in sorted(acc.items()) if s))
    labels = tuple(f"{x}(x){y}" for x in V.labels for y in W.labels)
    return YDModule(alg, f"({V.name}(x){W.name})", labels, glog, x_action, tuple(coaction))


# ---------------------------------------------------------------------------
# verification


def _add(acc: dict, key, val) -> None:
    if key in acc:
        s = acc[key] + val
        if s:
            acc[key] = s
        else:
            del acc[key]
    elif val:
        acc[key] = val


def verify_yd(V: YDModule) -> Report:
    """Module, comodule and Yetter-Drinfeld compatibility checks.

    Runs over every Taft basis element ``h`` and every basis vector ``v``:
    ``delta(h.v) = h_1 v_-1 S(h_3) (x) h_2 v_0``.
    """
    if V.generic:
        raise ValueError("verify_yd needs a specialized module (pass m to make_vn)")
    alg: TaftAlgebra = V.algebra
    basis = alg.basis_indices()
    report = Report(f"yd {V.name} m={alg.m}")

    # module axioms
    witness = None
    if not V.action_matrix(alg.one_index).is_identity():
        witness = "1 does not act as the identity"
    if witness is None:
        for a in basis:
            for b in basis:
                lhs = V.action_matrix(a) @ V.action_matrix(b)
                hit = alg.basis_mul(a, b)
                rhs = (V.action_matrix(hit[1]).scale(hit[0]) if hit is not None
                       else Matrix(V.dim, V.dim, {}, alg.zero))
                if lhs != rhs:
                    witness = f"{alg.basis_name(a)}.({alg.basis_name(b)}.v)"
                    break
            if witness:
                break
    report.add("module axiom", witness is None, witness)

    # comodule counit
    witness = None
    for c in range(V.dim):
        acc: dict = {}
        for (hidx, r), s in V.coact(c).items():
            _add(acc, r, s * alg.counit_basis(hidx))
        if acc != {c: alg.one}:
            witness = V.labels[c]
            break
    report.add("comodule counit", witness is None, witness)

    # comodule coassociativity
    witness = None
    for c in range(V.dim):
        left: dict = {}
        right: dict = {}
        for (hidx, r), s in V.coact(c).items():
            for (h1, h2), w in alg.coproduct_basis(hidx).coeffs.items():
                _add(left, (h1, h2, r), s * w)
            for (h2, r2), w in V.coact(r).items():
                _add(right, (hidx, h2, r2), s * w)
        if left != right:
            witness = V.labels[c]
            break
    report.add("comodule coassociativity", witness is None, witness)

    # Yetter-Drinfeld compatibility
    witness = None
    for hidx in basis:
        delta2 = alg.coproduct2_basis(hidx).coeffs
        for c in range(V.dim):
            lhs: dict = {}
            for r, s in V.act_basis_on(hidx, c).items():
                for (h, r2), w in V.coact(r).items():
                    _add(lhs, (h, r2), s * w)
            rhs: dict = {}
            for (h1, h2, h3), s in delta2.items():
                s_h3 = alg.antipode_basis(h3)
                for (vm1, r), w in V.coact(c).items():
                    left = alg.mul(alg.mul(alg.basis(*h1), alg.basis(*vm1)), s_h3)
                    if not left:
                        continue
                    vec = V.act_basis_on(h2, r)
                    for hk, hv in left.coeffs.items():
                        for r2, vv in vec.items():
                            _add(rhs, (hk, r2), s * w * hv * vv)
            if lhs != rhs:
                witness = f"h={alg.basis_name(hidx)}, v={V.labels[c]}"
                break
        if witness:
            break
    report.add("yd compatibility", witness is None, witness)
    return report


def is_yd_morphism(f: Matrix, src: YDModule, tgt: YDModule) -> bool:
    """Does ``f: src -> tgt`` commute with the action of ``g``, ``x`` and with the coactions?"""
    alg = src.algebra
    for idx in (alg.g_index, alg.x_index):
        if tgt.action_matrix(idx) @ f != f @ src.action_matrix(idx):
            return False
    for c in range(src.dim):
        left: dict = {}
        for (h, r), s in src.coact(c).items():
            for r2, w in f.apply({r: s}).items():
                _add(left, (h, r2), w)
        right: dict = {}
        for r, s in f.apply({c: alg.one}).items():
            for (h, r2), w in tgt.coact(r).items():
                _add(right, (h, r2), s * w)
        if left != right:
            return False
    return True
