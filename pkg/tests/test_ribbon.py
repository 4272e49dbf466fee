import pytest

from taftknot.matrix import Matrix
from taftknot.ribbon import (
    Morphism,
    braiding,
    braiding_inverse_yd,
    composed_dual_braidings,
    ribbon_data,
    twist_scalar,
    verify_braid_equation,
    verify_mixed_braid_equation,
    verify_ribbon,
)
from taftknot.scalars import LaurentScalar, q_pow
from taftknot.ydmod import dual_module, is_yd_morphism, make_vn, tensor_product

Z = LaurentScalar()


def test_v1_braiding_matrix(rd1):
    # basis v_-1 v_-1, v_-1 v_1, v_1 v_-1, v_1 v_1
    u = q_pow(1, 4)
    expected = [
        [u, Z, Z, Z],
        [Z, u - q_pow(-3, 4), q_pow(-1, 4), Z],
        [Z, q_pow(-1, 4), Z, Z],
        [Z, Z, Z, u],
    ]
    assert rd1.c.matrix == Matrix.from_rows(expected, Z)


def test_b_minus_on_v1(rd1):
    # q^{1/2} f_-1 (x) v_-1 + q^{-1/2} f_1 (x) v_1
    assert rd1.b_minus.matrix.to_rows() == [[q_pow(1, 2)], [Z], [Z], [q_pow(-1, 2)]]


def test_e_minus_on_v1(rd1):
    assert rd1.e_minus.matrix.to_rows() == [[q_pow(-1, 2), Z, Z, q_pow(1, 2)]]


def test_loop_values(rd1):
    assert rd1.qdim == q_pow(1, 2) + q_pow(-1, 2)
    assert (rd1.e_minus @ rd1.b).scalar() == rd1.qdim
    assert ribbon_data(2).qdim == q_pow(1) + 1 + q_pow(-1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_braid_equation(n):
    assert verify_braid_equation(ribbon_data(n).c).ok


def test_mixed_braid_equation():
    assert verify_mixed_braid_equation(make_vn(1), make_vn(1), make_vn(2)).ok
    assert verify_mixed_braid_equation(make_vn(2), make_vn(1), make_vn(1)).ok


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_ribbon_suite(n):
    report = verify_ribbon(ribbon_data(n))
    assert report.ok, report.to_text()


def test_twist_values():
    assert twist_scalar(0) == 1
    assert twist_scalar(1) == q_pow(3, 4)
    assert twist_scalar(2) == q_pow(2)
    for a in range(5):
        for b in range(5):
            assert twist_scalar(a + b) == q_pow(a * b, 2) * twist_scalar(a) * twist_scalar(b)


def test_top_vectors_braid_diagonally():
    # c(v_n (x) v_m) = q^{nm/4} v_m (x) v_n
    for n, m in [(1, 1), (1, 2), (2, 3)]:
        V, W = make_vn(n), make_vn(m)
        c = braiding(V, W)
        col = (V.dim - 1) * W.dim + (W.dim - 1)
        row = (W.dim - 1) * V.dim + (V.dim - 1)
        assert c.matrix.column(col) == {row: q_pow(n * m, 4)}


def test_closed_form_inverse_braiding():
    V = make_vn(2)
    assert braiding_inverse_yd(V, V) == ribbon_data(2).c_inv


def test_dual_braidings_from_compositions(rd1):
    composed = composed_dual_braidings(rd1.c, rd1.b, rd1.e)
    assert composed["c_dv"] == rd1.c_dv
    assert composed["naive"] == rd1.c_vd.inverse()
    assert composed["naive"] != rd1.c_dv


def test_closure_operator(rd1):
    D = rd1.closure_operator
    assert D.to_rows() == [[q_pow(-1, 2), Z], [Z, q_pow(1, 2)]]
    assert D.trace() == rd1.qdim


def test_morphism_shapes(rd1):
    idv = Morphism.identity(rd1.c.source[0])
    assert (rd1.c @ rd1.c_inv) == Morphism.identity(rd1.c.source)
    with pytest.raises(ValueError):
        rd1.b @ idv


def test_inverse_braiding_entries(rd1):
    inv = rd1.c_inv.matrix
    assert inv[2, 1] == q_pow(1, 4)
    assert inv[1, 1] == Z
    assert inv[2, 2] == q_pow(-1, 4) - q_pow(3, 4)


def test_zeroed_entry_breaks_braid_equation(rd1):
    outcome = {}
    for key in rd1.c.matrix.data:
        data = {k: v for k, v in rd1.c.matrix.data.items() if k != key}
        broken = Morphism(rd1.c.source, rd1.c.target, Matrix(4, 4, data, Z))
        outcome[key] = verify_braid_equation(broken).ok
    # dropping the binomial leaves a scaled permutation, which still braids
    assert outcome == {(0, 0): False, (1, 1): True, (1, 2): False, (2, 1): False, (3, 3): False}


def _is_monomial_or_binomial(a):
    terms = a.terms
    if len(terms) == 1:
        return abs(next(iter(terms.values()))) == 1
    return len(terms) == 2 and sorted(terms.values()) == [-1, 1]


def test_v1_braiding_entries_are_sparse(rd1):
    for mat in (rd1.c.matrix, rd1.c_inv.matrix):
        assert all(_is_monomial_or_binomial(v) for v in mat.data.values())


def test_higher_braidings_have_wider_entries():
    # V_2 already needs a product of two binomials
    widths = {len(v.terms) for v in ribbon_data(2).c.matrix.data.values()}
    assert max(widths) == 4


def test_mixed_braid_equation_with_duals():
    V = make_vn(1)
    Vd = dual_module(V)
    for triple in [(V, Vd, V), (Vd, V, Vd), (Vd, Vd, V), (V, V, Vd)]:
        assert verify_mixed_braid_equation(*triple).ok


@pytest.mark.parametrize("m,pair", [(3, (1, 1)), (3, (1, 2)), (5, (2, 3)), (5, (0, 4))])
def test_braiding_is_a_yd_morphism(m, pair):
    V, W = make_vn(pair[0], m), make_vn(pair[1], m)
    c = braiding(V, W).matrix
    assert is_yd_morphism(c, tensor_product(V, W), tensor_product(W, V))


def test_twisted_braiding_is_not_a_yd_morphism():
    V = make_vn(1, 3)
    c = braiding(V, V).matrix
    bent = c + Matrix(4, 4, {(0, 1): V.one}, V.zero)
    assert not is_yd_morphism(bent, tensor_product(V, V), tensor_product(V, V))


def test_braiding_with_dual_is_a_yd_morphism():
    V = make_vn(1, 5)
    Vd = dual_module(V)
    assert is_yd_morphism(braiding(V, Vd).matrix, tensor_product(V, Vd), tensor_product(Vd, V))
