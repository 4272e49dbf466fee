import pytest

from taftknot.scalars import LaurentScalar
from taftknot.taft import GENERIC, TaftAlgebra, taft_algebra, verify_hopf


@pytest.mark.parametrize("m", [3, 5, 7])
def test_hopf_axioms(m):
    report = verify_hopf(m)
    assert report.ok, report.to_text()


def test_corrupted_coproduct_is_caught():
    a = taft_algebra(3)
    primitive = TaftAlgebra(3, delta_x={((1, 0), (0, 0)): a.one, ((0, 0), (1, 0)): a.one})
    report = verify_hopf(primitive)
    assert not report.ok
    failed = {c.name for c in report.failed()}
    assert "coproduct multiplicative" in failed
    assert all(c.witness for c in report.failed())


def test_basis_and_dimension():
    a = taft_algebra(5)
    assert a.dimension == 25
    assert len(a.basis_indices()) == 25
    assert (0, 0) in a.basis_indices() and (4, 4) in a.basis_indices()


def test_defining_relations():
    a = taft_algebra(5)
    x, g = a.x, a.g
    assert a.power(g, 5) == a.unit
    assert not a.power(x, 5)
    assert g * x == (x * g) * a.ring.q


@pytest.mark.parametrize("m", [3, 5])
def test_antipode_order_is_2m(m):
    a = taft_algebra(m)
    x = a.x
    y = x
    for k in range(1, 2 * m + 1):
        y = a.antipode(y)
        if y == x:
            break
    assert k == 2 * m


def test_antipode_inverse_round_trip():
    a = taft_algebra(5)
    for idx in a.basis_indices():
        h = a.basis(*idx)
        assert a.antipode(a.antipode_inv(h)) == h
        assert a.antipode_inv(a.antipode(h)) == h


def test_generic_commutation():
    # half-integer g powers: index j is twice the exponent
    x = GENERIC.x
    g_half = GENERIC.basis(0, 1)
    lhs = g_half * x
    rhs = (x * g_half) * LaurentScalar.monomial(2)
    assert lhs == rhs


def test_counit():
    a = taft_algebra(3)
    assert a.counit(a.g) == a.one
    assert a.counit(a.x) == a.zero


def test_mismatched_algebras_do_not_multiply():
    with pytest.raises((TypeError, ValueError)):
        taft_algebra(3).x * taft_algebra(5).x


def test_coproduct_of_x_squared():
    a = taft_algebra(5)
    q = a.ring.q
    expected = {((0, 2), (2, 0)): a.one, ((1, 1), (1, 0)): a.one + q, ((2, 0), (0, 0)): a.one}
    assert a.coproduct(a.x * a.x).coeffs == expected


def test_counit_is_linear():
    a = taft_algebra(3)
    h = a.x * a.g * a.g + a.g * a.scalar(3)
    assert a.counit(h) == a.scalar(3)


@pytest.mark.parametrize("m", [3, 5])
def test_antipode_on_generators(m):
    a = taft_algebra(m)
    g_inv = a.power(a.g, m - 1)
    assert a.antipode(a.g) == g_inv
    assert a.antipode(a.x) == -(g_inv * a.x)
    xg = a.x * a.g
    assert a.antipode_inv(a.antipode(xg)) == xg


def test_antipode_reverses_products():
    a = taft_algebra(5)
    elems = [a.basis(i, j) for i in range(5) for j in range(5)]
    for h in elems[::3]:
        for k in elems[::4]:
            assert a.antipode(h * k) == a.antipode(k) * a.antipode(h)
