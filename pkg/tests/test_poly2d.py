import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvifit.errors import DomainError
from curvifit.poly2d import (
    Poly2D, affine_substitute, basis_matrix, basis_row, differentiate, index_of,
    monomial_count, monomial_indices,
)


@pytest.mark.parametrize("degree, count", [(3, 10), (0, 1), (7, 36)])
def test_monomial_count(degree, count):
    assert monomial_count(degree) == count
    assert len(monomial_indices(degree)) == count


def test_monomial_count_rejects_negative():
    with pytest.raises(DomainError):
        monomial_count(-1)


def test_canonical_order():
    assert monomial_indices(2) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert [index_of(m, n) for m, n in monomial_indices(4)] == list(range(15))


@pytest.mark.parametrize("args, expected", [
    ((2, 2, 3), [1, 2, 3, 4, 6, 9]),
    ((1, 0, 0), [1, 0, 0]),
    ((3, 1, 1), [1] * 10),
])
def test_basis_row(args, expected):
    np.testing.assert_array_equal(basis_row(*args), expected)


def test_basis_row_rejects_non_finite():
    with pytest.raises(DomainError):
        basis_row(2, np.nan, 1.0)
    with pytest.raises(DomainError):
        basis_row(2, 1.0, np.inf)


def test_basis_matrix_broadcasts():
    u = np.array([[0.0, 1.0], [2.0, 3.0]])
    B = basis_matrix(2, u, 2.0)
    assert B.shape == (2, 2, 6)
    np.testing.assert_array_equal(B[1, 0], basis_row(2, 2.0, 2.0))


def test_eval_examples():
    assert Poly2D(0, [4.5])(17.0, -3.0) == 4.5
    # leading coefficient of the published Cartesian inverse map is its value at the origin
    a_prime = [0.981, 9.122476, 2.196286, -3.16571, -3.39543, -0.35429,
               2.026667, 0.16, 0.251429, 0.16]
    assert Poly2D(3, a_prime)(0.0, 0.0) == pytest.approx(0.981, abs=1e-15)
    uv = Poly2D.from_terms(2, {(2, 1): 1.0})
    assert uv(2.0, 5.0) == 10.0


def test_wrong_coefficient_count():
    with pytest.raises(DomainError):
        Poly2D(2, [1.0, 2.0])


def test_differentiate_examples():
    u2 = Poly2D.from_terms(2, {(2, 0): 1.0})
    assert differentiate(u2, 1, 0) == Poly2D.from_terms(1, {(1, 0): 2.0})
    uv = Poly2D.from_terms(2, {(2, 1): 1.0})
    assert differentiate(uv, 1, 1) == Poly2D(0, [1.0])
    p = Poly2D(2, np.arange(1.0, 7.0))
    assert differentiate(p, 2, 1) == Poly2D.zero()
    assert differentiate(p, 0, 3)(1.3, 0.7) == 0.0


def test_affine_substitute_matches_direct_evaluation():
    rng = np.random.default_rng(1)
    p = Poly2D(4, rng.normal(size=15))
    q = affine_substitute(p, 0.3, 2.0, -1.1, 0.5)
    u, v = rng.uniform(-2, 2, 20), rng.uniform(-2, 2, 20)
    np.testing.assert_allclose(q(u, v), p((u - 0.3) / 2.0, (v + 1.1) / 0.5), rtol=1e-11, atol=1e-11)


coeff = st.floats(-3, 3, allow_nan=False)
point = st.floats(-1.5, 1.5, allow_nan=False)


@st.composite
def polys(draw, max_degree=6):
    degree = draw(st.integers(0, max_degree))
    coeffs = draw(st.lists(coeff, min_size=monomial_count(degree), max_size=monomial_count(degree)))
    return Poly2D(degree, coeffs)


def _central_difference(p, u, v, du, dv):
    scale = max(1.0, abs(u), abs(v))
    h = np.finfo(float).eps ** (1 / 3) * scale
    if du == 1 and dv == 0:
        return (p(u + h, v) - p(u - h, v)) / (2 * h)
    if du == 0 and dv == 1:
        return (p(u, v + h) - p(u, v - h)) / (2 * h)
    h = np.finfo(float).eps ** (1 / 4) * scale
    if du == 2:
        return (p(u + h, v) - 2 * p(u, v) + p(u - h, v)) / h**2
    if dv == 2:
        return (p(u, v + h) - 2 * p(u, v) + p(u, v - h)) / h**2
    return (p(u + h, v + h) - p(u + h, v - h) - p(u - h, v + h) + p(u - h, v - h)) / (4 * h * h)


@settings(max_examples=100, deadline=None)
@given(polys(), point, point, st.sampled_from([(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]))
def test_derivative_matches_finite_differences(p, u, v, order):
    exact = p.differentiate(*order)(u, v)
    fd = _central_difference(p, u, v, *order)
    # tolerance relative to the magnitude of the individual terms
    scale = np.abs(p.coeffs) @ np.abs(basis_row(p.degree, 2.0, 2.0)) + 1.0
    assert abs(exact - fd) <= 1e-6 * scale


@given(polys())
def test_differentiation_commutes(p):
    # sequential differentiation rounds once per step, so compare to a few ulps
    uv = p.differentiate(1, 0).differentiate(0, 1).coeffs
    vu = p.differentiate(0, 1).differentiate(1, 0).coeffs
    joint = p.differentiate(1, 1).coeffs
    np.testing.assert_allclose(uv, vu, rtol=1e-14, atol=0)
    np.testing.assert_allclose(uv, joint, rtol=1e-14, atol=0)


@given(polys(4), polys(4), coeff, coeff, point, point)
def test_eval_is_linear(p, q, alpha, beta, u, v):
    combo = alpha * p + beta * q
    expected = alpha * p(u, v) + beta * q(u, v)
    scale = 1.0 + abs(alpha) * np.abs(p.coeffs).sum() + abs(beta) * np.abs(q.coeffs).sum()
    assert combo(u, v) == pytest.approx(expected, abs=1e-13 * scale * 10)
