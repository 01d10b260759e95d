import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvifit import lsq
from curvifit.errors import DegenerateSystemError, SolvabilityError
from curvifit.geometry import AnnulusSpec, eccentric_points, table1_fixture
from curvifit.poly2d import Poly2D, basis_matrix, monomial_count


def test_assemble_shapes():
    sys3 = lsq.assemble([0, 1, 0], [0, 0, 1], [1, 2, 3], 1)
    assert sys3.matrix.shape == (3, 3)
    pts = table1_fixture(corrected=True)
    XI, ETA = pts.mapped_nodes()
    big = lsq.assemble(XI, ETA, pts.x, 3)
    assert big.matrix.shape == (25, 10)
    np.testing.assert_array_equal(big.matrix[7], basis_matrix(3, XI.ravel()[7], ETA.ravel()[7]))


def test_assemble_rejects_too_few_points():
    rng = np.random.default_rng(0)
    with pytest.raises(SolvabilityError, match=r"\(M\+1\)\(M\+2\)/2"):
        lsq.assemble(rng.random(9), rng.random(9), rng.random(9), 3)


def test_exactly_determined_system_interpolates():
    sol = lsq.solve(lsq.assemble([0, 1, 0], [0, 0, 1], [1.0, 3.0, -2.0], 1))
    assert sol.residual_norm <= 1e-10
    np.testing.assert_allclose(sol.coeffs.coeffs, [1.0, 2.0, -3.0], atol=1e-12)
    assert sol.rank == 3 and not sol.dropped_columns


def test_duplicate_consistent_row_changes_nothing():
    u, v, t = [0, 1, 0, 1, 2, 0], [0, 0, 1, 1, 0, 2], [1, 2, 0, 4, 3, -1]
    base = lsq.solve(lsq.assemble(u, v, t, 2))
    dup = lsq.solve(lsq.assemble(u + [1], v + [1], t + [4], 2))
    np.testing.assert_allclose(dup.coeffs.coeffs, base.coeffs.coeffs, atol=1e-10)


def test_rank_deficient_annulus_fit_zeroes_columns():
    pts = eccentric_points(AnnulusSpec(2.0, 6.0, 2.0, 4, 6))
    XI, ETA = pts.mapped_nodes()
    sol = lsq.fit(XI, ETA, pts.x, 6)
    # only 5 distinct xi values: xi^5, xi^6 and xi^5 eta are dependent on the grid
    assert sol.rank == 25
    assert len(sol.dropped_columns) == 3
    for m, n in sol.dropped_columns:
        assert sol.coeffs.coefficient(m, n) == 0.0


def test_all_zero_matrix_is_degenerate():
    system = lsq.DesignSystem(1, np.zeros((4, 3)), np.ones(4))
    with pytest.raises(DegenerateSystemError):
        lsq.solve(system)


def test_reported_residual_is_recomputed_exactly():
    rng = np.random.default_rng(5)
    u, v, t = rng.normal(size=(3, 40))
    system = lsq.assemble(u, v, t, 4)
    sol = lsq.solve(system)
    r = system.matrix @ sol.coeffs.coeffs - system.rhs
    assert sol.residual_norm == pytest.approx(np.sqrt(np.sum(r**2)), rel=1e-10)
    assert sol.rank <= min(system.matrix.shape)


@pytest.mark.parametrize("c_I, degree", [(0.0, 6), (2.0, 6), (2.0, 3)])
def test_residual_orthogonal_to_retained_columns(c_I, degree):
    pts = eccentric_points(AnnulusSpec(2.0, 6.0, c_I, 4, 6))
    XI, ETA = pts.mapped_nodes()
    system = lsq.assemble(XI, ETA, pts.y, degree)
    sol = lsq.solve(system)
    A = system.matrix
    kept = [k for k, mn in enumerate(system.column_index) if mn not in sol.dropped_columns]
    r = A @ sol.coeffs.coeffs - system.rhs
    bound = 1e-8 * np.linalg.norm(A) * np.linalg.norm(system.rhs)
    assert np.linalg.norm(A[:, kept].T @ r) <= bound


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_row_permutation_invariance(seed):
    rng = np.random.default_rng(seed)
    u, v, t = rng.uniform(-2, 2, size=(3, 30))
    perm = rng.permutation(30)
    a = lsq.fit(u, v, t, 4)
    b = lsq.fit(u[perm], v[perm], t[perm], 4)
    np.testing.assert_allclose(a.coeffs.coeffs, b.coeffs.coeffs, rtol=1e-8, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 5))
def test_recovers_generating_polynomial(seed, degree):
    rng = np.random.default_rng(seed)
    truth = Poly2D(degree, rng.uniform(-2, 2, monomial_count(degree)))
    n = monomial_count(degree) + 10
    u, v = rng.uniform(-1, 1, size=(2, n))
    sol = lsq.fit(u, v, truth(u, v), degree)
    np.testing.assert_allclose(sol.coeffs.coeffs, truth.coeffs, atol=1e-8)


def test_normalized_fit_agrees_on_full_rank_data():
    rng = np.random.default_rng(11)
    u, v = rng.uniform(0, 10, size=(2, 60))
    t = np.sin(u / 3) + np.cos(v / 4)
    raw = lsq.fit(u, v, t, 4)
    norm = lsq.fit(u, v, t, 4, normalize=True)
    np.testing.assert_allclose(norm.coeffs(u, v), raw.coeffs(u, v), atol=1e-9)
    assert norm.residual_norm == pytest.approx(raw.residual_norm, rel=1e-6)
