"""Least-squares fitting of polynomial coefficients.

The design matrix is solved with a column-pivoted QR factorization. Columns
whose pivot falls below ``rel_tol`` times the largest pivot are treated as
numerically dependent: their coefficients are set to exactly zero and they
are reported in ``dropped_columns``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DegenerateSystemError, SolvabilityError
from .poly2d import Poly2D, affine_substitute, basis_matrix, monomial_count, monomial_indices

DEFAULT_REL_TOL = 1e-10


@dataclass(frozen=True)
class DesignSystem:
    degree: int
    matrix: np.ndarray
    rhs: np.ndarray

    @property
    def column_index(self) -> list[tuple[int, int]]:
        return monomial_indices(self.degree)


@dataclass(frozen=True)
class LsqSolution:
    coeffs: Poly2D
    residual_norm: float
    rank: int
    dropped_columns: frozenset = field(default_factory=frozenset)
    max_abs_residual: float = 0.0


def assemble(u, v, target, degree: int) -> DesignSystem:
    u = np.asarray(u, dtype=float).reshape(-1)
    v = np.asarray(v, dtype=float).reshape(-1)
    target = np.asarray(target, dtype=float).reshape(-1)
    if not (u.size == v.size == target.size):
        raise ValueError("u, v and target must have the same length")
    needed = monomial_count(degree)
    if u.size < needed:
        raise SolvabilityError(
            f"{u.size} points cannot determine {needed} coefficients of a "
            f"degree-{degree} polynomial; the number of points must be at "
            f"least (M+1)(M+2)/2"
        )
    return DesignSystem(degree, basis_matrix(degree, u, v), target)


def solve(system: DesignSystem, rel_tol: float = DEFAULT_REL_TOL) -> LsqSolution:
    A, b = system.matrix, system.rhs
    n_cols = A.shape[1]
    col_norms = np.linalg.norm(A, axis=0)
    if not np.any(col_norms > 0):
        raise DegenerateSystemError("design matrix is identically zero")

    # Equilibrate columns so the pivot threshold compares like with like;
    # raw monomials span many orders of magnitude.
    live = col_norms > 0
    scale = np.where(live, col_norms, 1.0)
    As = A / scale

    Q, R, perm = scipy.linalg.qr(As, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    rank = int(np.sum(diag > rel_tol * diag[0]))

    z = scipy.linalg.solve_triangular(R[:rank, :rank], (Q.T @ b)[:rank])
    x = np.zeros(n_cols)
    x[perm[:rank]] = z / scale[perm[:rank]]

    index = system.column_index
    dropped = frozenset(index[k] for k in perm[rank:])
    residual = A @ x - b
    return LsqSolution(
        coeffs=Poly2D(system.degree, x),
        residual_norm=float(np.linalg.norm(residual)),
        rank=rank,
        dropped_columns=dropped,
        max_abs_residual=float(np.max(np.abs(residual))) if residual.size else 0.0,
    )


def fit(u, v, target, degree: int, rel_tol: float = DEFAULT_REL_TOL,
        normalize: bool = False) -> LsqSolution:
    """Fit ``target ~ p(u, v)`` with ``p`` of total degree ``degree``.

    With ``normalize`` the inputs are centred and scaled to [-1, 1] before the
    solve and the polynomial is re-expanded in raw coordinates afterwards.
    Dropped-column reporting then refers to the normalized basis.
    """
    u = np.asarray(u, dtype=float).reshape(-1)
    v = np.asarray(v, dtype=float).reshape(-1)
    target = np.asarray(target, dtype=float).reshape(-1)
    if not normalize:
        return solve(assemble(u, v, target, degree), rel_tol)

    def centre(w):
        lo, hi = float(w.min()), float(w.max())
        half = (hi - lo) / 2 or 1.0
        return (lo + hi) / 2, half

    cu, su = centre(u)
    cv, sv = centre(v)
    scaled = solve(assemble((u - cu) / su, (v - cv) / sv, target, degree), rel_tol)
    coeffs = affine_substitute(scaled.coeffs, cu, su, cv, sv)
    residual = coeffs(u, v) - target
    return LsqSolution(
        coeffs=coeffs,
        residual_norm=float(np.linalg.norm(residual)),
        rank=scaled.rank,
        dropped_columns=scaled.dropped_columns,
        max_abs_residual=float(np.max(np.abs(residual))),
    )
