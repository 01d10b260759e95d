"""Laplace Dirichlet problem on a mapped rectangular grid.

In mapped coordinates the Laplacian reads::

    g11 phi_xixi + 2 g12 phi_xieta + g22 phi_etaeta + lap(xi) phi_xi + lap(eta) phi_eta = 0

with ``g11 = |grad xi|^2``, ``g12 = grad xi . grad eta``, ``g22 = |grad eta|^2``.
It is discretized with second-order central differences on the uniform
``(xi, eta)`` grid. ``phi`` is prescribed on the first and last ``xi`` lines;
``phi_eta = 0`` on the first and last ``eta`` lines is imposed through
mirror ghost nodes ``phi[i, -1] = phi[i, 1]`` and ``phi[i, J+1] = phi[i, J-1]``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import lsq
from .errors import DomainError, SingularMappingError, SolverError, UsageError
from .geometry import AnnulusSpec, EccentricMap, eccentric_points
from .mapping import fit_forward, fit_inverse
from .metrics import DEFAULT_JAC_TOL, MetricTerms, metric_from_forward, metric_from_inverse

METRIC_SOURCES = ("inverse-fit", "forward-fit", "analytic-oracle")


@dataclass(frozen=True)
class DirichletProblem:
    xi: np.ndarray
    eta: np.ndarray
    metric: MetricTerms
    phi_a: float
    phi_R: float
    spec: AnnulusSpec | None = None
    degree: int | None = None
    metric_source: str | None = None

    @property
    def I(self) -> int:  # noqa: E743
        return len(self.xi) - 1

    @property
    def J(self) -> int:
        return len(self.eta) - 1

    @property
    def n_unknowns(self) -> int:
        return (self.I - 1) * (self.J + 1)


def annulus_problem(spec: AnnulusSpec, degree: int = 6, phi_a: float = 0.0, phi_R: float = 1.0,
                    metric_source: str = "inverse-fit", rel_tol: float = lsq.DEFAULT_REL_TOL,
                    jac_tol: float = DEFAULT_JAC_TOL) -> DirichletProblem:
    points = eccentric_points(spec)
    XI, ETA = points.mapped_nodes()
    if metric_source == "inverse-fit":
        metric = metric_from_inverse(fit_inverse(points, degree, rel_tol), XI, ETA, jac_tol)
    elif metric_source == "forward-fit":
        f = fit_forward(points, degree, rel_tol=rel_tol)
        metric = metric_from_forward(f, points.x, points.y, jac_tol)
    elif metric_source == "analytic-oracle":
        metric = metric_from_inverse(EccentricMap(spec), XI, ETA, jac_tol)
    else:
        raise UsageError(f"unknown metric source {metric_source!r}; expected one of {METRIC_SOURCES}")
    return DirichletProblem(points.xi, points.eta, metric, float(phi_a), float(phi_R),
                            spec, degree, metric_source)


@dataclass(frozen=True)
class LaplaceSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    problem: DirichletProblem

    def unknown_index(self, i: int, j: int) -> int:
        return (i - 1) * (self.problem.J + 1) + j


@dataclass(frozen=True)
class SolutionField:
    phi: np.ndarray
    residual_norm: float


def _uniform_step(nodes, name):
    steps = np.diff(nodes)
    if np.any(steps <= 0) or np.ptp(steps) > 1e-9 * abs(steps[0]):
        raise DomainError(f"{name} nodes must be uniformly increasing")
    return float(steps.mean())


def assemble(problem: DirichletProblem) -> LaplaceSystem:
    I, J = problem.I, problem.J
    if I < 2 or J < 1:
        raise DomainError("need I >= 2 and J >= 1")
    h = _uniform_step(problem.xi, "xi")
    k = _uniform_step(problem.eta, "eta")
    m = problem.metric
    for name in ("g11", "g12", "g22"):
        bad = ~np.isfinite(getattr(m, name))
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise SingularMappingError(
                f"metric is not finite at node (i={i}, j={j})",
                (float(problem.xi[i]), float(problem.eta[j])),
            )

    n = problem.n_unknowns
    A = np.zeros((n, n))
    b = np.zeros(n)
    bc = {0: problem.phi_a, I: problem.phi_R}

    def reflect(j):
        if j < 0:
            return -j
        if j > J:
            return 2 * J - j
        return j

    def row_of(i, j):
        return (i - 1) * (J + 1) + j

    for i in range(1, I):
        for j in range(J + 1):
            c_xx = m.g11[i, j] / h**2
            c_ee = m.g22[i, j] / k**2
            c_xe = 2 * m.g12[i, j] / (4 * h * k)
            c_x = m.lap_xi[i, j] / (2 * h)
            c_e = m.lap_eta[i, j] / (2 * k)
            stencil = {
                (i, j): -2 * c_xx - 2 * c_ee,
                (i + 1, j): c_xx + c_x,
                (i - 1, j): c_xx - c_x,
                (i, j + 1): c_ee + c_e,
                (i, j - 1): c_ee - c_e,
                (i + 1, j + 1): c_xe,
                (i + 1, j - 1): -c_xe,
                (i - 1, j + 1): -c_xe,
                (i - 1, j - 1): c_xe,
            }
            r = row_of(i, j)
            for (ii, jj), w in stencil.items():
                jj = reflect(jj)
                if ii in bc:
                    b[r] -= w * bc[ii]
                else:
                    A[r, row_of(ii, jj)] += w
    return LaplaceSystem(A, b, problem)


def expand(system: LaplaceSystem, interior: np.ndarray) -> np.ndarray:
    p = system.problem
    phi = np.empty((p.I + 1, p.J + 1))
    phi[0], phi[-1] = p.phi_a, p.phi_R
    phi[1:-1] = np.asarray(interior).reshape(p.I - 1, p.J + 1)
    return phi


def operator_residual(system: LaplaceSystem, phi: np.ndarray) -> np.ndarray:
    """Discrete operator applied to a full nodal field (boundary rows included)."""
    return system.matrix @ np.asarray(phi)[1:-1].ravel() - system.rhs


def solve(system: LaplaceSystem) -> SolutionField:
    A, b = system.matrix, system.rhs
    try:
        interior = np.linalg.solve(A, b)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"discrete Laplace system is singular: {exc}") from exc
    residual = float(np.linalg.norm(A @ interior - b))
    if residual > 1e-10 * max(np.linalg.norm(b), 1e-300) and np.linalg.norm(b) > 0:
        raise SolverError(f"linear solve residual {residual:.3g} too large")
    phi = expand(system, interior)

    p = system.problem
    lo, hi = min(p.phi_a, p.phi_R), max(p.phi_a, p.phi_R)
    if phi.min() < lo - 1e-9 or phi.max() > hi + 1e-9:
        warnings.warn(
            f"discrete maximum principle violated: phi in [{phi.min():.6g}, {phi.max():.6g}], "
            f"boundary data in [{lo:.6g}, {hi:.6g}]",
            RuntimeWarning, stacklevel=2,
        )
    return SolutionField(phi, residual)


def solve_problem(problem: DirichletProblem) -> SolutionField:
    return solve(assemble(problem))


# -- exact solutions ---------------------------------------------------------

def exact_concentric(phi_a: float, phi_R: float, a: float, R: float, r):
    r = np.asarray(r, dtype=float)
    if not 0 < a < R:
        raise DomainError("need 0 < a < R")
    tol = 1e-12 * R
    if np.any(r < a - tol) or np.any(r > R + tol):
        raise DomainError(f"radius outside [{a}, {R}]")
    out = (phi_R * np.log(r / a) - phi_a * np.log(r / R)) / np.log(R / a)
    return float(out) if out.ndim == 0 else out


def exact_eccentric(phi_a: float, phi_R: float, spec: AnnulusSpec, x, y):
    """Harmonic function equal to ``phi_a`` on ``|z| = a`` and ``phi_R`` on
    ``|z - c_I| = R``.

    A Moebius map ``w = (z - p) / (z - q)`` with ``p, q`` mutually inverse
    points of both circles sends them to concentric circles about 0, where
    ``log|w|`` is the harmonic interpolant.
    """
    a, R, c = spec.a, spec.R, spec.c_I
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if c == 0:
        return exact_concentric(phi_a, phi_R, a, R, np.hypot(x, y))
    # p q = a^2 and (p - c)(q - c) = R^2
    roots = np.roots([c, R**2 - a**2 - c**2, c * a**2]).real
    p = roots[np.argmin(np.abs(roots))]
    q = a**2 / p

    def rho(zx, zy):
        return np.hypot(zx - p, zy) / np.hypot(zx - q, zy)

    r_in, r_out = rho(a, 0.0), rho(c + R, 0.0)
    return phi_a + (phi_R - phi_a) * np.log(rho(x, y) / r_in) / np.log(r_out / r_in)


@dataclass(frozen=True)
class ComparisonTable:
    xi: np.ndarray
    eta_deg: np.ndarray
    phi: np.ndarray
    exact: np.ndarray
    error: np.ndarray

    @property
    def max_error(self) -> float:
        return float(np.max(np.abs(self.error)))


def compare_with_exact(sol: SolutionField, problem: DirichletProblem) -> ComparisonTable:
    spec = problem.spec
    if spec is None or not spec.concentric:
        raise UsageError("closed-form comparison is available only for the concentric annulus")
    exact = exact_concentric(problem.phi_a, problem.phi_R, spec.a, spec.R, problem.xi)
    return ComparisonTable(
        xi=np.asarray(problem.xi), eta_deg=np.degrees(problem.eta), phi=sol.phi,
        exact=exact, error=sol.phi - exact[:, None],
    )
