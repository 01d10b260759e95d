"""Metric terms of a planar coordinate transformation.

Given the inverse map ``x(xi, eta), y(xi, eta)`` the forward derivatives
follow from inverting the Jacobian matrix, and the Laplacians of ``xi`` and
``eta`` follow from the fact that ``x`` and ``y`` are harmonic functions of
themselves::

    alpha*x_xixi - 2*beta*x_xieta + gamma*x_etaeta + J^2 (P x_xi + Q x_eta) = 0

(and likewise for ``y``), with ``alpha = x_eta^2 + y_eta^2``,
``beta = x_xi x_eta + y_xi y_eta``, ``gamma = x_xi^2 + y_xi^2``,
``P = lap(xi)``, ``Q = lap(eta)``.

Any object with a ``partials(xi, eta)`` method returning the keys produced by
:meth:`curvifit.mapping.InverseMapping.partials` can be used as a source, so
fitted polynomials and closed-form oracles share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import SingularMappingError
from .mapping import SEAM_COLUMN_OFFSET, ForwardMapping, InverseMapping, eval_inverse

DEFAULT_JAC_TOL = 1e-8

COMPONENTS = ("xi_x", "xi_y", "eta_x", "eta_y", "lap_xi", "lap_eta", "jac")


@dataclass(frozen=True)
class MetricTerms:
    xi_x: np.ndarray
    xi_y: np.ndarray
    eta_x: np.ndarray
    eta_y: np.ndarray
    lap_xi: np.ndarray
    lap_eta: np.ndarray
    jac: np.ndarray

    # coefficients of the mapped-plane Laplacian
    @property
    def g11(self):
        return self.xi_x**2 + self.xi_y**2

    @property
    def g12(self):
        return self.xi_x * self.eta_x + self.xi_y * self.eta_y

    @property
    def g22(self):
        return self.eta_x**2 + self.eta_y**2

    def as_dict(self) -> dict[str, np.ndarray]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def at(self, index) -> MetricTerms:
        return MetricTerms(*(np.asarray(getattr(self, f.name))[index] for f in fields(self)))


def _reject_singular(jac, jac_tol, coords, label):
    bad = np.abs(jac) <= jac_tol
    if np.any(bad):
        k = np.flatnonzero(np.ravel(bad))[0]
        point = tuple(float(np.ravel(np.broadcast_to(c, np.shape(jac)))[k]) for c in coords)
        raise SingularMappingError(
            f"{label} Jacobian {float(np.ravel(jac)[k]):.3g} is singular at {point}", point
        )


def metric_from_inverse(source, xi, eta, jac_tol: float = DEFAULT_JAC_TOL) -> MetricTerms:
    d = source.partials(xi, eta)
    x_xi, x_eta, y_xi, y_eta = d["x_xi"], d["x_eta"], d["y_xi"], d["y_eta"]
    jac = x_xi * y_eta - x_eta * y_xi
    _reject_singular(jac, jac_tol, (xi, eta), "inverse-map")

    alpha = x_eta**2 + y_eta**2
    beta = x_xi * x_eta + y_xi * y_eta
    gamma = x_xi**2 + y_xi**2
    j2 = jac**2
    rx = -(alpha * d["x_xixi"] - 2 * beta * d["x_xieta"] + gamma * d["x_etaeta"]) / j2
    ry = -(alpha * d["y_xixi"] - 2 * beta * d["y_xieta"] + gamma * d["y_etaeta"]) / j2
    # [x_xi x_eta; y_xi y_eta] [P; Q] = [rx; ry], determinant jac
    lap_xi = (rx * y_eta - x_eta * ry) / jac
    lap_eta = (x_xi * ry - rx * y_xi) / jac
    return MetricTerms(
        xi_x=y_eta / jac, xi_y=-x_eta / jac,
        eta_x=-y_xi / jac, eta_y=x_xi / jac,
        lap_xi=lap_xi, lap_eta=lap_eta, jac=jac,
    )


def metric_from_forward(f: ForwardMapping, x, y, jac_tol: float = DEFAULT_JAC_TOL) -> MetricTerms:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)

    def d(p, du, dv):
        return p.differentiate(du, dv)(x, y)

    xi_x, xi_y = d(f.xi_poly, 1, 0), d(f.xi_poly, 0, 1)
    eta_x, eta_y = d(f.eta_poly, 1, 0), d(f.eta_poly, 0, 1)
    lap_xi = d(f.xi_poly, 2, 0) + d(f.xi_poly, 0, 2)
    lap_eta = d(f.eta_poly, 2, 0) + d(f.eta_poly, 0, 2)
    if f.seam is not None and f.seam.mode == SEAM_COLUMN_OFFSET:
        # eta = eta* + polar angle; the angle is harmonic
        cx, cy = f.seam.center
        r2 = (x - cx) ** 2 + (y - cy) ** 2
        eta_x = eta_x - (y - cy) / r2
        eta_y = eta_y + (x - cx) / r2

    det = xi_x * eta_y - xi_y * eta_x
    # det is the reciprocal Jacobian; compare on the same scale as jac_tol
    _reject_singular(det, jac_tol, (x, y), "forward-map")
    return MetricTerms(xi_x, xi_y, eta_x, eta_y, lap_xi, lap_eta, 1.0 / det)


def consistency_check(f: ForwardMapping, g: InverseMapping, xi, eta,
                      jac_tol: float = DEFAULT_JAC_TOL) -> dict[str, float]:
    """Largest discrepancy per component between forward-fit metrics at
    ``G(xi, eta)`` and inverse-fit metrics at ``(xi, eta)``."""
    inv = metric_from_inverse(g, xi, eta, jac_tol)
    x, y = eval_inverse(g, xi, eta)
    fwd = metric_from_forward(f, x, y, jac_tol)
    return {
        name: float(np.max(np.abs(getattr(fwd, name) - getattr(inv, name))))
        for name in COMPONENTS
    }
