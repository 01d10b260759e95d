"""Point-set generators and closed-form mappings used as oracles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .mapping import CARTESIAN, POLAR_CLOSED, POLAR_OPEN, TWO_PI, MeshPointSet


def uniform_nodes(lo: float, hi: float, n: int) -> np.ndarray:
    return lo + (hi - lo) * np.arange(n + 1) / n


def polar_points(r0: float, r1: float, theta0: float, theta1: float, I: int, J: int,
                 closed: bool = False) -> MeshPointSet:
    """Uniform polar grid: ``x = r cos(theta)``, ``y = r sin(theta)``."""
    if not 0 < r0 < r1:
        raise DomainError(f"need 0 < r0 < r1, got r0={r0}, r1={r1}")
    if not theta0 < theta1:
        raise DomainError("need theta0 < theta1")
    if I < 1 or J < 1:
        raise DomainError("I and J must be >= 1")
    if closed and abs((theta1 - theta0) - TWO_PI) > 1e-12:
        raise DomainError("a closed polar grid must span exactly 2*pi")
    r = uniform_nodes(r0, r1, I)
    theta = uniform_nodes(theta0, theta1, J)
    R, T = np.meshgrid(r, theta, indexing="ij")
    x, y = R * np.cos(T), R * np.sin(T)
    if closed:
        # cos/sin of 2*pi are not exactly 1/0 in floating point
        x[:, -1], y[:, -1] = x[:, 0], y[:, 0]
    return MeshPointSet(r, theta, x, y, POLAR_CLOSED if closed else POLAR_OPEN)


@dataclass(frozen=True)
class AnnulusSpec:
    """Upper half of the region between the circle ``|z| = a`` and the circle
    of radius ``R`` centred at ``(c_I, 0)``."""

    a: float
    R: float
    c_I: float = 0.0
    I: int = 4
    J: int = 6

    def __post_init__(self):
        if not 0 < self.a < self.R:
            raise DomainError(f"need 0 < a < R, got a={self.a}, R={self.R}")
        if not abs(self.c_I) < self.R - self.a:
            raise DomainError("inner circle must lie strictly inside the outer circle")
        if self.I < 1 or self.J < 1:
            raise DomainError("I and J must be >= 1")

    @property
    def concentric(self) -> bool:
        return self.c_I == 0

    @property
    def slope(self) -> float:
        """Rate at which circle centres move with radius, ``c_I / (R - a)``."""
        return self.c_I / (self.R - self.a)

    def xi_nodes(self) -> np.ndarray:
        return uniform_nodes(self.a, self.R, self.I)

    def eta_nodes(self) -> np.ndarray:
        return uniform_nodes(0.0, np.pi, self.J)


def eccentric_points(spec: AnnulusSpec) -> MeshPointSet:
    """Nested circles of radius ``xi_i`` centred at ``c_i = i c_I / I``."""
    xi, eta = spec.xi_nodes(), spec.eta_nodes()
    c = np.arange(spec.I + 1) * spec.c_I / spec.I
    XI, ETA = np.meshgrid(xi, eta, indexing="ij")
    x = c[:, None] + XI * np.cos(ETA)
    y = XI * np.sin(ETA)
    return MeshPointSet(xi, eta, x, y, POLAR_OPEN)


class EccentricMap:
    """Closed-form ``x(xi, eta), y(xi, eta)`` of the eccentric annulus grid."""

    def __init__(self, spec: AnnulusSpec, check_range: bool = True):
        self.spec = spec
        self.check_range = check_range

    def _check(self, xi, eta):
        if not self.check_range:
            return
        s, tol = self.spec, 1e-12
        if np.any(xi < s.a - tol) or np.any(xi > s.R + tol):
            raise DomainError(f"xi outside [{s.a}, {s.R}]")
        if np.any(eta < -tol) or np.any(eta > np.pi + tol):
            raise DomainError("eta outside [0, pi]")

    def __call__(self, xi, eta):
        p = self.partials(xi, eta)
        return p["x"], p["y"]

    def partials(self, xi, eta) -> dict[str, np.ndarray]:
        xi, eta = np.broadcast_arrays(np.asarray(xi, float), np.asarray(eta, float))
        self._check(xi, eta)
        k, a = self.spec.slope, self.spec.a
        c, s = np.cos(eta), np.sin(eta)
        zero = np.zeros_like(xi)
        return {
            "x": k * (xi - a) + xi * c,
            "x_xi": k + c,
            "x_eta": -xi * s,
            "x_xixi": zero,
            "x_xieta": -s,
            "x_etaeta": -xi * c,
            "y": xi * s,
            "y_xi": s,
            "y_eta": xi * c,
            "y_xixi": zero,
            "y_xieta": c,
            "y_etaeta": -xi * s,
        }


def eccentric_oracle(spec: AnnulusSpec, xi, eta) -> dict[str, np.ndarray]:
    return EccentricMap(spec).partials(xi, eta)


class PolarMap:
    """``x = xi cos(eta)``, ``y = xi sin(eta)``; no range restriction."""

    def __call__(self, xi, eta):
        return xi * np.cos(eta), xi * np.sin(eta)

    def partials(self, xi, eta) -> dict[str, np.ndarray]:
        xi, eta = np.broadcast_arrays(np.asarray(xi, float), np.asarray(eta, float))
        c, s = np.cos(eta), np.sin(eta)
        zero = np.zeros_like(xi)
        return {
            "x": xi * c, "x_xi": c, "x_eta": -xi * s,
            "x_xixi": zero, "x_xieta": -s, "x_etaeta": -xi * c,
            "y": xi * s, "y_xi": s, "y_eta": xi * c,
            "y_xixi": zero, "y_xieta": c, "y_etaeta": -xi * s,
        }


# xi, eta, x, y; the two eta = 0.27 rows per xi are transcribed as printed.
_TABLE1 = [
    (0.0, 0.0, 1.0, 2.0), (0.0, 0.25, 1.5, 3.35), (0.0, 0.5, 2.0, 4.5),
    (0.0, 0.27, 2.5, 5.75), (0.0, 1.0, 3.0, 7.0),
    (0.25, 0.0, 3.1, 1.7), (0.25, 0.25, 3.35, 3.2), (0.25, 0.5, 3.75, 4.6),
    (0.25, 0.27, 4.0, 5.9), (0.25, 1.0, 4.3, 7.25),
    (0.5, 0.0, 5.0, 1.4), (0.5, 0.25, 5.2, 3.2), (0.5, 0.5, 5.3, 4.75),
    (0.5, 0.27, 5.3, 6.1), (0.5, 1.0, 5.5, 7.5),
    (0.75, 0.0, 6.85, 1.25), (0.75, 0.25, 6.8, 3.2), (0.75, 0.5, 6.75, 4.85),
    (0.75, 0.27, 6.7, 6.25), (0.75, 1.0, 6.6, 7.75),
    (1.0, 0.0, 9.0, 1.0), (1.0, 0.25, 8.7, 3.2), (1.0, 0.5, 8.4, 5.0),
    (1.0, 0.27, 8.2, 6.4), (1.0, 1.0, 8.0, 8.0),
]


def table1_rows(corrected: bool = False) -> np.ndarray:
    rows = np.array(_TABLE1)
    if corrected:
        rows[rows == 0.27] = 0.75
    return rows


def table1_fixture(corrected: bool = False) -> MeshPointSet:
    """The 5 x 5 Cartesian-type sample grid.

    As printed, the fourth angular line is labelled 0.27, which breaks the
    uniform spacing 0, 0.25, ..., 1; ``corrected=True`` uses 0.75 instead.
    """
    return MeshPointSet.from_rows(table1_rows(corrected), topology=CARTESIAN)
