"""Forward and inverse polynomial mappings between physical and mapped planes.

The forward mapping sends physical points ``(x, y)`` to mapped coordinates
``(xi, eta)``; the inverse mapping goes the other way. Both are fitted by
least squares from a structured set of point correspondences.

Closed polar grids need special treatment on the forward side: the first and
last angular columns are the same physical points but carry targets ``0`` and
``2*pi``. Two seam modes are provided:

``column-offset``
    Replace the angular targets by ``eta_j - 2*pi*j/J`` before fitting and add
    the column offset back after evaluation. At grid nodes the column index
    ``j`` is known; elsewhere the offset is taken from the polar angle of the
    point about the grid centre, i.e. ``j`` is treated as a continuous column
    position.
``drop-duplicate``
    Fit the angle on columns ``0..J-1`` only and resolve the result to the
    ``2*pi`` branch nearest the polar angle of the point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import lsq
from .errors import DomainError, SeamError, UsageError
from .poly2d import Poly2D

TWO_PI = 2.0 * np.pi

CARTESIAN = "cartesian"
POLAR_CLOSED = "polar_closed"
POLAR_OPEN = "polar_open"
TOPOLOGIES = (CARTESIAN, POLAR_CLOSED, POLAR_OPEN)

SEAM_COLUMN_OFFSET = "column-offset"
SEAM_DROP_DUPLICATE = "drop-duplicate"
SEAM_MODES = (SEAM_COLUMN_OFFSET, SEAM_DROP_DUPLICATE)


@dataclass(frozen=True, eq=False)
class MeshPointSet:
    """Correspondences ``(xi[i], eta[j]) <-> (x[i, j], y[i, j])``.

    ``xi`` and ``eta`` must each hold distinct values. Closed polar sets must
    span exactly ``2*pi`` in ``eta`` with coincident first and last columns.
    """

    xi: np.ndarray
    eta: np.ndarray
    x: np.ndarray
    y: np.ndarray
    topology: str = CARTESIAN

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=float).reshape(-1)
        eta = np.asarray(self.eta, dtype=float).reshape(-1)
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        for name, arr in (("xi", xi), ("eta", eta), ("x", x), ("y", y)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if xi.size < 2 or eta.size < 2:
            raise DomainError("a mesh needs at least 2 nodes in each direction")
        if x.shape != (xi.size, eta.size) or y.shape != x.shape:
            raise DomainError(
                f"x and y must have shape {(xi.size, eta.size)}, got {x.shape} and {y.shape}"
            )
        if len(np.unique(xi)) != xi.size or len(np.unique(eta)) != eta.size:
            raise DomainError("mapped-plane coordinates must be distinct")
        if not all(np.all(np.isfinite(a)) for a in (xi, eta, x, y)):
            raise DomainError("mesh contains non-finite values")
        if self.topology not in TOPOLOGIES:
            raise DomainError(f"unknown topology {self.topology!r}")
        if self.topology == POLAR_CLOSED:
            check_closed_seam(self)

    @property
    def I(self) -> int:  # noqa: E743
        return self.xi.size - 1

    @property
    def J(self) -> int:
        return self.eta.size - 1

    @property
    def size(self) -> int:
        return self.x.size

    def mapped_nodes(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.xi, self.eta, indexing="ij")

    def rows(self) -> np.ndarray:
        """``(P, 4)`` array of ``xi, eta, x, y``, row-major in ``(i, j)``."""
        XI, ETA = self.mapped_nodes()
        return np.column_stack([XI.ravel(), ETA.ravel(), self.x.ravel(), self.y.ravel()])

    @classmethod
    def from_rows(cls, rows, topology: str | None = None) -> MeshPointSet:
        """Rebuild a point set from ``xi, eta, x, y`` rows in row-major order.

        With ``topology=None`` a closed polar seam is detected automatically,
        otherwise the set is labelled cartesian.
        """
        rows = np.asarray(rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != 4:
            raise DomainError("expected rows of (xi, eta, x, y)")
        n = rows.shape[0]
        first = rows[:, 0] == rows[0, 0]
        n_eta = int(np.argmin(first)) if not np.all(first) else n
        if n_eta < 2 or n % n_eta:
            raise DomainError("rows do not form a structured (I+1) x (J+1) grid")
        grid = rows.reshape(n // n_eta, n_eta, 4)
        xi = grid[:, 0, 0]
        eta = grid[0, :, 1]
        if not (np.all(grid[:, :, 0] == xi[:, None]) and np.all(grid[:, :, 1] == eta[None, :])):
            raise DomainError("rows do not form a tensor-product grid in (xi, eta)")
        if topology is None:
            topology = CARTESIAN
            candidate = cls(xi, eta, grid[:, :, 2], grid[:, :, 3], CARTESIAN)
            try:
                check_closed_seam(candidate)
                topology = POLAR_CLOSED
            except SeamError:
                pass
        return cls(xi, eta, grid[:, :, 2], grid[:, :, 3], topology)


def check_closed_seam(points: MeshPointSet) -> None:
    span = points.eta[-1] - points.eta[0]
    if abs(span - TWO_PI) > 1e-12:
        raise SeamError(f"closed polar grid must span 2*pi in eta, spans {span!r}")
    gap = max(np.max(np.abs(points.x[:, 0] - points.x[:, -1])),
              np.max(np.abs(points.y[:, 0] - points.y[:, -1])))
    if gap > 1e-9:
        raise SeamError(f"first and last angular columns differ by {gap:.3g}")


@dataclass(frozen=True)
class Seam:
    mode: str
    J: int
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.mode not in SEAM_MODES:
            raise UsageError(f"unknown seam mode {self.mode!r}; expected one of {SEAM_MODES}")


@dataclass(frozen=True)
class FitInfo:
    residual_norm: float
    max_abs_residual: float
    rank: int
    dropped_columns: tuple[tuple[int, int], ...] = ()


def _info(sol: lsq.LsqSolution) -> FitInfo:
    return FitInfo(sol.residual_norm, sol.max_abs_residual, sol.rank,
                   tuple(sorted(sol.dropped_columns)))


@dataclass(frozen=True)
class ForwardMapping:
    xi_poly: Poly2D
    eta_poly: Poly2D
    seam: Seam | None = None
    info: tuple[FitInfo, FitInfo] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.xi_poly.degree != self.eta_poly.degree:
            raise DomainError("forward mapping components must share one degree")

    @property
    def degree(self) -> int:
        return self.xi_poly.degree

    @classmethod
    def identity(cls) -> ForwardMapping:
        return cls(Poly2D(1, [0, 1, 0]), Poly2D(1, [0, 0, 1]))


@dataclass(frozen=True)
class InverseMapping:
    x_poly: Poly2D
    y_poly: Poly2D
    info: tuple[FitInfo, FitInfo] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.x_poly.degree != self.y_poly.degree:
            raise DomainError("inverse mapping components must share one degree")

    @property
    def degree(self) -> int:
        return self.x_poly.degree

    @classmethod
    def identity(cls) -> InverseMapping:
        return cls(Poly2D(1, [0, 1, 0]), Poly2D(1, [0, 0, 1]))

    def partials(self, xi, eta) -> dict[str, np.ndarray]:
        """Values and all first and second partials at ``(xi, eta)``."""
        out = {}
        for name, p in (("x", self.x_poly), ("y", self.y_poly)):
            out[name] = p(xi, eta)
            for suffix, (du, dv) in _SECOND_ORDER.items():
                out[f"{name}_{suffix}"] = p.differentiate(du, dv)(xi, eta)
        return out


_SECOND_ORDER = {
    "xi": (1, 0), "eta": (0, 1),
    "xixi": (2, 0), "xieta": (1, 1), "etaeta": (0, 2),
}


class ForwardValue(NamedTuple):
    xi: np.ndarray
    eta: np.ndarray
    eta_raw: np.ndarray


# -- seam handling -----------------------------------------------------------

def seam_adjust(points: MeshPointSet) -> np.ndarray:
    """Angular targets with the column offset ``2*pi*j/J`` removed."""
    if points.topology != POLAR_CLOSED:
        raise UsageError("seam adjustment applies only to closed polar point sets")
    j = np.arange(points.J + 1)
    return points.eta - (TWO_PI / points.J) * j


def seam_restore(eta_star, j, J: int):
    j = np.asarray(j)
    if np.any(j < 0) or np.any(j > J):
        raise DomainError(f"column index outside 0..{J}")
    return eta_star + (TWO_PI / J) * j


def _seam_center(points: MeshPointSet) -> tuple[float, float]:
    return float(points.x[:, :-1].mean()), float(points.y[:, :-1].mean())


# -- fitting -----------------------------------------------------------------

def fit_forward(points: MeshPointSet, degree: int, seam_mode: str = SEAM_COLUMN_OFFSET,
                rel_tol: float = lsq.DEFAULT_REL_TOL, normalize: bool = False) -> ForwardMapping:
    XI, ETA = points.mapped_nodes()
    x, y = points.x, points.y
    seam = None
    if points.topology == POLAR_CLOSED:
        check_closed_seam(points)
        seam = Seam(seam_mode, points.J, _seam_center(points))
        if seam_mode == SEAM_COLUMN_OFFSET:
            ETA = np.broadcast_to(seam_adjust(points), ETA.shape)
        else:
            XI, ETA, x, y = XI[:, :-1], ETA[:, :-1], x[:, :-1], y[:, :-1]
    sx = lsq.fit(x, y, XI, degree, rel_tol, normalize)
    se = lsq.fit(x, y, ETA, degree, rel_tol, normalize)
    return ForwardMapping(sx.coeffs, se.coeffs, seam, (_info(sx), _info(se)))


def fit_inverse(points: MeshPointSet, degree: int, rel_tol: float = lsq.DEFAULT_REL_TOL,
                normalize: bool = False) -> InverseMapping:
    XI, ETA = points.mapped_nodes()
    sx = lsq.fit(XI, ETA, points.x, degree, rel_tol, normalize)
    sy = lsq.fit(XI, ETA, points.y, degree, rel_tol, normalize)
    return InverseMapping(sx.coeffs, sy.coeffs, (_info(sx), _info(sy)))


# -- evaluation --------------------------------------------------------------

def polar_angle(x, y, center=(0.0, 0.0)):
    """Angle of ``(x, y)`` about ``center`` in ``[0, 2*pi)``."""
    ang = np.arctan2(np.asarray(y) - center[1], np.asarray(x) - center[0])
    return np.where(ang < 0, ang + TWO_PI, ang)


def eval_forward(f: ForwardMapping, x, y, j=None) -> ForwardValue:
    """Evaluate the forward mapping.

    ``j`` gives the angular column index of grid nodes; it is only consulted
    for closed polar mappings fitted in ``column-offset`` seam mode.
    """
    xi = f.xi_poly(x, y)
    raw = f.eta_poly(x, y)
    seam = f.seam
    if seam is None:
        return ForwardValue(xi, raw, raw)
    if seam.mode == SEAM_COLUMN_OFFSET:
        if j is not None:
            eta = seam_restore(raw, j, seam.J)
        else:
            eta = raw + polar_angle(x, y, seam.center)
    else:
        angle = polar_angle(x, y, seam.center)
        eta = raw + TWO_PI * np.round((angle - raw) / TWO_PI)
    return ForwardValue(xi, eta, raw)


def eval_inverse(g: InverseMapping, xi, eta) -> tuple[np.ndarray, np.ndarray]:
    return g.x_poly(xi, eta), g.y_poly(xi, eta)


# -- diagnostics -------------------------------------------------------------

@dataclass(frozen=True)
class RoundTripReport:
    """Errors of ``F(G(xi, eta))`` against ``(xi, eta)`` and of
    ``G(F(x, y))`` against ``(x, y)`` over the training grid."""

    mapped_max: tuple[float, float]
    mapped_rms: tuple[float, float]
    physical_max: tuple[float, float]
    physical_rms: tuple[float, float]

    @property
    def max_error(self) -> float:
        return max(*self.mapped_max, *self.physical_max)


def round_trip_report(points: MeshPointSet, f: ForwardMapping, g: InverseMapping) -> RoundTripReport:
    XI, ETA = points.mapped_nodes()
    J_idx = np.broadcast_to(np.arange(points.J + 1), XI.shape)

    gx, gy = eval_inverse(g, XI, ETA)
    back = eval_forward(f, gx, gy, j=J_idx)
    d_mapped = (np.abs(back.xi - XI), np.abs(back.eta - ETA))

    fwd = eval_forward(f, points.x, points.y, j=J_idx)
    px, py = eval_inverse(g, fwd.xi, fwd.eta)
    d_phys = (np.abs(px - points.x), np.abs(py - points.y))

    def stats(pair):
        return (tuple(float(np.max(d)) for d in pair),
                tuple(float(np.sqrt(np.mean(d**2))) for d in pair))

    mm, mr = stats(d_mapped)
    pm, pr = stats(d_phys)
    return RoundTripReport(mm, mr, pm, pr)


@dataclass(frozen=True)
class GridLines:
    """Images of refined coordinate lines in the physical plane.

    ``xi_lines[k]`` is the curve ``xi = xi_values[k]`` sampled along eta;
    ``eta_lines[k]`` is the curve ``eta = eta_values[k]`` sampled along xi.
    Each curve is an ``(n, 2)`` array of physical points.
    """

    xi_values: np.ndarray
    eta_values: np.ndarray
    xi_lines: list
    eta_lines: list
    refine: int

    def training_mask(self, axis: str) -> np.ndarray:
        values = self.xi_values if axis == "xi" else self.eta_values
        return np.arange(values.size) % self.refine == 0


def refine_nodes(nodes, refine: int) -> np.ndarray:
    nodes = np.asarray(nodes, dtype=float)
    if refine < 1:
        raise DomainError("refine factor must be >= 1")
    t = np.arange(refine) / refine
    inner = (nodes[:-1, None] + np.diff(nodes)[:, None] * t[None, :]).ravel()
    return np.append(inner, nodes[-1])


def generalization_grid(g: InverseMapping, xi_nodes, eta_nodes, refine: int = 2) -> GridLines:
    """Evaluate ``g`` on coordinate lines refined ``refine``-fold.

    With ``refine=1`` the lines pass exactly through the training nodes; with
    larger factors extra lines are inserted between training lines.
    """
    xs = refine_nodes(xi_nodes, refine)
    es = refine_nodes(eta_nodes, refine)
    XI, ETA = np.meshgrid(xs, es, indexing="ij")
    X, Y = eval_inverse(g, XI, ETA)
    pts = np.stack([X, Y], axis=-1)
    return GridLines(xs, es, [pts[i] for i in range(xs.size)],
                     [pts[:, j] for j in range(es.size)], refine)
