"""Bivariate polynomials in the raw monomial basis of total degree M.

Coefficients are stored in graded order::

    (m, n) = (0,0), (1,0), (1,1), (2,0), (2,1), (2,2), ...

where index ``(m, n)`` multiplies ``u**(m-n) * v**n``. This is the column
order of the least-squares design matrix: 1, u, v, u^2, uv, v^2, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DomainError


def monomial_count(degree: int) -> int:
    if degree < 0:
        raise DomainError(f"polynomial degree must be >= 0, got {degree}")
    return (degree + 1) * (degree + 2) // 2


def monomial_indices(degree: int) -> list[tuple[int, int]]:
    """All (m, n) pairs with 0 <= n <= m <= degree, in canonical order."""
    monomial_count(degree)
    return [(m, n) for m in range(degree + 1) for n in range(m + 1)]


def index_of(m: int, n: int) -> int:
    if not 0 <= n <= m:
        raise DomainError(f"invalid monomial index ({m}, {n})")
    return m * (m + 1) // 2 + n


def basis_matrix(degree: int, u, v) -> np.ndarray:
    """Evaluate every monomial at the points ``(u, v)``.

    ``u`` and ``v`` broadcast against each other; the result has shape
    ``broadcast_shape + (monomial_count(degree),)``. ``0**0`` is 1.
    """
    count = monomial_count(degree)
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise DomainError("monomial basis requested at a non-finite point")
    upow = np.ones(u.shape + (degree + 1,))
    vpow = np.ones(v.shape + (degree + 1,))
    for k in range(1, degree + 1):
        upow[..., k] = upow[..., k - 1] * u
        vpow[..., k] = vpow[..., k - 1] * v
    out = np.empty(u.shape + (count,))
    for k, (m, n) in enumerate(monomial_indices(degree)):
        out[..., k] = upow[..., m - n] * vpow[..., n]
    return out


def basis_row(degree: int, u: float, v: float) -> np.ndarray:
    return basis_matrix(degree, float(u), float(v))


@dataclass(frozen=True, eq=False)
class Poly2D:
    """Polynomial ``sum_{m<=M, n<=m} c_mn u^(m-n) v^n``."""

    degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float).reshape(-1)
        if coeffs.size != monomial_count(self.degree):
            raise DomainError(
                f"degree {self.degree} needs {monomial_count(self.degree)} "
                f"coefficients, got {coeffs.size}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree: int = 0) -> Poly2D:
        return cls(degree, np.zeros(monomial_count(degree)))

    @classmethod
    def from_terms(cls, degree: int, terms: dict[tuple[int, int], float]) -> Poly2D:
        """Build from a sparse ``{(m, n): coefficient}`` mapping."""
        coeffs = np.zeros(monomial_count(degree))
        for (m, n), c in terms.items():
            if m > degree:
                raise DomainError(f"term ({m}, {n}) exceeds degree {degree}")
            coeffs[index_of(m, n)] = c
        return cls(degree, coeffs)

    def coefficient(self, m: int, n: int) -> float:
        if m > self.degree:
            return 0.0
        return float(self.coeffs[index_of(m, n)])

    def terms(self) -> dict[tuple[int, int], float]:
        return {mn: float(c) for mn, c in zip(monomial_indices(self.degree), self.coeffs)}

    def __call__(self, u, v):
        return basis_matrix(self.degree, u, v) @ self.coeffs

    def differentiate(self, order_u: int = 0, order_v: int = 0) -> Poly2D:
        return differentiate(self, order_u, order_v)

    def __add__(self, other: Poly2D) -> Poly2D:
        if not isinstance(other, Poly2D):
            return NotImplemented
        degree = max(self.degree, other.degree)
        return Poly2D(degree, _padded(self, degree) + _padded(other, degree))

    def __mul__(self, scalar: float) -> Poly2D:
        return Poly2D(self.degree, self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __sub__(self, other: Poly2D) -> Poly2D:
        return self + (-1.0) * other

    def __eq__(self, other):
        if not isinstance(other, Poly2D):
            return NotImplemented
        degree = max(self.degree, other.degree)
        return bool(np.array_equal(_padded(self, degree), _padded(other, degree)))

    def __repr__(self):
        return f"Poly2D(degree={self.degree}, coeffs={self.coeffs.tolist()!r})"


def _padded(p: Poly2D, degree: int) -> np.ndarray:
    out = np.zeros(monomial_count(degree))
    out[: p.coeffs.size] = p.coeffs
    return out


def evaluate(p: Poly2D, u, v):
    return p(u, v)


def _falling(k: int, order: int) -> int:
    out = 1
    for t in range(order):
        out *= k - t
    return out


def differentiate(p: Poly2D, order_u: int = 0, order_v: int = 0) -> Poly2D:
    """Exact partial derivative of ``p``.

    The result has degree ``p.degree - order_u - order_v``; when that is
    negative the zero polynomial of degree 0 is returned.
    """
    if order_u < 0 or order_v < 0:
        raise DomainError("derivative orders must be non-negative")
    total = order_u + order_v
    if total == 0:
        return p
    new_degree = p.degree - total
    if new_degree < 0:
        return Poly2D.zero(0)
    coeffs = np.zeros(monomial_count(new_degree))
    for (m, n), c in zip(monomial_indices(p.degree), p.coeffs):
        pu, pv = m - n, n
        if pu < order_u or pv < order_v or c == 0.0:
            continue
        factor = _falling(pu, order_u) * _falling(pv, order_v)
        coeffs[index_of(m - total, pv - order_v)] += c * factor
    return Poly2D(new_degree, coeffs)


def affine_substitute(p: Poly2D, u_shift: float, u_scale: float,
                      v_shift: float, v_scale: float) -> Poly2D:
    """Return ``q`` with ``q(u, v) = p((u - u_shift)/u_scale, (v - v_shift)/v_scale)``.

    Used to re-express a fit made in normalized coordinates in the raw basis.
    """
    degree = p.degree
    coeffs = np.zeros(monomial_count(degree))
    # (u - a)^k / s^k = sum_r C(k, r) u^r (-a)^(k-r) / s^k
    for (m, n), c in zip(monomial_indices(degree), p.coeffs):
        if c == 0.0:
            continue
        ku, kv = m - n, n
        for ru in range(ku + 1):
            cu = comb(ku, ru) * (-u_shift) ** (ku - ru) / u_scale**ku
            for rv in range(kv + 1):
                cv = comb(kv, rv) * (-v_shift) ** (kv - rv) / v_scale**kv
                coeffs[index_of(ru + rv, rv)] += c * cu * cv
    return Poly2D(degree, coeffs)
