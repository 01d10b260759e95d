"""File formats: point CSV, mapping JSON, potential tables and polylines.

Point CSV
    Header ``xi,eta,x,y``; one row per mesh point, row-major in ``(i, j)``.
Mapping JSON
    See :func:`mapping_to_dict`. Coefficients are listed in the canonical
    graded order ``(m, n)``, term ``u**(m-n) * v**n``.
Potential CSV
    First column ``xi``, one column per ``eta`` in degrees, then ``exact``
    when a closed-form solution is available.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import ValidationError
from .mapping import (
    FitInfo, ForwardMapping, GridLines, InverseMapping, MeshPointSet, Seam,
)
from .poly2d import Poly2D

FORMAT_NAME = "curvifit-mapping"
FORMAT_VERSION = 1
COEFF_ORDER = "graded (m, n), 0 <= n <= m <= degree; term u^(m-n) v^n"

POINT_HEADER = ("xi", "eta", "x", "y")


class FormatError(ValidationError):
    pass


def num(v) -> str:
    """Shortest round-tripping text for a float."""
    return repr(float(v))


# -- point sets --------------------------------------------------------------

def points_to_csv(points: MeshPointSet) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(POINT_HEADER)
    for row in points.rows():
        w.writerow([num(v) for v in row])
    return buf.getvalue()


def read_table(text: str) -> dict[str, np.ndarray]:
    """Parse a headed numeric CSV into columns."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise FormatError("empty CSV") from None
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    cols: dict[str, list[float]] = {h: [] for h in header}
    for lineno, r in enumerate(rows, start=2):
        if len(r) != len(header):
            raise FormatError(f"line {lineno}: expected {len(header)} fields, got {len(r)}")
        for h, c in zip(header, r):
            try:
                cols[h].append(float(c))
            except ValueError:
                raise FormatError(f"line {lineno}: {c!r} is not a number") from None
    return {h: np.array(v) for h, v in cols.items()}


def points_from_csv(text: str, topology: str | None = None) -> MeshPointSet:
    cols = read_table(text)
    missing = [h for h in POINT_HEADER if h not in cols]
    if missing:
        raise FormatError(f"point CSV lacks columns {missing}")
    rows = np.column_stack([cols[h] for h in POINT_HEADER])
    return MeshPointSet.from_rows(rows, topology)


def read_points(path, topology: str | None = None) -> MeshPointSet:
    return points_from_csv(Path(path).read_text(encoding="utf-8"), topology)


# -- mappings ----------------------------------------------------------------

def _info_dict(info: FitInfo) -> dict:
    return {
        "residual_norm": info.residual_norm,
        "max_abs_residual": info.max_abs_residual,
        "rank": info.rank,
        "dropped_columns": [list(mn) for mn in info.dropped_columns],
    }


def mapping_to_dict(mapping, topology: str | None = None) -> dict:
    if isinstance(mapping, ForwardMapping):
        direction, variables = "forward", ["x", "y"]
        comps = {"xi": mapping.xi_poly, "eta": mapping.eta_poly}
        seam = mapping.seam
    elif isinstance(mapping, InverseMapping):
        direction, variables = "inverse", ["xi", "eta"]
        comps = {"x": mapping.x_poly, "y": mapping.y_poly}
        seam = None
    else:
        raise TypeError(f"not a mapping: {mapping!r}")
    doc = {
        "format": FORMAT_NAME,
        "format_version": FORMAT_VERSION,
        "direction": direction,
        "degree": mapping.degree,
        "coefficient_order": COEFF_ORDER,
        "variables": variables,
        "topology": topology,
        "coefficients": {k: p.coeffs.tolist() for k, p in comps.items()},
        "seam": None if seam is None else {
            "mode": seam.mode, "J": seam.J, "center": list(seam.center),
        },
        "fit": None,
    }
    if mapping.info is not None:
        doc["fit"] = {k: _info_dict(i) for k, i in zip(comps, mapping.info)}
    return doc


def mapping_from_dict(doc: dict):
    if doc.get("format") != FORMAT_NAME:
        raise FormatError("not a curvifit mapping document")
    if doc.get("format_version", 0) > FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {doc['format_version']}")
    degree = int(doc["degree"])
    coeffs = doc["coefficients"]
    info = None
    if doc.get("fit"):
        info = tuple(
            FitInfo(f["residual_norm"], f["max_abs_residual"], f["rank"],
                    tuple(tuple(mn) for mn in f["dropped_columns"]))
            for f in doc["fit"].values()
        )
    if doc["direction"] == "forward":
        seam = doc.get("seam")
        seam = None if seam is None else Seam(seam["mode"], int(seam["J"]), tuple(seam["center"]))
        return ForwardMapping(Poly2D(degree, coeffs["xi"]), Poly2D(degree, coeffs["eta"]), seam, info)
    if doc["direction"] == "inverse":
        return InverseMapping(Poly2D(degree, coeffs["x"]), Poly2D(degree, coeffs["y"]), info)
    raise FormatError(f"unknown direction {doc['direction']!r}")


def dump_mapping(mapping, topology: str | None = None) -> str:
    return json.dumps(mapping_to_dict(mapping, topology), indent=2) + "\n"


def load_mapping(path):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
    return mapping_from_dict(doc)


# -- tables ------------------------------------------------------------------

def columns_to_csv(columns: dict[str, np.ndarray]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(columns))
    for row in zip(*columns.values()):
        w.writerow([num(v) for v in row])
    return buf.getvalue()


def potential_to_csv(xi, eta_deg, phi, exact=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["xi"] + [f"{d:g}" for d in eta_deg]
    if exact is not None:
        header.append("exact")
    w.writerow(header)
    for i, x in enumerate(xi):
        row = [num(x)] + [num(v) for v in phi[i]]
        if exact is not None:
            row.append(num(exact[i]))
        w.writerow(row)
    return buf.getvalue()


# -- polylines ---------------------------------------------------------------

def polylines_to_csv(lines: GridLines) -> str:
    """One block per curve, blank-line separated. Each block starts with a
    comment naming the curve."""
    blocks = []
    for label, values, curves in (("xi", lines.xi_values, lines.xi_lines),
                                  ("eta", lines.eta_values, lines.eta_lines)):
        for v, pts in zip(values, curves):
            body = "\n".join(f"{num(px)},{num(py)}" for px, py in pts)
            blocks.append(f"# {label}={num(v)}\nx,y\n{body}\n")
    return "\n".join(blocks)


def polylines_to_svg(lines: GridLines, size: int = 600) -> str:
    allpts = np.concatenate(lines.xi_lines + lines.eta_lines)
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = 0.05 * size

    def tx(p):
        sx = pad + (p[:, 0] - lo[0]) / span * (size - 2 * pad)
        sy = size - pad - (p[:, 1] - lo[1]) / span * (size - 2 * pad)
        return " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(sx, sy))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for curves, colour in ((lines.xi_lines, "#1f4e9c"), (lines.eta_lines, "#b3261e")):
        for k, pts in enumerate(curves):
            width = 1.2 if k % lines.refine == 0 else 0.5
            out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="{width}" '
                       f'points="{tx(pts)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
