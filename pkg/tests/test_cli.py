import json

import numpy as np
import pytest

from curvifit import io as fio
from curvifit import reference as ref
from curvifit.cli import main
from curvifit.geometry import table1_fixture
from curvifit.mapping import InverseMapping, fit_inverse
from curvifit.pde import exact_concentric


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return [line for line in text.splitlines()[1:] if line]


@pytest.fixture
def table1_csv(tmp_path, capsys):
    path = tmp_path / "t1.csv"
    assert run(capsys, "gen-points", "table1", "--corrected", "-o", path)[0] == 0
    return path


@pytest.fixture
def eccentric_csv(tmp_path, capsys):
    path = tmp_path / "ecc.csv"
    run(capsys, "gen-points", "eccentric", "--a", 2, "--R", 6, "--cI", 2, "--I", 4, "--J", 6, "-o", path)
    return path


# -- gen-points --------------------------------------------------------------

@pytest.mark.parametrize("argv, rows", [
    (["polar", "--r0", 1, "--r1", 2, "--I", 4, "--J", 16, "--closed"], 85),
    (["eccentric", "--a", 2, "--R", 6, "--cI", 2, "--I", 4, "--J", 6], 35),
    (["table1", "--corrected"], 25),
])
def test_gen_points_row_counts(capsys, argv, rows):
    code, out, err = run(capsys, "gen-points", *argv)
    assert code == 0
    assert out.splitlines()[0] == "xi,eta,x,y"
    assert len(csv_rows(out)) == rows
    assert f"{rows} points" in err


def test_gen_points_invalid_geometry(capsys):
    code, _, err = run(capsys, "gen-points", "eccentric", "--a", 6, "--R", 2)
    assert code == 2 and "error" in err


def test_points_csv_round_trip(table1_csv):
    pts = fio.read_points(table1_csv)
    ref_pts = table1_fixture(corrected=True)
    np.testing.assert_array_equal(pts.x, ref_pts.x)
    np.testing.assert_array_equal(pts.eta, ref_pts.eta)


# -- fit ---------------------------------------------------------------------

def test_fit_inverse_table1(capsys, table1_csv, tmp_path):
    out = tmp_path / "g.json"
    code, _, err = run(capsys, "fit", table1_csv, "--M", 3, "-o", out)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["direction"] == "inverse" and doc["format_version"] == 1
    assert len(doc["coefficients"]) == 2
    assert all(len(c) == 10 for c in doc["coefficients"].values())
    np.testing.assert_allclose(doc["coefficients"]["x"], ref.TABLE1_INVERSE["x"], atol=1e-5)
    assert "x: max |residual|" in err


def test_fit_high_degree_warns(capsys, table1_csv):
    code, _, err = run(capsys, "fit", table1_csv, "--M", 5, "-o", "/dev/null")
    assert code == 0
    assert "warning" in err and "dropped columns" in err


def test_fit_too_few_points_is_invalid(capsys, tmp_path):
    path = tmp_path / "nine.csv"
    lines = ["xi,eta,x,y"] + [f"{i},{j},{i + 0.1 * j},{j - 0.2 * i}" for i in range(3) for j in range(3)]
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "fit", path, "--M", 3)
    assert code == 2 and "points" in err


def test_fit_malformed_csv(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("xi,eta,x\n0,0,1\n")
    assert run(capsys, "fit", path, "--M", 1)[0] == 2
    assert run(capsys, "fit", tmp_path / "missing.csv", "--M", 1)[0] == 2


def test_fit_is_deterministic(capsys, table1_csv, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "fit", table1_csv, "--M", 3, "--direction", "forward", "-o", a)
    run(capsys, "fit", table1_csv, "--M", 3, "--direction", "forward", "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_mapping_json_round_trip(tmp_path):
    g = fit_inverse(table1_fixture(True), 3)
    path = tmp_path / "g.json"
    path.write_text(fio.dump_mapping(g, "cartesian"))
    again = fio.load_mapping(path)
    assert isinstance(again, InverseMapping)
    np.testing.assert_array_equal(again.x_poly.coeffs, g.x_poly.coeffs)
    assert again.info == g.info


def test_forward_closed_mapping_keeps_seam(capsys, tmp_path):
    pts = tmp_path / "c.csv"
    run(capsys, "gen-points", "polar", "--I", 5, "--J", 20, "--closed", "-o", pts)
    out = tmp_path / "f.json"
    assert run(capsys, "fit", pts, "--direction", "forward", "--M", 7, "-o", out)[0] == 0
    f = fio.load_mapping(out)
    assert f.seam.mode == "column-offset" and f.seam.J == 20


# -- eval --------------------------------------------------------------------

def test_eval_reproduces_fit_residuals(capsys, table1_csv, tmp_path):
    mapping = tmp_path / "g.json"
    _, _, fit_err = run(capsys, "fit", table1_csv, "--M", 3, "-o", mapping)
    code, out, eval_err = run(capsys, "eval", mapping, "--points", table1_csv)
    assert code == 0
    fit_lines = [ln for ln in fit_err.splitlines() if "max |residual|" in ln]
    eval_lines = [ln for ln in eval_err.splitlines() if "max |residual|" in ln]
    assert [ln.split(",")[0] for ln in fit_lines] == [ln.split(",")[0] for ln in eval_lines]
    cols = fio.read_table(out)
    g = fio.load_mapping(mapping)
    assert np.abs(cols["res_x"]).max() == g.info[0].max_abs_residual


def test_eval_identity_echoes_input(capsys, tmp_path):
    path = tmp_path / "id.json"
    path.write_text(fio.dump_mapping(InverseMapping.identity()))
    code, out, _ = run(capsys, "eval", path, "--grid", 0, 1, 4, -1, 1, 2)
    cols = fio.read_table(out)
    np.testing.assert_array_equal(cols["x"], cols["xi"])
    np.testing.assert_array_equal(cols["y"], cols["eta"])


def test_eval_derivative_beyond_degree_is_zero(capsys, table1_csv, tmp_path):
    mapping = tmp_path / "g.json"
    run(capsys, "fit", table1_csv, "--M", 3, "-o", mapping)
    code, out, _ = run(capsys, "eval", mapping, "--grid", 0, 1, 2, 0, 1, 2,
                       "-c", "x_xixixixi", "-c", "y_xixietaeta")
    assert code == 0
    cols = fio.read_table(out)
    assert (cols["x_xixixixi"] == 0).all() and (cols["y_xixietaeta"] == 0).all()


def test_eval_table_layout_matches_published_derivative_table(capsys, eccentric_csv, tmp_path):
    mapping = tmp_path / "ecc.json"
    run(capsys, "fit", eccentric_csv, "--M", 6, "-o", mapping)
    code, out, _ = run(capsys, "eval", mapping, "--grid", 2, 6, 4, 0, 180, 6, "--degrees",
                       "-c", "x_eta", "--layout", "table")
    assert code == 0
    cols = fio.read_table(out)
    assert list(cols) == ["eta", "xi=2", "xi=3", "xi=4", "xi=5", "xi=6"]
    np.testing.assert_array_equal(cols["eta"], ref.ETA_DEG)
    table = np.column_stack([cols[k] for k in list(cols)[1:]])
    np.testing.assert_allclose(table, ref.ECCENTRIC_TABLES["x_eta"]["num"], atol=1e-3)


def test_eval_rejects_unknown_component(capsys, table1_csv, tmp_path):
    mapping = tmp_path / "g.json"
    run(capsys, "fit", table1_csv, "--M", 3, "-o", mapping)
    assert run(capsys, "eval", mapping, "--grid", 0, 1, 2, 0, 1, 2, "-c", "x_xy")[0] == 2


# -- grid --------------------------------------------------------------------

def test_grid_polylines_and_svg(capsys, eccentric_csv, tmp_path):
    mapping = tmp_path / "ecc.json"
    run(capsys, "fit", eccentric_csv, "--M", 6, "-o", mapping)
    svg = tmp_path / "g.svg"
    code, out, _ = run(capsys, "grid", mapping, "--points", eccentric_csv, "--svg", svg)
    assert code == 0
    blocks = [b for b in out.strip().split("\n\n") if b]
    assert len(blocks) == 9 + 13
    assert svg.read_text().startswith("<svg")


# -- solve -------------------------------------------------------------------

def test_solve_concentric(capsys):
    code, out, err = run(capsys, "solve", "--a", 2, "--R", 6, "--cI", 0, "--I", 4, "--J", 6,
                         "--M", 6, "--phiA", 0, "--phiR", 1)
    assert code == 0
    cols = fio.read_table(out)
    assert "exact" in cols
    phi = np.column_stack([v for k, v in cols.items() if k not in ("xi", "exact")])
    assert np.abs(phi - exact_concentric(0, 1, 2, 6, cols["xi"])[:, None]).max() <= 0.01
    assert float(err.split("=")[1].split()[0]) <= 0.01


def test_solve_eccentric(capsys):
    code, out, err = run(capsys, "solve", "--cI", 2)
    cols = fio.read_table(out)
    assert code == 0 and "exact" not in cols
    assert len(cols["xi"]) == 5 and len(cols) == 1 + 7


def test_solve_constant(capsys):
    code, out, _ = run(capsys, "solve", "--phiA", 0.7, "--phiR", 0.7)
    cols = fio.read_table(out)
    np.testing.assert_allclose(np.column_stack(list(cols.values())[1:]), 0.7, atol=1e-12)


def test_solve_singular_metric_exits_numerical(capsys):
    code, _, err = run(capsys, "solve", "--jac-tol", 1e6)
    assert code == 3 and "singular" in err


def test_environment_overrides_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("CURVIFIT_JAC_TOL", "1e6")
    assert run(capsys, "solve")[0] == 3
    monkeypatch.setenv("CURVIFIT_JAC_TOL", "lots")
    assert run(capsys, "solve")[0] == 2


def test_solve_is_deterministic(capsys):
    assert run(capsys, "solve", "--cI", 2)[1] == run(capsys, "solve", "--cI", 2)[1]


# -- verify ------------------------------------------------------------------

@pytest.mark.parametrize("suite", ["table1", "concentric", "eccentric", "full-circle", "sector"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert "[PASS" in out and "FAIL" not in out
