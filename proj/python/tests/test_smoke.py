import math

import numpy as np
import pytest

import maplace


def test_placements():
    assert maplace.maxvar_apv() == [-5.0, -4.5, -4.0, 4.0, 4.5, 5.0]
    assert maplace.ufa_apv() == [-5.0, -3.0, -1.0, 1.0, 3.0, 5.0]
    assert maplace.position_moment(maplace.uhw_apv()) == pytest.approx(4.375)
    with pytest.raises(maplace.ConstraintError):
        maplace.symmetric_apv(0.5, 4.3)


def test_steering_and_precoder():
    r = maplace.maxvar_apv()
    a = maplace.steering_vector(10.0, r)
    assert a.shape == (6,)
    assert np.allclose(np.abs(a), 1.0)
    f = maplace.optimal_precoder(10.0, r)
    assert f.shape == (6, 2)
    assert np.trace(f @ f.conj().T).real == pytest.approx(1.0)
    with pytest.raises(maplace.DomainError):
        maplace.steering_vector(90.0, r)


def test_crb_forms_agree():
    r = maplace.symmetric_apv(1.0, 2.0)
    f = maplace.optimal_precoder(25.0, r)
    assert maplace.crb_general(r, f, 25.0) == pytest.approx(maplace.crb_closed_form(r, 25.0), rel=1e-9)
    expect = 1.0 / (4 * math.pi**2 * 122.5)
    assert maplace.crb_closed_form(maplace.maxvar_apv(), 0.0) == pytest.approx(expect, rel=1e-12)


def test_scc_and_feasibility():
    r = maplace.ufa_apv()
    assert maplace.scc(10.0, 10.0, r) == pytest.approx(1.0)
    feasible, side = maplace.scc_feasible(r, 0.0, 20.0, 10.0)
    assert feasible and side <= 0.5
    assert not maplace.scc_feasible(maplace.maxvar_apv(), 0.0, 20.0, 10.0)[0]
    width, full = maplace.half_power_beamwidth(r, 10.0)
    assert 0 < width < 180 and not full


def test_optimize_and_sweep():
    out = maplace.optimize_placement(grid_step=0.25)
    assert out["best"] is not None
    assert out["best"] != (0.5, 0.5)
    assert 0 < out["feasible_fraction"] < 1
    assert len(out["cells"]) == 16 * 16
    free = maplace.optimize_placement(kappa_scc=1.0, grid_step=0.25)
    assert free["best"] == (0.5, 0.5)
    rows = maplace.sweep_region_size([0.0, 20.0], grid_step=0.25)
    assert {row["solution"] for row in rows} == {"opt", "maxvar", "ufa", "uhw", "opt_pinned"}


def test_monte_carlo_is_reproducible():
    r = maplace.maxvar_apv()
    a = maplace.monte_carlo(r, 10.0, 20.0, trials=25, seed=3)
    b = maplace.monte_carlo(r, 10.0, 20.0, trials=25, seed=3)
    assert a["errors_deg"] == b["errors_deg"]
    assert a["rmse_deg"] > 0 and a["sqrt_crb_deg"] > 0


def test_run_command(tmp_path):
    code, files, summary = maplace.run_command(
        "optimize", {"output.directory": str(tmp_path), "grid.step": "0.25", "output.timestamp": "false"}
    )
    assert code == 0
    assert files and files[0].endswith("optimize.csv")
    assert "optimal APV" in summary
    with pytest.raises(maplace.ConfigError):
        maplace.run_command("optimize", {"region.kappa_scc": "2", "output.directory": str(tmp_path)})
