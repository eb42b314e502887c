import math

import pytest

import bfr


def test_worked_example():
    setup = bfr.TestSetup(50, 2.0)
    low = bfr.bf01(setup, bfr.NormalPrior(0.8))
    high = bfr.bf01(setup, bfr.NormalPrior(1.5))
    assert low.bf01 == pytest.approx(0.83, abs=0.01)
    assert high.bf01 == pytest.approx(1.47, abs=0.01)
    assert low.direction == bfr.Direction.FavoursH1
    assert high.direction == bfr.Direction.FavoursH0
    assert math.exp(low.log_bf01) == pytest.approx(low.bf01)


def test_flip_point_routes_agree():
    br = bfr.flip_point(2.0)
    lw = bfr.flip_point(2.0, bfr.FlipMethod.LambertW)
    assert br.k_star == pytest.approx(49.44, abs=0.01)
    assert lw.k_star == pytest.approx(br.k_star, rel=1e-9)
    assert bfr.tau_star(br.k_star, 50) == pytest.approx(0.99, abs=0.01)
    assert bfr.phi_inverse(4.0) == pytest.approx(br.k_star, rel=1e-9)


def test_reversal_pair():
    pair = bfr.reversal_pair(bfr.TestSetup(5000, 1.96))
    assert pair.tau1 < pair.tau_star < pair.tau2
    assert pair.bf1 < 1 < pair.bf2
    with pytest.raises(bfr.NotAReversal):
        bfr.validate_pair(bfr.TestSetup(50, 2.0), 1.2, 1.5)


def test_cauchy():
    setup = bfr.TestSetup(50, 2.0)
    assert bfr.bf01_cauchy(setup, bfr.CauchyPrior(0.6)).bf01 == pytest.approx(0.9, abs=0.05)
    assert bfr.cauchy_flip_scale(setup) == pytest.approx(0.707, abs=0.05)


def test_table1():
    rows = bfr.table1()
    assert [round(r.k_star, 2) for r in rows] == [5.82, 41.58, 49.44, 510.72, 8093.08]


def test_errors_map_to_python_exceptions():
    with pytest.raises(bfr.NoFlipPoint):
        bfr.flip_point(0.5)
    with pytest.raises(bfr.DomainError):
        bfr.TestSetup(10, 1.0, sigma=2.0)
    with pytest.raises(bfr.Error):
        bfr.lambert_w0(-1.0)
    assert bfr.bf_argmin_k(1.0) is None


def test_run_cli():
    code, out, _ = bfr.run_cli(["bf", "--z", "2", "--n", "50", "--scale", "0.8"])
    assert code == 0
    assert "direction=FavoursH1" in out
    code, _, err = bfr.run_cli(["bf", "--z", "2", "--n", "50", "--scale", "0"])
    assert code == 2
