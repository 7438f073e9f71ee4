import math
import os
import subprocess

import pytest

import hexpoly


def test_partition_function_unit_point():
    r = hexpoly.partition_function(1, 1.0, 1.0, 1.0)
    assert r["value"] == pytest.approx(4.0, rel=1e-12)
    assert r["sector_pfaffians"] == pytest.approx([-2.0, 2.0, 2.0, 2.0], rel=1e-12)


def test_partition_function_matches_oracle():
    z = hexpoly.partition_function(2, 0.7, 1.3, 0.9)["value"]
    b = hexpoly.brute_partition_function(2, 0.7, 1.3, 0.9)
    assert z == pytest.approx(b, rel=1e-10)


def test_classify():
    assert hexpoly.classify(0.2, 0.2, 0.2)["phase"] == "subcritical_R1"
    unit = hexpoly.classify(1.0, 1.0, 1.0)
    assert unit["phase"] == "supercritical"
    assert unit["gamma1"] == 0.0
    assert unit["gamma2"] == math.inf
    crit = hexpoly.classify(2.0, 1.0, 1.0 / 3)
    assert crit["phase"] == "critical"
    assert crit["zero_factor"] == "V"
    assert hexpoly.uvst(1.0, 1.0, 1.0) == (2.0, 2.0, 2.0, 2.0)
    assert hexpoly.phase_boundaries(2.0, 1.0) == pytest.approx((1.0 / 3, 3.0))


def test_correlation_unit_point():
    r = hexpoly.correlation(2, 1, 1.0, 1.0, 1.0)
    assert r["value"] == pytest.approx(1.0, rel=1e-12)
    assert r["separation"] == 1
    assert not r["critical_proximity"]


def test_spectral_curve():
    p = hexpoly.spectral_curve(1.0, 1.0, 1.0)
    assert p["c00"] == pytest.approx(4.0)
    assert p["cw"] == 0.0 and p["cz"] == 0.0 and p["czw"] == 0.0
    t = hexpoly.torus_min(0.2, 0.2, 0.2, grid=64)
    assert t["value"] > 0.0


def test_limits_quick():
    est = hexpoly.lambda_estimate(0.2, 0.2, 0.2, max_sep=2, grid=64)
    assert est["phase"] == "subcritical_R1"
    assert est["table"][0]["sep"] == 1
    assert est["table"][1]["m2"] < est["table"][0]["m2"]
    assert hexpoly.m_inf_squared(1, 1.0, 1.0, 0.5, grid=64) == 1.0
    v = hexpoly.fourier_kinv(0.2, 0.2, 0.2, 0, 1, 1, 5, grid=64)
    assert abs(v.imag) < 1e-10


def test_validation_errors():
    with pytest.raises(ValueError):
        hexpoly.classify(-1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        hexpoly.partition_function(0, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        hexpoly.m_inf_squared(1, 2.0, 1.0, 1.0 / 3, grid=128)


def test_cli_roundtrip():
    cli = os.environ.get("HEXPOLY_CLI")
    if not cli:
        pytest.skip("HEXPOLY_CLI not set")
    out = subprocess.run(
        [cli, "phase", "--alpha", "1", "--beta", "1", "--gamma", "1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert "1,1,1,2,2,2,2,0,inf,supercritical" in out.stdout
