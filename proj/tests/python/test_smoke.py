"""Smoke tests for the _modent python module and the CLI wiring."""

import json
import math
import os
import subprocess
import tempfile
from pathlib import Path

import pytest

import _modent as me

PI = math.pi


def test_version():
    assert me.__version__


def test_pipeline_quarter_circle():
    s = me.run_pipeline(PI / 2, modes=64)
    assert s["S_real"] == pytest.approx(2 * s["S_complex"], rel=1e-14)
    assert s["S_real"] >= s["lower_bound"]
    assert s["lower_bound"] == pytest.approx(math.log(2) / 12, rel=1e-12)
    assert s["defect_herm"] <= 1e-12
    assert len(s["mu"]) == s["dim"]
    assert all(0.0 <= mu <= 1.0 for mu in s["mu"])
    assert s["S"] == s["S_real"]  # default headline convention


def test_interval_reduction_matches_direct_angle():
    phi = me.cross_ratio_to_phi(0.2, 1.0, -0.5, 2.0)
    direct = me.run_pipeline(phi, modes=64)
    via = me.run_pipeline_interval(0.2, 1.0, -0.5, 2.0, modes=64)
    assert via["phi"] == pytest.approx(phi, abs=1e-12)
    assert via["S_real"] == pytest.approx(direct["S_real"], rel=1e-12)


def test_angle_modular_round_trip():
    for lam in (0.9, 0.5, 1e-4):
        mu = me.angle_from_modular(lam)
        assert me.modular_from_angle(mu) == pytest.approx(lam, rel=1e-12)
    assert me.modular_from_angle(0.75) == pytest.approx(1 / 3, rel=1e-14)


def test_entropies():
    assert me.subspace_entropy([0.5], "complex") == pytest.approx(0.5 * math.log(2))
    assert me.subspace_entropy([0.5], "real") == pytest.approx(math.log(2))
    assert me.fermi_entropy_normalized([0.5]) == pytest.approx(
        math.log(3) - (2 / 3) * math.log(2)
    )
    value, excluded = me.bose_entropy_normalized([0.5])
    assert value == pytest.approx(2 * math.log(2))
    assert excluded == 0
    assert me.trace_identities([0.5, 1 / 3]) == pytest.approx((3.0, 2.0))


def test_symbol_calculus():
    g = me.closed_form_g_coeffs(16)
    assert g[0] == pytest.approx(0.5)
    assert g[2] == 0
    expected_g1 = 2 / (3 * PI) * complex(1, -1)
    assert g[1] == pytest.approx(expected_g1, abs=1e-15)
    gamma = me.arc_indicator_coefficients(0.0, PI / 2, 8)
    assert gamma[0] == pytest.approx(0.25)
    assert gamma[2] == pytest.approx(-1j / (2 * PI), abs=1e-15)
    # The projection symbol takes the value 1 inside the inner arc.
    assert me.symbol_g(complex(math.cos(0.5), math.sin(0.5)), PI / 2) == pytest.approx(1.0)


def test_fock_identities():
    trace, tail = me.gamma_trace([0.5], 64)
    assert trace == pytest.approx(2.0, abs=1e-12)
    assert tail < 1e-18
    assert me.lambda_trace([0.5]) == 1.5
    assert me.gamma_entropy([0.5]) == pytest.approx(2 * math.log(2))
    assert me.lambda_entropy([0.5]) == pytest.approx(0.5 * math.log(2))
    td = me.two_dim_check(1 / 3)
    assert td["bose_trace"] == pytest.approx(1.5)
    assert td["fermi_trace"] == pytest.approx(4 / 3)


def test_hankel_values():
    svals = me.hankel_singular_values({1: 1.0 + 0j}, 4)
    assert svals[0] == pytest.approx(1.0)
    assert all(s == pytest.approx(0.0, abs=1e-14) for s in svals[1:])


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        me.run_pipeline(0.0, modes=64)
    with pytest.raises(ValueError):
        me.subspace_entropy([1.5], "real")
    with pytest.raises(ValueError):
        me.verify_suite("bogus")


def test_verify_suite_fock():
    rep = me.verify_suite("fock", seed=7)
    assert rep["pass"] is True
    assert any(c["name"] == "fermi_trace_equals_determinant" for c in rep["checks"])


@pytest.mark.skipif("MODENT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    cli = os.environ["MODENT_CLI"]
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run(
            [cli, "entropy", "--phi", str(PI / 2), "--modes", "64", "--out-dir", tmp],
            check=True,
            capture_output=True,
        )
        doc = json.loads((Path(tmp) / "entropy_phi1.570796_N64.json").read_text())
    s = me.run_pipeline(PI / 2, modes=64)
    assert doc["S_real"] == pytest.approx(s["S_real"], rel=1e-14)
    assert doc["S_fermi"] == pytest.approx(s["S_fermi"], rel=1e-14)
