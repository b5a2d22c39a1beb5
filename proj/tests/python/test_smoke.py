import math

import pytest

import ecoh

ROOT2 = math.sqrt(2.0)


def bell():
    return [1 / ROOT2, 0.0, 0.0, 1 / ROOT2]


def test_bell_is_maximally_coherent():
    assert ecoh.ec(2, 2, bell()) == pytest.approx(1.0, abs=1e-9)


def test_product_state_has_no_entanglement():
    assert ecoh.ec(2, 2, [1.0, 0.0, 0.0, 0.0]) == pytest.approx(0.0, abs=1e-12)


def test_schmidt_coefficients():
    coeffs = ecoh.schmidt_coefficients(2, 2, bell())
    assert coeffs == pytest.approx([1 / ROOT2, 1 / ROOT2], abs=1e-12)


def test_full_report_identities_hold():
    report = ecoh.full_report(3, 3, ecoh.psi1(math.pi / 3))
    assert report["n"] == 3
    assert 0.0 <= report["ec"] <= 1.0
    assert report["ec"] == pytest.approx(0.9326256854541917, abs=1e-9)
    for name, value in report["identity_residuals"].items():
        assert value < 1e-8, name


def test_sweep_endpoints():
    rows = ecoh.sweep("psi2", 11)
    assert rows[0]["ec"] == pytest.approx(0.0, abs=1e-9)
    assert rows[-1]["ec"] == pytest.approx(1.0, abs=1e-9)


def test_maximize_reaches_analytic_target():
    result = ecoh.maximize_skew_coherence([[1.0, 0.0], [0.0, 0.0]], restarts=4)
    assert result["analytic_target"] == pytest.approx(0.5, abs=1e-12)
    assert result["best_value"] >= 0.4999
    assert result["best_value"] <= result["analytic_target"] + 1e-8


def test_convex_roof_on_pure_input():
    rho = [[a * b.conjugate() for b in bell()] for a in bell()]
    estimate = ecoh.convex_roof_upper_bound(rho, 2, 2, restarts=2, iterations=500)
    assert estimate["upper_bound"] == pytest.approx(1.0, abs=1e-6)
    weights = sum(member["weight"] for member in estimate["members"])
    assert weights == pytest.approx(1.0, abs=1e-8)


def test_invalid_state_raises():
    with pytest.raises(Exception):
        ecoh.ec(2, 2, [1.0, 0.0, 0.0])
