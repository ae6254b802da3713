"""Smoke tests for the Python extension: a few closed-form values, one
discretized cross-check, and the accretivity surface. Runs in seconds."""

import math

import pytest

import volterra


def test_closed_form_spectra():
    vals = volterra.pencil_spectrum("im", 2)
    assert vals == pytest.approx([math.sqrt(3) / 12, -math.sqrt(3) / 12], abs=1e-12)
    assert volterra.pencil_spectrum("re", 1) == pytest.approx([0.5], abs=1e-12)
    with pytest.raises(ValueError):
        volterra.pencil_spectrum("re", 2)

    top = volterra.imv_spectrum(3)
    assert top[0] == pytest.approx(1 / math.pi, abs=1e-14)
    assert top[1] == pytest.approx(-1 / math.pi, abs=1e-14)

    rho = volterra.solve_coth_eq()
    assert abs(1 / math.tanh(rho) - rho) < 1e-12
    assert volterra.rev2_spectrum(1)[0] == pytest.approx(1 / (4 * rho * rho), abs=1e-12)


def test_discretized_cross_check():
    disc = volterra.discretized_spectrum("im", 1, m=400)
    assert disc[0] == pytest.approx(1 / math.pi, rel=2e-2)
    with pytest.raises(ValueError):
        volterra.discretized_spectrum("v", 1, m=200)


def test_norms_surface():
    assert volterra.hs_re_im(1) == 0.5
    assert volterra.hs_re_im(2) == pytest.approx(volterra.hs_vn(2) / math.sqrt(2), abs=1e-16)
    lo, hi = volterra.opnorm_bounds("v", 1)
    assert lo < 2 / math.pi < hi
    assert volterra.op_norm_discretized("re", 1, m=300) == pytest.approx(0.5, rel=1e-2)
    assert len(volterra.known_exact_opnorms()) == 6


def test_range_surface():
    lo, hi = volterra.range_interval("re", 1, m=200)
    assert (lo, hi) == pytest.approx((0.0, 0.5), abs=1e-10)
    curve = volterra.brown_curve(64)
    assert len(curve) == 65
    t, x, y = curve[-1]
    assert (t, x, y) == (0.0, 0.5, 0.0)
    assert volterra.rayleigh_probe_re(2) == pytest.approx(-1 / 10, abs=1e-12)


def test_accretivity_surface():
    assert volterra.is_accretive(1.0, 0.0)
    assert not volterra.is_accretive(0.0, 1.0)
    verdict = volterra.certify_accretive(0.0, 1.0, m=150)
    assert verdict["predicate"] is False
    assert verdict["witness"] == "x-minus-half"
    assert verdict["witness_rayleigh"] < 0
    assert volterra.resolvent_norm(1.0, 0.0, m=150) <= 1 + 1e-6
    assert volterra.double_integral(2, m=2000) == pytest.approx(1 / 6, rel=1e-6)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
