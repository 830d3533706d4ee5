import math

import numpy as np
import pytest

import relgs


def test_closed_form_constants():
    assert relgs.kappa_s(0.5) == pytest.approx(1.0, abs=1e-12)
    assert relgs.bessel_k(0.5, 1.0) == pytest.approx(
        math.sqrt(math.pi / 2) * math.exp(-1.0), rel=1e-12
    )
    assert relgs.profile_theta(0.5, 1.3) == pytest.approx(math.exp(-1.3), rel=1e-10)
    p = relgs.ModelParams(s=0.5, m=1.0, mu=1.0, p=3.0, N=1)
    assert relgs.kernel_constant(p) == pytest.approx(1.0 / math.pi, rel=1e-10)
    assert relgs.symbol(16.0, relgs.ModelParams(s=0.5, m=3.0, mu=1.0, p=3.0, N=1)) == 5.0


def test_params_validation():
    with pytest.raises(ValueError):
        relgs.ModelParams(s=1.5, m=0.0, mu=1.0, p=3.0, N=1)
    with pytest.raises(ValueError):
        relgs.ModelParams(s=0.5, m=0.0, mu=1.0, p=5.0, N=2)  # supercritical


def test_operator_round_trip():
    g = relgs.Grid(1, 256, 40.0)
    p = relgs.ModelParams(s=0.5, m=1.0, mu=2.0, p=3.0, N=1)
    x = g.coords()
    u = np.exp(-(x**2) / 4.0)
    f = relgs.apply_operator(u, g, p) + p.mu * u
    back = relgs.apply_resolvent(f, g, p)
    assert np.max(np.abs(back - u)) < 1e-10 * np.max(np.abs(u))


def test_nehari_projection_zeroes_J():
    g = relgs.Grid(1, 128, 20.0)
    p = relgs.ModelParams(s=0.5, m=0.5, mu=1.0, p=3.0, N=1)
    rng = np.random.default_rng(1)
    u = rng.standard_normal(128)
    t, proj = relgs.nehari_project(u, g, p)
    assert t > 0
    e = relgs.energy(proj, g, p)
    assert abs(e.nehari) < 1e-10 * e.norm_e_sq


def test_small_solve():
    g = relgs.Grid(1, 512, 40.0)
    p = relgs.ModelParams(s=0.5, m=1.0, mu=2.0, p=3.0, N=1)
    cfg = relgs.SolverConfig()
    r = relgs.solve_ground_state(p, g, cfg)
    assert r.converged
    assert r.c_m > 0
    assert r.diagnostics.one_signed
    u = r.field
    assert relgs.el_residual(u, g, p) < 1e-5 * np.max(np.abs(u))


def test_bounds_report():
    p = relgs.ModelParams(s=0.5, m=0.0, mu=2.0, p=4.0, N=1)
    rep = relgs.upper_bound_delta(p)
    assert rep.delta == pytest.approx(12005.0 / 972.0, rel=1e-12)
    A, B = relgs.weight_integrals(0.5)
    assert (A, B) == (pytest.approx(1.0), pytest.approx(1.0 / 3.0))
