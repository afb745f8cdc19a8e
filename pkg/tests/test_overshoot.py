import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acclimits.actuation import max_accel_speed
from acclimits.core import AccParams, LeadProfile, LimitModel, accel_bound, equilibrium_spacing
from acclimits.overshoot import (
    NoSolutionError,
    max_spacing_at_t1,
    overshoot_speed,
    solve_step_overshoot,
    time_to_lead_speed,
)

LIM = LimitModel()
RAMP = LeadProfile(kind="ramp", v0=20, v_final=30, a_lead=3, t_start=5)


@given(v0=st.floats(0, 30), dv=st.floats(0.01, 20), beta=st.sampled_from([0.0, 0.015]))
def test_time_to_lead_speed_inverts_trajectory(v0, dv, beta):
    lim = LimitModel(beta=beta)
    target = v0 + dv
    if target >= lim.accel_asymptote:
        with pytest.raises(NoSolutionError):
            time_to_lead_speed(v0, target, lim)
        return
    t1 = time_to_lead_speed(v0, target, lim)
    assert max_accel_speed(v0, lim, t1) == pytest.approx(target, rel=1e-9)


def test_time_to_lead_speed_errors():
    with pytest.raises(NoSolutionError):
        time_to_lead_speed(25.0, 20.0, LIM)
    with pytest.raises(NoSolutionError):
        time_to_lead_speed(25.0, 80.0, LIM)


def test_spacing_gain_exact_vs_quadrature():
    t1 = 5 + time_to_lead_speed(20, 30, LIM)
    exact = max_spacing_at_t1(RAMP, 20.0, LIM, 5.0, t1)
    quad = max_spacing_at_t1(RAMP, 20.0, LIM, 5.0, t1, quadrature=True)
    assert exact == pytest.approx(quad, abs=1e-5)
    with pytest.raises(ValueError):
        max_spacing_at_t1(RAMP, 20.0, LIM, 5.0, 5.0)


def test_quadratic_root_by_hand():
    p = AccParams(k_v=0.5, tau=1.5, delta=2.0)
    v_p = 30.0
    s_t1 = equilibrium_spacing(v_p, p) + 20.0
    a = accel_bound(v_p, LIM)
    k = 0.5
    # relative: (k a / 2) x^2 + a x - 20 k = 0
    x = (-a + math.sqrt(a * a + 4 * (k * a / 2) * 20 * k)) / (k * a)
    sol = overshoot_speed(s_t1, v_p, p, LIM, "relative")
    assert sol.dT == pytest.approx(x, rel=1e-12)
    assert sol.v_os == pytest.approx(v_p + a * x, rel=1e-12)
    # full: b = a + k v_p
    b = a + k * v_p
    x = (-b + math.sqrt(b * b + 4 * (k * a / 2) * 20 * k)) / (k * a)
    assert overshoot_speed(s_t1, v_p, p, LIM, "full").dT == pytest.approx(x, rel=1e-12)


def test_zero_excess_means_no_overshoot():
    p = AccParams()
    sol = overshoot_speed(equilibrium_spacing(30.0, p), 30.0, p, LIM)
    assert sol.dT == 0.0 and sol.v_os == 30.0


def test_gap_below_equilibrium_has_no_solution():
    with pytest.raises(NoSolutionError):
        overshoot_speed(10.0, 30.0, AccParams(), LIM)
    with pytest.raises(ValueError):
        overshoot_speed(100.0, 30.0, AccParams(), LIM, variant="exact")


def test_step_overshoot_frozen_values():
    sol = solve_step_overshoot(RAMP, AccParams(), LIM)
    assert sol.t1 == pytest.approx(21.077470454459206, rel=1e-9)
    assert sol.s_t1 == pytest.approx(92.49275000316254, rel=1e-9)
    assert sol.v_os == pytest.approx(36.05905196261899, rel=1e-9)
    assert solve_step_overshoot(RAMP, AccParams(), LIM, "full").v_os == pytest.approx(
        30.794388613100562, rel=1e-9)
    assert solve_step_overshoot(RAMP, AccParams(), LIM, "truncated").v_os == pytest.approx(
        30.82275174288433, rel=1e-9)


@given(k=st.floats(0.2, 1.3), excess=st.floats(0.1, 100))
def test_relative_variant_is_largest(k, excess):
    p = AccParams(k_v=k)
    s = equilibrium_spacing(28.0, p) + excess
    rel = overshoot_speed(s, 28.0, p, LIM, "relative").v_os
    full = overshoot_speed(s, 28.0, p, LIM, "full").v_os
    truncated = overshoot_speed(s, 28.0, p, LIM, "truncated").v_os
    assert rel >= full - 1e-9 and truncated >= full - 1e-9


def test_solve_rejects_non_rising_profiles():
    with pytest.raises(ValueError):
        solve_step_overshoot(LeadProfile(kind="ramp", v0=20, v_final=10), AccParams(), LIM)
    slow = LeadProfile(kind="ramp", v0=20, v_final=30, a_lead=0.2, t_start=5)
    with pytest.raises(NoSolutionError):
        solve_step_overshoot(slow, AccParams(), LIM)
    brief = LeadProfile(kind="ramp", v0=20, v_final=30, a_lead=3, t_start=5, t_end=10)
    with pytest.raises(NoSolutionError):
        solve_step_overshoot(brief, AccParams(), LIM)
