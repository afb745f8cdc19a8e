import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from acclimits.actuation import (
    PiGains,
    advance_setpoint,
    max_accel_distance,
    max_accel_speed,
    pi_step,
)
from acclimits.core import LimitModel, VehicleState, accel_bound

LIM = LimitModel(a0=0.4, beta=0.015, v_c=40.0, d0=2.5, theta=0.03)


def test_setpoint_rate_limited_up_and_down():
    # accel bound at 20 m/s is 0.7, decel bound is -3.1
    assert advance_setpoint(20.0, 30.0, 20.0, LIM, 0.1) == pytest.approx(20.07)
    assert advance_setpoint(20.0, 10.0, 20.0, LIM, 0.1) == pytest.approx(19.69)
    assert advance_setpoint(20.0, 20.05, 20.0, LIM, 0.1) == pytest.approx(20.05)


def test_setpoint_unbounded_jumps_to_target():
    assert advance_setpoint(20.0, 33.0, 20.0, None, 0.1) == 33.0


def test_setpoint_floors_at_zero():
    assert advance_setpoint(0.1, 0.0, 0.1, None, 0.1) == 0.0


def test_pi_step_hand_values():
    st_ = VehicleState(x=0.0, v=20.0, i_term=1.0)
    gains = PiGains(kp=0.9, ki=0.1, i_cap=5.0)
    a, i = pi_step(st_, 20.5, gains, None, 0.1)
    assert a == pytest.approx(0.9 * 0.5 + 0.1 * 1.0)
    assert i == pytest.approx(1.05)


def test_pi_step_clipped_and_integral_capped():
    st_ = VehicleState(x=0.0, v=20.0, i_term=4.99)
    a, i = pi_step(st_, 30.0, PiGains(), LIM, 0.1)
    assert a == pytest.approx(accel_bound(20.0, LIM))
    assert i == 5.0
    a, _ = pi_step(VehicleState(x=0.0, v=20.0), 0.0, PiGains(), LIM, 0.1)
    assert a == pytest.approx(-3.1)


def test_pi_gains_validation():
    with pytest.raises(ValueError, match="^kp:"):
        PiGains(kp=0.0)
    with pytest.raises(ValueError, match="^ki:"):
        PiGains(ki=-0.1)


def test_max_accel_speed_matches_ode():
    # forward Euler at 1e-4 s as a check on the closed form
    v, h = 10.0, 1e-4
    for _ in range(int(round(20.0 / h))):
        v += h * accel_bound(v, LIM)
    assert max_accel_speed(10.0, LIM, 20.0) == pytest.approx(v, abs=1e-3)


def test_max_accel_speed_array_and_linear_case():
    t = np.array([0.0, 1.0, 2.0])
    assert np.allclose(max_accel_speed(5.0, LimitModel(a0=0.5, beta=0.0), t), [5.0, 5.5, 6.0])
    with pytest.raises(ValueError):
        max_accel_speed(5.0, LIM, -1.0)


@given(v0=st.floats(0, 35), t=st.floats(0.01, 60), beta=st.sampled_from([0.0, 0.005, 0.015]))
def test_max_accel_distance_is_integral_of_speed(v0, t, beta):
    lim = LimitModel(a0=0.4, beta=beta)
    expected, _ = quad(lambda u: float(max_accel_speed(v0, lim, u)), 0.0, t)
    assert max_accel_distance(v0, lim, t) == pytest.approx(expected, rel=1e-9, abs=1e-9)


@given(v0=st.floats(0, 35), t=st.floats(0, 100))
def test_max_accel_speed_below_asymptote(v0, t):
    assert max_accel_speed(v0, LIM, t) <= max(v0, LIM.accel_asymptote) + 1e-9
    assert not math.isnan(max_accel_speed(v0, LIM, t))
