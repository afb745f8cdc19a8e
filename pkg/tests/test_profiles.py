import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acclimits.core import LeadProfile
from acclimits.sim import generate_lead, lead_distance, lead_distance_quad


def test_constant():
    p = LeadProfile(v0=17.0)
    assert generate_lead(p, 0.0) == (17.0, 0.0)
    assert generate_lead(p, 123.4) == (17.0, 0.0)


def test_emergency_brake_reaches_half_in_2p5_s():
    p = LeadProfile(kind="emergency_brake", v0=25, v_final=12.5, a_lead=-5)
    assert generate_lead(p, 1.0) == (20.0, -5.0)
    assert generate_lead(p, 2.5) == (12.5, 0.0)
    assert generate_lead(p, 40.0) == (12.5, 0.0)


def test_ramp_reverts_after_t_end():
    p = LeadProfile(kind="ramp", v0=25, v_final=15, a_lead=2, t_start=5, t_end=15)
    assert generate_lead(p, 4.9) == (25, 0.0)
    assert generate_lead(p, 7.0) == pytest.approx((21.0, -2.0))
    assert generate_lead(p, 14.0) == pytest.approx((15.0, 0.0))
    assert generate_lead(p, 17.0) == pytest.approx((19.0, 2.0))
    assert generate_lead(p, 30.0) == pytest.approx((25.0, 0.0))


def test_stop_at_light():
    p = LeadProfile(kind="stop_at_light", v0=10, a_lead=-2, t_start=1)
    assert generate_lead(p, 3.0) == pytest.approx((6.0, -2.0))
    assert generate_lead(p, 10.0) == (0.0, 0.0)


def test_sine_sum_is_analytic_sum():
    comps = ((2.0, 0.3), (1.0, 0.7), (0.5, 1.9))
    p = LeadProfile(kind="sine_sum", v0=20, components=comps, t_start=2.0)
    for t in (2.0, 3.3, 10.0, 41.7):
        tau = t - 2.0
        v = 20 + sum(m * math.sin(w * tau) for m, w in comps)
        a = sum(m * w * math.cos(w * tau) for m, w in comps)
        assert generate_lead(p, t) == pytest.approx((v, a), abs=1e-12)


def test_sine_sum_window():
    p = LeadProfile(kind="sine_sum", v0=20, components=((2.0, 0.5),), t_start=1, t_end=5)
    assert generate_lead(p, 0.5) == (20, 0.0)
    assert generate_lead(p, 5.0) == (20, 0.0)


PROFILES = [
    LeadProfile(v0=12.0),
    LeadProfile(kind="ramp", v0=20, v_final=30, a_lead=3, t_start=5),
    LeadProfile(kind="ramp", v0=25, v_final=15, a_lead=2, t_start=5, t_end=15),
    LeadProfile(kind="emergency_brake", v0=25, v_final=12.5, a_lead=-5, t_start=3),
    LeadProfile(kind="stop_at_light", v0=15, a_lead=-2.5, t_start=1),
    # window of one full period keeps the signal continuous
    LeadProfile(kind="sine_sum", v0=25, components=((5, 0.3), (1, 0.6)), t_start=5,
                t_end=5 + 2 * math.pi / 0.3),
]


@pytest.mark.parametrize("profile", PROFILES)
@given(t0=st.floats(0, 30), span=st.floats(0.01, 30))
def test_lead_distance_matches_quadrature(profile, t0, span):
    exact = lead_distance(profile, t0, t0 + span)
    approx = lead_distance_quad(profile, t0, t0 + span, h=1e-2)
    # trapezoid error is O(h^2) away from kinks, O(h^2 * rate) at them
    assert exact == pytest.approx(approx, abs=2e-3)
