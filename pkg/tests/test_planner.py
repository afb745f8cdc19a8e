import pytest
from hypothesis import given
from hypothesis import strategies as st

from acclimits.core import AccParams, equilibrium_spacing
from acclimits.planner import PlannerInput, gain_at, target_speed


def test_target_at_equilibrium_is_lead_speed():
    p = AccParams()
    assert target_speed(PlannerInput(32.0, 20.0, 20.0), p) == pytest.approx(20.0)


def test_target_hand_values():
    p = AccParams(k_v=0.5, tau=1.5, delta=2.0, v_set=40.0)
    # 20 + 0.5 * (40 - 30 - 2) = 24
    assert target_speed(PlannerInput(40.0, 20.0, 20.0), p) == pytest.approx(24.0)
    # 20 + 0.5 * (20 - 32) = 14
    assert target_speed(PlannerInput(20.0, 20.0, 22.0), p) == pytest.approx(14.0)


def test_target_clipped():
    p = AccParams(v_set=30.0)
    assert target_speed(PlannerInput(500.0, 25.0, 25.0), p) == 30.0
    assert target_speed(PlannerInput(0.0, 2.0, 25.0), p) == 0.0


def test_gain_schedule():
    p = AccParams(k_v=0.3, gain_table=((10.0, 0.5), (25.0, 0.8)))
    assert gain_at(5.0, p) == 0.3
    assert gain_at(10.0, p) == 0.5
    assert gain_at(24.9, p) == 0.5
    assert gain_at(30.0, p) == 0.8
    # 10 + 0.8 * (50 - 1.5 * 10 - 2)
    assert target_speed(PlannerInput(50.0, 10.0, 30.0), p) == pytest.approx(36.4)


@given(v_lead=st.floats(0, 40), ds=st.floats(-20, 20), k=st.floats(0.05, 3),
       tau=st.floats(0.5, 3))
def test_target_monotone_in_gap(v_lead, ds, k, tau):
    p = AccParams(k_v=k, tau=tau, v_set=100.0)
    s = equilibrium_spacing(v_lead, p)
    lo = target_speed(PlannerInput(s + ds, v_lead, v_lead), p)
    hi = target_speed(PlannerInput(s + ds + 1.0, v_lead, v_lead), p)
    assert hi >= lo
    assert 0.0 <= lo <= 100.0
