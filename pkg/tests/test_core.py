import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acclimits.core import (
    AccParams,
    LeadProfile,
    LimitModel,
    VehicleState,
    accel_bound,
    decel_bound,
    equilibrium_spacing,
)


def test_equilibrium_spacing_values():
    p = AccParams(k_v=0.5, tau=1.5, delta=2.0)
    assert equilibrium_spacing(20.0, p) == 32.0
    assert equilibrium_spacing(0.0, p) == 2.0


@pytest.mark.parametrize("field,value", [("k_v", 0.0), ("k_v", -1.0), ("tau", 0.0),
                                         ("delta", -0.1), ("v_set", 0.0)])
def test_acc_params_rejects(field, value):
    with pytest.raises(ValueError, match=f"^{field}:"):
        AccParams(**{field: value})


def test_gain_table_sorted_and_validated():
    p = AccParams(gain_table=[(20, 0.8), (10, 0.6)])
    assert p.gain_table == ((10.0, 0.6), (20.0, 0.8))
    with pytest.raises(ValueError, match="gain_table"):
        AccParams(gain_table=[(10, -0.1)])


def test_marginal_constructor():
    p = AccParams.marginal(tau=1.5)
    assert p.k_v * p.tau == pytest.approx(2.0, rel=1e-15)
    assert AccParams.from_k_tau(0.5, tau=2.0).k_v == 0.25


def test_limit_bounds_at_reference_speed():
    lim = LimitModel(a0=0.4, beta=0.015, v_c=40, d0=2.5, theta=0.03)
    assert accel_bound(40.0, lim) == pytest.approx(0.4)
    assert accel_bound(20.0, lim) == pytest.approx(0.7)
    assert decel_bound(40.0, lim) == pytest.approx(-2.5)
    assert decel_bound(20.0, lim) == pytest.approx(-3.1)
    assert lim.accel_asymptote == pytest.approx(40.0 + 0.4 / 0.015)


def test_unbounded_limits():
    assert accel_bound(10.0, None) == math.inf
    assert decel_bound(10.0, None) == -math.inf
    assert LimitModel(beta=0.0).accel_asymptote == math.inf


@pytest.mark.parametrize("field,value", [("a0", 0.0), ("beta", -0.01), ("d0", 0.0),
                                         ("theta", -1.0), ("v_c", 0.0)])
def test_limit_model_rejects(field, value):
    with pytest.raises(ValueError, match=f"^{field}:"):
        LimitModel(**{field: value})


@given(v=st.floats(0, 60), a0=st.floats(0.1, 2), beta=st.floats(0, 0.05))
def test_accel_bound_non_increasing_in_speed(v, a0, beta):
    lim = LimitModel(a0=a0, beta=beta)
    assert accel_bound(v + 1.0, lim) <= accel_bound(v, lim) + 1e-12


def test_vehicle_state_rejects_reverse():
    with pytest.raises(ValueError, match="^v:"):
        VehicleState(x=0.0, v=-0.1)


def test_lead_profile_validation():
    with pytest.raises(ValueError, match="^kind:"):
        LeadProfile(kind="zigzag")
    with pytest.raises(ValueError, match="^components:"):
        LeadProfile(kind="sine_sum", v0=5, components=[(3, 0.2), (3, 0.5)])
    with pytest.raises(ValueError, match="^v_final:"):
        LeadProfile(kind="ramp", v0=20)
    with pytest.raises(ValueError, match="^a_lead:"):
        LeadProfile(kind="ramp", v0=20, v_final=10, a_lead=0)
    with pytest.raises(ValueError, match="^t_end:"):
        LeadProfile(kind="ramp", v0=20, v_final=10, t_start=5, t_end=4)
    assert LeadProfile(kind="sine_sum", v0=6, components=[[3, 0.2], [3, 0.5]]).components == (
        (3.0, 0.2), (3.0, 0.5))
