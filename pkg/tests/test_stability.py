import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import solve_ivp

from acclimits.stability import (
    Verdict,
    analyze,
    dampening_verdict,
    frequency_grid,
    ode_response,
    ode_rhs,
    ss_condition,
    tf_magnitude,
    tf_phase,
)


@pytest.mark.parametrize("k_tau,verdict", [(0.5, Verdict.STRING_STABLE),
                                           (1.99, Verdict.STRING_STABLE),
                                           (2.0, Verdict.MARGINAL),
                                           (2.01, Verdict.UNSTABLE)])
def test_ss_condition(k_tau, verdict):
    assert ss_condition(k_tau / 1.5, 1.5) is verdict


def test_ss_condition_rejects_non_positive():
    with pytest.raises(ValueError):
        ss_condition(0.0, 1.5)


def test_tf_magnitude_hand_values():
    # k=1, tau=1.5: |G|^2 = (1 + 0.25 w^2) / (1 + w^2)
    assert tf_magnitude(1.0, 1.5, 0.0) == 1.0
    assert tf_magnitude(1.0, 1.5, 1.0) == pytest.approx(np.sqrt(1.25 / 2.0))
    assert tf_magnitude(1.0, 1.5, 1e6) == pytest.approx(0.5, rel=1e-9)


def test_tf_matches_complex_evaluation():
    w = frequency_grid()
    k, tau = 0.7, 1.3
    g = ((1 - k * tau) * 1j * w + k) / (1j * w + k)
    assert np.allclose(tf_magnitude(k, tau, w), np.abs(g), rtol=1e-13)
    assert np.allclose(tf_phase(k, tau, w), np.angle(g), atol=1e-13)


def test_marginal_is_all_pass():
    for tau in (0.8, 1.5, 2.4):
        mags = tf_magnitude(2.0 / tau, tau, frequency_grid(64))
        assert np.max(np.abs(mags - 1.0)) < 1e-9


@given(k=st.floats(0.05, 3.0), tau=st.floats(0.2, 3.0), w=st.floats(1e-3, 50))
def test_gain_below_one_iff_condition(k, tau, w):
    kt = k * tau
    mag = tf_magnitude(k, tau, w)
    if kt < 1.99:
        assert mag <= 1.0 + 1e-12
    elif kt > 2.01:
        assert mag > 1.0


def test_analyze_report():
    rep = analyze(0.5, 1.5, [0.2, 1.0])
    assert rep.verdict is Verdict.STRING_STABLE
    assert rep.k_tau == 0.75
    d = rep.to_dict()
    assert d["verdict"] == "string_stable"
    assert [g[0] for g in d["gains"]] == [0.2, 1.0]
    assert len(analyze(0.5, 1.5).gains) == 64


def test_dampening_verdict():
    comps = [(1.0, 0.1), (0.5, 0.7), (0.2, 3.0)]
    assert dampening_verdict(comps, 0.5, 1.5).dampens
    assert dampening_verdict(comps, 2.0 / 1.5, 1.5).dampens
    rep = dampening_verdict(comps, 1.6, 1.5)
    assert not rep.dampens and rep.verdict is Verdict.UNSTABLE
    with pytest.raises(ValueError):
        dampening_verdict([], 0.5, 1.5)


def test_ode_response_initial_condition_and_limit():
    assert ode_response(0.5, 1.5, 2.0, 0.3, 20.0, 0.0) == pytest.approx(20.0, abs=1e-12)
    # steady state amplitude equals |G| * M
    t = np.linspace(200, 200 + 2 * np.pi / 0.3, 2000)
    v = ode_response(0.5, 1.5, 2.0, 0.3, 20.0, t)
    amp = 0.5 * (v.max() - v.min())
    assert amp == pytest.approx(2.0 * tf_magnitude(0.5, 1.5, 0.3), rel=1e-4)


@pytest.mark.parametrize("k,tau,w", [(0.3, 1.0, 0.2), (1.0, 1.5, 1.0), (1.6, 2.0, 0.5)])
def test_ode_response_against_rk45(k, tau, w):
    t = np.linspace(0.0, 60.0, 601)
    sol = solve_ivp(ode_rhs, (0.0, 60.0), [20.0], t_eval=t, args=(k, tau, 1.5, w, 20.0),
                    rtol=1e-10, atol=1e-10)
    assert np.max(np.abs(sol.y[0] - ode_response(k, tau, 1.5, w, 20.0, t))) < 1e-6
