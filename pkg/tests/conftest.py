from __future__ import annotations

import pytest
from hypothesis import settings

from acclimits.core import AccParams, LeadProfile, LimitModel
from acclimits.sim import Scenario, VehicleConfig

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def platoon(n_followers: int, lead: LeadProfile, params: AccParams | None = None,
            limits: LimitModel | None = LimitModel(), actuation: str = "pi",
            **kw) -> Scenario:
    cfg = VehicleConfig(params=params or AccParams(), limits=limits, actuation=actuation)
    return Scenario(followers=(cfg,) * n_followers, lead=lead, **kw)


@pytest.fixture
def default_params():
    return AccParams()


@pytest.fixture
def default_limits():
    return LimitModel()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
