import pytest

from energypile import study
from energypile.model import Tip

TIPS = (Tip.END_BEARING, Tip.FULLY_FLOATING)
KH = study.KH_VALUES

# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=TIPS, ids=lambda t: t.value)
def tip(request):
    return request.param


@pytest.fixture(params=KH, ids=lambda k: f"kh{k / 1e9:g}")
def k_h(request):
    return request.param


@pytest.fixture(params=[study.SCENARIO_I, study.SCENARIO_II], ids=lambda s: f"scenario{s.id}")
def scenario(request):
    return request.param


@pytest.fixture
def loaded_case(tip, k_h, scenario):
    return study.canonical_case(tip, k_h, load=scenario.load)
