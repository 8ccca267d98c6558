from fractions import Fraction

import pytest
from hypothesis import strategies as st

small_ints = st.integers(min_value=-60, max_value=60)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=40))
nonzero_rationals = rationals.filter(lambda r: r != 0)
ratios = rationals.filter(lambda r: r not in (0, 1, -1))


@pytest.fixture(scope="session")
def golden_record():
    from gpforge import closed_form_family
    return closed_form_family(2, 2)

from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        terminalreporter.write_line(f"{name}: {RESULTS[name]}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
