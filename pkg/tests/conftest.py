import pytest

from kronecker_coslice.core_category import (
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
)
from kronecker_coslice.window import WindowConfig


def P(t, shift=0):
    return ShiftedIndec(Preprojective(t), shift)


def I(s, shift=0):
    return ShiftedIndec(Preinjective(s), shift)


def R(d, shift=0, tube="0"):
    return ShiftedIndec(Regular(tube, d), shift)


def obj(*xs):
    return DObject(xs)


@pytest.fixture(scope="session")
def window():
    return WindowConfig()


@pytest.fixture(scope="session")
def small_window():
    return WindowConfig(max_shift=2, max_pp_index=4, max_pi_index=4, max_reg_length=2, max_p=3, n_random_sums=30)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
