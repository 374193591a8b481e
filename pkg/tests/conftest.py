import numpy as np
import pytest

from fuzzyuss import FuzzySystem, make_triangular as T, sample_parametric

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(items):
    for item in items:
        if getattr(getattr(item, "obj", None), "is_hypothesis_test", False):
            item.add_marker(pytest.mark.invariants)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for the terminal summary, then assert."""

    def check(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{label}: {detail}"

    return check


A5 = [[-1, 2], [3, 4], [2, -1]]
A7 = [[-1, 2, -7, 5], [3, 4, 1, -5], [2, -1, 8, -7]]

HEXAGON = np.array([[23 / 11, 24 / 11], [7 / 3, 8 / 3], [2.8, 2.9], [4, 2], [11 / 3, 4 / 3], [3.4, 1.2]])


@pytest.fixture
def ex1():
    return FuzzySystem([[1, -2], [1, 3]], [T(-2, 1, 4), T(2, 6, 10)])


@pytest.fixture
def ex4():
    return FuzzySystem([[-1, 2, 3], [3, 4, -2]], [T(-1, 1, 3), T(15, 17, 20)])


@pytest.fixture
def ex4_block():
    return FuzzySystem([[-1, 2], [3, 4]], [T(-1, 1, 3), T(15, 17, 20)])


@pytest.fixture
def ex5():
    return FuzzySystem(A5, [T(-1, 1, 3), T(15, 17, 20), T(2, 3, 6)])


@pytest.fixture
def ex5_inconsistent():
    return FuzzySystem(A5, [T(-1, 1, 3), T(15, 17, 20), T(-2, -1, 0)])


def example6_rhs(samples=1001):
    return [
        sample_parametric(lambda r: -1 + r, lambda r: 3 - 2 * r**2, samples),
        sample_parametric(lambda r: 15 + r**2, lambda r: 20 - 2 * np.sqrt(r), samples),
        sample_parametric(lambda r: 2 + r**3, lambda r: 6 - 3 * r**2, samples),
    ]


@pytest.fixture
def ex6():
    return FuzzySystem(A5, example6_rhs())


@pytest.fixture
def ex7():
    return FuzzySystem(A7, [T(-1, 1, 3), T(15, 17, 20), T(2, 3, 6)])


def same_point_set(got, want, tol):
    """Every wanted point has a match in ``got`` and the counts agree."""
    got, want = np.asarray(got), np.asarray(want)
    if got.shape != want.shape:
        return False
    d = np.linalg.norm(got[:, None, :] - want[None, :, :], axis=2)
    return bool(np.all(d.min(axis=0) <= tol) and np.all(d.min(axis=1) <= tol))
