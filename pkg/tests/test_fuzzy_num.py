import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fuzzyuss import (
    DomainViolation,
    GridViolation,
    Kind,
    MonotonicityViolation,
    OrderViolation,
    alpha_interval,
    make_piecewise_linear,
    make_triangular,
    membership_at,
    sample_parametric,
)

finite = st.floats(-100, 100, allow_nan=False)


@st.composite
def triangles(draw):
    l, m, r = sorted(draw(st.lists(finite, min_size=3, max_size=3)))
    return l, m, r


@st.composite
def sampled_numbers(draw, strict=False):
    """Random piecewise-linear fuzzy numbers on a random grid."""
    k = draw(st.integers(1, 8))
    inner = sorted(set(draw(st.lists(st.floats(0.01, 0.99), min_size=k - 1, max_size=k - 1))))
    grid = [0.0, *inner, 1.0]
    low = 0.01 if strict else 0.0
    rises = draw(st.lists(st.floats(low, 5), min_size=len(grid) - 1, max_size=len(grid) - 1))
    falls = draw(st.lists(st.floats(low, 5), min_size=len(grid) - 1, max_size=len(grid) - 1))
    start = draw(finite)
    core = draw(st.floats(0, 5))
    lower = np.concatenate([[start], start + np.cumsum(rises)])
    top = lower[-1] + core
    upper = np.concatenate([top + np.cumsum(falls[::-1])[::-1], [top]])
    return make_piecewise_linear(grid, lower, upper)


def test_make_triangular_support_and_core():
    f = make_triangular(-2, 1, 4)
    assert f.kind is Kind.TRIANGULAR
    assert f.support == (-2.0, 4.0)
    assert f.core == (1.0, 1.0)
    g = make_triangular(2, 3, 6)
    assert g.support == (2.0, 6.0) and g.core == (3.0, 3.0)


def test_degenerate_triangular_is_crisp():
    f = make_triangular(5, 5, 5)
    assert membership_at(f, 5) == 1.0
    for z in (4.999, 5.001, -5, 100):
        assert membership_at(f, z) == 0.0


@pytest.mark.parametrize("tri", [(1, 0, 2), (0, 3, 2), (4, 1, -2)])
def test_make_triangular_rejects_bad_order(tri):
    with pytest.raises(OrderViolation):
        make_triangular(*tri)


def test_sampled_example_numbers():
    # f1 = (-1 + r, 3 - 2 r^2) on three levels
    f = make_piecewise_linear([0, 0.5, 1], [-1, -0.5, 0], [3, 2.5, 1])
    assert f.kind is Kind.PIECEWISE_LINEAR
    assert f.support == (-1.0, 3.0) and f.core == (0.0, 1.0)
    # linear interpolation between levels
    assert membership_at(f, -0.75) == pytest.approx(0.25, abs=1e-15)
    assert membership_at(f, 2.75) == pytest.approx(0.25, abs=1e-15)
    assert membership_at(f, 0.5) == 1.0


@given(triangles(), finite)
def test_two_level_sampling_equals_triangular(tri, z):
    l, m, r = tri
    t = make_triangular(l, m, r)
    p = make_piecewise_linear([0, 1], [l, m], [r, m])
    assert membership_at(p, z) == membership_at(t, z)


def test_sampled_envelope_near_closed_form_inverse():
    f = sample_parametric(lambda r: 15 + r**2, lambda r: 20 - 2 * np.sqrt(r))
    # 16.66665 lies inside the core [16, 18]
    assert membership_at(f, 16.66665) == 1.0
    # on the rising side the grade is sqrt(z - 15)
    assert membership_at(f, 15.69444) == pytest.approx(math.sqrt(0.69444), abs=1e-3)
    assert membership_at(f, 15.69444) == pytest.approx(0.8333, abs=1e-3)
    # on the falling side it is ((20 - z) / 2)^2
    for z in np.linspace(18.01, 19.99, 25):
        assert membership_at(f, z) == pytest.approx(((20 - z) / 2) ** 2, abs=1e-3)


def test_membership_examples():
    assert membership_at(make_triangular(2, 3, 6), 4) == 2 / 3
    assert membership_at(make_triangular(-2, 1, 4), 3) == 1 / 3
    f3 = sample_parametric(lambda r: 2 + r**3, lambda r: 6 - 3 * r**2)
    assert membership_at(f3, 4) == pytest.approx(math.sqrt(2 / 3), abs=1e-3)


@given(sampled_numbers())
def test_core_has_full_membership(f):
    lo, hi = f.core
    assert membership_at(f, lo) == 1.0
    assert membership_at(f, hi) == 1.0
    assert membership_at(f, 0.5 * (lo + hi)) == 1.0


def test_flat_segment_takes_top_level():
    f = make_piecewise_linear([0, 1 / 3, 2 / 3, 1], [0, 1, 1, 2], [5, 4, 3, 2])
    assert membership_at(f, 1.0) == pytest.approx(2 / 3, abs=1e-15)
    g = make_piecewise_linear([0, 0.5, 1], [0, 1, 2], [4, 3, 3])
    assert membership_at(g, 3.0) == 1.0


def test_alpha_interval_examples():
    assert alpha_interval(make_triangular(-1, 1, 3), 0) == (-1.0, 3.0)
    assert alpha_interval(make_triangular(-1, 1, 3), 1) == (1.0, 1.0)
    assert alpha_interval(make_triangular(15, 17, 20), 0.5) == (16.0, 18.5)
    f = make_piecewise_linear([0, 0.5, 1], [-1, -0.5, 0], [3, 2.5, 1])
    assert alpha_interval(f, 0.25) == (-0.75, 2.75)


@pytest.mark.parametrize("alpha", [-0.01, 1.01, float("nan")])
def test_alpha_interval_domain(alpha):
    with pytest.raises(DomainViolation):
        alpha_interval(make_triangular(0, 1, 2), alpha)


@pytest.mark.parametrize(
    "grid, lower, upper",
    [
        ([0, 1], [0, 1], [3]),
        ([0], [0], [1]),
        ([0.1, 1], [0, 1], [3, 2]),
        ([0, 0.9], [0, 1], [3, 2]),
        ([0, 0.5, 0.5, 1], [0, 1, 1, 2], [5, 4, 3, 2]),
        ([0, 1], [0, float("inf")], [3, 2]),
    ],
)
def test_grid_violations(grid, lower, upper):
    with pytest.raises(GridViolation):
        make_piecewise_linear(grid, lower, upper)


@pytest.mark.parametrize(
    "lower, upper",
    [
        ([0, -1, 1], [5, 4, 3]),  # lower decreases
        ([0, 1, 2], [5, 6, 3]),  # upper increases
        ([0, 1, 3], [5, 4, 2]),  # envelopes cross
    ],
)
def test_monotonicity_violations(lower, upper):
    with pytest.raises(MonotonicityViolation):
        make_piecewise_linear([0, 0.5, 1], lower, upper)


def test_floating_noise_is_clamped():
    f = make_piecewise_linear([0, 0.5, 1], [0, 1, 1 - 1e-13], [3, 3 + 1e-13, 1 - 2e-13])
    assert np.all(np.diff(f.lower) >= 0)
    assert np.all(np.diff(f.upper) <= 0)
    assert np.all(f.lower <= f.upper)


def test_values_are_immutable():
    f = make_triangular(0, 1, 2)
    with pytest.raises(ValueError):
        f.lower[0] = 5.0


def test_shifted_keeps_kind():
    f = make_triangular(-2, 1, 4).shifted(-1)
    assert f.tri == (-3.0, 0.0, 3.0)
    g = make_piecewise_linear([0, 1], [0, 1], [3, 1]).shifted(2)
    assert g.kind is Kind.PIECEWISE_LINEAR and g.support == (2.0, 5.0)


# -- invariants ---------------------------------------------------------------


@given(sampled_numbers(strict=True), st.floats(-200, 200))
def test_positive_membership_exactly_inside_support(f, z):
    lo, hi = f.support
    mu = membership_at(f, z)
    assert 0.0 <= mu <= 1.0
    assert (mu > 0) == (lo < z < hi)
    assert (mu == 1.0) == (f.core[0] <= z <= f.core[1])


@given(sampled_numbers(strict=True))
def test_grid_round_trip(f):
    for r, lo, hi in zip(f.grid, f.lower, f.upper):
        if r < 1.0:
            assert membership_at(f, lo) == pytest.approx(r, abs=1e-9)
            assert membership_at(f, hi) == pytest.approx(r, abs=1e-9)


@given(sampled_numbers(), st.floats(0, 1), st.floats(0, 1))
def test_alpha_cuts_are_nested(f, a, b):
    a, b = sorted((a, b))
    lo_a, hi_a = alpha_interval(f, a)
    lo_b, hi_b = alpha_interval(f, b)
    assert lo_a <= lo_b + 1e-12 and hi_b <= hi_a + 1e-12
