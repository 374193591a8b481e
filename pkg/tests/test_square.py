import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fuzzyuss import (
    DomainViolation,
    FuzzySystem,
    NotSquare,
    Singular,
    alpha_cut_box,
    direct_membership,
    make_triangular as T,
    membership_box,
    solve_square,
)
from fuzzyuss.square import box_contains, corners


def ratio_membership(A, tris, x):
    """1 - max over rows of the relative distance from the peak, floored at 0."""
    worst = 0.0
    for a, (l, m, r) in zip(A, tris):
        d = float(np.dot(a, x)) - m
        if d > 0:
            g = np.inf if r == m else d / (r - m)
        elif d < 0:
            g = np.inf if l == m else d / (l - m)
        else:
            g = 0.0
        worst = max(worst, g)
    return max(0.0, 1.0 - worst)


def test_example_parallelepiped(ex1):
    sol = solve_square(ex1)
    np.testing.assert_allclose(sol.center, [3, 1], atol=1e-12)
    np.testing.assert_allclose(sol.generators, [[0.6, -0.2], [0.4, 0.2]], atol=1e-12)
    assert [f.tri for f in sol.coeff_bounds] == [(-3.0, 0.0, 3.0), (-4.0, 0.0, 4.0)]


def test_example_membership(ex1):
    sol = solve_square(ex1)
    assert membership_box(sol, ex1, [3, 1]) == 1.0
    assert membership_box(sol, ex1, [5, 1]) == pytest.approx(1 / 3, abs=1e-12)
    assert membership_box(sol, ex1, [-0.4, 0.8]) == 0.0


def test_boundary_corner_has_zero_membership(ex1):
    V = corners(solve_square(ex1), 0.0)
    assert np.min(np.linalg.norm(V - [-0.4, 0.8], axis=1)) <= 1e-12
    np.testing.assert_allclose(direct_membership(ex1, V), 0.0, atol=1e-12)


def test_alpha_cut_box(ex4_block):
    sol = solve_square(ex4_block)
    c, gens, iv = alpha_cut_box(sol, 0.5)
    np.testing.assert_allclose(c, [3, 2], atol=1e-12)
    np.testing.assert_allclose(gens, [[-0.4, 0.3], [0.2, 0.1]], atol=1e-12)
    np.testing.assert_allclose(iv, [[-1, 1], [-1, 1.5]], atol=1e-12)
    with pytest.raises(DomainViolation):
        alpha_cut_box(sol, 1.5)


def test_errors():
    with pytest.raises(NotSquare):
        solve_square(FuzzySystem([[1, 2, 3]], [T(0, 1, 2)]))
    with pytest.raises(Singular):
        solve_square(FuzzySystem([[1, 2], [2, 4]], [T(0, 1, 2), T(0, 2, 4)]))


# -- invariants ---------------------------------------------------------------


@st.composite
def square_systems(draw):
    n = draw(st.integers(1, 4))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    A = rng.normal(size=(n, n)) + 2 * np.eye(n)
    if abs(np.linalg.det(A)) < 1e-2:
        A += 3 * np.eye(n)
    mid = rng.normal(size=n) * 3
    tris = [(m - rng.uniform(0.1, 5), m, m + rng.uniform(0.1, 5)) for m in mid]
    return FuzzySystem(A, [T(*t) for t in tris]), tris


@settings(max_examples=100)
@given(square_systems(), st.integers(0, 2**32 - 1))
def test_frame_and_direct_membership_agree(case, seed):
    sys, tris = case
    sol = solve_square(sys)
    rng = np.random.default_rng(seed)
    X = sol.center + rng.normal(size=(40, sys.n)) * 3
    mu_box = membership_box(sol, sys, X)
    mu_direct = direct_membership(sys, X)
    np.testing.assert_allclose(mu_box, mu_direct, atol=1e-12)
    for x, mu in zip(X[:10], mu_box[:10]):
        assert mu == pytest.approx(ratio_membership(sys.A, tris, x), abs=1e-9)


@settings(max_examples=100)
@given(square_systems())
def test_corners_map_to_interval_endpoints(case):
    sys, _ = case
    sol = solve_square(sys)
    for alpha in (0.0, 0.5, 1.0):
        V = corners(sol, alpha)
        lo, hi = sys.bounds(alpha)
        AV = V @ sys.A.T
        at_end = np.isclose(AV, lo, atol=1e-9) | np.isclose(AV, hi, atol=1e-9)
        assert at_end.all()


@settings(max_examples=100)
@given(square_systems(), st.floats(0, 1), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_cuts_are_nested(case, a, b, seed):
    sys, _ = case
    a, b = sorted((a, b))
    sol = solve_square(sys)
    X = sol.center + np.random.default_rng(seed).normal(size=(200, sys.n)) * 2
    inner = box_contains(sol, X, b)
    outer = box_contains(sol, X, a)
    assert not np.any(inner & ~outer)
