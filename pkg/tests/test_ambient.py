"""Metric algebra, cross product, and curvature-tensor identities."""

import numpy as np
import pytest

from biconsurf.ambient import (AmbientSpace, FramePreconditionError, XI,
                               curvature_apply, inner, inner3, lorentz_cross,
                               on_manifold_residual, tangential_curvature_trace)

S2R = AmbientSpace(1)
H2R = AmbientSpace(-1)
E1 = np.array([1.0, 0, 0, 0])
E2 = np.array([0.0, 1, 0, 0])
E3 = np.array([0.0, 0, 1, 0])


def test_space_rejects_bad_curvature():
    with pytest.raises(ValueError):
        AmbientSpace(2)
    with pytest.raises(ValueError):
        AmbientSpace(0)


def test_inner_examples():
    assert inner(S2R, E1, E1) == 1.0
    assert inner(H2R, E3, E3) == -1.0
    null = np.array([1.0, 0, 1, 0])
    assert inner(H2R, null, null) == 0.0


def test_inner_symmetric_bilinear():
    rng = np.random.default_rng(0)
    X, Y, Z = rng.normal(size=(3, 4))
    for space in (S2R, H2R):
        assert inner(space, X, Y) == pytest.approx(inner(space, Y, X), abs=1e-15)
        assert inner(space, X, 2.0 * Y + Z) == pytest.approx(
            2.0 * inner(space, X, Y) + inner(space, X, Z), rel=1e-14)


def test_lorentz_cross_examples():
    e1, e2, e3 = np.eye(3)
    np.testing.assert_array_equal(lorentz_cross(e1, e2), [0, 0, -1])
    X = np.array([0.3, -1.2, 0.7])
    np.testing.assert_array_equal(lorentz_cross(X, X), [0, 0, 0])
    w = lorentz_cross(e1, e3)
    np.testing.assert_array_equal(w, [0, -1, 0])
    # squared Lorentz norm 1 = -<e1,e1>*<e3,e3> + 0
    assert inner3(H2R, w, w) == 1.0


def test_lorentz_cross_random_properties():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(1000, 3))
    Y = rng.normal(size=(1000, 3))
    w = lorentz_cross(X, Y)
    scale = np.max(np.abs(X)) * np.max(np.abs(Y))
    np.testing.assert_array_equal(w + lorentz_cross(Y, X), np.zeros_like(w))
    assert np.max(np.abs(inner3(H2R, w, X))) <= 1e-12 * scale
    assert np.max(np.abs(inner3(H2R, w, Y))) <= 1e-12 * scale
    lhs = inner3(H2R, w, w)
    rhs = (-inner3(H2R, X, X) * inner3(H2R, Y, Y) + inner3(H2R, X, Y) ** 2)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(rhs)))


def test_curvature_examples():
    X = np.array([0.2, -0.4, 1.0, 0.3])
    np.testing.assert_array_equal(curvature_apply(S2R, X, X, X + 1.0),
                                  np.zeros(4))
    assert np.max(np.abs(curvature_apply(S2R, E1, E2, E2) - E1)) < 1e-15


def test_curvature_kills_vertical_and_antisymmetries():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(500, 4))
    Y = rng.normal(size=(500, 4))
    Z = rng.normal(size=(500, 4))
    W = rng.normal(size=(500, 4))
    for space in (S2R, H2R):
        assert np.max(np.abs(curvature_apply(space, X, Y, XI))) <= 1e-12
        anti = curvature_apply(space, X, Y, Z) + curvature_apply(space, Y, X, Z)
        assert np.max(np.abs(anti)) <= 1e-12
        zw = inner(space, curvature_apply(space, X, Y, Z), W)
        wz = inner(space, curvature_apply(space, X, Y, W), Z)
        assert np.max(np.abs(zw + wz)) <= 1e-12 * max(1.0, np.max(np.abs(zw)))


def _adapted_frame(theta: float):
    """Orthonormal (X1, X2, eta) with <X1, xi> = cos(theta), valid in both metrics.

    Built from e1, e2, e4 only, so the x3 sign never enters.
    """
    x1 = np.cos(theta) * XI + np.sin(theta) * E1
    eta = np.sin(theta) * XI - np.cos(theta) * E1
    x2 = E2
    return x1, x2, eta


def test_trace_vanishes_for_vertical_or_horizontal_normal():
    # vertical normal (theta = pi/2): frame is horizontal
    out = tangential_curvature_trace(S2R, XI, (E2, E3))
    assert np.max(np.abs(out)) <= 1e-15
    # horizontal normal with vertical X1 (theta = 0)
    out = tangential_curvature_trace(S2R, E2, (XI, E3))
    assert np.max(np.abs(out)) <= 1e-15


def test_trace_adapted_frame_quarter_angle():
    x1, x2, eta = _adapted_frame(np.pi / 4)
    out = tangential_curvature_trace(S2R, eta, (x1, x2))
    np.testing.assert_allclose(out, 0.5 * x1, atol=1e-15)


def test_trace_matches_closed_form_generic_angles():
    rng = np.random.default_rng(3)
    for space in (S2R, H2R):
        for theta in rng.uniform(0.1, np.pi - 0.1, 25):
            x1, x2, eta = _adapted_frame(theta)
            out = tangential_curvature_trace(space, eta, (x1, x2))
            want = space.c * np.sin(theta) * np.cos(theta) * x1
            np.testing.assert_allclose(out, want, atol=1e-13)


def test_trace_rejects_skewed_frame():
    x1, x2, eta = _adapted_frame(0.7)
    with pytest.raises(FramePreconditionError):
        tangential_curvature_trace(S2R, eta, (x1, x2 + 1e-6 * x1))


def test_on_manifold_residual():
    assert on_manifold_residual(S2R, [1.0, 0, 0, 5.0]) == 0.0
    assert on_manifold_residual(H2R, [0.0, 0, 1.0, 0]) == 0.0
    assert on_manifold_residual(H2R, [0.0, 0, -1.0, 0]) == np.inf
    assert on_manifold_residual(S2R, [1.1, 0, 0, 0]) == pytest.approx(0.21)


def test_on_manifold_residual_broadcasts():
    pts = np.array([[1.0, 0, 0, 2.0], [0.0, 0, 1.0, -1.0]])
    np.testing.assert_allclose(on_manifold_residual(S2R, pts), [0.0, 0.0],
                               atol=1e-15)
