"""Vector algebra and curvature of the ambient product spaces.

The two ambients are S2xR, viewed inside R4 with the Euclidean metric, and
H2xR, viewed inside L3xR with the metric dx1^2 + dx2^2 - dx3^2 + dx4^2.  A
single integer flag ``c`` (the curvature of the 2-dimensional factor) selects
between them; the vertical unit direction is pinned to the 4th coordinate
axis.  All operations are pure functions on plain float arrays and broadcast
over leading dimensions, so grids of vectors can be processed in one call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Unit vector tangent to the R factor (4th coordinate axis).
XI = np.array([0.0, 0.0, 0.0, 1.0])


class FramePreconditionError(ValueError):
    """A frame handed to a curvature operation is not orthonormal."""


@dataclass(frozen=True)
class AmbientSpace:
    """The product M2(c) x R with c = +1 (spherical) or c = -1 (hyperbolic)."""

    c: int

    def __post_init__(self) -> None:
        if self.c not in (1, -1):
            raise ValueError(f"factor curvature c must be 1 or -1, got {self.c!r}")

    @property
    def weights4(self) -> np.ndarray:
        """Diagonal of the 4-metric: the x3 term is negated when c = -1."""
        return np.array([1.0, 1.0, float(self.c), 1.0])

    @property
    def weights3(self) -> np.ndarray:
        """Diagonal of the factor 3-metric."""
        return np.array([1.0, 1.0, float(self.c)])


def inner(space: AmbientSpace, X, Y):
    """Ambient 4-metric pairing; broadcasts over leading axes."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    return np.sum(X * Y * space.weights4, axis=-1)


def inner3(space: AmbientSpace, X, Y):
    """Factor 3-metric pairing (Lorentzian when c = -1)."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    return np.sum(X * Y * space.weights3, axis=-1)


def lorentz_cross(X, Y) -> np.ndarray:
    """Cross product adapted to the Lorentz 3-metric.

    Componentwise: (x2 y3 - x3 y2, x3 y1 - x1 y3, x2 y1 - x1 y2).  The result
    is orthogonal to both arguments in the Lorentz pairing and satisfies
    <XxY, XxY>_L = -<X,X>_L <Y,Y>_L + <X,Y>_L^2.
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    return np.stack(
        [
            X[..., 1] * Y[..., 2] - X[..., 2] * Y[..., 1],
            X[..., 2] * Y[..., 0] - X[..., 0] * Y[..., 2],
            X[..., 1] * Y[..., 0] - X[..., 0] * Y[..., 1],
        ],
        axis=-1,
    )


def curvature_apply(space: AmbientSpace, X, Y, Z) -> np.ndarray:
    """Curvature tensor R(X,Y)Z of the product metric, as a 4-vector.

    The formula is evaluated algebraically; the caller is responsible for
    feeding vectors tangent to the product at a common point.  It is
    antisymmetric in (X, Y) and annihilates the vertical direction.
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    Z = np.asarray(Z, dtype=float)
    yz = inner(space, Y, Z)[..., None]
    xz = inner(space, X, Z)[..., None]
    x4 = X[..., 3:4]
    y4 = Y[..., 3:4]
    z4 = Z[..., 3:4]
    out = yz * X - xz * Y - y4 * z4 * X + x4 * z4 * Y + (xz * y4 - yz * x4) * XI
    return float(space.c) * out


def tangential_curvature_trace(space: AmbientSpace, eta, frame,
                               check: bool = True) -> np.ndarray:
    """Tangential part of trace R(., eta)(.) over an orthonormal tangent frame.

    ``frame`` is a pair (X1, X2) of unit vectors orthogonal to each other and
    to the unit normal ``eta``; the trace is summed over the pair and
    projected back onto its span.  For the adapted frame of a vertical-angle
    surface this equals c*sin(theta)*cos(theta)*X1.
    """
    eta = np.asarray(eta, dtype=float)
    e1 = np.asarray(frame[0], dtype=float)
    e2 = np.asarray(frame[1], dtype=float)
    if check:
        worst = max(
            float(np.max(np.abs(inner(space, e1, e1) - 1.0))),
            float(np.max(np.abs(inner(space, e2, e2) - 1.0))),
            float(np.max(np.abs(inner(space, e1, e2)))),
            float(np.max(np.abs(inner(space, eta, eta) - 1.0))),
            float(np.max(np.abs(inner(space, eta, e1)))),
            float(np.max(np.abs(inner(space, eta, e2)))),
        )
        if not worst < 1e-9:
            raise FramePreconditionError(
                f"frame/normal not orthonormal: worst Gram residual {worst:.3e}"
            )
    total = curvature_apply(space, e1, eta, e1) + curvature_apply(space, e2, eta, e2)
    return (inner(space, total, e1)[..., None] * e1
            + inner(space, total, e2)[..., None] * e2)


def on_manifold_residual(space: AmbientSpace, P):
    """Distance-style membership residual |x1^2 + x2^2 + c*x3^2 - c|.

    For c = -1 the model of H2 lives on the upper sheet x3 > 0; points with
    x3 <= 0 are reported as ``inf`` so that any tolerance check fails.
    """
    P = np.asarray(P, dtype=float)
    q = P[..., 0] ** 2 + P[..., 1] ** 2 + space.c * P[..., 2] ** 2
    res = np.abs(q - space.c)
    if space.c == -1:
        res = np.where(P[..., 2] <= 0.0, np.inf, res)
    if res.ndim == 0:
        return float(res)
    return res
