"""Frame construction, explicit parametrizations, and patch export.

Each case of the classification has a constant frame with pinned Gram
relations and an explicit map Phi(u, v) over a profile curve:

* sphere:      ((cos v C1 + sin v C2 + a C1xC2)/sqrt(a^2+1), Int cos theta)
* hyp a^2>1:   ((cos v C1 + sin v C2 + a C1(x)C2)/sqrt(a^2-1), Int cos theta)
* hyp a^2<1:   ((e^v C1 + e^-v C2 + 2a C1(x)C2)/sqrt(1-a^2), Int cos theta)
* hyp a=s=+-1: (e^{s I} (C0 + C1 v + C2 v^2) + C2 e^{-s I}, Int cos theta)
  with I = Int sin theta,

where (x) is the Lorentz cross product.  Synthesis evaluates the map on a
uniform (u, v) grid and validates that every node sits on the product
manifold (upper sheet when c = -1).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

import numpy as np

from . import ambient
from .ambient import AmbientSpace
from .profile import ProfileCurve


class SynthesisError(ValueError):
    """Synthesis inputs are inconsistent or produce off-manifold nodes."""


class CaseMismatchError(SynthesisError):
    """Curve and frame belong to different cases."""


class CaseTag(enum.Enum):
    SPHERE = "sphere"
    HYP_AGT1 = "hyp_agt1"
    HYP_ALT1 = "hyp_alt1"
    HYP_SPECIAL_PLUS = "hyp_special+1"
    HYP_SPECIAL_MINUS = "hyp_special-1"

    @property
    def c(self) -> int:
        return 1 if self is CaseTag.SPHERE else -1

    @property
    def sign(self) -> int:
        if self is CaseTag.HYP_SPECIAL_PLUS:
            return 1
        if self is CaseTag.HYP_SPECIAL_MINUS:
            return -1
        return 0

    @property
    def is_special(self) -> bool:
        return self.sign != 0

    @property
    def is_periodic(self) -> bool:
        """Whether v enters through cos/sin (v-translation = frame rotation)."""
        return self in (CaseTag.SPHERE, CaseTag.HYP_AGT1)


def _cross(case: CaseTag, C1: np.ndarray, C2: np.ndarray) -> np.ndarray:
    if case is CaseTag.SPHERE:
        return np.cross(C1, C2)
    return ambient.lorentz_cross(C1, C2)


@dataclass(frozen=True)
class FrameVectors:
    """Constant frame of a parametrization case, with the derived cross product.

    Sphere and the two a^2 != 1 hyperbolic cases carry (C1, C2); the special
    branch carries (C0, C1, C2).  ``cross`` caches C1 x C2 in the metric of
    the case.
    """

    case: CaseTag
    C1: np.ndarray
    C2: np.ndarray
    C0: np.ndarray | None = None

    @property
    def cross(self) -> np.ndarray:
        return _cross(self.case, self.C1, self.C2)


def canonical_frame(case: CaseTag) -> FrameVectors:
    """Standard frame for each case, oriented so synthesized x3 > 0 when c = -1."""
    e1 = np.array([1.0, 0.0, 0.0])
    e2 = np.array([0.0, 1.0, 0.0])
    if case is CaseTag.SPHERE:
        return FrameVectors(case, C1=e1, C2=e2)
    if case is CaseTag.HYP_AGT1:
        # C1 x C2 = (0, 0, 1), timelike with squared norm -1.
        return FrameVectors(case, C1=e2, C2=e1)
    if case is CaseTag.HYP_ALT1:
        return FrameVectors(case, C1=np.array([0.5, 0.0, 0.5]),
                            C2=np.array([-0.5, 0.0, 0.5]))
    return FrameVectors(case, C1=e2, C2=np.array([-0.5, 0.0, 0.5]),
                        C0=np.array([0.5, 0.0, 0.5]))


def _gram_relations(frame: FrameVectors):
    """(vector, vector, required value) triples defining the case's Gram data."""
    case = frame.case
    C1, C2 = frame.C1, frame.C2
    if case is CaseTag.SPHERE:
        return [(C1, C1, 1.0), (C2, C2, 1.0), (C1, C2, 0.0)], 1
    cr = frame.cross
    if case is CaseTag.HYP_AGT1:
        return [(C1, C1, 1.0), (C2, C2, 1.0), (C1, C2, 0.0), (cr, cr, -1.0)], -1
    if case is CaseTag.HYP_ALT1:
        return [(C1, C1, 0.0), (C2, C2, 0.0), (C1, C2, -0.5), (cr, cr, 0.25)], -1
    C0 = frame.C0
    return [(C0, C0, 0.0), (C2, C2, 0.0), (C1, C1, 1.0),
            (C0, C1, 0.0), (C1, C2, 0.0), (C0, C2, -0.5)], -1


def frame_gram_residual(frame: FrameVectors) -> float:
    """Max deviation of the frame's Gram pairings from their required values."""
    if frame.case.is_special and frame.C0 is None:
        raise SynthesisError("special-case frame requires C0")
    relations, c = _gram_relations(frame)
    space = AmbientSpace(c)
    return max(abs(float(ambient.inner3(space, X, Y)) - t) for X, Y, t in relations)


def rotate_frame(frame: FrameVectors, delta: float) -> FrameVectors:
    """Rotate (C1, C2) by delta in their plane; a v-translation for periodic cases."""
    cd, sd = math.cos(delta), math.sin(delta)
    return FrameVectors(frame.case, C1=cd * frame.C1 + sd * frame.C2,
                        C2=-sd * frame.C1 + cd * frame.C2, C0=frame.C0)


@dataclass
class SurfacePatch:
    """A grid of ambient points Phi(u_i, v_j) with its source curve.

    ``points`` has shape (n_u, n_v, 4); x4 is the R-factor coordinate.  The
    u-nodes coincide with the samples of ``curve`` (when present).
    """

    case: CaseTag
    c: int
    u: np.ndarray
    v: np.ndarray
    points: np.ndarray
    curve: ProfileCurve | None
    h_u: float
    h_v: float

    @property
    def n_u(self) -> int:
        return len(self.u)

    @property
    def n_v(self) -> int:
        return len(self.v)

    def to_json_dict(self) -> dict:
        return {
            "case": self.case.value,
            "c": self.c,
            "u": [float(x) for x in self.u],
            "v": [float(x) for x in self.v],
            "points": self.points.tolist(),
            "curve": self.curve.to_json_dict() if self.curve is not None else None,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "SurfacePatch":
        case = CaseTag(d["case"])
        u = np.array(d["u"], dtype=float)
        v = np.array(d["v"], dtype=float)
        points = np.array(d["points"], dtype=float)
        curve = (ProfileCurve.from_json_dict(d["curve"])
                 if d.get("curve") is not None else None)
        if int(d["c"]) != case.c:
            raise SynthesisError(f"case {case.value} incompatible with c = {d['c']}")
        if points.shape != (len(u), len(v), 4):
            raise SynthesisError(f"points shape {points.shape} does not match grid")
        return SurfacePatch(case=case, c=case.c, u=u, v=v, points=points,
                            curve=curve,
                            h_u=float(u[1] - u[0]) if len(u) > 1 else 0.0,
                            h_v=float(v[1] - v[0]) if len(v) > 1 else 0.0)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=1)
            fh.write("\n")

    @staticmethod
    def load(path) -> "SurfacePatch":
        with open(path) as fh:
            return SurfacePatch.from_json_dict(json.load(fh))


def case_for_curve(curve: ProfileCurve) -> CaseTag:
    """Infer the parametrization case a curve supports."""
    if curve.case == "special":
        return (CaseTag.HYP_SPECIAL_PLUS if curve.sign == 1
                else CaseTag.HYP_SPECIAL_MINUS)
    if curve.c == 1:
        return CaseTag.SPHERE
    a2 = curve.a_or_g ** 2
    if np.all(a2 > 1.0):
        return CaseTag.HYP_AGT1
    if np.all(a2 < 1.0):
        return CaseTag.HYP_ALT1
    raise SynthesisError("curve crosses a^2 = 1; no single hyperbolic case applies")


def beta_squared(patch: SurfacePatch) -> np.ndarray:
    """Squared v-metric coefficient <Phi_v, Phi_v> predicted by the case."""
    if patch.curve is None:
        raise SynthesisError("patch has no attached curve")
    a = patch.curve.a_or_g
    case = patch.case
    if case is CaseTag.SPHERE:
        return 1.0 / (a ** 2 + 1.0)
    if case is CaseTag.HYP_AGT1:
        return 1.0 / (a ** 2 - 1.0)
    if case is CaseTag.HYP_ALT1:
        return 1.0 / (1.0 - a ** 2)
    return np.exp(2.0 * case.sign * patch.curve.Isin)


def _validate_case_match(curve: ProfileCurve, case: CaseTag) -> None:
    if case.is_special:
        if curve.case != "special" or curve.sign != case.sign:
            raise CaseMismatchError(
                f"case {case.value} needs a special curve with sign {case.sign}")
        return
    if curve.case != "generic" or curve.c != case.c:
        raise CaseMismatchError(
            f"case {case.value} needs a generic curve with c = {case.c}")
    if case is CaseTag.HYP_AGT1 and not np.all(curve.a_or_g ** 2 > 1.0):
        raise CaseMismatchError("case hyp_agt1 requires a^2 > 1 on the whole curve")
    if case is CaseTag.HYP_ALT1 and not np.all(curve.a_or_g ** 2 < 1.0):
        raise CaseMismatchError("case hyp_alt1 requires a^2 < 1 on the whole curve")


def synthesize(curve: ProfileCurve, frame: FrameVectors, v_range, n_v: int,
               manifold_tol: float = 1e-8) -> SurfacePatch:
    """Evaluate the case's parametrization over curve samples x uniform v-grid.

    The curve must already be resampled to a uniform u-grid (the patch
    consumers difference it).  Every node is validated against the product
    manifold; failures report the worst offending node.
    """
    case = frame.case
    _validate_case_match(curve, case)
    if curve.n < 2:
        raise SynthesisError("curve must contain at least 2 samples")
    if n_v < 2:
        raise SynthesisError("need at least 2 v-nodes")
    if not curve.is_uniform:
        raise SynthesisError("curve samples are not uniform; resample first")
    resid = frame_gram_residual(frame)
    if not resid <= 1e-9:
        raise SynthesisError(f"frame violates its Gram relations by {resid:.3e}")

    v0, v1 = float(v_range[0]), float(v_range[1])
    if not v1 > v0:
        raise SynthesisError("empty v range")
    v = np.linspace(v0, v1, n_v)
    a = curve.a_or_g
    C1, C2 = frame.C1, frame.C2

    if case is CaseTag.SPHERE or case is CaseTag.HYP_AGT1:
        w = (1.0 / np.sqrt(a ** 2 + 1.0) if case is CaseTag.SPHERE
             else 1.0 / np.sqrt(a ** 2 - 1.0))
        circ = np.cos(v)[None, :, None] * C1 + np.sin(v)[None, :, None] * C2
        M = w[:, None, None] * (circ + (a[:, None] * np.ones_like(v))[..., None]
                                * frame.cross)
    elif case is CaseTag.HYP_ALT1:
        w = 1.0 / np.sqrt(1.0 - a ** 2)
        hyp = np.exp(v)[None, :, None] * C1 + np.exp(-v)[None, :, None] * C2
        M = w[:, None, None] * (hyp + (2.0 * a[:, None] * np.ones_like(v))[..., None]
                                * frame.cross)
    else:
        E = np.exp(case.sign * curve.Isin)
        phi = (frame.C0[None, :] + v[:, None] * C1[None, :]
               + (v ** 2)[:, None] * C2[None, :])
        M = E[:, None, None] * phi[None, :, :] + (1.0 / E)[:, None, None] * C2

    x4 = np.broadcast_to(curve.Icos[:, None, None], (curve.n, n_v, 1))
    points = np.concatenate([M, x4], axis=-1)

    patch = SurfacePatch(case=case, c=case.c, u=curve.u.copy(), v=v,
                         points=points, curve=curve,
                         h_u=float(curve.u[1] - curve.u[0]),
                         h_v=float(v[1] - v[0]))
    validate_patch(patch, manifold_tol)
    return patch


def validate_patch(patch: SurfacePatch, manifold_tol: float = 1e-8) -> None:
    """Check every node against the product manifold; raise on the worst node."""
    space = AmbientSpace(patch.c)
    res = ambient.on_manifold_residual(space, patch.points)
    worst = np.unravel_index(int(np.argmax(res)), res.shape)
    if not float(res[worst]) <= manifold_tol:
        i, j = (int(k) for k in worst)
        raise SynthesisError(
            f"node ({i}, {j}) off the product manifold: "
            f"residual {float(res[worst]):.3e}")
    if patch.c == -1:
        x3min = float(np.min(patch.points[..., 2]))
        if not x3min > 0.0:
            raise SynthesisError(f"hyperbolic patch leaves the x3 > 0 sheet "
                                 f"(min x3 = {x3min:.3e})")


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def export(patch: SurfacePatch, fmt: str, path, kappa: float = 0.2) -> None:
    """Write a patch as csv, json, or obj.

    The OBJ view projects R4 to R3: for c = +1 the factor point is inflated
    radially by (1 + kappa*x4); for c = -1 the vertical coordinate replaces
    x3, giving (x1, x2, x4).
    """
    if fmt == "csv":
        _export_csv(patch, path)
    elif fmt == "json":
        patch.save(path)
    elif fmt == "obj":
        _export_obj(patch, path, kappa)
    else:
        raise ValueError(f"unknown export format {fmt!r} (expected csv, json, or obj)")


def _export_csv(patch: SurfacePatch, path) -> None:
    with open(path, "w") as fh:
        fh.write("i,j,u,v,x1,x2,x3,x4\n")
        for i in range(patch.n_u):
            for j in range(patch.n_v):
                x = patch.points[i, j]
                fh.write(f"{i},{j},{patch.u[i]:.17g},{patch.v[j]:.17g},"
                         f"{x[0]:.17g},{x[1]:.17g},{x[2]:.17g},{x[3]:.17g}\n")


def _export_obj(patch: SurfacePatch, path, kappa: float) -> None:
    P = patch.points
    if patch.c == 1:
        scale = 1.0 + kappa * P[..., 3]
        verts = np.stack([scale * P[..., 0], scale * P[..., 1],
                          scale * P[..., 2]], axis=-1)
    else:
        verts = np.stack([P[..., 0], P[..., 1], P[..., 3]], axis=-1)
    n_u, n_v = patch.n_u, patch.n_v
    with open(path, "w") as fh:
        fh.write(f"# biconsurf patch case={patch.case.value} c={patch.c} "
                 f"kappa={kappa:.17g}\n")
        fh.write(f"# grid {n_u} x {n_v}\n")
        for i in range(n_u):
            for j in range(n_v):
                x = verts[i, j]
                fh.write(f"v {x[0]:.17g} {x[1]:.17g} {x[2]:.17g}\n")
        for i in range(n_u - 1):
            for j in range(n_v - 1):
                a = i * n_v + j + 1
                b = a + 1
                d = a + n_v
                e = d + 1
                fh.write(f"f {a} {b} {e} {d}\n")
