"""Shared patch fixtures: demonstration runs and analytic oracle surfaces."""

import numpy as np
import pytest

from biconsurf import (AmbientSpace, CaseTag, canonical_frame, demo_initial_state,
                       DEMO_DEFAULTS, integrate, resample_uniform, synthesize)
from biconsurf.surface import SurfacePatch


def build_demo_patch(case: CaseTag, n: int) -> SurfacePatch:
    d = DEMO_DEFAULTS[case]
    space = None if case.is_special else AmbientSpace(case.c)
    curve = integrate(demo_initial_state(case), d["u_max"], space=space)
    return synthesize(resample_uniform(curve, n), canonical_frame(case),
                      d["v_range"], n)


def _patch_fixture(case, n):
    @pytest.fixture(scope="session")
    def fx():
        return build_demo_patch(case, n)
    return fx


sphere_64 = _patch_fixture(CaseTag.SPHERE, 64)
sphere_128 = _patch_fixture(CaseTag.SPHERE, 128)
agt1_64 = _patch_fixture(CaseTag.HYP_AGT1, 64)
agt1_128 = _patch_fixture(CaseTag.HYP_AGT1, 128)
alt1_64 = _patch_fixture(CaseTag.HYP_ALT1, 64)
alt1_128 = _patch_fixture(CaseTag.HYP_ALT1, 128)
special_plus_64 = _patch_fixture(CaseTag.HYP_SPECIAL_PLUS, 64)
special_plus_128 = _patch_fixture(CaseTag.HYP_SPECIAL_PLUS, 128)
special_minus_64 = _patch_fixture(CaseTag.HYP_SPECIAL_MINUS, 64)
special_minus_128 = _patch_fixture(CaseTag.HYP_SPECIAL_MINUS, 128)


def make_slice_patch(n: int = 65, half_width: float = 0.3) -> SurfacePatch:
    """Totally geodesic slice of S2 x R at height zero (f = 0, K = 1)."""
    u = np.linspace(-half_width, half_width, n)
    v = np.linspace(-half_width, half_width, n)
    uu, vv = np.meshgrid(u, v, indexing="ij")
    points = np.stack([np.cos(uu) * np.cos(vv), np.cos(uu) * np.sin(vv),
                       np.sin(uu), np.zeros_like(uu)], axis=-1)
    return SurfacePatch(case=CaseTag.SPHERE, c=1, u=u, v=v, points=points,
                        curve=None, h_u=float(u[1] - u[0]), h_v=float(v[1] - v[0]))


def make_cylinder_patch(rho: float = np.pi / 4, n: int = 33) -> SurfacePatch:
    """Vertical tube over a constant-latitude circle of S2 (constant f)."""
    u = np.linspace(0.0, 0.4, n)
    v = np.linspace(-0.3, 0.3, n)
    uu, vv = np.meshgrid(u, v, indexing="ij")
    points = np.stack([np.sin(rho) * np.cos(vv), np.sin(rho) * np.sin(vv),
                       np.full_like(uu, np.cos(rho)), uu], axis=-1)
    return SurfacePatch(case=CaseTag.SPHERE, c=1, u=u, v=v, points=points,
                        curve=None, h_u=float(u[1] - u[0]), h_v=float(v[1] - v[0]))


def jittered_copy(patch: SurfacePatch, amplitude: float = 1e-3,
                  seed: int = 7) -> SurfacePatch:
    rng = np.random.default_rng(seed)
    noisy = patch.points + rng.uniform(-amplitude, amplitude, patch.points.shape)
    return SurfacePatch(case=patch.case, c=patch.c, u=patch.u, v=patch.v,
                        points=noisy, curve=patch.curve, h_u=patch.h_u,
                        h_v=patch.h_v)


def helix_points(n: int = 80) -> np.ndarray:
    t = np.linspace(0.0, 4.0, n)
    return np.stack([np.cos(t), np.sin(t), 0.3 * t, np.zeros_like(t)], axis=-1)
