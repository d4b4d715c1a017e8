"""Biconservative surfaces in S2xR and H2xR: construction and verification.

The pipeline integrates profile ODE systems along the mean-curvature
gradient direction (:mod:`biconsurf.profile`), evaluates explicit
parametrizations over the resulting curves (:mod:`biconsurf.surface`), and
re-derives all geometric identities from node positions alone by finite
differences (:mod:`biconsurf.diffgeo`).
"""

from .ambient import AmbientSpace, XI, curvature_apply, inner, inner3, \
    lorentz_cross, on_manifold_residual, tangential_curvature_trace
from .demo import DEMO_DEFAULTS, demo_initial_state
from .diffgeo import PointGeometry, VerificationReport, bicons_residual, \
    full_report, gauss_check, lemma_checks, planarity_check, point_geometry, \
    riccati_nonexistence
from .profile import ProfileCurve, ProfileState, SpecialState, StopReason, \
    Tolerances, first_integral, generic_rhs, integrate, ode_residual, \
    resample_uniform, solve_g, special_rhs
from .surface import CaseTag, FrameVectors, SurfacePatch, canonical_frame, \
    case_for_curve, export, frame_gram_residual, synthesize

__version__ = "0.1.0"
