"""Demonstration initial data, one valid window per parametrization case.

Each entry satisfies the integrator preconditions (in particular df/du > 0
for the generic cases) and stays clear of every stop threshold over its
u-window; the v-windows keep the differencing error of the verification
suite inside its tolerances on a 64 x 64 grid.
"""

from .profile import ProfileState, SpecialState
from .surface import CaseTag

DEMO_DEFAULTS = {
    CaseTag.SPHERE: {
        "theta0": 0.8, "a0": 1.2, "f0": 0.1,
        "u_max": 0.16, "v_range": (-0.20, 0.20),
    },
    CaseTag.HYP_AGT1: {
        "theta0": 1.1, "a0": 1.6, "f0": 0.4,
        "u_max": 0.20, "v_range": (-0.15, 0.15),
    },
    CaseTag.HYP_ALT1: {
        "theta0": 0.8, "a0": -0.5, "f0": 0.1,
        "u_max": 0.30, "v_range": (-0.12, 0.12),
    },
    CaseTag.HYP_SPECIAL_PLUS: {
        "theta0": 0.6, "g0": 0.25,
        "u_max": 0.32, "v_range": (-1.0, 1.0),
    },
    CaseTag.HYP_SPECIAL_MINUS: {
        "theta0": 2.2, "g0": -0.9,
        "u_max": 0.30, "v_range": (-1.0, 1.0),
    },
}


def demo_initial_state(case: CaseTag):
    """Initial profile state of the case's demonstration run."""
    d = DEMO_DEFAULTS[case]
    if case.is_special:
        return SpecialState(u=0.0, theta=d["theta0"], g=d["g0"], sign=case.sign)
    return ProfileState(u=0.0, theta=d["theta0"], a=d["a0"], f=d["f0"])
