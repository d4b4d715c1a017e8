"""Profile-curve ODE systems and their integration.

A profile curve carries the data (theta, a, f) of a surface whose
mean-curvature gradient is a principal direction, sampled along the unit-speed
gradient direction.  Two systems occur:

* the generic system in (theta, a, f), valid for both ambient signs, with
  theta' = a cos(theta) - 2 f,  a' = -(a^2 + c) sin(theta) and
  f' = c f sin(theta) cos(theta) / (a cos(theta) - 3 f);
* the degenerate hyperbolic branch a = s = +-1, reduced to (theta, g) with
  f = g cos(theta), theta' = (s - 2 g) cos(theta) and
  g' = g^2 (5 s - 6 g) sin(theta) / (3 g - s), which is exactly the a -> s
  limit of the generic system and admits the closed-form first integral
  implemented in :func:`first_integral`.

The accumulated quadratures of cos(theta) and sin(theta) are carried as extra
ODE components so that surface synthesis sees them at integrator accuracy.
Integration is a classical 4th-order one-step scheme with step-doubling error
control; it terminates either at ``u_max`` or at the first breach of the
validity conditions (sin/cos away from zero, f positive, denominators away
from zero), reported through :class:`StopReason`.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .ambient import AmbientSpace


class ProfileError(ValueError):
    """Base class for profile-curve failures."""


class PreconditionError(ProfileError):
    """An initial state violates a validity requirement."""


class SingularDenominatorError(ProfileError):
    """A right-hand-side denominator fell below its tolerance."""

    def __init__(self, name: str, value: float):
        super().__init__(f"denominator {name} = {value:.3e} below tolerance")
        self.name = name
        self.value = value


class BracketError(ProfileError):
    """A root bracket does not enclose a sign change."""


class ConvergenceError(ProfileError):
    """An iterative solve failed to reach its tolerance."""


class StopReason(enum.Enum):
    REACHED_U_MAX = "reached_u_max"
    SINGULAR_DENOMINATOR = "singular_denominator"
    SIN_VANISH = "sin_vanish"
    COS_VANISH = "cos_vanish"
    F_NONPOSITIVE = "f_nonpositive"
    STEP_UNDERFLOW = "step_underflow"


@dataclass(frozen=True)
class Tolerances:
    """Integrator accuracy and the thresholds that terminate integration."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    sin_stop: float = 1e-4
    cos_stop: float = 1e-4
    f_stop: float = 1e-6
    denom_stop: float = 1e-6
    h_init: float = 2e-4
    h_max: float = 2e-4
    h_min: float = 1e-12
    max_steps: int = 500_000

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(d: dict) -> "Tolerances":
        return Tolerances(**d)


DEFAULT_TOLERANCES = Tolerances()


@dataclass
class ProfileState:
    """One sample of the generic system."""

    u: float
    theta: float
    a: float
    f: float
    Icos: float = 0.0
    Isin: float = 0.0


@dataclass
class SpecialState:
    """One sample of the degenerate branch a = sign in H2xR."""

    u: float
    theta: float
    g: float
    sign: int
    Icos: float = 0.0
    Isin: float = 0.0

    @property
    def f(self) -> float:
        return self.g * math.cos(self.theta)


def generic_rhs(state: ProfileState, space: AmbientSpace,
                denom_tol: float = DEFAULT_TOLERANCES.denom_stop) -> np.ndarray:
    """Derivatives (theta', a', f', Icos', Isin') of the generic system."""
    c = space.c
    s, co = math.sin(state.theta), math.cos(state.theta)
    den = state.a * co - 3.0 * state.f
    if abs(den) < denom_tol:
        raise SingularDenominatorError("a*cos(theta) - 3*f", den)
    return np.array([
        state.a * co - 2.0 * state.f,
        -(state.a ** 2 + c) * s,
        c * state.f * s * co / den,
        co,
        s,
    ])


def special_rhs(state: SpecialState,
                denom_tol: float = DEFAULT_TOLERANCES.denom_stop) -> np.ndarray:
    """Derivatives (theta', g', Icos', Isin') of the a = sign branch."""
    sgn = state.sign
    s, co = math.sin(state.theta), math.cos(state.theta)
    den = 3.0 * state.g - sgn
    if abs(den) < denom_tol:
        raise SingularDenominatorError("3*g - s", den)
    return np.array([
        (sgn - 2.0 * state.g) * co,
        state.g ** 2 * (5.0 * sgn - 6.0 * state.g) * s / den,
        co,
        s,
    ])


@dataclass
class ProfileCurve:
    """An integrated, monotone-in-u sequence of profile samples.

    Columns are parallel arrays; ``a_or_g`` holds a for generic curves and g
    for special ones (where additionally ``f = g cos(theta)`` is stored).
    """

    case: str                      # "generic" or "special"
    c: int
    sign: int                      # +-1 for special curves, 0 otherwise
    u: np.ndarray
    theta: np.ndarray
    a_or_g: np.ndarray
    f: np.ndarray
    Icos: np.ndarray
    Isin: np.ndarray
    steps: np.ndarray
    stop_reason: StopReason
    tolerances: Tolerances = field(default_factory=Tolerances)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def is_uniform(self) -> bool:
        if self.n < 3:
            return True
        d = np.diff(self.u)
        return bool(np.max(np.abs(d - d[0])) <= 1e-9 * max(abs(d[0]), 1e-30))

    def state_at(self, i: int):
        if self.case == "special":
            return SpecialState(self.u[i], self.theta[i], self.a_or_g[i],
                                self.sign, self.Icos[i], self.Isin[i])
        return ProfileState(self.u[i], self.theta[i], self.a_or_g[i],
                            self.f[i], self.Icos[i], self.Isin[i])

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        case_tag = self.case if self.case == "generic" else f"special{self.sign:+d}"
        return {
            "case": case_tag,
            "c": self.c,
            "samples": [
                {
                    "u": float(self.u[i]),
                    "theta": float(self.theta[i]),
                    "a_or_g": float(self.a_or_g[i]),
                    "f": float(self.f[i]),
                    "Icos": float(self.Icos[i]),
                    "Isin": float(self.Isin[i]),
                }
                for i in range(self.n)
            ],
            "stop_reason": self.stop_reason.value,
            "tolerances": self.tolerances.to_dict(),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "ProfileCurve":
        tag = d["case"]
        if tag == "generic":
            case, sign = "generic", 0
        elif tag in ("special+1", "special-1"):
            case, sign = "special", int(tag[-2:])
        else:
            raise ProfileError(f"unknown curve case tag {tag!r}")
        samples = d["samples"]
        cols = {k: np.array([s[k] for s in samples], dtype=float)
                for k in ("u", "theta", "a_or_g", "f", "Icos", "Isin")}
        return ProfileCurve(
            case=case, c=int(d["c"]), sign=sign,
            u=cols["u"], theta=cols["theta"], a_or_g=cols["a_or_g"],
            f=cols["f"], Icos=cols["Icos"], Isin=cols["Isin"],
            steps=np.diff(cols["u"]),
            stop_reason=StopReason(d["stop_reason"]),
            tolerances=Tolerances.from_dict(d["tolerances"]),
        )

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=1)
            fh.write("\n")

    @staticmethod
    def load(path) -> "ProfileCurve":
        with open(path) as fh:
            return ProfileCurve.from_json_dict(json.load(fh))


# ---------------------------------------------------------------------------
# integration
# ---------------------------------------------------------------------------

def _rk4(fun, y: np.ndarray, h: float) -> np.ndarray:
    k1 = fun(y)
    k2 = fun(y + 0.5 * h * k1)
    k3 = fun(y + 0.5 * h * k2)
    k4 = fun(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _check_generic_initial(st: ProfileState, space: AmbientSpace,
                           tol: Tolerances) -> None:
    if not st.f > tol.f_stop:
        raise PreconditionError(f"f must be positive, got f = {st.f:.3e}")
    if abs(math.sin(st.theta)) <= tol.sin_stop:
        raise PreconditionError("sin(theta) must be nonzero at the initial state")
    if abs(math.cos(st.theta)) <= tol.cos_stop:
        raise PreconditionError("cos(theta) must be nonzero at the initial state")
    den = st.a * math.cos(st.theta) - 3.0 * st.f
    if abs(den) <= tol.denom_stop:
        raise PreconditionError(
            f"a*cos(theta) - 3*f = {den:.3e} too close to zero at the initial state")
    fp = generic_rhs(st, space, tol.denom_stop)[2]
    if not fp > 0.0:
        raise PreconditionError(
            f"df/du must be positive at the initial state (gradient direction), got {fp:.3e}")


def _check_special_initial(st: SpecialState, tol: Tolerances) -> None:
    if st.sign not in (1, -1):
        raise PreconditionError(f"branch sign must be +1 or -1, got {st.sign!r}")
    if not st.g * math.cos(st.theta) > tol.f_stop:
        raise PreconditionError(
            f"g*cos(theta) must be positive, got {st.g * math.cos(st.theta):.3e}")
    if abs(math.sin(st.theta)) <= tol.sin_stop:
        raise PreconditionError("sin(theta) must be nonzero at the initial state")
    if abs(math.cos(st.theta)) <= tol.cos_stop:
        raise PreconditionError("cos(theta) must be nonzero at the initial state")
    den = 3.0 * st.g - st.sign
    if abs(den) <= tol.denom_stop:
        raise PreconditionError(
            f"3*g - s = {den:.3e} too close to zero at the initial state")


def _generic_violation(y, y_prev, tol: Tolerances):
    th, a, f = y[0], y[1], y[2]
    s, co = math.sin(th), math.cos(th)
    if abs(s) < tol.sin_stop or s * math.sin(y_prev[0]) < 0.0:
        return StopReason.SIN_VANISH
    if abs(co) < tol.cos_stop or co * math.cos(y_prev[0]) < 0.0:
        return StopReason.COS_VANISH
    if f < tol.f_stop:
        return StopReason.F_NONPOSITIVE
    if abs(a * co - 3.0 * f) < tol.denom_stop:
        return StopReason.SINGULAR_DENOMINATOR
    return None


def _special_violation(y, y_prev, sign, tol: Tolerances):
    th, g = y[0], y[1]
    s, co = math.sin(th), math.cos(th)
    if abs(s) < tol.sin_stop or s * math.sin(y_prev[0]) < 0.0:
        return StopReason.SIN_VANISH
    if abs(co) < tol.cos_stop or co * math.cos(y_prev[0]) < 0.0:
        return StopReason.COS_VANISH
    if g * co < tol.f_stop:
        return StopReason.F_NONPOSITIVE
    if abs(3.0 * g - sign) < tol.denom_stop:
        return StopReason.SINGULAR_DENOMINATOR
    return None


def integrate(initial, u_max: float, space: AmbientSpace | None = None,
              tolerances: Tolerances | None = None, direction: int = 1) -> ProfileCurve:
    """March the profile system from ``initial`` toward ``u_max``.

    The case is selected by the type of ``initial`` (:class:`ProfileState`
    for the generic system, which requires ``space``, or
    :class:`SpecialState`).  ``direction=-1`` integrates the negated vector
    field from the same initial data; the returned samples are always
    strictly increasing in u.  Each accepted step passes a step-doubling
    local-error test at ``tolerances.rel_tol``/``abs_tol``; the curve ends
    with the :class:`StopReason` explaining termination.
    """
    tol = tolerances or DEFAULT_TOLERANCES
    if direction not in (1, -1):
        raise PreconditionError("direction must be +1 or -1")

    if isinstance(initial, ProfileState):
        if space is None:
            raise PreconditionError("generic integration requires an AmbientSpace")
        _check_generic_initial(initial, space, tol)
        case, c, sign = "generic", space.c, 0
        y = np.array([initial.theta, initial.a, initial.f, initial.Icos, initial.Isin])

        def fun(yv):
            st = ProfileState(0.0, yv[0], yv[1], yv[2])
            return direction * generic_rhs(st, space, tol.denom_stop)

        def violation(yv, yprev):
            return _generic_violation(yv, yprev, tol)

    elif isinstance(initial, SpecialState):
        _check_special_initial(initial, tol)
        case, c, sign = "special", -1, initial.sign
        y = np.array([initial.theta, initial.g, initial.Icos, initial.Isin])

        def fun(yv):
            st = SpecialState(0.0, yv[0], yv[1], sign)
            return direction * special_rhs(st, tol.denom_stop)

        def violation(yv, yprev):
            return _special_violation(yv, yprev, sign, tol)

    else:
        raise PreconditionError(f"unsupported initial state type {type(initial)!r}")

    u0 = float(initial.u)
    if not u_max > u0:
        raise PreconditionError(f"u_max = {u_max} must exceed the initial u = {u0}")

    u = u0
    us, rows, steps = [u], [y.copy()], []
    # The step cap keeps the dense-output (Hermite) error of resampling far
    # below the h^2 differencing residuals measured on synthesized patches.
    h = min(tol.h_init, tol.h_max, u_max - u)
    stop = None
    for _ in range(tol.max_steps):
        if u >= u_max - 1e-14 * max(1.0, abs(u_max)):
            stop = StopReason.REACHED_U_MAX
            break
        h = min(h, u_max - u, tol.h_max)
        try:
            y_big = _rk4(fun, y, h)
            y_mid = _rk4(fun, y, 0.5 * h)
            y_new = _rk4(fun, y_mid, 0.5 * h)
        except SingularDenominatorError:
            if h <= tol.h_min:
                stop = StopReason.SINGULAR_DENOMINATOR
                break
            h = max(tol.h_min, 0.5 * h)
            continue
        err = np.abs(y_new - y_big) / 15.0
        scale = tol.abs_tol + tol.rel_tol * np.maximum(np.abs(y), np.abs(y_new))
        ratio = float(np.max(err / scale))
        if ratio > 1.0:
            if h <= tol.h_min:
                stop = StopReason.STEP_UNDERFLOW
                break
            h = max(tol.h_min, 0.9 * h * ratio ** -0.2)
            continue
        reason = violation(y_new, y)
        if reason is not None:
            if h <= tol.h_min:
                stop = reason
                break
            h = max(tol.h_min, 0.5 * h)
            continue
        u += h
        y = y_new
        us.append(u)
        rows.append(y.copy())
        steps.append(h)
        if ratio > 0.0:
            h = h * min(5.0, max(0.2, 0.9 * ratio ** -0.2))
        else:
            h = 5.0 * h
    else:
        raise ProfileError("integration exceeded the step budget")

    arr = np.array(rows)
    if case == "generic":
        theta, a_or_g, f = arr[:, 0], arr[:, 1], arr[:, 2]
        Icos, Isin = arr[:, 3], arr[:, 4]
    else:
        theta, a_or_g = arr[:, 0], arr[:, 1]
        f = a_or_g * np.cos(theta)
        Icos, Isin = arr[:, 2], arr[:, 3]
    return ProfileCurve(case=case, c=c, sign=sign, u=np.array(us), theta=theta,
                        a_or_g=a_or_g, f=f, Icos=Icos, Isin=Isin,
                        steps=np.array(steps), stop_reason=stop, tolerances=tol)


def resample_uniform(curve: ProfileCurve, n: int) -> ProfileCurve:
    """Resample a curve onto n uniform u-nodes by cubic Hermite interpolation.

    Derivatives at the accepted samples are recomputed from the right-hand
    side, so the interpolant is the integrator's dense output.
    """
    if curve.n < 2:
        raise ProfileError("need at least 2 samples to resample")
    if n < 2:
        raise ProfileError("need at least 2 target nodes")
    space = AmbientSpace(curve.c)
    if curve.case == "generic":
        cols = np.column_stack([curve.theta, curve.a_or_g, curve.f,
                                curve.Icos, curve.Isin])
        ders = np.array([generic_rhs(curve.state_at(i), space,
                                     curve.tolerances.denom_stop)
                         for i in range(curve.n)])
    else:
        cols = np.column_stack([curve.theta, curve.a_or_g, curve.Icos, curve.Isin])
        ders = np.array([special_rhs(curve.state_at(i), curve.tolerances.denom_stop)
                         for i in range(curve.n)])
    spline = CubicHermiteSpline(curve.u, cols, ders, axis=0)
    us = np.linspace(curve.u[0], curve.u[-1], n)
    vals = spline(us)
    if curve.case == "generic":
        theta, a_or_g, f = vals[:, 0], vals[:, 1], vals[:, 2]
        Icos, Isin = vals[:, 3], vals[:, 4]
    else:
        theta, a_or_g = vals[:, 0], vals[:, 1]
        f = a_or_g * np.cos(theta)
        Icos, Isin = vals[:, 2], vals[:, 3]
    return ProfileCurve(case=curve.case, c=curve.c, sign=curve.sign, u=us,
                        theta=theta, a_or_g=a_or_g, f=f, Icos=Icos, Isin=Isin,
                        steps=np.diff(us), stop_reason=curve.stop_reason,
                        tolerances=curve.tolerances)


# ---------------------------------------------------------------------------
# residuals and the special-branch first integral
# ---------------------------------------------------------------------------

def _d1(u: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Three-point first derivative at u[1:-1]; exact for quadratics on any grid."""
    h1 = u[1:-1] - u[:-2]
    h2 = u[2:] - u[1:-1]
    return (h1 ** 2 * y[2:] - h2 ** 2 * y[:-2]
            + (h2 ** 2 - h1 ** 2) * y[1:-1]) / (h1 * h2 * (h1 + h2))


def ode_residual(curve: ProfileCurve, space: AmbientSpace | None = None):
    """Second-order biconservative equation residual along a sampled curve.

    Generic curves are checked against
    (theta' - a cos theta)(theta' - a cos theta)' +
    (a^2 + c)((theta'^2 - a^2 cos^2 theta)/(a^2 + c))' = 0,
    special curves against s cos(theta) = 3 f - (f/f') sin(theta) cos(theta),
    with every derivative taken numerically from the samples alone.  Returns
    (u_values, |residual|) at the interior points where the stencils exist.
    """
    if curve.n < 5:
        raise ProfileError("need at least 5 samples to form the residual")
    c = space.c if space is not None else curve.c
    u = curve.u
    if curve.case == "generic":
        theta, a = curve.theta, curve.a_or_g
        th_p = _d1(u, theta)
        um = u[1:-1]
        am, thm = a[1:-1], theta[1:-1]
        q1 = th_p - am * np.cos(thm)
        q2 = (th_p ** 2 - (am * np.cos(thm)) ** 2) / (am ** 2 + c)
        q1_p = _d1(um, q1)
        q2_p = _d1(um, q2)
        inner_a = am[1:-1]
        res = np.abs(q1[1:-1] * q1_p + (inner_a ** 2 + c) * q2_p)
        return um[1:-1], res
    theta, f = curve.theta, curve.f
    f_p = _d1(u, f)
    um = u[1:-1]
    thm, fm = theta[1:-1], f[1:-1]
    s, co = np.sin(thm), np.cos(thm)
    res = np.abs(curve.sign * co - 3.0 * fm + (fm / f_p) * s * co)
    return um, res


def first_integral(theta, g, sign: int):
    """Conserved quantity of the a = sign branch (additive constant dropped).

    F = ln|cos(theta)| + (19/25) ln|g| + s/(5 g) + (6/25) ln|5 s - 6 g|.
    Constant along exact solutions of :func:`special_rhs`; log-singular at
    g = 0 and 6 g = 5 s, and undefined where cos(theta) = 0.
    """
    if sign not in (1, -1):
        raise ProfileError(f"branch sign must be +1 or -1, got {sign!r}")
    theta = np.asarray(theta, dtype=float)
    g = np.asarray(g, dtype=float)
    co = np.cos(theta)
    pole = 5.0 * sign - 6.0 * g
    if np.any(g == 0.0):
        raise ProfileError("first integral undefined at g = 0")
    if np.any(co == 0.0):
        raise ProfileError("first integral undefined at cos(theta) = 0")
    if np.any(pole == 0.0):
        raise ProfileError("first integral undefined at 6*g = 5*s")
    out = (np.log(np.abs(co)) + (19.0 / 25.0) * np.log(np.abs(g))
           + sign / (5.0 * g) + (6.0 / 25.0) * np.log(np.abs(pole)))
    if out.ndim == 0:
        return float(out)
    return out


def _first_integral_dg(g: float, sign: int) -> float:
    return (19.0 / (25.0 * g) - sign / (5.0 * g ** 2)
            - 36.0 / (25.0 * (5.0 * sign - 6.0 * g)))


def solve_g(theta: float, E: float, sign: int, bracket,
            f_tol: float = 1e-10, max_iter: int = 200) -> float:
    """Invert the first integral for g at fixed theta over a bracket.

    Bisection maintains the bracket while Newton steps accelerate once they
    stay inside it; succeeds when |first_integral - E| <= f_tol.
    """
    lo, hi = (float(bracket[0]), float(bracket[1]))
    if lo > hi:
        lo, hi = hi, lo
    flo = first_integral(theta, lo, sign) - E
    fhi = first_integral(theta, hi, sign) - E
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BracketError(
            f"no sign change on bracket ({lo}, {hi}): F-E = {flo:.3e}, {fhi:.3e}")
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = first_integral(theta, x, sign) - E
        if abs(fx) <= f_tol:
            return x
        if fx * flo < 0.0:
            hi = x
        else:
            lo, flo = x, fx
        dfx = _first_integral_dg(x, sign)
        x_new = x - fx / dfx if dfx != 0.0 else lo
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        x = x_new
    raise ConvergenceError(f"no convergence after {max_iter} iterations")
