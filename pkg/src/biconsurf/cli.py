"""Command-line front end: generate, verify, special, riccati.

Exit codes: 0 on success (all checks pass), 1 on verification failure,
2 on usage or configuration errors.  Runs are deterministic: identical
arguments produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import diffgeo, profile, surface
from .ambient import AmbientSpace
from .demo import DEMO_DEFAULTS
from .diffgeo import CheckResult, VerificationReport
from .profile import ProfileState, SpecialState, Tolerances
from .surface import CaseTag, SurfacePatch, canonical_frame


class UsageError(ValueError):
    pass


_CASE_NAMES = {
    "sphere": CaseTag.SPHERE,
    "agt1": CaseTag.HYP_AGT1,
    "alt1": CaseTag.HYP_ALT1,
    "special": None,  # resolved by --sign
}


def _resolve_case(args) -> CaseTag:
    name = args.case
    if name not in _CASE_NAMES:
        raise UsageError(f"unknown case {name!r} (expected sphere, agt1, alt1, special)")
    if name == "special":
        if args.sign not in (1, -1):
            raise UsageError("special case needs --sign 1 or --sign -1")
        case = (CaseTag.HYP_SPECIAL_PLUS if args.sign == 1
                else CaseTag.HYP_SPECIAL_MINUS)
    else:
        case = _CASE_NAMES[name]
    if args.c is not None:
        if args.c not in (1, -1):
            raise UsageError("c must be 1 or -1")
        if args.c != case.c:
            raise UsageError(f"case {name!r} requires c = {case.c}, got {args.c}")
    return case


def _fill_defaults(args, case: CaseTag) -> None:
    d = DEMO_DEFAULTS[case]
    if args.theta0 is None:
        args.theta0 = d["theta0"]
    if case.is_special:
        if args.g0 is None:
            args.g0 = d["g0"]
    else:
        if args.a0 is None:
            args.a0 = d["a0"]
        if args.f0 is None:
            args.f0 = d["f0"]
    if args.umax is None:
        args.umax = d["u_max"]
    if args.vmin is None:
        args.vmin = d["v_range"][0]
    if args.vmax is None:
        args.vmax = d["v_range"][1]


def _build_patch(args) -> SurfacePatch:
    case = _resolve_case(args)
    _fill_defaults(args, case)
    tol = Tolerances(rel_tol=args.rel_tol, abs_tol=args.abs_tol)
    if case.is_special:
        state = SpecialState(u=0.0, theta=args.theta0, g=args.g0, sign=case.sign)
        curve = profile.integrate(state, args.umax, tolerances=tol)
    else:
        state = ProfileState(u=0.0, theta=args.theta0, a=args.a0, f=args.f0)
        curve = profile.integrate(state, args.umax, space=AmbientSpace(case.c),
                                  tolerances=tol)
    uniform = profile.resample_uniform(curve, args.nu)
    return surface.synthesize(uniform, canonical_frame(case),
                              (args.vmin, args.vmax), args.nv)


def _print_report(report: VerificationReport) -> None:
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        extra = ""
        if c.convergence_ratio is not None:
            extra = f"  ratio={c.convergence_ratio:.2f}"
        print(f"  [{status}] {c.name}: max={c.max_residual:.3e} "
              f"tol={c.tolerance:.3e}{extra}")


def cmd_generate(args) -> int:
    patch = _build_patch(args)
    surface.export(patch, args.format, args.out, kappa=args.kappa)
    print(f"wrote {args.out}: case={patch.case.value} grid={patch.n_u}x{patch.n_v} "
          f"u=[{patch.u[0]:g},{patch.u[-1]:g}] stop={patch.curve.stop_reason.value}")
    return 0


def cmd_verify(args) -> int:
    if args.in_path is not None:
        # manifold membership is judged by the report itself (exit 1), not
        # rejected at load time
        patch = SurfacePatch.load(args.in_path)
    else:
        patch = _build_patch(args)
    if patch.n_u < 5 or patch.n_v < 5:
        raise UsageError("verification needs at least a 5 x 5 grid")
    report = diffgeo.full_report(patch, threads=args.threads)
    if args.report is not None:
        report.save(args.report)
    print(f"verify {patch.case.value} {patch.n_u}x{patch.n_v}:")
    _print_report(report)
    return 0 if report.all_pass else 1


def cmd_special(args) -> int:
    if args.sign not in (1, -1):
        raise UsageError("--sign must be 1 or -1")
    args.case = "special"
    case = _resolve_case(args)
    _fill_defaults(args, case)
    tol = Tolerances(rel_tol=args.rel_tol, abs_tol=args.abs_tol)
    state = SpecialState(u=0.0, theta=args.theta0, g=args.g0, sign=args.sign)
    curve = profile.integrate(state, args.umax, tolerances=tol)
    F = profile.first_integral(curve.theta, curve.a_or_g, args.sign)
    drift = float(np.max(np.abs(F - F[0])))
    check = CheckResult(name="first_integral_drift", max_residual=drift,
                        grid=(curve.n, 1), tolerance=1e-6,
                        passed=bool(drift <= 1e-6))
    report = VerificationReport([check])
    if args.report is not None:
        report.save(args.report)
    if args.out is not None:
        uniform = profile.resample_uniform(curve, args.nu)
        patch = surface.synthesize(uniform, canonical_frame(case),
                                   (args.vmin, args.vmax), args.nv)
        surface.export(patch, args.format, args.out, kappa=args.kappa)
    print(f"special s={args.sign:+d}: {curve.n} samples, "
          f"stop={curve.stop_reason.value}, first-integral drift={drift:.3e}")
    return 0 if report.all_pass else 1


def cmd_riccati(args) -> int:
    if args.c is None:
        args.c = 1
    report = diffgeo.riccati_nonexistence(args.c, args.c0,
                                          (args.amin, args.amax), args.n)
    if args.report is not None:
        report.save(args.report)
    print(f"riccati sweep c={args.c:+d} c0={args.c0:g} "
          f"a in [{args.amin:g},{args.amax:g}] n={args.n}:")
    _print_report(report)
    return 0 if report.all_pass else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default=None, help="key = value file, flags override")
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--case", default="sphere")
    p.add_argument("--theta0", type=float, default=None)
    p.add_argument("--a0", type=float, default=None)
    p.add_argument("--f0", type=float, default=None)
    p.add_argument("--g0", type=float, default=None)
    p.add_argument("--sign", type=int, default=1)
    p.add_argument("--umax", type=float, default=None)
    p.add_argument("--vmin", type=float, default=None)
    p.add_argument("--vmax", type=float, default=None)
    p.add_argument("--nu", type=int, default=64)
    p.add_argument("--nv", type=int, default=64)
    p.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-10)
    p.add_argument("--abs-tol", dest="abs_tol", type=float, default=1e-12)
    p.add_argument("--format", default="json", choices=["csv", "json", "obj"])
    p.add_argument("--kappa", type=float, default=0.2)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biconsurf",
        description="Generate and verify biconservative surface patches "
                    "in S2xR and H2xR.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="integrate, synthesize, and export a patch")
    _add_common(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the full verification report")
    _add_common(p)
    p.add_argument("--in", dest="in_path", default=None,
                   help="patch JSON to verify (default: generate from flags)")
    p.add_argument("--report", default=None, help="where to write the report JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("special", help="degenerate-branch run with drift report")
    _add_common(p)
    p.add_argument("--out", default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("riccati", help="constant-curvature non-existence sweep")
    p.add_argument("--config", default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--c0", type=float, default=1.0)
    p.add_argument("--amin", type=float, default=0.5)
    p.add_argument("--amax", type=float, default=2.0)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_riccati)
    return parser


def _read_config(path) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


def _apply_config(parser: argparse.ArgumentParser, argv, args):
    cfg = _read_config(args.config)
    sub = next(a for a in parser._actions
               if isinstance(a, argparse._SubParsersAction))
    subparser = sub.choices[args.command]
    dests = {a.dest: a for a in subparser._actions if a.dest != "help"}
    defaults = {}
    for key, val in cfg.items():
        if key not in dests:
            raise UsageError(f"unknown config key {key!r}")
        typ = dests[key].type or str
        defaults[key] = typ(val)
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            args = _apply_config(parser, argv, args)
        return args.func(args)
    except SystemExit as exc:  # argparse already printed a diagnostic
        return 2 if exc.code not in (0, None) else 0
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
