"""Command-line verification harness.

Subcommands:
  suite    run one or more property suites and report pass/fail
  certify  certify a matrix file as (conjugate) symplectic with determinant detail
  formula  evaluate the subblock determinant-phase formula for a matrix file

Exit status is 0 only when every requested check passed; 1 on failed checks,
non-membership, or unreadable input; 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import asdict, replace

from ._version import __version__
from .linalg import frobenius, log_det, phase_angle
from .matio import read_matrix
from .report import Report, emit_report, render_text
from .suites import SUITE_IDS, default_suite_spec, run_suite, _bounds, _passes
from .symplectic import (
    DEFAULT_TOLERANCES,
    FormulaInconclusiveError,
    GroupKind,
    MembershipError,
    certify_symplectic,
    conj_symplectic_det,
    conj_symplectic_residual,
)

_MODES = {
    "real": GroupKind.REAL_SYMPLECTIC,
    "complex": GroupKind.COMPLEX_SYMPLECTIC,
    "conjugate": GroupKind.CONJUGATE_SYMPLECTIC,
}


def _parse_half_dims(text: str) -> tuple[int, ...]:
    """Accept "8", "1:8", or "1,2,4,8,10" as half-dimension selections."""
    try:
        if ":" in text:
            lo, hi = (int(t) for t in text.split(":"))
            if lo < 1 or hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        if "," in text:
            dims = tuple(int(t) for t in text.split(","))
        else:
            dims = (int(text),)
        if any(d < 1 for d in dims):
            raise ValueError
        return dims
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad half-dimension spec {text!r}; use N, LO:HI, or N1,N2,...") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympdet",
        description="Verify symplectic determinant identities and evaluate the "
                    "conjugate-symplectic determinant phase formula.")
    parser.add_argument("--version", action="version", version=f"sympdet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--tol", type=float, default=None,
                       help="membership residual tolerance, scaled by ||A||_F^2 "
                            f"(default {DEFAULT_TOLERANCES.membership:g})")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="report rendering (default text)")
        p.add_argument("--out", default=None, help="write the report to this path")

    p_suite = sub.add_parser("suite", help="run property suites")
    p_suite.add_argument("suites", nargs="+", choices=(*SUITE_IDS, "all"),
                         metavar="SUITE",
                         help=f"one or more of: {', '.join(SUITE_IDS)}, all")
    p_suite.add_argument("--n", type=_parse_half_dims, default=None,
                         help="half-dimensions, e.g. 8 or 1:8 or 1,2,4,8,10")
    p_suite.add_argument("--trials", type=int, default=None,
                         help="trial count (default depends on the suite)")
    common(p_suite)

    p_cert = sub.add_parser("certify", help="certify a matrix file")
    p_cert.add_argument("path", help="matrix file ('n kind' header, then rows)")
    p_cert.add_argument("--mode", choices=tuple(_MODES), default="real",
                        help="group to certify against (default real)")
    common(p_cert)

    p_formula = sub.add_parser("formula",
                               help="determinant phase of a conjugate symplectic matrix file")
    p_formula.add_argument("path", help="matrix file ('n kind' header, then rows)")
    common(p_formula)
    return parser


def _tolerances(args) -> "ToleranceConfig":
    if args.tol is None:
        return DEFAULT_TOLERANCES
    return replace(DEFAULT_TOLERANCES, membership=args.tol)


def _emit(reports, args, human: str | None) -> None:
    """Human detail to one stream, the schema report to --out or stdout."""
    if human:
        stream = sys.stderr if (args.format == "json" and args.out is None) else sys.stdout
        print(human, file=stream)
    text = emit_report(reports, args.format, args.out)
    if args.out is None and args.format == "json":
        print(text, end="")
    elif args.out is None and human is None:
        print(text, end="")
    elif args.out is not None:
        print(f"wrote {args.out}")


def _cmd_suite(args) -> int:
    ids = list(SUITE_IDS) if "all" in args.suites else list(dict.fromkeys(args.suites))
    tol = _tolerances(args)
    reports = []
    for sid in ids:
        spec = default_suite_spec(sid, seed=args.seed, trials=args.trials,
                                  half_dims=args.n, tolerances=tol)
        reports.append(run_suite(spec))
    payload = reports[0] if len(reports) == 1 else reports
    if args.format == "text" and args.out is None:
        print(emit_report(payload, "text"), end="")
    else:
        _emit(payload, args, human=None)
        if args.out is not None:
            for r in reports:
                print(f"{r.suite}: {r.passes}/{r.trials} passed")
    return 0 if all(r.all_passed for r in reports) else 1


def _certificate_lines(cert) -> str:
    lines = [f"certificate: {cert.group.value} symplectic"]
    for chk in cert.narrative:
        mark = "pass" if chk.passed else "FAIL"
        lines.append(f"  [{mark}] {chk.label}")
        lines.append(f"         lhs={chk.lhs}  rhs={chk.rhs}  residual={chk.residual:.3e}")
    lines.append(f"verdict: {cert.verdict}")
    return "\n".join(lines)


def _conj_report_body(a, tol):
    """(residuals, human text) for the conjugate phase formula on matrix a."""
    oracle = log_det(a)
    residuals = {
        "membership": conj_symplectic_residual(a) / frobenius(a) ** 2,
        "detModulusOne": abs(math.expm1(oracle.log_magnitude)),
    }
    formula_phase = conj_symplectic_det(a, tol)  # may raise
    residuals["phaseAgreement"] = phase_angle(formula_phase, oracle.phase)
    human = "\n".join([
        "conjugate symplectic determinant phase",
        f"  subblock formula: {formula_phase.real:.12f}{formula_phase.imag:+.12f}j",
        f"  lu oracle:        {oracle.phase.real:.12f}{oracle.phase.imag:+.12f}j",
        f"  angular gap:      {residuals['phaseAgreement']:.3e}",
        f"  | |det| - 1 |:    {residuals['detModulusOne']:.3e}",
    ])
    return residuals, human


def _single_report(suite: str, config: dict, residuals: dict, passed: bool,
                   half_dim: int, elapsed: float) -> Report:
    failures = [] if passed else [{"seed": 0, "halfDim": half_dim, "residuals": residuals}]
    return Report(tool=f"sympdet {__version__}", suite=suite, config=config,
                  trials=1, passes=int(passed), failures=failures,
                  worst_residuals=residuals, elapsed_seconds=elapsed)


def _cmd_certify(args) -> int:
    tol = _tolerances(args)
    t0 = time.perf_counter()
    try:
        a = read_matrix(args.path)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    mode = _MODES[args.mode]
    config = {"path": args.path, "mode": args.mode, "tolerances": asdict(tol)}
    try:
        if mode is GroupKind.CONJUGATE_SYMPLECTIC:
            residuals, human = _conj_report_body(a, tol)
            passed = _passes(residuals, _bounds("conj-formula", tol))
            human += f"\nverdict: {'pass' if passed else 'fail'}"
        else:
            cert = certify_symplectic(a, mode, tol)
            residuals = cert.residuals
            passed = cert.verdict == "pass"
            human = _certificate_lines(cert)
    except MembershipError as e:
        print(f"rejected: {e}", file=sys.stderr)
        return 1
    except FormulaInconclusiveError as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    report = _single_report(f"certify-{args.mode}", config, residuals, passed,
                            a.shape[0] // 2, time.perf_counter() - t0)
    _emit(report, args, human)
    return 0 if passed else 1


def _cmd_formula(args) -> int:
    tol = _tolerances(args)
    t0 = time.perf_counter()
    try:
        a = read_matrix(args.path)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        residuals, human = _conj_report_body(a, tol)
    except MembershipError as e:
        print(f"rejected: {e}", file=sys.stderr)
        return 1
    except (FormulaInconclusiveError, ValueError) as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return 1
    passed = _passes(residuals, _bounds("conj-formula", tol))
    human += f"\nverdict: {'pass' if passed else 'fail'}"
    config = {"path": args.path, "tolerances": asdict(tol)}
    report = _single_report("formula", config, residuals, passed,
                            a.shape[0] // 2, time.perf_counter() - t0)
    _emit(report, args, human)
    return 0 if passed else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "suite":
        return _cmd_suite(args)
    if args.command == "certify":
        return _cmd_certify(args)
    return _cmd_formula(args)


if __name__ == "__main__":
    sys.exit(main())
