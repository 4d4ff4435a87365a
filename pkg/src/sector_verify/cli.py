"""``sector-verify`` command line: list-claims, run, eval.

Exit codes: 0 success, 1 at least one claim failure, 2 usage or input
error, 3 I/O error while writing the report.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .blocks import Block2x2
from .campaign import CampaignConfig, dumps_report, run_campaign
from .claims import GROUPS, list_claims
from .core import DEFAULT_TOL, Tolerance, ky_fan_norms, polar_decomposition, singular_values
from .errors import SectorVerifyError
from .functions import Omf, apply_omf, principal_power
from .io import load_operand, matrix_to_dict
from .means import adjoint_mean, arithmetic_mean, geometric_mean, mean_sigma
from .sectorial import sector_angle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _csv(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def parse_omf(text: str) -> Omf:
    """``power:0.5``, ``affine:0.3``, ``harmonic_like`` or ``log_mean``."""
    kind, _, param = text.partition(":")
    try:
        return Omf(kind, float(param) if param else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- list-claims


def cmd_list_claims(args, out) -> int:
    claims = list_claims(args.section)
    if args.json:
        json.dump([c.describe() for c in claims], out, indent=2)
        out.write("\n")
        return EXIT_OK
    width = max(len(c.anchor) for c in claims)
    for c in claims:
        out.write(f"{c.id:<4} {c.group:<10} {c.anchor:<{width}}  {c.hypothesis}\n")
    return EXIT_OK


# ---------------------------------------------------------------- run


def _config_from_args(args) -> CampaignConfig:
    data = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
    if args.claims is not None:
        data["claims"] = _csv(args.claims)
    if args.trials is not None:
        data["trials"] = args.trials
    if args.dims is not None:
        try:
            data["dims"] = [int(d) for d in _csv(args.dims)]
        except ValueError as exc:
            raise UsageError(f"--dims must be comma-separated integers: {exc}") from exc
    if args.seed is not None:
        data["seed"] = args.seed
    if args.tol_psd is not None or args.tol_margin is not None:
        tol = dict(data.get("tol", {}))
        if args.tol_psd is not None:
            tol["psd"] = args.tol_psd
        if args.tol_margin is not None:
            tol["margin"] = args.tol_margin
        data["tol"] = tol
    if args.out is not None:
        data["out"] = args.out
    try:
        return CampaignConfig.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_run(args, out) -> int:
    config = _config_from_args(args)

    def progress(cid, s):
        margin = "n/a" if s["min_margin"] is None else f"{s['min_margin']:+.3e}"
        print(f"{cid:<4} {s['passes']}/{s['trials']} passed  min margin {margin}", file=sys.stderr)

    report = run_campaign(config, progress=None if args.quiet else progress)
    text = dumps_report(report)
    if config.out is None:
        out.write(text)
    else:
        try:
            with open(config.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if report["summary"]["all_passed"] else EXIT_FAIL


# ---------------------------------------------------------------- eval


def _matrices(operands, count, op):
    if len(operands) != count:
        raise UsageError(f"{op} takes {count} operand file(s), got {len(operands)}")
    for x in operands:
        if isinstance(x, Block2x2):
            raise UsageError(f"{op} expects matrix operands, got a block")
    return operands


def _need_t(args, op, default=None):
    t = args.t if args.t is not None else default
    if t is None:
        raise UsageError(f"{op} needs --t")
    return t


def _need_f(args, op):
    if args.f is None:
        raise UsageError(f"{op} needs --f")
    return parse_omf(args.f)


def _tol(args) -> Tolerance:
    return Tolerance(psd=args.tol_psd if args.tol_psd is not None else DEFAULT_TOL.psd)


def _eval_op(args):
    op, ops = args.op, [load_operand(p) for p in args.operands]
    if op == "geometric_mean":
        A, B = _matrices(ops, 2, op)
        return geometric_mean(A, B, _need_t(args, op, 0.5), _tol(args))
    if op == "arithmetic_mean":
        A, B = _matrices(ops, 2, op)
        return arithmetic_mean(A, B, _need_t(args, op, 0.5))
    if op == "mean_sigma":
        A, B = _matrices(ops, 2, op)
        return mean_sigma(_need_f(args, op), A, B, _tol(args))
    if op == "adjoint_mean":
        A, B = _matrices(ops, 2, op)
        return adjoint_mean(_need_f(args, op), A, B, _tol(args))
    if op == "power":
        (A,) = _matrices(ops, 1, op)
        return principal_power(A, _need_t(args, op))
    if op == "apply_omf":
        (A,) = _matrices(ops, 1, op)
        return apply_omf(_need_f(args, op), A)
    if op == "partial_transpose":
        if len(ops) != 1:
            raise UsageError("partial_transpose takes 1 operand file")
        M = ops[0]
        if not isinstance(M, Block2x2):
            M = Block2x2.from_matrix(M)
        return M.partial_transpose().assemble()
    if op == "sector_angle":
        (A,) = _matrices(ops, 1, op)
        return {"value": sector_angle(A, _tol(args))}
    if op == "singular_values":
        (A,) = _matrices(ops, 1, op)
        return {"values": [float(s) for s in singular_values(A)]}
    if op == "ky_fan_norms":
        (A,) = _matrices(ops, 1, op)
        return {"values": [float(s) for s in ky_fan_norms(A)]}
    if op == "polar":
        (A,) = _matrices(ops, 1, op)
        U, P = polar_decomposition(A)
        return {"U": matrix_to_dict(U), "P": matrix_to_dict(P)}
    raise UsageError(f"unknown op {op!r}")


EVAL_OPS = (
    "geometric_mean",
    "arithmetic_mean",
    "mean_sigma",
    "adjoint_mean",
    "power",
    "apply_omf",
    "partial_transpose",
    "sector_angle",
    "singular_values",
    "ky_fan_norms",
    "polar",
)


def cmd_eval(args, out) -> int:
    result = _eval_op(args)
    if isinstance(result, np.ndarray):
        result = matrix_to_dict(result)
    json.dump(result, out)
    out.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sector-verify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-claims", help="one line per registered claim")
    p.add_argument("--section", choices=GROUPS, help="restrict to one claim group")
    p.add_argument("--json", action="store_true", help="emit an array of claim descriptors")
    p.set_defaults(func=cmd_list_claims)

    p = sub.add_parser("run", help="run a seeded property campaign and write its report")
    p.add_argument("--config", help="campaign config JSON; flags override its fields")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--trials", type=int, help="trials per claim per dimension")
    p.add_argument("--dims", help="comma-separated dimensions")
    p.add_argument("--seed", type=int, help="64-bit campaign seed")
    p.add_argument("--tol-psd", type=float)
    p.add_argument("--tol-margin", type=float)
    p.add_argument("--out", help="report path (default: standard output)")
    p.add_argument("--quiet", action="store_true", help="no per-claim progress on stderr")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("eval", help="apply one operation to matrix JSON files")
    p.add_argument("op", choices=EVAL_OPS)
    p.add_argument("operands", nargs="+", help="matrix or block JSON files")
    p.add_argument("--t", type=float, help="weight or exponent")
    p.add_argument("--f", help="registry function, e.g. power:0.5 or harmonic_like")
    p.add_argument("--tol-psd", type=float)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, SectorVerifyError, ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
