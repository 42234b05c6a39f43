"""Command-line front end: ``lbanded <subcommand> [options]``.

Results are written as JSON to stdout (or ``--out``). Errors go to stderr
as ``{"error": <kind>, "message": <text>}`` with exit code 2 for usage and
parse errors and 3 for domain errors such as a singular matrix. ``verify``
exits with 1 when any check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import ops
from .bench import CLOSED, DENSE, OPS, bench
from .core import from_band, to_dense
from .damping import damped_covariance, damping_vector
from .exceptions import LBandError, ParseError
from .formats import read_matrix, read_vector
from .oracle import dense_charpoly
from .scalars import MODES, RATIONAL, ToleranceConfig, to_json_scalar
from .verification import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _js(x):
    if isinstance(x, (list, tuple)):
        return [_js(v) for v in x]
    return to_json_scalar(x)


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be strictly positive")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _sizes(text):
    try:
        return [_positive_int(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}") from exc


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mode", choices=MODES, default=RATIONAL, help="scalar arithmetic")
    p.add_argument("--eq-tol", type=_positive_float, default=1e-12)
    p.add_argument("--zero-tol", type=_positive_float, default=1e-12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="write the JSON result here instead of stdout")
    p.add_argument("--json", action="store_true", help="vector files are JSON arrays")
    p.add_argument("--format", choices=("json", "plain"), default="json", dest="fmt")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="lbanded", description="Closed-form algebra of L-banded matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def band_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--band", type=Path, required=True, help="band vector file")
        return p

    band_cmd("det", "determinant")
    band_cmd("inv", "tridiagonal inverse")
    band_cmd("quadform", "quadratic form x^T A x").add_argument("--x", type=Path, required=True)
    band_cmd("definiteness", "definiteness class")
    band_cmd("ldl", "LDL^T factors")
    band_cmd("chol", "Cholesky factor")
    p = band_cmd("cofactor", "cofactor and minor (1-based indices)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p = band_cmd("colsub", "determinant after replacing column k with b")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", type=Path, required=True)
    p = band_cmd("charpoly", "characteristic polynomial, ascending coefficients")
    p.add_argument(
        "--dense-fallback",
        action="store_true",
        help="use the dense Faddeev-LeVerrier oracle when the matrix is singular",
    )
    band_cmd("hprod", "band of H A for the structured upper-triangular H").add_argument(
        "--h", type=Path, required=True
    )
    band_cmd("square", "dense A^2")

    p = sub.add_parser("damp", parents=[common], help="optimal damping vector of a covariance")
    p.add_argument("--matrix", type=Path, required=True, help="covariance V as CSV")
    p.add_argument("--covariance", action="store_true", help="also report the damped covariance")

    p = sub.add_parser("verify", parents=[common], help="closed forms vs dense oracles")
    p.add_argument("--n-max", type=_positive_int, default=6)
    p.add_argument("--trials", type=_positive_int, default=100)

    p = sub.add_parser("bench", parents=[common], help="empirical scaling exponents")
    p.add_argument("--op", choices=OPS, required=True)
    p.add_argument("--sizes", type=_sizes, help="comma-separated n values")
    p.add_argument("--reps", type=_positive_int, default=5)
    p.add_argument("--impl", choices=(CLOSED, DENSE, "both"), default="both")
    return parser


def _band(args, tol):
    return from_band(read_vector(args.band, args.mode, args.json), mode=args.mode, tol=tol)


def _vector(args, path):
    return read_vector(path, args.mode, args.json)


def execute(args):
    """Run a parsed command and return its JSON-able result."""
    tol = ToleranceConfig(args.eq_tol, args.zero_tol)
    cmd = args.command

    if cmd == "verify":
        reports = run_verification(args.n_max, args.trials, args.seed, args.mode, tol)
        return [r.to_json() for r in reports], all(r.passed for r in reports)

    if cmd == "bench":
        records, exponents = bench(args.op, args.sizes, args.reps, args.impl, args.seed)
        return {"records": [r.to_json() for r in records], "exponents": exponents}, True

    if cmd == "damp":
        rows = read_matrix(args.matrix, args.mode)
        out = {}
        dv = damping_vector(rows, tol)
        out["zeta"] = _js(dv.zeta)
        out["normalizer"] = _js(dv.normalizer)
        if args.covariance:
            dc = damped_covariance(rows, tol)
            out["covariance"] = _js(dc.matrix.tolist())
            out["l_banded"] = dc.is_l_banded
            out["band"] = None if dc.band is None else _js(dc.band)
            out["max_deviation"] = _js(dc.deviation)
        return out, True

    A = _band(args, tol)
    if cmd == "det":
        return {"det": _js(ops.determinant(A))}, True
    if cmd == "inv":
        inv = ops.inverse(A)
        return {"diag": _js(inv.diag), "offdiag": _js(inv.offdiag)}, True
    if cmd == "quadform":
        return {"quadform": _js(ops.quadratic_form(A, _vector(args, args.x)))}, True
    if cmd == "definiteness":
        return {"class": ops.classify_definiteness(A).value}, True
    if cmd == "ldl":
        f = ops.ldl_decompose(A)
        return {"d": _js(f.d), "L": _js(f.dense_l())}, True
    if cmd == "chol":
        return {"L": _js(ops.cholesky_decompose(A).dense())}, True
    if cmd == "cofactor":
        return {
            "cofactor": _js(ops.cofactor(A, args.i, args.j)),
            "minor": _js(ops.minor(A, args.i, args.j)),
        }, True
    if cmd == "colsub":
        return {"det": _js(ops.det_column_substituted(A, args.k, _vector(args, args.b)))}, True
    if cmd == "charpoly":
        if args.dense_fallback and not ops.is_invertible(A):
            poly, method = dense_charpoly(to_dense(A).tolist()), "dense"
        else:
            poly, method = ops.characteristic_polynomial(A), "recurrence"
        return {"coeffs": _js(poly.coeffs), "method": method}, True
    if cmd == "hprod":
        return {"band": _js(ops.left_multiply_structured_upper(_vector(args, args.h), A).band)}, True
    if cmd == "square":
        return {"matrix": _js(ops.square(A).tolist())}, True
    raise UsageError(f"unknown command {cmd!r}")


def _plain(result) -> str:
    if isinstance(result, dict):
        return "".join(f"{k}: {json.dumps(v)}\n" for k, v in result.items())
    return "".join(json.dumps(r) + "\n" for r in result)


def _emit_error(kind, message, stderr):
    stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error("UsageError", str(exc), stderr)
        return EXIT_USAGE
    try:
        result, ok = execute(args)
    except UsageError as exc:
        _emit_error("UsageError", str(exc), stderr)
        return EXIT_USAGE
    except ParseError as exc:
        _emit_error("ParseError", str(exc), stderr)
        return EXIT_USAGE
    except LBandError as exc:
        _emit_error(type(exc).__name__, str(exc), stderr)
        return EXIT_DOMAIN
    text = _plain(result) if args.fmt == "plain" else json.dumps(result, separators=(",", ":")) + "\n"
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
