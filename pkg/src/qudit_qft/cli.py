"""Command-line front end: build, verify, apply, and report.

Subcommands
-----------
gen-matrix     compile the (possibly pruned) transform circuit to a matrix
verify         check the compiled circuit against the DFT oracle
apply          run the circuit on a state vector
bounds         per-bracket measured phase error vs. both closed-form bounds
compare-radix  state-space and gate-count scaling of base q against base 2

Data goes to --out (or stdout); diagnostics go to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage or input-parse error, 3 I/O
error.  All numeric output is printed with 17 significant digits so files
round-trip exactly and identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .analysis import approximation_report, capacity_metrics
from .circuit import apply_circuit, build_qft_circuit, circuit_to_matrix, dft_matrix
from .numerics import (
    DEFAULT_DIM_CAP,
    NORM_TOL,
    StateVector,
    adjoint,
    matmul,
    max_entry_distance,
)


class UsageError(Exception):
    """Invalid arguments or malformed input data; mapped to exit code 2."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# ---------------------------------------------------------------- formats

def render_state(state: StateVector) -> str:
    pairs = ",\n".join(
        f"    [{_fmt(a.real)}, {_fmt(a.imag)}]" for a in state.amplitudes
    )
    return (
        "{\n"
        f'  "radix": {state.radix},\n'
        f'  "digits": {state.digits},\n'
        f'  "amplitudes": [\n{pairs}\n  ]\n'
        "}\n"
    )


def parse_state(text: str, radix: int, digits: int, tolerance: float) -> StateVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed state file: not valid JSON ({exc})")
    if not isinstance(doc, dict) or not {"radix", "digits", "amplitudes"} <= set(doc):
        raise UsageError(
            "malformed state file: expected an object with keys "
            "radix, digits, amplitudes"
        )
    if doc["radix"] != radix or doc["digits"] != digits:
        raise UsageError(
            f"state shape mismatch: file is base-{doc['radix']} with "
            f"{doc['digits']} digits, command expects base-{radix} with {digits}"
        )
    raw = doc["amplitudes"]
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and len(p) == 2
        and all(isinstance(v, (int, float)) and math.isfinite(v) for v in p)
        for p in raw
    ):
        raise UsageError(
            "malformed state file: amplitudes must be [re, im] pairs of finite numbers"
        )
    if len(raw) != radix ** digits:
        raise UsageError(
            f"state shape mismatch: expected {radix ** digits} amplitudes, "
            f"file holds {len(raw)}"
        )
    amps = np.array([complex(re, im) for re, im in raw], dtype=np.complex128)
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if abs(norm_sq - 1.0) > min(tolerance, NORM_TOL):
        raise UsageError(f"state norm violation: norm**2 is {norm_sq!r}, expected 1")
    return StateVector(radix, digits, amps)


def render_matrix_json(matrix: np.ndarray) -> str:
    rows, cols = matrix.shape
    entries = ",\n".join(
        f"    [{_fmt(v.real)}, {_fmt(v.imag)}]" for v in matrix.ravel()
    )
    return (
        "{\n"
        f'  "rows": {rows},\n'
        f'  "cols": {cols},\n'
        f'  "entries": [\n{entries}\n  ]\n'
        "}\n"
    )


def render_matrix_csv(matrix: np.ndarray) -> str:
    lines = ["row,col,re,im"]
    rows, cols = matrix.shape
    for r in range(rows):
        for c in range(cols):
            v = matrix[r, c]
            lines.append(f"{r},{c},{_fmt(v.real)},{_fmt(v.imag)}")
    return "\n".join(lines) + "\n"


BOUNDS_HEADER = "q,n,target_digit,L,m,measured_t1,measured_max_t,bound_new,bound_coppersmith"


def render_bounds_csv(rows) -> str:
    lines = [BOUNDS_HEADER]
    for row in rows:
        lines.append(
            f"{row.radix},{row.digits},{row.target_digit},{row.fraction_len},"
            f"{row.dropped_count},{_fmt(row.measured_t1)},{_fmt(row.measured_max_t)},"
            f"{_fmt(row.bound_new)},{_fmt(row.bound_coppersmith)}"
        )
    return "\n".join(lines) + "\n"


def render_bounds_json(rows) -> str:
    objs = []
    for row in rows:
        objs.append(
            "  {"
            f'"q": {row.radix}, "n": {row.digits}, '
            f'"target_digit": {row.target_digit}, "L": {row.fraction_len}, '
            f'"m": {row.dropped_count}, "measured_t1": {_fmt(row.measured_t1)}, '
            f'"measured_max_t": {_fmt(row.measured_max_t)}, '
            f'"bound_new": {_fmt(row.bound_new)}, '
            f'"bound_coppersmith": {_fmt(row.bound_coppersmith)}'
            "}"
        )
    return "[\n" + ",\n".join(objs) + "\n]\n"


COMPARE_HEADER = "q,n,state_space,gates,state_space_ratio,qudit_savings_factor"


def _compare_rows(q: int, n: int):
    """Base-2 reference and base-q rows reaching at least q**n states."""
    rows = []
    radices = [2, q] if q != 2 else [2]
    for radix in radices:
        if radix == q:
            width = n
        else:
            width = max(1, math.ceil(n * math.log2(q)))
        metrics = capacity_metrics(radix, width)
        rows.append(
            (
                radix,
                width,
                radix ** width,
                width * (width + 1) // 2,
                metrics.state_space_ratio,
                metrics.qudit_savings_factor,
            )
        )
    return rows


def render_compare_csv(rows) -> str:
    lines = [COMPARE_HEADER]
    for radix, width, space, gates, ratio, savings in rows:
        lines.append(
            f"{radix},{width},{space},{gates},{_fmt(ratio)},{_fmt(savings)}"
        )
    return "\n".join(lines) + "\n"


def render_compare_json(rows) -> str:
    objs = [
        "  {"
        f'"q": {radix}, "n": {width}, "state_space": {space}, "gates": {gates}, '
        f'"state_space_ratio": {_fmt(ratio)}, '
        f'"qudit_savings_factor": {_fmt(savings)}'
        "}"
        for radix, width, space, gates, ratio, savings in rows
    ]
    return "[\n" + ",\n".join(objs) + "\n]\n"


# ---------------------------------------------------------------- commands

def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_params(args, need_cap: bool = False) -> None:
    if args.radix < 2:
        raise UsageError("--radix must be at least 2")
    if args.digits < 1:
        raise UsageError("--digits must be at least 1")
    keep_depth = getattr(args, "keep_depth", None)
    if keep_depth is not None and keep_depth < 1:
        raise UsageError("--keep-depth must be at least 1")
    if need_cap and args.radix ** args.digits > args.dim_cap:
        raise UsageError(
            f"dimension {args.radix ** args.digits} exceeds --dim-cap {args.dim_cap}"
        )


def cmd_gen_matrix(args) -> int:
    _check_params(args, need_cap=True)
    circuit = build_qft_circuit(args.radix, args.digits, args.keep_depth)
    matrix = circuit_to_matrix(circuit, dim_cap=args.dim_cap)
    render = render_matrix_csv if args.format == "csv" else render_matrix_json
    _emit(render(matrix), args.output_path)
    return 0


def cmd_verify(args) -> int:
    _check_params(args, need_cap=True)
    q, n = args.radix, args.digits
    circuit = build_qft_circuit(q, n)
    matrix = circuit_to_matrix(circuit, dim_cap=args.dim_cap)
    distance = max_entry_distance(matrix, dft_matrix(q ** n))
    residual = max_entry_distance(
        matmul(matrix, adjoint(matrix)), np.eye(q ** n, dtype=np.complex128)
    )
    expected_gates = n * (n + 1) // 2
    checks = [
        ("gate_count", circuit.gate_count == expected_gates,
         f"gate_count {circuit.gate_count} expected {expected_gates}"),
        ("oracle_distance", distance <= args.tolerance,
         f"oracle_distance {_fmt(distance)} tolerance {_fmt(args.tolerance)}"),
        ("unitarity_residual", residual <= args.tolerance,
         f"unitarity_residual {_fmt(residual)} tolerance {_fmt(args.tolerance)}"),
    ]
    lines = [f"{text} {'PASS' if ok else 'FAIL'}" for _, ok, text in checks]
    all_ok = all(ok for _, ok, _ in checks)
    lines.append(f"verify {'PASS' if all_ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.output_path)
    if not all_ok:
        for name, ok, _ in checks:
            if not ok:
                print(f"verification failed: {name}", file=sys.stderr)
    return 0 if all_ok else 1


def cmd_apply(args) -> int:
    _check_params(args)
    q, n = args.radix, args.digits
    if args.input_path is not None and args.basis is not None:
        raise UsageError("--in and --basis are mutually exclusive")
    if args.input_path is not None:
        with open(args.input_path, "r", encoding="utf-8") as fh:
            state = parse_state(fh.read(), q, n, args.tolerance)
    else:
        index = args.basis if args.basis is not None else 0
        if not 0 <= index < q ** n:
            raise UsageError(f"--basis {index} out of range for dimension {q ** n}")
        state = StateVector.basis(q, n, index)
    circuit = build_qft_circuit(q, n, args.keep_depth)
    result = apply_circuit(circuit, state)
    _emit(render_state(result), args.output_path)
    return 0


def cmd_bounds(args) -> int:
    _check_params(args)
    rows = approximation_report(args.radix, args.digits, args.keep_depth)
    render = render_bounds_json if args.format == "json" else render_bounds_csv
    _emit(render(rows), args.output_path)
    return 0


def cmd_compare_radix(args) -> int:
    _check_params(args)
    rows = _compare_rows(args.radix, args.digits)
    render = render_compare_json if args.format == "json" else render_compare_csv
    _emit(render(rows), args.output_path)
    return 0


# ---------------------------------------------------------------- parser

def _add_size_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--radix", type=int, required=True,
                   help="base q of each digit (>= 2)")
    p.add_argument("--digits", type=int, required=True,
                   help="register width n (>= 1)")


def _add_out_args(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--out", dest="output_path", default=None,
                   help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default=default_format,
                   help=f"output format (default: {default_format})")


def _add_keep_depth(p: argparse.ArgumentParser) -> None:
    p.add_argument("--keep-depth", dest="keep_depth", type=int, default=None,
                   help="prune controlled phases whose denominator exponent "
                        "exceeds this; omit to keep every gate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qudit-qft",
        description="Base-q quantum Fourier transform circuits: build, "
                    "simulate, prune, and verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-matrix", help="compile the transform circuit to a matrix")
    _add_size_args(p)
    _add_keep_depth(p)
    _add_out_args(p, "json")
    p.add_argument("--dim-cap", dest="dim_cap", type=int, default=DEFAULT_DIM_CAP,
                   help=f"largest allowed matrix dimension (default {DEFAULT_DIM_CAP})")
    p.set_defaults(handler=cmd_gen_matrix)

    p = sub.add_parser("verify", help="check the compiled circuit against the DFT oracle")
    _add_size_args(p)
    p.add_argument("--tolerance", type=float, default=1e-10,
                   help="pass threshold for the distance checks (default 1e-10)")
    p.add_argument("--dim-cap", dest="dim_cap", type=int, default=DEFAULT_DIM_CAP,
                   help=f"largest allowed matrix dimension (default {DEFAULT_DIM_CAP})")
    p.add_argument("--out", dest="output_path", default=None,
                   help="write the summary here instead of stdout")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("apply", help="run the transform circuit on a state vector")
    _add_size_args(p)
    _add_keep_depth(p)
    p.add_argument("--in", dest="input_path", default=None,
                   help="input state document (default: basis state 0)")
    p.add_argument("--basis", type=int, default=None,
                   help="apply to this computational basis state instead of a file")
    p.add_argument("--tolerance", type=float, default=1e-10,
                   help="norm tolerance for the input state (default 1e-10)")
    p.add_argument("--out", dest="output_path", default=None,
                   help="output path (default: stdout)")
    p.set_defaults(handler=cmd_apply)

    p = sub.add_parser("bounds", help="measured phase error vs. both bounds, per bracket")
    _add_size_args(p)
    _add_keep_depth(p)
    _add_out_args(p, "csv")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("compare-radix", help="scaling of base q against base 2")
    _add_size_args(p)
    _add_out_args(p, "csv")
    p.set_defaults(handler=cmd_compare_radix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
