"""Command-line front end: synthesis, certification, and table reproduction.

Subcommands: mubs, classical, quantum, noise, eacc, tables.  Artifacts are
written atomically; default seed 0 keeps runs byte-reproducible.  Exit codes:
0 on success, 1 on a module error (error JSON on stderr), 2 when a tables
run exceeds its tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import tables as tables_mod
from .channels import (
    SweepResult,
    critical_depolarizing,
    crossing_window,
    dephasing_sweep,
)
from .classical import classical_optimum
from .eacc import eacc_seesaw
from .errors import GracError
from .mubs import FunctionSet, classify_quadruple, full_mubs, is_mubs
from .quantum import pm_upper_bound, seesaw


def parse_label_spec(n: int, spec: str) -> FunctionSet:
    """Parse --labels: 'all', 'k=<m>[:class]', or comma-separated bitstrings."""
    spec = spec.strip()
    if spec == "all":
        return full_mubs(n)
    if spec.startswith("k="):
        body = spec[2:]
        qclass = None
        if ":" in body:
            body, qclass = body.split(":", 1)
        k = int(body)
        if k == 4:
            if qclass not in ("xor-closed", "open"):
                raise ValueError(
                    "cardinality 4 is ambiguous: use k=4:xor-closed or k=4:open"
                )
            ints = (1, 2, 4, 7) if qclass == "xor-closed" else (1, 2, 3, 4)
        else:
            if qclass is not None:
                raise ValueError("a class suffix only applies to k=4")
            ints = tuple(range(1, k + 1))
        return FunctionSet.from_ints(n, ints)
    fset = FunctionSet.from_bitstrings(spec)
    if fset.n != n:
        raise ValueError(
            f"label width {fset.n} disagrees with --n {n}; drop --n or fix the labels"
        )
    return fset


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".grac-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, payload: dict, text: str, csv: str | None = None) -> None:
    """Serialize the artifact in the requested format and write it if asked."""
    if args.fmt == "json":
        data = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.fmt == "text":
        data = text if text.endswith("\n") else text + "\n"
    else:
        if csv is None:
            raise ValueError(f"format csv is not available for {args.command}")
        data = csv
    if args.out:
        _atomic_write(args.out, data)


def _sweep_csv(sweep: SweepResult) -> str:
    lines = ["lambda,one_minus_lambda,quantum_value,classical_value,ratio"]
    for lam, oml, qv, cv, ratio in sweep.rows():
        lines.append(f"{lam!r},{oml!r},{qv!r},{cv!r},{ratio!r}")
    return "\n".join(lines) + "\n"


def _cmd_mubs(args) -> int:
    spec = args.check if args.check else args.labels
    fset = parse_label_spec(args.n, spec)
    ok = is_mubs(fset)
    qclass = classify_quadruple(fset).value if len(fset) == 4 else None
    payload = {
        "n": fset.n,
        "labels": [lab.bitstring() for lab in fset],
        "is_mubs": ok,
        "quadruple_class": qclass,
    }
    summary = f"MUBS: {'true' if ok else 'false'}"
    if qclass:
        summary += f"; quadruple class: {qclass}"
    print(summary)
    _emit(args, payload, summary)
    return 0


def _cmd_classical(args) -> int:
    fset = parse_label_spec(args.n, args.labels)
    value, strategies = classical_optimum(fset, max_strategies=args.max_strategies)
    payload = {
        "n": fset.n,
        "labels": [lab.bitstring() for lab in fset],
        "value": {"wins": value.wins, "total": value.total, "float": value.value},
        "strategies": [s.to_dict() for s in strategies],
    }
    summary = (
        f"classical optimum {value} = {value.value:.6f} for {len(fset)} questions "
        f"(n={fset.n}); kept {len(strategies)} optimal encodings"
    )
    print(summary)
    text = summary + "\n" + "\n".join(s.to_dict()["encoding"] for s in strategies)
    _emit(args, payload, text)
    return 0


def _cmd_quantum(args) -> int:
    fset = parse_label_spec(args.n, args.labels)
    report = seesaw(
        fset,
        restarts=args.restarts,
        max_iters=args.max_iters,
        tol=args.tol,
        seed=args.seed,
    )
    bound = pm_upper_bound(len(fset))
    payload = {
        "n": fset.n,
        "labels": [lab.bitstring() for lab in fset],
        "value": report.value,
        "upper_bound": bound,
        "iterations": report.iterations,
        "restarts_used": report.restarts_used,
        "converged": report.converged,
        "min_step_delta": report.min_step_delta,
        "seed": report.seed,
        "strategy": report.best_strategy.to_dict(),
    }
    summary = (
        f"quantum value {report.value:.9f} (bound {bound:.9f}; "
        f"{report.iterations} iterations, converged={report.converged})"
    )
    print(summary)
    _emit(args, payload, summary)
    return 0


def _cmd_noise(args) -> int:
    fset = parse_label_spec(args.n, args.labels)
    axis = tuple(float(c) for c in args.axis.split(","))
    if args.window:
        other = parse_label_spec(args.n, args.window)
        grid = None if args.grid_points == 101 else _grid(args.grid_points)
        low, high = crossing_window(
            fset,
            other,
            axis=axis,
            grid=grid,
            refine_tol=args.refine_tol,
            restarts=args.restarts,
            seed=args.seed,
        )
        payload = {"low": low, "high": high, "tol": args.refine_tol}
        summary = f"crossing window in 1-lambda: ({low:.4f}, {high:.4f})"
        print(summary)
        _emit(args, payload, summary)
        return 0
    if args.channel == "depolarizing":
        lam = critical_depolarizing(fset, restarts=args.restarts, seed=args.seed)
        payload = {
            "n": fset.n,
            "labels": [lab.bitstring() for lab in fset],
            "channel": "depolarizing",
            "lambda_crit": lam,
        }
        summary = f"critical depolarizing noise: lambda = {lam:.5f}"
        print(summary)
        _emit(args, payload, summary)
        return 0
    sweep = dephasing_sweep(
        fset,
        axis=axis,
        grid=_grid(args.grid_points),
        restarts=args.restarts,
        seed=args.seed,
    )
    payload = {
        "n": fset.n,
        "labels": [lab.bitstring() for lab in fset],
        "channel": "dephasing",
        "axis": list(axis),
        "lambda": list(sweep.lam),
        "values": list(sweep.values),
        "classical": {"wins": sweep.classical.wins, "total": sweep.classical.total},
        "ratio": list(sweep.ratio),
    }
    summary = (
        f"dephasing sweep along ({args.axis}): {sweep.values[0]:.6f} at lambda=0 "
        f"to {sweep.values[-1]:.6f} at lambda={sweep.lam[-1]:g}"
    )
    print(summary)
    _emit(args, payload, summary, csv=_sweep_csv(sweep))
    return 0


def _grid(points: int):
    if points < 2:
        raise ValueError("need at least two grid points")
    return [0.5 * i / (points - 1) for i in range(points)]


def _cmd_eacc(args) -> int:
    fset = parse_label_spec(args.n, args.labels)
    value, strategy, info = eacc_seesaw(
        fset,
        local_dim=args.local_dim,
        restarts=args.restarts,
        max_iters=args.max_iters,
        tol=args.tol,
        seed=args.seed,
        full_output=True,
    )
    payload = {
        "n": fset.n,
        "labels": [lab.bitstring() for lab in fset],
        "local_dim": args.local_dim,
        "value": value,
        "iterations": info["iterations"],
        "converged": info["converged"],
        "strategy": strategy.to_dict(),
    }
    summary = (
        f"eacc value {value:.9f} at local dimension {args.local_dim} "
        f"({info['iterations']} iterations, converged={info['converged']})"
    )
    print(summary)
    _emit(args, payload, summary)
    return 0


def _cmd_tables(args) -> int:
    which = tuple(t.strip() for t in args.which.split(",") if t.strip())
    reports = tables_mod.reproduce_tables(which, seed=args.seed)
    payload = []
    text_lines = []
    csv_lines = ["table,row,computed,reference,delta,passed"]
    all_passed = True
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        all_passed &= rep.passed
        line = f"table {rep.table_id}: {status} (max |delta| {rep.max_delta:.3e}, tolerance {rep.tolerance:g})"
        print(line)
        text_lines.append(line)
        rows = []
        for row in rep.rows:
            ok = rep.row_passed(row)
            rows.append(
                {
                    "label": row.label,
                    "computed": row.computed,
                    "reference": row.reference,
                    "delta": row.delta,
                    "passed": ok,
                    "detail": row.detail,
                }
            )
            text_lines.append(
                f"  {row.label}: computed {row.computed!r} vs {row.reference!r} "
                f"(delta {row.delta:.3e}) {'ok' if ok else 'EXCEEDS TOLERANCE'}"
            )
            csv_lines.append(
                f"{rep.table_id},{row.label!r},{row.computed!r},{row.reference!r},"
                f"{row.delta!r},{ok}"
            )
        payload.append(
            {
                "table_id": rep.table_id,
                "tolerance": rep.tolerance,
                "passed": rep.passed,
                "max_delta": rep.max_delta,
                "rows": rows,
            }
        )
    _emit(args, {"tables": payload}, "\n".join(text_lines), csv="\n".join(csv_lines) + "\n")
    return 0 if all_passed else 2


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=3, help="input width (default 3)")
    parser.add_argument(
        "--labels",
        default="all",
        help="question set: comma-separated bitstrings, 'all', or k=<m>[:class]",
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    parser.add_argument("--out", help="write the artifact to this path (atomic)")
    parser.add_argument(
        "--format",
        dest="fmt",
        choices=("json", "csv", "text"),
        default="json",
        help="artifact format (default json)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grac",
        description="Optimal strategies for parity-guessing one-bit communication games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mubs", help="check balance/unbiasedness of a question set")
    _add_common(p)
    p.add_argument("--check", metavar="LABELS", help="labels to check (overrides --labels)")
    p.set_defaults(func=_cmd_mubs)

    p = sub.add_parser("classical", help="exact classical optimum and strategies")
    _add_common(p)
    p.add_argument("--max-strategies", type=int, default=16)
    p.set_defaults(func=_cmd_classical)

    p = sub.add_parser("quantum", help="one-qubit see-saw optimization")
    _add_common(p)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--max-iters", type=int, default=10000)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=_cmd_quantum)

    p = sub.add_parser("noise", help="noise thresholds, dephasing sweeps, crossing windows")
    _add_common(p)
    p.add_argument("--channel", choices=("depolarizing", "dephasing"), default="depolarizing")
    p.add_argument("--axis", default="1,0,0", help="dephasing axis (default 1,0,0)")
    p.add_argument("--grid-points", type=int, default=101)
    p.add_argument("--window", metavar="LABELS", help="second set: report where --labels beats it")
    p.add_argument("--refine-tol", type=float, default=1e-4)
    p.add_argument("--restarts", type=int, default=8)
    p.set_defaults(func=_cmd_noise)

    p = sub.add_parser("eacc", help="entanglement-assisted see-saw optimization")
    _add_common(p)
    p.add_argument("--local-dim", type=int, choices=(2, 3, 4), default=2)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--max-iters", type=int, default=3000)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=_cmd_eacc)

    p = sub.add_parser("tables", help="recompute reference tables and report deltas")
    _add_common(p)
    p.add_argument("--which", default=",".join(tables_mod.TABLE_IDS))
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GracError, ValueError, OSError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
