"""Command-line front end.

Subcommands: ``truth-table``, ``verify``, ``demo``, ``survey``, ``kd``,
``jordan-verify``.  Output is deterministic for a fixed (input, seed,
version); every report embeds the generating configuration.

Exit codes: 0 success, 1 property/golden failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, hilbert, logic, survey, verify
from .errors import QuasilogicError, SchemaError

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _parse_dims(spec: str) -> tuple[int, ...]:
    """Parse a dimension spec: '3', '2-8', or '2,4,6'."""
    dims: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo_s, hi_s = part.split("-", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty dimension range {part!r}")
            dims.extend(range(lo, hi + 1))
        else:
            dims.append(int(part))
    for d in dims:
        if d < 2:
            raise argparse.ArgumentTypeError(f"dimension must be >= 2, got {d}")
    return tuple(dims)


def _positive(kind: type, name: str):
    def convert(text: str):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {value}")
        return value

    return convert


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")


def _config_dict(args: argparse.Namespace, **extra) -> dict:
    data = {"version": __version__}
    for key in ("dims", "seed", "trials", "tol"):
        if hasattr(args, key):
            value = getattr(args, key)
            data[key] = list(value) if isinstance(value, tuple) else value
    data.update(extra)
    return data


# ---------------------------------------------------------------------------
# truth-table


def _cmd_truth_table(args: argparse.Namespace) -> int:
    computed = {
        name: {
            (r.a, r.b_alone, r.b_after): v for r, v in logic.truth_table(name)
        }
        for name in logic.CONNECTIVES
    }
    golden_ok = (
        computed["conjunction"] == logic.CONJUNCTION_REFERENCE
        and computed["inclusive_or"] == logic.INCLUSIVE_OR_REFERENCE
    )

    if args.format == "csv":
        if args.out is not None:
            directory = Path(args.out)
            directory.mkdir(parents=True, exist_ok=True)
            for name in logic.CONNECTIVES:
                (directory / f"truth_table_{name}.csv").write_text(
                    logic.truth_table_csv(name), encoding="utf-8"
                )
        else:
            for name in logic.CONNECTIVES:
                sys.stdout.write(f"# {name}\n{logic.truth_table_csv(name)}")
    elif args.format == "json":
        payload = {
            "config": _config_dict(args),
            "tables": {
                name: [
                    {"a": k[0], "b_alone": k[1], "b_after": k[2], "value": str(v)}
                    for k, v in sorted(computed[name].items())
                ]
                for name in logic.CONNECTIVES
            },
            "reference_match": golden_ok,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        blocks = [logic.truth_table_text(name) for name in logic.CONNECTIVES]
        status = "reference tables matched" if golden_ok else "REFERENCE MISMATCH"
        _emit("\n".join(blocks) + f"\n{status}\n", args.out)

    return EXIT_OK if golden_ok else EXIT_PROPERTY_FAILURE


# ---------------------------------------------------------------------------
# verify / jordan-verify


def _render_checks(results: list[verify.CheckResult], args: argparse.Namespace,
                   out: str | None, fmt: str) -> int:
    all_passed = all(r.passed for r in results)
    if fmt == "json":
        payload = {
            "config": _config_dict(args),
            "all_passed": all_passed,
            "checks": [r.as_dict() for r in results],
        }
        _emit(json.dumps(payload, indent=2), out)
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else f"FAIL({r.failure_kind})"
            lines.append(
                f"{status:16s} {r.name:42s} residual={r.residual:.3e} tol={r.tol:.3e}"
                + (f"  [{r.detail}]" if r.detail else "")
            )
        lines.append("all checks passed" if all_passed else "FAILURES PRESENT")
        _emit("\n".join(lines) + "\n", out)
    return EXIT_OK if all_passed else EXIT_PROPERTY_FAILURE


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_all(
        dims=args.dims, trials_per_dim=args.trials, seed=args.seed, tol=args.tol
    )
    return _render_checks(results, args, args.out, args.format)


def _cmd_jordan_verify(args: argparse.Namespace) -> int:
    results = verify.jordan_suite(
        dims=args.dims, trials_per_dim=min(args.trials, 200), seed=args.seed,
        tol=args.tol, reality_trials_per_dim=args.trials,
    )
    sweep = verify.jordan_sweep_report(
        dims=args.dims, trials_per_dim=args.trials, seed=args.seed, tol=args.tol
    )
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "all_passed": all_passed,
            "checks": [r.as_dict() for r in results],
            "formal_reality_sweep": sweep,
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return EXIT_OK if all_passed else EXIT_PROPERTY_FAILURE
    return _render_checks(results, args, args.out, "text")


# ---------------------------------------------------------------------------
# demo


def _cmd_demo(args: argparse.Namespace) -> int:
    psi = np.array([1.0, -3.0]) / np.sqrt(10.0)
    rho = hilbert.validate_density(np.outer(psi, psi.conj()))
    a = hilbert.validate_projector(np.diag([1.0, 0.0]))
    b = hilbert.rank_one_projector(np.array([1.0, 1.0]))

    p_a = hilbert.born_probability(rho, a)
    p_b = hilbert.born_probability(rho, b)
    disturbed = hilbert.nonselective_state(rho, a)
    p_b_after = hilbert.born_probability(disturbed, b)
    seq_ab = hilbert.sequential_probability(rho, a, b)
    seq_ba = hilbert.sequential_probability(rho, b, a)
    joint_op = hilbert.logical_joint(rho, a, b, "operational")
    joint_alg = hilbert.logical_joint(rho, a, b, "jordan")
    xor = hilbert.xor_expectation(rho, a, b, "operational")
    table = hilbert.quasi_prob_table(rho, a, b)
    wv = hilbert.weak_value(rho, a, b)

    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "state": hilbert.matrix_to_json(rho.matrix),
            "question_a": hilbert.matrix_to_json(a.matrix),
            "question_b": hilbert.matrix_to_json(b.matrix),
            "p_a": p_a,
            "p_b": p_b,
            "p_b_after_nonselective_a": p_b_after,
            "sequential_ab": seq_ab,
            "sequential_ba": seq_ba,
            "logical_joint_operational": joint_op,
            "logical_joint_algebraic": joint_alg,
            "xor_expectation": xor,
            "quasi_prob_cells": {f"{k[0]}{k[1]}": v for k, v in sorted(table.cells.items())},
            "weak_value": {"re": wv.real, "im": wv.imag},
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return EXIT_OK

    clamp = hilbert.clamp_probability
    lines = [
        "Worked example on a two-level system",
        "state: pure (|0> - 3|1>)/sqrt(10);  A = |0><0|;  B = |+><+|",
        "",
        f"P(A=1)                      = {clamp(p_a):.6f}",
        f"P(B=1)                      = {clamp(p_b):.6f}",
        f"P(B=1 | nonselective A)     = {clamp(p_b_after):.6f}",
        f"P(A=1 then B=1)             = {clamp(seq_ab):.6f}",
        f"P(B=1 then A=1)             = {clamp(seq_ba):.6f}   (order matters)",
        "",
        f"logical joint (operational) = {joint_op:.6f}",
        f"logical joint (algebraic)   = {joint_alg:.6f}",
        f"xor expectation             = {xor:.6f}",
        f"weak value of A given B     = {wv.real:.6f} {wv.imag:+.6f}i  (outside [0, 1])",
        "",
        "quasi-probability table (raw values, negativity preserved):",
    ]
    for cell in hilbert.CELLS:
        lines.append(f"  P(A={cell[0]}, B={cell[1]}) = {table.cells[cell]:+.6f}")
    lines.append("")
    lines.append(f"cells sum to {table.total():.12f}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# kd


def _cmd_kd(args: argparse.Namespace) -> int:
    dim = args.dims[0]
    rho = hilbert.sample_state(dim, "mixed", seed=args.seed)
    basis_a = hilbert.sample_orthonormal_basis(dim, seed=args.seed + 1)
    basis_b = hilbert.sample_orthonormal_basis(dim, seed=args.seed + 2)
    table = hilbert.kd_distribution(rho, basis_a, basis_b, tol=args.tol)

    max_gap = 0.0
    for i in range(dim):
        for j in range(dim):
            pa = hilbert.rank_one_projector(basis_a[i])
            pb = hilbert.rank_one_projector(basis_b[j])
            max_gap = max(
                max_gap,
                abs(table[i, j].real - hilbert.logical_joint(rho, pa, pb, "jordan")),
            )

    total = complex(table.sum())
    min_real = float(table.real.min())
    if args.format == "json":
        payload = {
            "config": _config_dict(args),
            "cells": [
                {"i": i, "j": j, "re": float(table[i, j].real), "im": float(table[i, j].imag)}
                for i in range(dim)
                for j in range(dim)
            ],
            "sum": {"re": total.real, "im": total.imag},
            "min_real_part": min_real,
            "max_gap_to_logical_joint": max_gap,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        lines = ["i,j,re,im"]
        for i in range(dim):
            for j in range(dim):
                lines.append(f"{i},{j},{table[i, j].real!r},{table[i, j].imag!r}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"Kirkwood-Dirac distribution, dim={dim}, seed={args.seed}",
            f"cells sum to {total.real:.12f} {total.imag:+.3e}i",
            f"minimum real part: {min_real:.6f}",
            f"max |Re cell - logical joint|: {max_gap:.3e}",
            "",
        ]
        for i in range(dim):
            row = "  ".join(
                f"{table[i, j].real:+.4f}{table[i, j].imag:+.4f}i" for j in range(dim)
            )
            lines.append(f"  {row}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# survey


def _cmd_survey(args: argparse.Namespace) -> int:
    try:
        table = survey.load_counts(args.input)
    except FileNotFoundError:
        sys.stderr.write(f"error: input file not found: {args.input}\n")
        return EXIT_INPUT_ERROR
    except SchemaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR

    report = survey.classicality_report(
        table, iterations=args.trials, seed=args.seed, confidence=args.confidence
    )

    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.plot_csv()
    else:
        text = _survey_text(report)
    _emit(text, args.out)

    if args.svg is not None:
        Path(args.svg).write_text(report.to_svg(), encoding="utf-8")
    return EXIT_OK


def _survey_text(report: survey.ReconstructionReport) -> str:
    la, lb = report.label_a, report.label_b
    lines = [
        f"Two-order survey reconstruction: {la} / {lb}",
        f"group sizes: {la}-first n={report.n_ab}, {lb}-first n={report.n_ba}",
        "",
        f"{'cell':>10s} {'seq ' + la + '-first':>14s} {'seq ' + lb + '-first':>14s}"
        f" {'logical (AB)':>13s} {'logical (BA)':>13s} {'gap':>8s} {'flag':>5s}",
    ]
    for a in (1, 0):
        for b in (1, 0):
            seq_ab = report.seq_probs_ab[(a, b)]
            seq_ba = report.seq_probs_ba[(b, a)]
            flag = report.classicality_flags_ab[(a, b)] or report.classicality_flags_ba[(a, b)]
            lines.append(
                f"  {la}={a},{lb}={b} {seq_ab:14.4f} {seq_ba:14.4f}"
                f" {report.logical_ab[(a, b)]:13.4f} {report.logical_ba[(a, b)]:13.4f}"
                f" {report.order_invariance_gap[(a, b)]:8.4f} {str(flag):>5s}"
            )
    lines += [
        "",
        f"xor expectation: {la}-first {report.xor_ab:.4f}, {lb}-first {report.xor_ba:.4f}",
        f"question-order equality: z = {report.qq_statistic:+.4f}, p = {report.qq_p_value:.4f}",
        f"raw order effect: chi2({report.order_df}) = {report.order_statistic:.4f},"
        f" p = {report.order_p_value:.4g}",
        "",
        f"bootstrap: {report.iterations} iterations, {report.confidence:.0%} intervals,"
        f" seed {report.seed}",
    ]
    for which in ("logical_ab", "logical_ba"):
        for a in (1, 0):
            for b in (1, 0):
                lo, hi = report.bootstrap_intervals[which][(a, b)]
                lines.append(f"  {which} ({la}={a},{lb}={b}): [{lo:+.4f}, {hi:+.4f}]")
    flagged = [
        f"{which} ({a},{b})"
        for which, flags in (("logical_ab", report.classicality_flags_ab),
                             ("logical_ba", report.classicality_flags_ba))
        for (a, b), on in sorted(flags.items())
        if on
    ]
    lines.append("")
    lines.append(
        "non-classical cells: " + (", ".join(flagged) if flagged else "none")
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasilogic",
        description="Sequential yes-no question logic: exact truth tables, "
        "Hilbert-space quasi-probabilities, and survey reconstruction.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, dims: str = "2", trials: int = 1000) -> None:
        p.add_argument("--dim", dest="dims", type=_parse_dims, default=_parse_dims(dims),
                       help=f"dimension or range, e.g. 2, 2-8, 2,4,6 (default {dims})")
        p.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
        p.add_argument("--trials", type=_positive(int, "trials"), default=trials,
                       help=f"samples per dimension / bootstrap iterations (default {trials})")
        p.add_argument("--tol", type=_positive(float, "tol"), default=1e-10,
                       help="numerical tolerance (default 1e-10)")

    tt = sub.add_parser("truth-table", help="print the connective value tables")
    tt.add_argument("--format", choices=("json", "csv", "text"), default="text")
    tt.add_argument("--out", default=None,
                    help="output file (csv format: output directory)")
    tt.set_defaults(func=_cmd_truth_table)

    ver = sub.add_parser("verify", help="run every invariant suite")
    common(ver, dims="2-8", trials=100)
    ver.add_argument("--format", choices=("json", "text"), default="text")
    ver.add_argument("--out", default=None)
    ver.set_defaults(func=_cmd_verify)

    demo = sub.add_parser("demo", help="worked example with a negative joint probability")
    demo.add_argument("--format", choices=("json", "text"), default="text")
    demo.add_argument("--out", default=None)
    demo.set_defaults(func=_cmd_demo)

    kd = sub.add_parser("kd", help="Kirkwood-Dirac distribution on random bases")
    common(kd, dims="2")
    kd.add_argument("--format", choices=("json", "csv", "text"), default="text")
    kd.add_argument("--out", default=None)
    kd.set_defaults(func=_cmd_kd)

    sv = sub.add_parser("survey", help="reconstruct logical joints from a count file")
    sv.add_argument("input", help="count CSV (header: order,first,second,count)")
    sv.add_argument("--seed", type=int, default=42)
    sv.add_argument("--trials", type=_positive(int, "trials"), default=10_000,
                    help="bootstrap iterations (default 10000)")
    sv.add_argument("--confidence", type=float, default=0.95)
    sv.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sv.add_argument("--out", default=None)
    sv.add_argument("--svg", default=None, help="also write a grouped bar chart SVG")
    sv.set_defaults(func=_cmd_survey)

    jv = sub.add_parser("jordan-verify", help="symmetrised-product property sweep")
    common(jv, dims="2-8", trials=1000)
    jv.add_argument("--format", choices=("json", "text"), default="json")
    jv.add_argument("--out", default=None)
    jv.set_defaults(func=_cmd_jordan_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QuasilogicError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
