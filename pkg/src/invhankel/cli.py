"""Command-line front end.

Subcommands: bounds, verify, search, extremal, grunsky, report. Every
run is seed-explicit and byte-reproducible: reports carry no
timestamps, floats are emitted with repr round-trip fidelity, and the
worker count is excluded from the config echo so parallel and serial
runs serialize identically. Exit codes: 0 success, 1 usage error,
2 verification failure (witness lines go to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .funclasses import CLASS_TAGS, coefficient_set, extremal
from .grunsky import (check_identities, full_class_bound,
                      full_class_bound_closed_form, grunsky_coeffs,
                      h23_inverse_from_grunsky, inequality_slack, sqrt_transform,
                      univalent_corpus)
from .hankel import h23_inverse
from .search import (CLASS_PHI, Bound, bound_table, difference_search,
                     maximize_phi, random_search, s_body_search, sharpness_check)
from .series import QComplex

ALL_TAGS = CLASS_TAGS + ("S",)
RESIDUAL_TOL = 1e-10
BOUND_TOL = 1e-9


def _fmt(x) -> str:
    """15-significant-digit decimal for floats, exact form otherwise."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QComplex):
        return str(x.re) if x.im == 0 else f"{x.re}{'+' if x.im >= 0 else ''}{x.im}i"
    if isinstance(x, complex):
        return f"{x.real:.15g}{'+' if x.imag >= 0 else ''}{x.imag:.15g}j"
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def _row(class_tag, bound, best_value=None, gap=None, seed=None, trials=None) -> dict:
    return {
        "class": class_tag,
        "bound_exact": bound.exact,
        "bound_decimal": bound.value,
        "best_value": best_value,
        "gap": gap,
        "seed": seed,
        "trials": trials,
    }


def _emit(report: dict, fmt: str, text_lines: list[str], out_path) -> None:
    if fmt == "json":
        payload = json.dumps(report, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        fields = ["class", "bound_exact", "bound_decimal", "best_value",
                  "gap", "seed", "trials"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in report["results"]:
            writer.writerow({k: ("" if row[k] is None else row[k]) for k in fields})
        payload = buf.getvalue()
    else:
        payload = "\n".join(text_lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _config_echo(args, keys) -> dict:
    values = {
        "class": args.class_tag,
        "trials": getattr(args, "trials", None),
        "seed": getattr(args, "seed", None),
        "order": args.order,
        "format": args.format,
        "functional": getattr(args, "functional", None),
        "exploratory": getattr(args, "exploratory", False),
    }
    return {k: values[k] for k in keys}


def _aligned(rows: list[tuple]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
            for r in rows]


def cmd_bounds(args) -> int:
    table = bound_table()
    results = [_row(tag, table["h23_inverse"][tag]) for tag in ALL_TAGS]
    lines = ["bound table: |h23(f_inv)| with a2 = 0"]
    lines += _aligned([("class", "exact", "decimal")] + [
        (tag, table["h23_inverse"][tag].exact, _fmt(table["h23_inverse"][tag].value))
        for tag in ALL_TAGS])
    lines.append("")
    lines.append("difference table: |h23(f_inv) - h23(f)| = 3|a3|^3")
    lines += _aligned([("class", "exact", "decimal")] + [
        (tag, table["difference"][tag].exact, _fmt(table["difference"][tag].value))
        for tag in ALL_TAGS])
    report = {
        "command": "bounds",
        "config": _config_echo(args, ("format",)),
        "results": results,
        "version": __version__,
    }
    _emit(report, args.format, lines, args.out)
    return 0


def _verify_class(tag: str, args, lines: list[str], failures: list[str]):
    """Run every gate for one class; returns the report row."""
    table = bound_table()
    bound = table["h23_inverse"][tag]
    diff_bound = table["difference"][tag]

    def gate(name: str, ok: bool, detail: str):
        if ok:
            lines.append(f"PASS {name}: {detail}")
        else:
            failures.append(f"FAIL {tag} {name}: {detail}")
            lines.append(f"FAIL {name}: {detail}")

    if tag == "S":
        grid_val = full_class_bound()
        closed = full_class_bound_closed_form()
        gate("grid_vs_closed_form", abs(grid_val - closed) <= BOUND_TOL,
             f"grid {_fmt(grid_val)} vs {_fmt(closed)}")
        rep = s_body_search(trials=args.trials, seed=args.seed, workers=args.workers)
        gate("body_h23_inverse", rep.best_value <= bound.value + BOUND_TOL,
             f"best {_fmt(rep.best_value)} at trial {rep.best_trial}, "
             f"bound {_fmt(bound.value)}, gap {_fmt(rep.gap)}")
        drep = s_body_search(trials=args.trials, seed=args.seed,
                             workers=args.workers, functional="difference")
        gate("body_difference", drep.best_value <= diff_bound.value + BOUND_TOL,
             f"best {_fmt(drep.best_value)}, bound {_fmt(diff_bound.value)}")
        gate("difference_attained", abs(drep.best_value - diff_bound.value) <= BOUND_TOL,
             f"best {_fmt(drep.best_value)} vs {_fmt(diff_bound.value)}")
        return _row(tag, bound, rep.best_value, rep.gap, args.seed, args.trials)

    try:
        sharp = sharpness_check(tag)
        gate("sharpness_exact", True, f"|h23_inv(extremal)| = {bound.exact}")
    except ArithmeticError as exc:
        sharp = math.nan
        gate("sharpness_exact", False, str(exc))
    gate("sharpness_float", abs(sharp - bound.value) <= 1e-12,
         f"{_fmt(sharp)} within 1e-12 of {_fmt(bound.value)}")

    x_star, phi_max = maximize_phi(CLASS_PHI[tag])
    gate("phi_max", abs(phi_max - bound.value) <= 1e-12 and abs(x_star - 1.0) <= 1e-12,
         f"phi_{CLASS_PHI[tag]}({_fmt(x_star)}) = {_fmt(phi_max)}")

    rep = random_search(tag, trials=args.trials, seed=args.seed, workers=args.workers)
    gate("search_h23_inverse", rep.best_value <= bound.value + BOUND_TOL,
         f"best {_fmt(rep.best_value)} at trial {rep.best_trial}, gap {_fmt(rep.gap)}")
    gate("injected_exact", rep.injected_exact == bound.fraction,
         f"extremal evaluates to {rep.injected_exact}")

    drep = difference_search(tag, trials=args.trials, seed=args.seed,
                             workers=args.workers)
    gate("search_difference", drep.best_value <= diff_bound.value + BOUND_TOL,
         f"best {_fmt(drep.best_value)} vs {diff_bound.exact}")
    gate("difference_injected_exact", drep.injected_exact == diff_bound.fraction,
         f"extremal evaluates to {drep.injected_exact}")

    f = extremal(tag, max(args.order, 9))
    t = grunsky_coeffs(sqrt_transform(f), cutoff=7)
    cs = coefficient_set(f, tag)
    residuals = [abs(complex(r)) for r in check_identities(cs, t)]
    slack = inequality_slack(t, (1.0, 0.0, 0.0, 0.0))
    cross = abs(complex(h23_inverse_from_grunsky(t)) - complex(h23_inverse(cs).h_finv))
    gate("grunsky_identities", max(residuals) <= RESIDUAL_TOL,
         f"max residual {_fmt(max(residuals))}")
    gate("grunsky_inequality", slack >= -RESIDUAL_TOL, f"slack {_fmt(slack)}")
    gate("grunsky_h23_cross_check", cross <= RESIDUAL_TOL,
         f"|table - direct| = {_fmt(cross)}")
    return _row(tag, bound, rep.best_value, rep.gap, args.seed, args.trials)


def cmd_verify(args) -> int:
    tags = (args.class_tag,) if args.class_tag else ALL_TAGS
    lines, failures, results = [], [], []
    for tag in tags:
        lines.append(f"verify {tag} seed={args.seed} trials={args.trials}")
        results.append(_verify_class(tag, args, lines, failures))
        lines.append("")
    if lines and lines[-1] == "":
        lines.pop()
    report = {
        "command": "verify",
        "config": _config_echo(args, ("class", "trials", "seed", "order", "format")),
        "results": results,
        "version": __version__,
    }
    _emit(report, args.format, lines, args.out)
    for witness in failures:
        print(witness, file=sys.stderr)
    return 2 if failures else 0


def cmd_search(args) -> int:
    tags = (args.class_tag,) if args.class_tag else ALL_TAGS
    lines, failures, results = [], [], []
    for tag in tags:
        if tag == "S":
            rep = s_body_search(trials=args.trials, seed=args.seed,
                                workers=args.workers, functional=args.functional)
        else:
            rep = random_search(tag, trials=args.trials, seed=args.seed,
                                workers=args.workers, functional=args.functional,
                                exploratory=args.exploratory)
        results.append(_row(tag, rep.bound, rep.best_value, rep.gap,
                            args.seed, args.trials))
        lines.append(
            f"search {tag} {args.functional} seed={args.seed} trials={args.trials} "
            f"best={_fmt(rep.best_value)} trial={rep.best_trial} gap={_fmt(rep.gap)}")
        if not args.exploratory and rep.best_value > rep.bound.value + BOUND_TOL:
            failures.append(
                f"FAIL {tag} bound_compliance: best {_fmt(rep.best_value)} at trial "
                f"{rep.best_trial} exceeds {rep.bound.exact} + 1e-9, "
                f"params {rep.best_params}")
    report = {
        "command": "search",
        "config": _config_echo(args, ("class", "trials", "seed", "order", "format",
                                      "functional", "exploratory")),
        "results": results,
        "version": __version__,
    }
    _emit(report, args.format, lines, args.out)
    for witness in failures:
        print(witness, file=sys.stderr)
    return 2 if failures else 0


def cmd_extremal(args) -> int:
    tags = (args.class_tag,) if args.class_tag else CLASS_TAGS
    if "S" in tags:
        print("error: the full class S has no single extremal here; "
              "pick one of R, C, Sstar, Ss", file=sys.stderr)
        return 1
    table = bound_table()["h23_inverse"]
    lines, results = [], []
    for tag in tags:
        cs = coefficient_set(extremal(tag, max(args.order, 6)), tag)
        res = h23_inverse(cs)
        lines.append(f"extremal {tag}: (a3, a4, a5) = "
                     f"({_fmt(cs.a3)}, {_fmt(cs.a4)}, {_fmt(cs.a5)})")
        lines.append(f"  h23(f) = {_fmt(res.h_f)}")
        lines.append(f"  h_finv = {_fmt(res.h_finv)}")
        lines.append(f"  difference = 3|a3|^3 = {_fmt(abs(res.difference))}")
        value = abs(complex(res.h_finv))
        results.append(_row(tag, table[tag], value, table[tag].value - value))
    report = {
        "command": "extremal",
        "config": _config_echo(args, ("class", "order", "format")),
        "results": results,
        "version": __version__,
    }
    _emit(report, args.format, lines, args.out)
    return 0


def cmd_grunsky(args) -> int:
    order = args.order
    if 2 * order - 1 < 16:
        print(f"error: --order {order} is too small for the degree-7 "
              "coefficient table; need at least 9", file=sys.stderr)
        return 1
    tol_bound = Bound("1e-10", RESIDUAL_TOL, None)
    lines, results, failures = [], [], []
    for name, f in univalent_corpus(order).items():
        t = grunsky_coeffs(sqrt_transform(f), cutoff=7)
        cs = coefficient_set(f, "generic")
        residuals = [abs(complex(r)) for r in check_identities(cs, t)]
        slack = inequality_slack(t, (1.0, 0.0, 0.0, 0.0))
        worst = max(residuals)
        lines.append(f"{name}: w11={_fmt(t.omega(1, 1))} w13={_fmt(t.omega(1, 3))} "
                     f"w33={_fmt(t.omega(3, 3))} max_residual={_fmt(worst)} "
                     f"slack={_fmt(slack)}")
        results.append(_row(name, tol_bound, worst, slack))
        if worst > RESIDUAL_TOL or slack < -RESIDUAL_TOL:
            failures.append(f"FAIL {name}: residual {_fmt(worst)}, slack {_fmt(slack)}")
    report = {
        "command": "grunsky",
        "config": _config_echo(args, ("order", "format")),
        "results": results,
        "version": __version__,
    }
    _emit(report, args.format, lines, args.out)
    for witness in failures:
        print(witness, file=sys.stderr)
    return 2 if failures else 0


def cmd_report(args) -> int:
    if not args.out:
        print("error: report requires --out DIR for figures and tables",
              file=sys.stderr)
        return 1
    from .report import render_report
    paths, failures = render_report(args.out, trials=args.trials, seed=args.seed,
                                    order=args.order, workers=args.workers)
    for p in paths:
        print(f"wrote {p}")
    for witness in failures:
        print(witness, file=sys.stderr)
    return 2 if failures else 0


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="invhankel",
                     description="Hankel determinant bounds for inverse "
                                 "functions: tables, verification, search.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, with_search=True):
        p.add_argument("--class", dest="class_tag", choices=ALL_TAGS, default=None)
        p.add_argument("--order", type=int, default=12)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None)
        if with_search:
            p.add_argument("--trials", type=int, default=100_000)
            p.add_argument("--seed", type=int, default=42)
            p.add_argument("--workers", type=int, default=1)

    p_bounds = sub.add_parser("bounds", help="print the sharp bound tables")
    common(p_bounds, with_search=False)
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="run every verification gate")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="randomized bound-compliance search")
    common(p_search)
    p_search.add_argument("--functional", choices=("h23_inverse", "difference"),
                          default="h23_inverse")
    p_search.add_argument("--exploratory", action="store_true",
                          help="free c1 (a2 != 0); no bound is enforced")
    p_search.set_defaults(func=cmd_search)

    p_extremal = sub.add_parser("extremal", help="evaluate class extremals")
    common(p_extremal, with_search=False)
    p_extremal.set_defaults(func=cmd_extremal)

    p_grunsky = sub.add_parser("grunsky", help="coefficient tables and "
                                               "identity residuals")
    common(p_grunsky, with_search=False)
    p_grunsky.set_defaults(func=cmd_grunsky)

    p_report = sub.add_parser("report", help="figures plus delimited tables")
    common(p_report)
    p_report.set_defaults(func=cmd_report)
    return parser


def run(args) -> int:
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return 1
    if getattr(args, "order", 12) < 6:
        print("error: --order must be >= 6", file=sys.stderr)
        return 1
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return 1
    return args.func(args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
