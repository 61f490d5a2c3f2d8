"""Report rendering: matplotlib figures plus delimited result tables.

Everything lands in one output directory: report.json and report.csv
with the same row schema the CLI emits, and four figures covering the
bound polynomials, the full-class objective, the search gaps, and the
identity residuals on the reference corpus.
"""

from __future__ import annotations

import csv
import json
import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import __version__
from .funclasses import CLASS_TAGS, coefficient_set
from .grunsky import (check_identities, grunsky_coeffs, inequality_slack, psi1,
                      psi2, sqrt_transform, univalent_corpus)
from .search import (PHI, bound_table, difference_search, phi_value,
                     random_search, s_body_search)

ALL_TAGS = CLASS_TAGS + ("S",)


def _phi_figure(path: str) -> None:
    xs = np.linspace(0.0, 1.0, 400)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for k in sorted(PHI):
        ys = [float(phi_value(k, x)) for x in xs]
        ax.plot(xs, ys, label=f"phi_{k}")
        ax.plot([1.0], [ys[-1]], "k.", markersize=8)
    ax.set_xlabel("x = |c2|")
    ax.set_ylabel("bound envelope")
    ax.set_title("quartic envelopes of |h23(f_inv)|, maxima at x = 1")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _psi_figure(path: str) -> None:
    ys = np.linspace(0.0, 1.0 / math.sqrt(3.0), 400)
    zs = np.linspace(0.0, 1.0 / math.sqrt(5.0), 400)
    yy, zz = np.meshgrid(ys, zs, indexing="ij")
    feasible = 3.0 * yy * yy + 5.0 * zz * zz <= 1.0 + 1e-12
    fig, axes = plt.subplots(1, 2, figsize=(9.0, 4.0))
    for ax, fn, name, marker in (
            (axes[0], psi1, "psi1", (1.0 / math.sqrt(6.0), 0.0)),
            (axes[1], psi2, "psi2", (1.0 / math.sqrt(3.0), 0.0))):
        vals = np.where(feasible, fn(yy, zz), np.nan)
        mesh = ax.pcolormesh(yy, zz, vals, shading="auto")
        ax.plot([marker[0]], [marker[1]], "r*", markersize=12)
        ax.set_xlabel("y = |w13|")
        ax.set_ylabel("z = |w15|")
        ax.set_title(name)
        fig.colorbar(mesh, ax=ax)
    fig.suptitle("full-class objective profiles on 3y^2 + 5z^2 <= 1")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _gaps_figure(path: str, reports: dict) -> None:
    fig, axes = plt.subplots(1, 2, figsize=(9.0, 4.0), sharex=True)
    width = 0.38
    xs = np.arange(len(ALL_TAGS))
    for ax, functional in ((axes[0], "h23_inverse"), (axes[1], "difference")):
        best = [reports[(tag, functional)].best_value for tag in ALL_TAGS]
        bound = [reports[(tag, functional)].bound.value for tag in ALL_TAGS]
        ax.bar(xs - width / 2, best, width, label="search best")
        ax.bar(xs + width / 2, bound, width, label="bound")
        ax.set_xticks(xs)
        ax.set_xticklabels(ALL_TAGS)
        ax.set_title(functional)
        ax.legend()
    fig.suptitle("search maxima against sharp bounds")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _residuals_figure(path: str, names, residuals, slacks) -> None:
    xs = np.arange(len(names))
    fig, axes = plt.subplots(1, 2, figsize=(10.0, 4.0))
    axes[0].bar(xs, [max(r, 1e-18) for r in residuals])
    axes[0].set_yscale("log")
    axes[0].axhline(1e-10, color="r", linestyle="--", label="tolerance")
    axes[0].set_title("max identity residual")
    axes[0].legend()
    axes[1].bar(xs, slacks)
    axes[1].axhline(0.0, color="r", linestyle="--")
    axes[1].set_title("inequality slack at x = e1")
    for ax in axes:
        ax.set_xticks(xs)
        ax.set_xticklabels(names, rotation=45, ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report(out_dir: str, trials: int = 100_000, seed: int = 42,
                  order: int = 12, workers: int = 1):
    """Write report.json, report.csv, and four figures into out_dir.

    Returns (paths, failures) where failures holds witness strings for
    any bound or residual violation encountered while assembling.
    """
    os.makedirs(out_dir, exist_ok=True)
    failures: list[str] = []

    reports = {}
    for tag in CLASS_TAGS:
        reports[(tag, "h23_inverse")] = random_search(
            tag, trials=trials, seed=seed, workers=workers)
        reports[(tag, "difference")] = difference_search(
            tag, trials=trials, seed=seed, workers=workers)
    reports[("S", "h23_inverse")] = s_body_search(
        trials=trials, seed=seed, workers=workers)
    reports[("S", "difference")] = s_body_search(
        trials=trials, seed=seed, workers=workers, functional="difference")
    for (tag, functional), rep in reports.items():
        if rep.best_value > rep.bound.value + 1e-9:
            failures.append(
                f"FAIL {tag} {functional}: best {rep.best_value!r} at trial "
                f"{rep.best_trial} exceeds bound {rep.bound.exact}")

    rows = []
    for tag in ALL_TAGS:
        rep = reports[(tag, "h23_inverse")]
        rows.append({
            "class": tag,
            "bound_exact": rep.bound.exact,
            "bound_decimal": rep.bound.value,
            "best_value": rep.best_value,
            "gap": rep.gap,
            "seed": seed,
            "trials": trials,
        })

    corpus = univalent_corpus(max(order, 9))
    names, residuals, slacks = [], [], []
    for name, f in corpus.items():
        table = grunsky_coeffs(sqrt_transform(f), cutoff=7)
        cs = coefficient_set(f, "generic")
        worst = max(abs(complex(r)) for r in check_identities(cs, table))
        slack = inequality_slack(table, (1.0, 0.0, 0.0, 0.0))
        names.append(name)
        residuals.append(worst)
        slacks.append(slack)
        if worst > 1e-10 or slack < -1e-10:
            failures.append(f"FAIL {name}: residual {worst!r}, slack {slack!r}")

    report = {
        "command": "report",
        "config": {"class": None, "trials": trials, "seed": seed,
                   "order": order, "format": "json"},
        "results": rows,
        "version": __version__,
    }
    paths = []

    json_path = os.path.join(out_dir, "report.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(report, indent=2) + "\n")
    paths.append(json_path)

    csv_path = os.path.join(out_dir, "report.csv")
    fields = ["class", "bound_exact", "bound_decimal", "best_value",
              "gap", "seed", "trials"]
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    paths.append(csv_path)

    for fname, renderer, extra in (
            ("phi_curves.png", _phi_figure, ()),
            ("psi_objective.png", _psi_figure, ()),
            ("search_gaps.png", _gaps_figure, (reports,)),
            ("grunsky_residuals.png", _residuals_figure,
             (names, residuals, slacks))):
        fpath = os.path.join(out_dir, fname)
        renderer(fpath, *extra)
        paths.append(fpath)
    return paths, failures
