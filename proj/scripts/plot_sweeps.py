#!/usr/bin/env python3
"""Plot outage-sweep CSVs produced by `fsolink outage-sweep`.

Each input file becomes one curve of analytic outage versus the sweep axis
(log-scale y). Rows carrying Monte-Carlo columns add points with 99%
confidence bars. Usage:

    python3 scripts/plot_sweeps.py sweep_a.csv sweep_b.csv -o outage.png
"""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

SCHEMA_TAG = "# fsolink.outage_sweep.v1"


def read_sweep(path):
    with open(path, newline="") as f:
        first = f.readline().rstrip("\n")
        if first != SCHEMA_TAG:
            raise SystemExit(f"{path}: expected '{SCHEMA_TAG}', got '{first}'")
        rows = list(csv.DictReader(f))
    if not rows:
        raise SystemExit(f"{path}: no data rows")
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv_files", nargs="+", help="outage-sweep CSV files")
    parser.add_argument("-o", "--output", default="outage_sweep.png")
    parser.add_argument("--title", default="Outage probability")
    parser.add_argument("--xlabel", default="transmit power [dBm]",
                        help="sweep axis label (the CSV stores bare axis values)")
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for path in args.csv_files:
        rows = read_sweep(path)
        x = [float(r["axis_value"]) for r in rows]
        y = [float(r["outage_analytic"]) for r in rows]
        label = f"{rows[0]['constellation']} {rows[0]['link_type']} ({path})"
        ax.plot(x, y, marker="o", ms=3, lw=1.2, label=label)
        mc = [(float(r["axis_value"]), float(r["outage_mc"]),
               float(r["mc_ci_low"]), float(r["mc_ci_high"]))
              for r in rows if r["outage_mc"]]
        if mc:
            mx, my, lo, hi = zip(*mc)
            yerr = ([m - l for m, l in zip(my, lo)], [h - m for m, h in zip(my, hi)])
            ax.errorbar(mx, my, yerr=yerr, fmt="x", ms=5, lw=0, elinewidth=1,
                        capsize=3, label=f"Monte Carlo ({path})")

    ax.set_yscale("log")
    ax.set_xlabel(args.xlabel)
    ax.set_ylabel("outage probability")
    ax.set_title(args.title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    sys.exit(main())
