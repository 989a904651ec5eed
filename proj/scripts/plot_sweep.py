#!/usr/bin/env python3
"""Plot one or more sweep result CSVs produced by `mmwave-lab sweep`.

Usage:
  python3 scripts/plot_sweep.py out/freq_sweep_tropics.csv [more.csv ...] \
      [--x-label "frequency (Hz)"] [--log-x] [--ci] [--siso] [--save plot.png]

Each file becomes one capacity curve (mean over trials); --ci shades the
percentile interval, --siso adds the 1x1 reference of the first file.
"""

import argparse
import csv


def load(path):
    rows = []
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            rows.append({k: (v if k == "snr_db_or_power_mode" else float(v))
                         for k, v in row.items()})
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("files", nargs="+")
    parser.add_argument("--x-label", default="sweep value")
    parser.add_argument("--log-x", action="store_true")
    parser.add_argument("--ci", action="store_true", help="shade the percentile interval")
    parser.add_argument("--siso", action="store_true", help="plot the SISO reference")
    parser.add_argument("--save", default=None)
    args = parser.parse_args()

    import matplotlib

    if args.save:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 4.5))
    for path in args.files:
        rows = load(path)
        x = [r["sweep_value"] for r in rows]
        mean = [r["mean_capacity_bps_hz"] for r in rows]
        (line,) = ax.plot(x, mean, label=path)
        if args.ci:
            ax.fill_between(x, [r["ci_low"] for r in rows], [r["ci_high"] for r in rows],
                            alpha=0.2, color=line.get_color())
    if args.siso:
        rows = load(args.files[0])
        ax.plot([r["sweep_value"] for r in rows], [r["siso_mean_bps_hz"] for r in rows],
                "k--", label="SISO reference")

    if args.log_x:
        ax.set_xscale("log")
    ax.set_xlabel(args.x_label)
    ax.set_ylabel("capacity (bits/s/Hz)")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    if args.save:
        fig.savefig(args.save, dpi=150)
        print(f"saved {args.save}")
    else:
        plt.show()


if __name__ == "__main__":
    main()
