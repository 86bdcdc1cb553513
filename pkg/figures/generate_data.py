"""Produce every CSV the figure recipes consume, via the gravcat CLI.

This script never imports the physics package: all numbers flow through
the command-line interface and its CSV schema, keeping a single source of
numerical truth.
"""

import argparse
import subprocess
import sys
from pathlib import Path

CURVE_POINTS = 120
GRID_POINTS = 41

# (output file, CLI arguments)
COMMANDS = [
    # fig2a: gamma > omega curve family
    *[
        (
            f"fig2a_gamma{g:g}_omega{w:g}.csv",
            ["sweep", "--axis", "temp", "--min", "0.01", "--max", "10",
             "--count", str(CURVE_POINTS), "--scale", "log",
             "--gamma", str(g), "--omega", str(w)],
        )
        for g, w in [(1, 0.1), (2, 0.2), (3, 0.3), (5, 0.5)]
    ],
    # fig2b: gamma < omega curve family
    *[
        (
            f"fig2b_gamma{g:g}_omega{w:g}.csv",
            ["sweep", "--axis", "temp", "--min", "0.01", "--max", "10",
             "--count", str(CURVE_POINTS), "--scale", "log",
             "--gamma", str(g), "--omega", str(w)],
        )
        for g, w in [(0.2, 0.8), (0.4, 1.0), (0.6, 1.2), (1.0, 1.4)]
    ],
    (
        "fig2c_gamma0.5_omega0.5.csv",
        ["sweep", "--axis", "temp", "--min", "0.01", "--max", "10",
         "--count", str(CURVE_POINTS), "--scale", "log",
         "--gamma", "0.5", "--omega", "0.5"],
    ),
    (
        "fig3a_grid_T0.01.csv",
        ["grid", "--axis", "gamma", "--min", "0.05", "--max", "5",
         "--count", str(GRID_POINTS),
         "--axis2", "omega", "--min2", "0.05", "--max2", "5",
         "--count2", str(GRID_POINTS), "--temp", "0.01"],
    ),
    (
        "fig4a_grid_omega2.csv",
        ["grid", "--axis", "temp", "--min", "0.02", "--max", "2.5",
         "--count", str(GRID_POINTS),
         "--axis2", "gamma", "--min2", "0.05", "--max2", "5",
         "--count2", str(GRID_POINTS), "--omega", "2"],
    ),
    (
        "fig5a_grid_gamma3.csv",
        ["grid", "--axis", "temp", "--min", "0.02", "--max", "2.5",
         "--count", str(GRID_POINTS),
         "--axis2", "omega", "--min2", "0.05", "--max2", "5",
         "--count2", str(GRID_POINTS), "--gamma", "3"],
    ),
    *[
        (
            f"fig7a_gamma{g:g}_omega0.5.csv",
            ["sweep", "--axis", "temp", "--min", "0.01", "--max", "10",
             "--count", str(CURVE_POINTS), "--scale", "log",
             "--gamma", str(g), "--omega", "0.5"],
        )
        for g in [0.5, 1.0, 2.0]
    ],
    (
        "fig8a_gamma2_omega1.csv",
        ["sweep", "--axis", "temp", "--min", "0.01", "--max", "10",
         "--count", str(CURVE_POINTS), "--scale", "log",
         "--gamma", "2", "--omega", "1"],
    ),
]


def generate(data_dir, force=False):
    """Run the CLI for every recipe input; returns the written paths."""
    data_dir = Path(data_dir)
    data_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, args in COMMANDS:
        out = data_dir / name
        if out.exists() and not force:
            written.append(out)
            continue
        cmd = [sys.executable, "-m", "gravcat.cli"] + args + ["--out", str(out)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        if proc.returncode != 0:
            raise RuntimeError(f"{' '.join(cmd)} failed:\n{proc.stderr}")
        written.append(out)
    return written


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir", default="figures/data", help="CSV output directory")
    parser.add_argument("--force", action="store_true", help="regenerate existing files")
    args = parser.parse_args(argv)
    for path in generate(args.data_dir, force=args.force):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
