"""Render the figure recipes from the CSVs the CLI emitted.

Each recipe in recipes.json describes one panel: overlaid curves on a
(possibly log) temperature axis, or a heatmap pivoted from a 2-D grid
sweep.  No physics is recomputed here; anything numeric comes out of the
CSV files.
"""

import argparse
import json
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

HERE = Path(__file__).resolve().parent
DEFAULT_RECIPES = HERE / "recipes.json"

plt.rcParams.update({
    "figure.figsize": (5.0, 3.6),
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "font.size": 9,
})


class RecipeError(Exception):
    pass


def load_recipes(path=DEFAULT_RECIPES):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return {r["id"]: r for r in doc["recipes"]}


def _load_csv(path, required_columns):
    data = np.genfromtxt(path, delimiter=",", names=True)
    if data.dtype.names is None:
        raise RecipeError(f"{path}: not a CSV table")
    missing = [c for c in required_columns if c not in data.dtype.names]
    if missing:
        raise RecipeError(f"{path}: missing columns {missing}")
    data = np.atleast_1d(data)
    if data.size == 0 or np.all(np.isnan(data[data.dtype.names[0]])):
        raise RecipeError(f"{path}: no data rows")
    return data


def _render_curves(recipe, data_dir, ax):
    x_col = recipe["x"]["column"]
    needed = [x_col] + [s["column"] for s in recipe["series"]]
    for inp in recipe["inputs"]:
        data = _load_csv(Path(data_dir) / inp["csv"], needed)
        for series in recipe["series"]:
            label = series.get("label") or inp.get("label")
            # with several input files the first series carries the label
            if len(recipe["inputs"]) > 1 and series is not recipe["series"][0]:
                label = None
            ax.plot(
                data[x_col],
                data[series["column"]],
                linestyle={"solid": "-", "dashed": "--", "dotted": ":"}[series["style"]],
                color=series.get("color") or inp.get("color"),
                label=label,
                linewidth=1.4,
            )
    if recipe["x"].get("log"):
        ax.set_xscale("log")
    ax.set_xlabel(recipe["x"]["label"])
    ax.set_ylabel(recipe["y_label"])
    ax.legend(frameon=False, fontsize=8)


def _render_heatmap(recipe, data_dir, ax, fig):
    x_col = recipe["x"]["column"]
    y_col = recipe["y"]["column"]
    v_col = recipe["value"]["column"]
    data = _load_csv(Path(data_dir) / recipe["inputs"][0]["csv"], [x_col, y_col, v_col])
    xs = np.unique(data[x_col])
    ys = np.unique(data[y_col])
    if xs.size * ys.size != data.size:
        raise RecipeError(f"{recipe['id']}: rows do not form a full grid")
    # rows are row-major over (axis1, axis2); pivot by sorting on both keys
    order = np.lexsort((data[x_col], data[y_col]))
    grid = data[v_col][order].reshape(ys.size, xs.size)
    mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=recipe["value"]["label"])
    ax.set_xlabel(recipe["x"]["label"])
    ax.set_ylabel(recipe["y"]["label"])


def render(recipe, data_dir, out_dir):
    """Render one recipe; returns the written image path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots()
    try:
        if recipe["kind"] == "curves":
            _render_curves(recipe, data_dir, ax)
        elif recipe["kind"] == "heatmap":
            _render_heatmap(recipe, data_dir, ax, fig)
        else:
            raise RecipeError(f"{recipe['id']}: unknown kind {recipe['kind']!r}")
        ax.set_title(recipe["title"], fontsize=9)
        fig.tight_layout()
        out_path = out_dir / f"{recipe['id']}.png"
        fig.savefig(out_path)
    finally:
        plt.close(fig)
    return out_path


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir", default=str(HERE / "data"))
    parser.add_argument("--out-dir", default=str(HERE / "out"))
    parser.add_argument("--recipes", default=str(DEFAULT_RECIPES))
    parser.add_argument("--only", default=None, help="render a single figure id")
    parser.add_argument("--regenerate", action="store_true",
                        help="regenerate the CSVs through the CLI first")
    args = parser.parse_args(argv)

    if args.regenerate:
        import generate_data

        generate_data.generate(args.data_dir, force=True)

    recipes = load_recipes(args.recipes)
    targets = [args.only] if args.only else list(recipes)
    for rid in targets:
        if rid not in recipes:
            print(f"unknown figure id {rid!r}", file=sys.stderr)
            return 2
        print(render(recipes[rid], args.data_dir, args.out_dir))
    return 0


if __name__ == "__main__":
    sys.exit(main())
