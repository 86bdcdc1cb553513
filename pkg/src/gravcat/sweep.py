"""Parameter sweeps, threshold bisection and deterministic result emission.

A sweep is declared over one or two of the axes T, gamma, omega with the
remaining parameters fixed; the engine evaluates every grid point through
:func:`gravcat.correlations.evaluate`.  Grid points are independent pure
calls, so evaluation may fan out over a thread pool; rows are always
assembled in row-major grid order, making the emitted bytes independent of
the worker count.

Thresholds (steering death temperatures, onset couplings, ...) are located
by bisection on the boundary of the zero set inside a user-supplied
bracket.  The swept quantities are piecewise with kinks where the max{0, .}
clamp activates, so derivative-based root finding is deliberately avoided.
"""

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from ._version import __version__
from .correlations import evaluate
from .model import ModelParams

__all__ = [
    "AXIS_NAMES",
    "QUANTITIES",
    "Axis",
    "SweepSpec",
    "ThresholdQuery",
    "ResultTable",
    "run_sweep",
    "find_threshold",
    "emit",
    "resolve_workers",
]

AXIS_NAMES = ("T", "gamma", "omega")
QUANTITIES = ("s_ab", "s_ba", "delta12", "concurrence", "gqd")

# a quantity is "zero" below this; the closed forms clamp at exactly 0,
# so the margin is generous
ZERO_TOL = 1e-12

WORKERS_ENV_VAR = "GRAVCAT_MAX_WORKERS"

_BISECTION_MAX_ITER = 200


def _canonical_axis(name):
    if name == "temp":
        return "T"
    if name in AXIS_NAMES:
        return name
    raise ValueError(f"axis must be one of {AXIS_NAMES} (or 'temp'), got {name!r}")


def resolve_workers(requested=None):
    """Worker count: requested, capped by $GRAVCAT_MAX_WORKERS, default cpu count."""
    cap = os.environ.get(WORKERS_ENV_VAR)
    cap = int(cap) if cap else None
    if cap is not None and cap < 1:
        raise ValueError(f"{WORKERS_ENV_VAR} must be >= 1, got {cap}")
    n = requested if requested is not None else (os.cpu_count() or 1)
    if n < 1:
        raise ValueError(f"worker count must be >= 1, got {n}")
    return min(n, cap) if cap is not None else n


@dataclass(frozen=True)
class Axis:
    """One swept parameter: inclusive range, point count and spacing."""

    name: str
    min: float
    max: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        object.__setattr__(self, "name", _canonical_axis(self.name))
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise ValueError("axis bounds must be finite")
        if not self.min < self.max:
            raise ValueError(f"axis {self.name}: min must be < max")
        if self.count != int(self.count):
            raise ValueError(f"axis {self.name}: count must be an integer")
        object.__setattr__(self, "count", int(self.count))
        if self.count < 2:
            raise ValueError(f"axis {self.name}: count must be >= 2")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"axis {self.name}: scale must be 'linear' or 'log'")
        if self.scale == "log" and self.min <= 0:
            raise ValueError(f"axis {self.name}: log scale requires min > 0")
        if self.name == "T" and self.min <= 0:
            raise ValueError("axis T: min must be > 0")
        if self.name != "T" and self.min < 0:
            raise ValueError(f"axis {self.name}: min must be >= 0")

    def values(self):
        """Grid points, inclusive of both endpoints."""
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """Declarative 1-D or 2-D scan.

    fixed supplies the non-swept parameters by name; quantities selects
    the report columns to emit (all five by default).
    """

    axis1: Axis
    axis2: Axis = None
    fixed: dict = field(default_factory=dict)
    quantities: tuple = QUANTITIES

    def __post_init__(self):
        object.__setattr__(self, "quantities", tuple(self.quantities))
        object.__setattr__(
            self, "fixed", {_canonical_axis(k): float(v) for k, v in self.fixed.items()}
        )
        axes = [self.axis1] + ([self.axis2] if self.axis2 is not None else [])
        names = [a.name for a in axes]
        if len(set(names)) != len(names):
            raise ValueError("axes must sweep distinct parameters")
        if set(names) & set(self.fixed):
            raise ValueError("swept parameters must not also be fixed")
        missing = set(AXIS_NAMES) - set(names) - set(self.fixed)
        if missing:
            raise ValueError(f"missing fixed values for {sorted(missing)}")
        for q in self.quantities:
            if q not in QUANTITIES:
                raise ValueError(f"unknown quantity {q!r}")
        if not self.quantities:
            raise ValueError("quantities must not be empty")
        if self.fixed.get("T", 1.0) <= 0:
            raise ValueError("fixed T must be > 0")
        for name in ("gamma", "omega"):
            if self.fixed.get(name, 0.0) < 0:
                raise ValueError(f"fixed {name} must be >= 0")
        # reject the zero-Hamiltonian corner before any evaluation
        zeroable = {
            name: (self.fixed.get(name) == 0.0)
            or any(a.name == name and a.min == 0.0 for a in axes)
            for name in ("gamma", "omega")
        }
        if zeroable["gamma"] and zeroable["omega"]:
            raise ValueError("grid contains omega = gamma = 0 (zero Hamiltonian)")

    def grid(self):
        """Row-major list of (T, gamma, omega) triples."""
        axes = [self.axis1] + ([self.axis2] if self.axis2 is not None else [])
        points = []
        values = [a.values() for a in axes]
        shape = [len(v) for v in values]
        for flat in range(int(np.prod(shape))):
            idx = np.unravel_index(flat, shape)
            coords = dict(self.fixed)
            for a, v, i in zip(axes, values, idx):
                coords[a.name] = float(v[i])
            points.append((coords["T"], coords["gamma"], coords["omega"]))
        return points

    def to_config(self):
        """Flat, CLI-flag-shaped echo of this spec (re-runnable as a config file)."""
        cfg = {
            "axis": self.axis1.name,
            "min": self.axis1.min,
            "max": self.axis1.max,
            "count": self.axis1.count,
            "scale": self.axis1.scale,
            "quantities": list(self.quantities),
        }
        if self.axis2 is not None:
            cfg.update(
                axis2=self.axis2.name,
                min2=self.axis2.min,
                max2=self.axis2.max,
                count2=self.axis2.count,
                scale2=self.axis2.scale,
            )
        cfg.update({("temp" if k == "T" else k): v for k, v in self.fixed.items()})
        return cfg


@dataclass(frozen=True)
class ThresholdQuery:
    """Bisection target: where `quantity` crosses zero along `axis`.

    The bracket [lo, hi] must have the quantity zero (<= 1e-12) at exactly
    one end and positive at the other.  `direction` records whether the
    caller expects an onset (zero at lo) or vanishing (zero at hi); it is
    descriptive and does not gate the search.
    """

    quantity: str
    axis: str
    lo: float
    hi: float
    fixed: dict
    tolerance: float = 1e-4
    direction: str = None

    def __post_init__(self):
        if self.quantity not in ("s_ab", "s_ba", "concurrence", "gqd"):
            raise ValueError(f"unsupported threshold quantity {self.quantity!r}")
        object.__setattr__(self, "axis", _canonical_axis(self.axis))
        object.__setattr__(
            self, "fixed", {_canonical_axis(k): float(v) for k, v in self.fixed.items()}
        )
        if self.axis in self.fixed:
            raise ValueError(f"axis {self.axis} must not also be fixed")
        if set(self.fixed) != set(AXIS_NAMES) - {self.axis}:
            raise ValueError(f"fixed must supply exactly {sorted(set(AXIS_NAMES) - {self.axis})}")
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not (math.isfinite(self.tolerance) and self.tolerance > 0):
            raise ValueError("tolerance must be > 0")
        if self.direction not in (None, "onset", "vanishing"):
            raise ValueError("direction must be 'onset' or 'vanishing'")

    def _value(self, x):
        coords = dict(self.fixed)
        coords[self.axis] = x
        report = evaluate(ModelParams(coords["omega"], coords["gamma"]), coords["T"])
        return getattr(report, self.quantity)


@dataclass(frozen=True)
class ResultTable:
    """Evaluated grid: column names, a (rows x columns) float array, metadata."""

    columns: tuple
    rows: np.ndarray
    meta: dict


def run_sweep(spec, workers=None, timestamp=None):
    """Evaluate every grid point of `spec`; deterministic row order.

    `timestamp` overrides the metadata timestamp (handy for reproducible
    emissions); by default the current UTC time is recorded.
    """
    points = spec.grid()
    n_workers = resolve_workers(workers)

    def one(point):
        t, gamma, omega = point
        return evaluate(ModelParams(omega, gamma), t)

    if n_workers == 1 or len(points) < 4:
        reports = [one(pt) for pt in points]
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            chunk = max(1, len(points) // (4 * n_workers))
            reports = list(pool.map(one, points, chunksize=chunk))

    columns = AXIS_NAMES + spec.quantities
    rows = np.array(
        [[getattr(r, c) for c in columns] for r in reports], dtype=float
    ).reshape(len(points), len(columns))
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    meta = {
        "version": __version__,
        "timestamp": timestamp,
        "command": "grid" if spec.axis2 is not None else "sweep",
        "spec": spec.to_config(),
        "columns": list(columns),
    }
    return ResultTable(columns=columns, rows=rows, meta=meta)


def find_threshold(query):
    """Axis value where the quantity crosses zero, within query.tolerance.

    Bisection keeps one zero-side and one positive-side endpoint, so no
    monotonicity beyond the bracket is assumed; an invalid bracket (both
    ends zero, or both positive) is rejected with both endpoint values.
    """
    f_lo = query._value(query.lo)
    f_hi = query._value(query.hi)
    lo_zero = f_lo <= ZERO_TOL
    hi_zero = f_hi <= ZERO_TOL
    if lo_zero == hi_zero:
        raise ValueError(
            f"invalid bracket for {query.quantity}: value({query.lo}) = {f_lo!r}, "
            f"value({query.hi}) = {f_hi!r} lie on the same side of zero"
        )
    lo, hi = query.lo, query.hi
    for _ in range(_BISECTION_MAX_ITER):
        if hi - lo <= query.tolerance:
            break
        mid = 0.5 * (lo + hi)
        if (query._value(mid) <= ZERO_TOL) == lo_zero:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _format_value(v):
    # 17 significant digits: enough to round-trip any double exactly
    return format(v, ".17g")


def emit(table, fmt, destination):
    """Serialize a ResultTable as CSV (header + rows) or JSON ({meta, rows}).

    Output is byte-deterministic: fixed column order, 17-significant-digit
    floats, '.' decimal separator, '\\n' line endings.
    """
    if fmt == "csv":
        lines = [",".join(table.columns)]
        lines += [",".join(_format_value(v) for v in row) for row in table.rows]
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        doc = {
            "meta": table.meta,
            "rows": [[float(v) for v in row] for row in table.rows],
        }
        payload = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")

    if hasattr(destination, "write"):
        destination.write(payload)
        return
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc
