"""Phase sweeps of the dosage, fringe statistics, and curve files."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dosage import DosageQuery, dosage_expectation
from .errors import BadGrid
from .fock import TwoModeState

MIN_POINTS = 8
FLAT_RELATIVE = 1e-10
TIE_TOL = 1e-12
FLAT = "FLAT"


@dataclass(frozen=True)
class PatternGrid:
    k: int
    phis: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if len(self.phis) < MIN_POINTS or len(self.phis) != len(self.values):
            raise BadGrid(f"grid needs >= {MIN_POINTS} matching phi/value points")
        if np.any(self.values < 0):
            raise ValueError("dosage values must be non-negative")

    @property
    def points(self) -> int:
        return len(self.phis)


@dataclass(frozen=True)
class PatternStats:
    visibility: float
    dominant_period: float | None  # None means the curve is flat
    enhancement: float | None

    @property
    def is_flat(self) -> bool:
        return self.dominant_period is None


def phase_grid(points: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(points) / points


def sweep(state: TwoModeState, k: int, points: int = 64, mix: float = 0.5) -> PatternGrid:
    """Evaluate the K-photon dosage on ``points`` uniform phases in [0, 2 pi)."""
    if points < MIN_POINTS:
        raise BadGrid(f"points must be >= {MIN_POINTS}, got {points}")
    phis = phase_grid(points)
    values = np.array(
        [dosage_expectation(state, DosageQuery.at(k, float(p), mix)).value for p in phis]
    )
    return PatternGrid(k, phis, values)


def visibility(grid: PatternGrid) -> float:
    hi, lo = float(np.max(grid.values)), float(np.min(grid.values))
    if hi + lo <= 0.0:
        return 0.0
    return min(max((hi - lo) / (hi + lo), 0.0), 1.0)


def _check_uniform(grid: PatternGrid) -> int:
    p = grid.points
    if p & (p - 1):
        raise BadGrid(f"grid size {p} is not a power of two")
    expected = phase_grid(p)
    if not np.allclose(grid.phis, expected, rtol=0.0, atol=1e-12):
        raise BadGrid("phase grid is not uniform on [0, 2 pi)")
    return p


def dominant_period(grid: PatternGrid) -> float | None:
    """Period 2 pi/m of the strongest nonzero DFT bin, or None when flat.

    Ties within ``TIE_TOL`` of the maximum go to the lowest frequency.
    """
    p = _check_uniform(grid)
    spectrum = np.abs(np.fft.rfft(grid.values))
    mean = float(np.mean(grid.values))
    harmonics = spectrum[1:]
    if mean <= 0.0 or np.all(harmonics < FLAT_RELATIVE * mean):
        return None
    top = harmonics.max()
    m = int(np.flatnonzero(harmonics >= top - TIE_TOL * max(top, 1.0))[0]) + 1
    return 2.0 * math.pi / m


def pattern_stats(grid: PatternGrid) -> PatternStats:
    period = dominant_period(grid)
    enhancement = None if period is None else math.pi / period
    return PatternStats(visibility(grid), period, enhancement)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def curve_to_dict(grid: PatternGrid, stats: PatternStats) -> dict:
    return {
        "k": int(grid.k),
        "phis": [float(x) for x in grid.phis],
        "values": [float(x) for x in grid.values],
        "visibility": float(stats.visibility),
        "dominant_period": FLAT if stats.is_flat else float(stats.dominant_period),
        "enhancement": None if stats.enhancement is None else float(stats.enhancement),
    }


def curve_from_dict(data: dict) -> tuple[PatternGrid, PatternStats]:
    period = data["dominant_period"]
    grid = PatternGrid(int(data["k"]), np.array(data["phis"], dtype=float), np.array(data["values"], dtype=float))
    stats = PatternStats(
        float(data["visibility"]),
        None if period == FLAT else float(period),
        None if data["enhancement"] is None else float(data["enhancement"]),
    )
    return grid, stats


def render_csv(grid: PatternGrid, stats: PatternStats) -> str:
    period = FLAT if stats.is_flat else _fmt(stats.dominant_period)
    lines = ["phi,dosage"]
    lines += [f"{_fmt(p)},{_fmt(v)}" for p, v in zip(grid.phis, grid.values)]
    lines.append(f"# visibility={_fmt(stats.visibility)}, period={period}")
    return "\n".join(lines) + "\n"


def render_json(grid: PatternGrid, stats: PatternStats) -> str:
    return json.dumps(curve_to_dict(grid, stats), indent=2) + "\n"


def emit_curve(grid: PatternGrid, stats: PatternStats, fmt: str, path) -> None:
    """Write the curve as ``csv`` or ``json``. I/O failures raise ``OSError``."""
    fmt = fmt.lower()
    if fmt == "csv":
        text = render_csv(grid, stats)
    elif fmt == "json":
        text = render_json(grid, stats)
    else:
        raise ValueError(f"unknown curve format {fmt!r}")
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def read_curve_json(path) -> tuple[PatternGrid, PatternStats]:
    return curve_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
