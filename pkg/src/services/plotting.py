"""
SVG figures for orbits and error series.

The x axis uses 1-based positions, as in the published figures: position k
shows library index n = k - 1.
"""

import logging
import math
from pathlib import Path
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

try:
    from ..models.errors import ExportError, InsufficientDataError
    from ..models.orbit import FixedOrbit, orbit_position
    from ..models.report import AuditReport
    from .error_analysis import log10_series
except ImportError:
    from models.errors import ExportError, InsufficientDataError
    from models.orbit import FixedOrbit, orbit_position
    from models.report import AuditReport
    from services.error_analysis import log10_series

logger = logging.getLogger(__name__)

ORBIT_WINDOW = (41, 101)
ERROR_WINDOW = (31, 70)
REFERENCE_LINE_SPAN = (30, 70)

FIGURE_FILES = {
    "fig1": "fig1_orbits_gh.svg",
    "fig2": "fig2_lower_bound.svg",
    "fig3": "fig3_orbits_ghp.svg",
    "fig4": "fig4_deviations.svg",
}

# Fixed hash salt and no Date metadata keep SVG output byte-stable.
SVG_RC = {
    "svg.hashsalt": "orbit-audit",
    "svg.fonttype": "path",
    "font.family": "serif",
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def window_indices(length: int, window: Tuple[int, int]) -> np.ndarray:
    """Library indices for a position window, clipped to the run; whole run if empty."""
    first, last = window
    lo = max(first - 1, 0)
    hi = min(last - 1, length - 1)
    if lo > hi:
        lo, hi = 0, length - 1
    return np.arange(lo, hi + 1)


def _positions(indices: np.ndarray) -> np.ndarray:
    return np.array([orbit_position(int(n)) for n in indices])


def _log_values(series, indices: np.ndarray) -> np.ndarray:
    logs = np.array(log10_series(series), dtype=float)[indices]
    logs[~np.isfinite(logs)] = np.nan
    return logs


def _save(fig, path: Path) -> Path:
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        logger.warning(f"Could not write {path}: {e}")
        raise ExportError(f"failed to write {path}: {e}") from e
    finally:
        plt.close(fig)
    logger.info(f"Wrote {path}")
    return path


def _prepare_directory(directory: Path) -> Path:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExportError(f"cannot create output directory {directory}: {e}") from e
    return directory


def _threshold_line(ax, threshold: float) -> None:
    level = math.log10(threshold)
    ax.plot(list(REFERENCE_LINE_SPAN), [level, level], "k-", linewidth=1.0)


def emit_plots(report: AuditReport, directory: Path) -> List[Path]:
    """
    Write the four figures of an audit report as SVG files.

    Args:
        report: complete audit report
        directory: output directory, created if missing

    Returns:
        Paths of fig1..fig4 in order

    Raises:
        InsufficientDataError: the run has fewer than two iterates
        ExportError: the directory or a file cannot be written
    """
    length = report.params.length
    if length < 2:
        raise InsufficientDataError(f"insufficient data: {length} iterate(s), need at least 2 to plot")

    directory = _prepare_directory(directory)
    threshold = report.crossings["lower_bound"].threshold_value
    g = np.array(report.orbit_g.values)
    h = np.array(report.orbit_h.values)
    p = np.array([float(v) for v in report.reference.values])

    orbit_idx = window_indices(length, ORBIT_WINDOW)
    error_idx = window_indices(length, ERROR_WINDOW)
    orbit_pos = _positions(orbit_idx)
    error_pos = _positions(error_idx)

    written = []
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots()
        ax.plot(orbit_pos, g[orbit_idx], "k-o", label="G")
        ax.plot(orbit_pos, h[orbit_idx], "-k*", label="H")
        ax.set_xlabel("n", fontsize=16)
        ax.set_ylabel(r"$G(X_n), H(X_n)$", fontsize=16)
        ax.legend()
        written.append(_save(fig, directory / FIGURE_FILES["fig1"]))

        fig, ax = plt.subplots()
        ax.plot(error_pos, _log_values(report.lower_bound, error_idx), "ko-")
        _threshold_line(ax, threshold)
        ax.set_xlabel("n", fontsize=16)
        ax.set_ylabel(r"$\log_{10}(\delta_{\alpha,n})$", fontsize=16)
        written.append(_save(fig, directory / FIGURE_FILES["fig2"]))

        fig, ax = plt.subplots()
        ax.plot(orbit_pos, g[orbit_idx], "k-o", label="G")
        ax.plot(orbit_pos, h[orbit_idx], "-k*", label="H")
        ax.plot(orbit_pos, p[orbit_idx], "-ks", label="P")
        ax.set_xlabel("n", fontsize=16)
        ax.set_ylabel(r"$G(X_n), H(X_n), P(X_n)$", fontsize=16)
        ax.legend()
        written.append(_save(fig, directory / FIGURE_FILES["fig3"]))

        fig, ax = plt.subplots()
        ax.plot(error_pos, _log_values(report.deviation_g, error_idx), "ko-", label=r"$\delta_{GP,n}$")
        ax.plot(error_pos, _log_values(report.deviation_h, error_idx), "k*-", label=r"$\delta_{HP,n}$")
        _threshold_line(ax, threshold)
        ax.set_xlabel("n", fontsize=16)
        ax.set_ylabel(r"$\log_{10}(\delta_{GP,n}), \log_{10}(\delta_{HP,n})$", fontsize=16)
        ax.legend()
        written.append(_save(fig, directory / FIGURE_FILES["fig4"]))

    return written


def emit_orbit_plot(orbits: Sequence[FixedOrbit], directory: Path, filename: str = "orbits.svg") -> Path:
    """Plot fixed orbits over the whole run (simulate workflow)."""
    if not orbits or len(orbits[0]) < 2:
        raise InsufficientDataError("insufficient data: need at least 2 iterates to plot")

    directory = _prepare_directory(directory)
    markers = {"G": "k-o", "H": "-k*"}
    indices = np.arange(len(orbits[0]))

    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots()
        for orbit in orbits:
            ax.plot(_positions(indices), np.array(orbit.values), markers.get(orbit.label, "-k"), label=orbit.label)
        ax.set_xlabel("n", fontsize=16)
        ax.set_ylabel(", ".join(f"${o.label}(X_n)$" for o in orbits), fontsize=16)
        ax.legend()
        return _save(fig, directory / filename)
