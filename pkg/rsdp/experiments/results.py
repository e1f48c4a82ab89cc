# This code is part of rsdp.
#
# (C) Copyright The rsdp Developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Regret records on disk: CSV tables, aggregation across seeds and SVG regret curves.
"""

from dataclasses import dataclass, asdict
from typing import Dict, List, Optional, Sequence

import matplotlib
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

from rsdp.exceptions import InvalidParameterError, RSDPError, ValidationError
from .experiment import RegretRecord

CSV_COLUMNS = ("algo", "seed", "episode", "v_star", "v_pik", "per_episode_regret", "cum_regret")


@dataclass
class AggregatedCurve:
    """Cumulative regret of one algorithm averaged over seeds.

    Attributes:
        algo: Algorithm name.
        episodes: Episode indices ``1..K``.
        mean: Mean cumulative regret per episode.
        std: Population standard deviation across seeds per episode.
        num_seeds: Number of seeds averaged.
    """

    algo: str
    episodes: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    num_seeds: int

    @property
    def final_mean(self) -> float:
        """Mean cumulative regret after the last episode."""
        return float(self.mean[-1])


def records_to_frame(records: Sequence[RegretRecord]) -> pd.DataFrame:
    """Records as a data frame with the CSV columns."""
    if not records:
        return pd.DataFrame({name: [] for name in CSV_COLUMNS})
    return pd.DataFrame([asdict(r) for r in records], columns=list(CSV_COLUMNS))


def emit_csv(records: Sequence[RegretRecord], path: str):
    """Write records to ``path`` as CSV with 12 significant digits and LF line endings.

    Raises:
        RSDPError: If the file cannot be written.
    """
    frame = records_to_frame(records)
    try:
        frame.to_csv(path, index=False, float_format="%.12g", lineterminator="\n")
    except OSError as err:
        raise RSDPError(f"Could not write results CSV {path}: {err}") from err


def load_csv(path: str) -> List[RegretRecord]:
    """Read records written by :func:`emit_csv`.

    Raises:
        ValidationError: If the header or a value is malformed.
        RSDPError: If the file cannot be read.
    """
    try:
        frame = pd.read_csv(path, dtype={"algo": str})
    except OSError as err:
        raise RSDPError(f"Could not read results CSV {path}: {err}") from err
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise ValidationError(f"Results CSV {path} is malformed: {err}") from err

    if tuple(frame.columns) != CSV_COLUMNS:
        raise ValidationError(
            f"Results CSV {path} has header {list(frame.columns)}, expected {list(CSV_COLUMNS)}."
        )
    try:
        return [
            RegretRecord(
                str(row.algo),
                int(row.seed),
                int(row.episode),
                float(row.v_star),
                float(row.v_pik),
                float(row.per_episode_regret),
                float(row.cum_regret),
            )
            for row in frame.itertuples(index=False)
        ]
    except (TypeError, ValueError) as err:
        raise ValidationError(f"Results CSV {path} holds invalid values: {err}") from err


def aggregate(records: Sequence[RegretRecord]) -> Dict[str, AggregatedCurve]:
    """Pointwise mean and population standard deviation of cumulative regret across seeds.

    Args:
        records: Records of one or more ``(algo, seed)`` runs.

    Returns:
        dict: :class:`AggregatedCurve` per algorithm, keyed and ordered by algorithm name.

    Raises:
        InvalidParameterError: If the records are empty or runs have different episode counts.
    """
    if not records:
        raise InvalidParameterError("Cannot aggregate an empty record list.")
    frame = records_to_frame(records)

    lengths = frame.groupby(["algo", "seed"])["episode"].agg(["count", "max"])
    if lengths["count"].nunique() != 1 or lengths["max"].nunique() != 1:
        raise InvalidParameterError("All runs must cover the same number of episodes.")
    if (lengths["count"] != lengths["max"]).any():
        raise InvalidParameterError("Every run must hold episodes 1..K exactly once.")

    curves = {}
    grouped = frame.groupby(["algo", "episode"])["cum_regret"]
    stats = pd.DataFrame(
        {"mean": grouped.mean(), "std": grouped.std(ddof=0), "n": grouped.count()}
    )
    for algo in sorted(frame["algo"].unique()):
        part = stats.loc[algo].sort_index()
        curves[algo] = AggregatedCurve(
            algo=algo,
            episodes=part.index.to_numpy(dtype=np.int64),
            mean=part["mean"].to_numpy(dtype=float),
            std=np.nan_to_num(part["std"].to_numpy(dtype=float)),
            num_seeds=int(part["n"].iloc[0]),
        )
    return curves


def emit_plot(curves: Dict[str, AggregatedCurve], path: str, title: Optional[str] = None):
    """Render mean cumulative regret curves with a shaded one-standard-deviation band as SVG.

    Raises:
        RSDPError: If the file cannot be written.
    """
    fig = Figure(figsize=(7, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    for curve in curves.values():
        (line,) = ax.plot(curve.episodes, curve.mean, label=curve.algo, linewidth=1.5)
        ax.fill_between(
            curve.episodes,
            curve.mean - curve.std,
            curve.mean + curve.std,
            color=line.get_color(),
            alpha=0.2,
            linewidth=0,
        )
    ax.set_xlabel("episode")
    ax.set_ylabel("cumulative regret")
    if title:
        ax.set_title(title)
    if curves:
        ax.legend(loc="upper left")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()

    try:
        with matplotlib.rc_context({"svg.hashsalt": "rsdp"}):
            fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as err:
        raise RSDPError(f"Could not write plot {path}: {err}") from err
