"""Summary tables as TSV text and PNG heat maps."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def hard_table_tsv(rows: Mapping[int, list[int]]) -> str:
    width = max((len(r) for r in rows.values()), default=0)
    lines = ["n\t" + "\t".join(f"M{k}" for k in range(width))]
    for n in sorted(rows):
        cells = [str(x) for x in rows[n]] + [""] * (width - len(rows[n]))
        lines.append(f"{n}\t" + "\t".join(cells))
    return "\n".join(lines) + "\n"


def plot_hard_table(rows: Mapping[int, list[int]], path: str | Path) -> None:
    """Heat map of hard-diagram counts, rows n and columns the number of
    marked vertices; empty cells (m > n) are left blank."""
    ns = sorted(rows)
    width = max((len(rows[n]) for n in ns), default=1)
    grid = np.full((len(ns), width), np.nan)
    for i, n in enumerate(ns):
        grid[i, :len(rows[n])] = rows[n]
    fig, ax = plt.subplots(figsize=(1 + 0.6 * width, 1 + 0.5 * max(len(ns), 1)))
    shade = np.log1p(grid)
    ax.imshow(shade, cmap="Blues", aspect="auto")
    top = np.nanmax(shade) if np.isfinite(shade).any() else 0
    for i, n in enumerate(ns):
        for k, x in enumerate(rows[n]):
            dark = top > 0 and shade[i, k] > 0.6 * top
            ax.text(k, i, str(x), ha="center", va="center", fontsize=8,
                    color="white" if dark else "black")
    ax.set_xticks(range(width), [f"M{k}" for k in range(width)])
    ax.set_yticks(range(len(ns)), [str(n) for n in ns])
    ax.set_xlabel("marked vertices")
    ax.set_ylabel("n")
    ax.set_title("hard admissible diagrams")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
