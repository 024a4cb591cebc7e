"""Figures for the ``bounds`` report."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_bounds(rows: list[tuple[int, int, int]], path: str | Path) -> Path:
    """Scatter the Hasse-Weil floor and the guaranteed genus against q."""
    path = Path(path)
    qs = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(qs, [r[2] for r in rows], "o-", label="guaranteed genus g_q")
    ax.plot(qs, [r[1] for r in rows], "s--", label="Hasse-Weil floor")
    ax.set_xlabel("q")
    ax.set_ylabel("genus")
    ax.set_title("Genus bounds for pointless hyperelliptic curves")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path
