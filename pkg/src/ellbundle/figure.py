"""Static SVG picture of the (a, b) octant for one enumeration report."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .enumeration import Branch, EnumerationReport, PairStatus  # noqa: E402

STATUS_STYLE = {
    PairStatus.UNKNOWN_SECTION: ("#9ca3af", "o", "no certified section"),
    PairStatus.CANDIDATE: ("#15803d", "o", "candidate Calabi-Yau"),
    PairStatus.FAILS: ("#b91c1c", "x", "residual != 0"),
    PairStatus.REDUCIBLE: ("#7c3aed", "s", "certified reducible"),
}


def render_figure(report: EnumerationReport, path: str | Path) -> None:
    """Draw the octant, the small region, the conic and the classified pairs."""
    s = report.surface
    amax = max([p.a for p in report.pairs] + [s.n0, 3]) + 2
    fig, ax = plt.subplots(figsize=(6, 5))

    # 2a - b < n0 inside a >= b >= 0: triangle (0,0), (n0/2, 0), (n0, n0)
    tri = np.array([[0, 0], [s.n0 / 2, 0], [s.n0, s.n0]])
    ax.fill(tri[:, 0], tri[:, 1], color="#fde68a", alpha=0.6, label="2a - b < n0")
    ax.plot([0, amax], [0, amax], color="black", lw=0.8)

    if report.branch is Branch.IRREDUCIBLE:
        a = np.linspace(0, amax, 2000)
        denom = a * s.L2 - s.c1L
        with np.errstate(divide="ignore", invalid="ignore"):
            b = (a * a * s.L2 - 2 * a * s.c1L + s.c1sq) / denom
        b[np.abs(denom) < 1e-9] = np.nan
        b[(b < -1) | (b > amax + 1)] = np.nan
        ax.plot(a, b, color="#2563eb", lw=1.2, label="conic")
    elif report.branch is Branch.REDUCIBLE_INTEGRAL:
        m = report.m
        ax.plot([m, m], [0, m], color="#2563eb", lw=1.2, label="a = m")
        ax.plot([m, amax], [0, amax - m], color="#2563eb", lw=1.2, ls="--", label="b = a - m")

    for status, (color, marker, label) in STATUS_STYLE.items():
        pts = [(p.a, p.b) for p in report.pairs if p.status is status]
        if pts:
            xs, ys = zip(*pts)
            ax.scatter(xs, ys, color=color, marker=marker, s=36, zorder=3, label=label)

    ax.set_xlim(-0.5, amax)
    ax.set_ylim(-0.5, amax)
    ax.set_aspect("equal")
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(s.name)
    ax.grid(True, lw=0.3)
    ax.legend(loc="upper left", fontsize=8)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
