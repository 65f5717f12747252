"""Figures for reports, rendered off-screen to PNG files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .order import FinPoset  # noqa: E402
from .report import Report  # noqa: E402

STYLE = {"font.size": 9, "axes.spines.top": False, "axes.spines.right": False,
         "savefig.dpi": 120, "savefig.bbox": "tight"}


def _layout(P: FinPoset) -> dict[int, tuple[float, float]]:
    # height = length of the longest chain below, then spread each level
    level = {}
    for k in P.linear_extension():
        below = [j for j in P.down[k] if j != k]
        level[k] = 1 + max((level[j] for j in below), default=-1)
    rows: dict[int, list[int]] = {}
    for k, h in sorted(level.items()):
        rows.setdefault(h, []).append(k)
    pos = {}
    for h, ks in rows.items():
        for i, k in enumerate(ks):
            pos[k] = (i - (len(ks) - 1) / 2, float(h))
    return pos


def hasse(P: FinPoset, path: str | Path, title: str = "",
          highlight: Sequence[int] = ()) -> Path:
    """Draw the covering graph of ``P``; highlighted elements are filled."""
    pos = _layout(P)
    marked = set(highlight)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(3.0, 0.9 * len(P) ** 0.8), 3.0))
        for i, j in P.covers():
            (x0, y0), (x1, y1) = pos[i], pos[j]
            ax.plot([x0, x1], [y0, y1], color="0.55", lw=1, zorder=1)
        for k, (x, y) in pos.items():
            ax.scatter([x], [y], s=220, zorder=2, edgecolors="black",
                       color="tab:orange" if k in marked else "white")
            ax.annotate(str(P.elements[k]), (x, y), xytext=(0, 11), ha="center",
                        textcoords="offset points", fontsize=8)
        ax.set_axis_off()
        if title:
            ax.set_title(title)
        path = Path(path)
        fig.savefig(path)
        plt.close(fig)
    return path


def function_table(labels: Sequence[str], series: dict[str, Sequence], path: str | Path,
                   title: str = "") -> Path:
    """Grouped bars, one group per element, one bar per named function."""
    n, m = len(labels), max(1, len(series))
    width = 0.8 / m
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(3.5, 0.6 * n * m), 2.8))
        for s, (name, vals) in enumerate(series.items()):
            xs = [k + (s - (m - 1) / 2) * width for k in range(n)]
            ax.bar(xs, [float(v) for v in vals], width, label=name)
        ax.set_xticks(range(n))
        ax.set_xticklabels([str(x) for x in labels], rotation=30, ha="right")
        ax.axhline(0, color="black", lw=0.6)
        ax.legend(frameon=False, fontsize=7)
        if title:
            ax.set_title(title)
        path = Path(path)
        fig.savefig(path)
        plt.close(fig)
    return path


def suite_summary(reports: Sequence[Report], path: str | Path) -> Path:
    """Passed and failed check counts per report."""
    names = [_short(r.instance) for r in reports]
    passed = [sum(c.passed for c in r.checks) for r in reports]
    failed = [len(r.checks) - p for r, p in zip(reports, passed)]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.0, max(2.5, 0.22 * len(reports))))
        ys = range(len(reports))
        ax.barh(ys, passed, color="tab:green", label="pass")
        ax.barh(ys, failed, left=passed, color="tab:red", label="fail")
        ax.set_yticks(list(ys))
        ax.set_yticklabels(names, fontsize=6)
        ax.invert_yaxis()
        ax.set_xlabel("checks")
        ax.legend(frameon=False, fontsize=7, loc="lower right")
        path = Path(path)
        fig.savefig(path)
        plt.close(fig)
    return path


def _short(inst: dict) -> str:
    kind = inst.get("kind", "?")
    if "dim" in inst:
        return f"{kind} n={inst['dim']}"
    if "atoms" in inst:
        return f"{kind} atoms={len(inst['atoms'])}"
    if "poset" in inst:
        return f"{kind} |X|={len(inst['poset']['elements'])}"
    return kind
