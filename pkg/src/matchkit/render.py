"""Figures written next to CSV reports.

Each function takes already-computed data and a target path; rendering is
non-interactive (Agg) and PNG metadata is suppressed so identical inputs
give identical bytes.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["save_entropy_figure", "save_torus_sequence_figure",
           "save_measure_figure", "save_moment_figure"]

_SAVE_KW = dict(dpi=110, metadata={"Software": None})


def save_entropy_figure(points, d: int, label: str, path: str) -> None:
    """Entropy curve with its lower bound and the gap on a twin axis."""
    ps = [pt.p for pt in points]
    fig, (ax, ax2) = plt.subplots(2, 1, sharex=True, figsize=(6.4, 6.0),
                                  height_ratios=[3, 1])
    ax.plot(ps, [pt.entropy for pt in points], label="entropy", lw=1.6)
    ax.plot(ps, [pt.gurvits for pt in points], label=f"degree-{d} lower bound",
            lw=1.2, ls="--")
    ax.set_ylabel("per-vertex entropy")
    ax.legend(loc="lower center", fontsize=9)
    ax.set_title(label)
    ax2.plot(ps, [pt.gap for pt in points], lw=1.2, color="tab:red")
    ax2.set_xlabel("occupied fraction p")
    ax2.set_ylabel("gap")
    ax2.axhline(0.0, lw=0.6, color="0.5")
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def save_torus_sequence_figure(rows: Sequence[tuple[int, float, float]],
                               limit: float, path: str) -> None:
    ms = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ms, [r[1] for r in rows], marker="o", label="lambda(1)")
    ax.axhline(limit, ls="--", color="tab:gray", lw=1.0,
               label="Catalan/pi limit")
    ax.set_xlabel("torus side m")
    ax.set_ylabel("entropy at full packing")
    ax.set_xticks(list(ms))
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def save_measure_figure(atoms: Sequence[tuple[float, object]], path: str,
                        density: Optional[Sequence[tuple[float, float]]] = None,
                        label: str = "") -> None:
    """Stem plot of the atomic matching measure, optional density overlay."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    xs = [a[0] for a in atoms]
    ws = [float(a[1]) for a in atoms]
    ax.vlines(xs, 0, ws, lw=1.6)
    ax.plot(xs, ws, "o", ms=4)
    if density:
        ax.plot([p[0] for p in density], [p[1] for p in density],
                lw=1.0, ls="--", color="tab:gray", label="tree density")
        ax.legend()
    ax.set_xlabel("spectral location")
    ax.set_ylabel("mass")
    if label:
        ax.set_title(label)
    ax.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def save_moment_figure(rows: Sequence[tuple[int, int, object]], path: str,
                       family: str = "") -> None:
    orders = sorted({o for _, o, _ in rows})
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for o in orders:
        pts = [(m, float(val)) for m, oo, val in rows if oo == o]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
                label=f"order {o}")
    ax.set_xlabel("size")
    ax.set_ylabel("moment")
    ax.set_yscale("log")
    if family:
        ax.set_title(family)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
