"""Figures for the report command (written to files, never shown)."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def grading_lattice(H, decomposition: dict, io: int, path: str) -> str:
    """Dot size = number of window monomials in the bigraded piece H_ij."""
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    xs, ys, sizes = [], [], []
    for (i, j), mons in sorted(decomposition.items()):
        xs.append(i)
        ys.append(j)
        sizes.append(len(mons))
    top = max(sizes) if sizes else 1
    ax.scatter(xs, ys, s=[40 + 400 * s / top for s in sizes], color="tab:blue", alpha=0.7)
    for x, y, s in zip(xs, ys, sizes):
        ax.annotate(str(s), (x, y), ha="center", va="center", fontsize=7, color="white")
    ax.set_xticks(range(io))
    ax.set_yticks(range(io))
    ax.set_xlim(-0.6, io - 0.4)
    ax.set_ylim(-0.6, io - 0.4)
    ax.set_xlabel("left index i")
    ax.set_ylabel("right index j")
    ax.set_title(f"{H.name}: window dims of H_ij", fontsize=9)
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def twistor_heatmap(T, path: str) -> str:
    """Support of c^{0j}_{ss}; the lower triangle is the q-binomial pattern."""
    n = T.n
    grid = [[0 if T.c(0, j, s, s).is_zero() else 1 for s in range(n)] for j in range(n)]
    fig, ax = plt.subplots(figsize=(4.0, 3.6))
    ax.imshow(grid, cmap="Greys", vmin=0, vmax=1, origin="lower")
    ax.set_xlabel("s")
    ax.set_ylabel("j")
    ax.set_xticks(range(n))
    ax.set_yticks(range(n))
    ax.set_title(f"nonzero c^(0j)_(ss), {T.source}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def report_figures(H, report, directory: str) -> list:
    from .hopf import TruncationWindow
    from .twistor import TwistorError, twistor
    from .winding import graded_decomposition

    os.makedirs(directory, exist_ok=True)
    stem = "".join(ch if ch.isalnum() else "_" for ch in H.name).strip("_")
    out = []
    dec = graded_decomposition(H, TruncationWindow(H.default_window()), "both")
    out.append(grading_lattice(H, dec, report.io, os.path.join(directory, f"{stem}_grading.png")))
    try:
        T = twistor(H)
    except TwistorError:
        return out
    out.append(twistor_heatmap(T, os.path.join(directory, f"{stem}_twistor.png")))
    return out
