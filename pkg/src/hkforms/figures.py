"""Optional matplotlib rendering for report data.

Figures are written next to a CSV with the same numbers, so the plotted
data stays machine-readable.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def root_diagram(roots, outdir, stem="roots"):
    """Scatter of the root system in (H, -i adI) coordinates."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, f"{stem}.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["h", "ad_i", "length2", "class"])
        for r in roots:
            h, a = r["coords"]
            cls = "long" if r["length2"] == 8 else "short"
            w.writerow([h, a, r["length2"], cls])

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for r in roots:
        h, a = r["coords"]
        long = r["length2"] == 8
        ax.annotate("", xy=(h, a), xytext=(0, 0),
                    arrowprops=dict(arrowstyle="-|>",
                                    color="#b2182b" if long else "#2166ac",
                                    lw=1.6))
    lim = 3
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_aspect("equal")
    ax.axhline(0, color="0.8", lw=0.8, zorder=0)
    ax.axvline(0, color="0.8", lw=0.8, zorder=0)
    ax.set_xlabel("H eigenvalue")
    ax.set_ylabel("-i adI eigenvalue")
    ax.set_title("Root system (B2)")
    png_path = os.path.join(outdir, f"{stem}.png")
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, png_path]


def hodge_diamond(entries, m, outdir, stem="hodge"):
    """Heatmap of the (p, p') dimension table."""
    os.makedirs(outdir, exist_ok=True)
    grid = [[0] * (m + 1) for _ in range(m + 1)]
    for e in entries:
        grid[e["p"]][e["p_prime"]] = e["dim"]

    csv_path = os.path.join(outdir, f"{stem}.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["p", "p_prime", "dim"])
        for p in range(m + 1):
            for pp in range(m + 1):
                w.writerow([p, pp, grid[p][pp]])

    fig, ax = plt.subplots(figsize=(4.5, 4))
    im = ax.imshow(grid, origin="lower", cmap="viridis")
    for p in range(m + 1):
        for pp in range(m + 1):
            ax.text(pp, p, str(grid[p][pp]), ha="center", va="center",
                    color="w", fontsize=9)
    ax.set_xlabel("p'")
    ax.set_ylabel("p")
    ax.set_xticks(range(m + 1))
    ax.set_yticks(range(m + 1))
    ax.set_title("Hodge / weight space dimensions")
    fig.colorbar(im, ax=ax, shrink=0.85)
    png_path = os.path.join(outdir, f"{stem}.png")
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, png_path]
