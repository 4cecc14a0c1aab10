"""Region maps of the moduli sets P and Q.

The CSV export labels every node of a rational grid with its component; the
SVG export renders the same labels with matplotlib together with the circle
locus ``delta = 0`` (for P) or the diagonal (for Q).
"""

import csv
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .errors import RegionError  # noqa: E402
from .moduli import PTag, QTag, p_region, q_region  # noqa: E402

DEFAULT_BOUNDS = (Fraction(-3), Fraction(3), Fraction(-3), Fraction(3))
DEFAULT_STEP = Fraction(1, 50)
EXCLUDED = "EXCLUDED"

P_LABELS = [t.value for t in PTag] + [EXCLUDED]
Q_LABELS = [t.value for t in QTag] + [EXCLUDED]

_RC = {
    "font.size": 10,
    "axes.labelsize": 11,
    "axes.linewidth": 0.8,
    "xtick.direction": "in",
    "ytick.direction": "in",
    "svg.hashsalt": "torus-moduli",
    "svg.fonttype": "path",
}


def grid_axis(lo, hi, step):
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if step <= 0 or hi < lo:
        raise ValueError("grid needs lo <= hi and a positive step")
    n = int((hi - lo) / step)
    return [lo + k * step for k in range(n + 1)]


def cell_label(which, a, b):
    """Component label and boundary flag of one grid node."""
    try:
        region = p_region(a, b) if which == "P" else q_region(a, b)
    except RegionError:
        return EXCLUDED, False
    return region.tag.value, region.boundary


def region_grid(which, bounds=DEFAULT_BOUNDS, step=DEFAULT_STEP):
    """Rows ``(a, b, label, boundary)`` over the grid, x varying fastest."""
    if which not in ("P", "Q"):
        raise ValueError(f"unknown set {which!r}; expected 'P' or 'Q'")
    xmin, xmax, ymin, ymax = bounds
    xs, ys = grid_axis(xmin, xmax, step), grid_axis(ymin, ymax, step)
    return [(a, b, *cell_label(which, a, b)) for b in ys for a in xs]


def write_csv(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "label", "boundary"])
        for a, b, label, boundary in rows:
            w.writerow([str(a), str(b), label, "true" if boundary else "false"])


def read_csv(path):
    with open(path, newline="") as fh:
        r = csv.DictReader(fh)
        return [(Fraction(row["a"]), Fraction(row["b"]), row["label"], row["boundary"] == "true") for row in r]


def parabola_points(t_min=Fraction(-1), t_max=Fraction(2), samples=301):
    """The locus ``delta(u, v) = 0`` as ``(t^2, (1-t)^2)`` at rational ``t``."""
    ts = [t_min + (t_max - t_min) * Fraction(k, samples - 1) for k in range(samples)]
    return [(t * t, (1 - t) ** 2) for t in ts]


# label anchors: a representative interior point of each component
_P_ANCHORS = {
    "P1_0": (-1.5, 1.5), "P2_0": (-1.5, -1.5), "P3_0": (1.5, -1.5),
    "P1_1": (0.12, 0.12), "P2_1": (2.4, 0.35), "P3_1": (0.13, 2.55),
}
_Q_ANCHORS = {
    "Q1_0": (-1.5, 0.5), "Q2_0": (-1.5, 2.0), "Q3_0": (0.5, 2.0),
    "Q1_1": (-2.0, -1.0), "Q2_1": (0.3, 0.7), "Q3_1": (2.2, 1.5),
}


def _tex(label):
    letter, rest = label[0], label[1:]
    index, sup = rest.split("_")
    return rf"$\mathcal{{{letter}}}_{{{index}}}^{{{sup}}}$"


def render_svg(path, which, rows, bounds=DEFAULT_BOUNDS):
    labels = P_LABELS if which == "P" else Q_LABELS
    xmin, xmax, ymin, ymax = (float(b) for b in bounds)
    xs = sorted({r[0] for r in rows})
    ys = sorted({r[1] for r in rows})
    index = {lab: i for i, lab in enumerate(labels)}
    image = np.array([index[r[2]] for r in rows], dtype=float).reshape(len(ys), len(xs))

    colours = ["#c6dbef", "#fdd0a2", "#c7e9c0", "#6baed6", "#fd8d3c", "#74c476"]
    cmap = ListedColormap(colours + ["#f0f0f0", "#ffffff"][: len(labels) - len(colours)])
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.5, 5.5))
        ax.imshow(
            image, origin="lower", extent=(xmin, xmax, ymin, ymax), cmap=cmap,
            vmin=-0.5, vmax=len(labels) - 0.5, interpolation="nearest", aspect="equal",
        )
        if which == "P":
            curve = [(float(u), float(v)) for u, v in parabola_points()]
            ax.plot(*zip(*curve), color="k", lw=1.2, label=r"$\Delta(u,v)=0$")
            ax.set_xlabel(r"$u$")
            ax.set_ylabel(r"$v$")
            anchors = _P_ANCHORS
        else:
            lo, hi = max(xmin, ymin), min(xmax, ymax)
            ax.plot([lo, hi], [lo, hi], color="k", lw=1.2, label="diagonal")
            ax.set_xlabel(r"$X(\mathfrak{x})$")
            ax.set_ylabel(r"$X(\mathfrak{y})$")
            anchors = _Q_ANCHORS
        ax.axhline(0, color="0.3", lw=0.6)
        ax.axvline(0, color="0.3", lw=0.6)
        for label, (a, b) in anchors.items():
            if xmin < a < xmax and ymin < b < ymax:
                ax.text(a, b, _tex(label), ha="center", va="center", fontsize=12)
        ax.set_xlim(xmin, xmax)
        ax.set_ylim(ymin, ymax)
        ax.legend(loc="upper right", frameon=False)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
