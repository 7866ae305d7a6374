"""Render density functions to SVG with matplotlib.

Exactness lives in the JSON/CSV outputs; figures convert corners to floats
rounded to 12 significant digits, which is a rendering concern only.
matplotlib is imported lazily so the non-plotting commands stay fast.
"""

from __future__ import annotations

import io
from fractions import Fraction

from .pwl import PiecewiseLinear


def _plot_float(value: Fraction) -> float:
    return float(f"{float(value):.12g}")


def _polyline(f: PiecewiseLinear, x_max: Fraction) -> tuple[list[float], list[float]]:
    pts: list[tuple[Fraction, Fraction]] = []
    cs = f.corners
    if not cs:
        pts = [(Fraction(0), Fraction(0)), (x_max, Fraction(0))]
    else:
        if cs[0][0] > 0:
            pts.append((Fraction(0), Fraction(0)))
            if cs[0][1] > 0:
                pts.append((cs[0][0], Fraction(0)))
        pts.extend(cs)
        if cs[-1][1] > 0:
            pts.append((cs[-1][0], Fraction(0)))
        if cs[-1][0] < x_max:
            pts.append((x_max, Fraction(0)))
    return [_plot_float(x) for x, _ in pts], [_plot_float(y) for _, y in pts]


def render_density_figure(
    entries: list[tuple[int, PiecewiseLinear]],
    out,
    *,
    title: str = "",
    x_label: str = "radius",
    y_label: str = "fraction of cell",
) -> None:
    """Write an SVG figure of the given (k, function) curves to a path or
    text buffer."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x_max = max(
        (f.corners[-1][0] for _, f in entries if f.corners),
        default=Fraction(1),
    )
    fig, ax = plt.subplots(figsize=(7.0, 4.2), layout="constrained")
    for k, f in entries:
        xs, ys = _polyline(f, x_max)
        ax.plot(xs, ys, label=f"k = {k}", linewidth=1.6)
    ax.set_xlabel(x_label)
    ax.set_ylabel(y_label)
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    ax.set_xlim(left=0.0)
    ax.set_ylim(bottom=0.0)
    fig.savefig(out, format="svg")
    plt.close(fig)


def render_density_svg_text(entries: list[tuple[int, PiecewiseLinear]], **kwargs) -> str:
    buffer = io.StringIO()
    render_density_figure(entries, buffer, **kwargs)
    return buffer.getvalue()
