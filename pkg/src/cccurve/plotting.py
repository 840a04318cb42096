"""Standalone SVG rendering of comparison curves.

The output is plain text built directly, so identical inputs always give
identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["PlotSeries", "PlotSpec", "emit_svg", "series_from_curve",
           "series_from_summary", "MAX_POINTS"]

MAX_POINTS = 2000

_SIZE = 500
_LEFT, _TOP, _SIDE = 70, 40, 400
_PALETTE = ("#1f5fbf", "#c0392b", "#2e8b57", "#7d3c98", "#d35400", "#34495e")
_REF_STYLE = {
    "identity": ('stroke="#555555" stroke-dasharray="6,4"', "identity"),
    "square": ('stroke="#e0a800"', "x²"),
    "opposed": ('stroke="#555555" stroke-dasharray="1.5,3"', "max(0, 2x−1)"),
}


@dataclass
class PlotSeries:
    x: np.ndarray
    y: np.ndarray
    label: str
    std: np.ndarray | None = None
    style: str | None = None


@dataclass
class PlotSpec:
    curves: list
    show_references: tuple = ()
    title: str = ""
    output: str | None = None


def series_from_curve(curve, label=None, style=None) -> PlotSeries:
    return PlotSeries(curve.x, curve.values,
                      label or " vs ".join(curve.measure_pair), style=style)


def series_from_summary(summary, label=None, style=None) -> PlotSeries:
    return PlotSeries(summary.x, summary.mean,
                      label or " vs ".join(summary.measure_pair),
                      std=summary.std, style=style)


def _downsample(*arrays):
    n = len(arrays[0])
    if n <= MAX_POINTS:
        return arrays
    idx = np.unique(np.round(np.linspace(0, n - 1, MAX_POINTS)).astype(np.int64))
    return tuple(a[idx] for a in arrays)


def _px(x, y):
    x = np.clip(np.asarray(x, dtype=np.float64), 0, 1)
    y = np.clip(np.asarray(y, dtype=np.float64), 0, 1)
    return _LEFT + x * _SIDE, _TOP + (1 - y) * _SIDE


def _points(x, y):
    px, py = _px(x, y)
    return " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))


def _with_origin(s):
    x = np.concatenate([[0.0], np.asarray(s.x, dtype=np.float64)])
    y = np.concatenate([[0.0], np.asarray(s.y, dtype=np.float64)])
    std = None if s.std is None else np.concatenate([[0.0], np.asarray(s.std)])
    return x, y, std


def emit_svg(plot: PlotSpec) -> bytes:
    """Render curves, optional std bands and reference curves on [0,1]^2."""
    if not plot.curves:
        raise ValueError("nothing to plot: empty curve list")
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}" font-family="sans-serif" font-size="12">',
        f'<rect x="{_LEFT}" y="{_TOP}" width="{_SIDE}" height="{_SIDE}" '
        'fill="white" stroke="black"/>',
    ]
    for t in np.linspace(0, 1, 6):
        px, py = _px(t, t)
        out.append(f'<text x="{px:.2f}" y="{_TOP + _SIDE + 16}" text-anchor="middle">{t:.1f}</text>')
        out.append(f'<text x="{_LEFT - 8}" y="{py + 4:.2f}" text-anchor="end">{t:.1f}</text>')
    out.append(f'<text x="{_LEFT + _SIDE / 2}" y="{_TOP + _SIDE + 36}" text-anchor="middle">x</text>')
    out.append(f'<text x="18" y="{_TOP + _SIDE / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {_TOP + _SIDE / 2})">CCC(x)</text>')
    if plot.title:
        out.append(f'<text x="{_SIZE / 2}" y="24" text-anchor="middle" '
                   f'font-size="14">{escape(plot.title)}</text>')

    legend = []
    grid = np.linspace(0, 1, 201)
    refs = {"identity": grid, "square": grid * grid,
            "opposed": np.maximum(0, 2 * grid - 1)}
    for name in plot.show_references:
        if name not in _REF_STYLE:
            raise ValueError(f"unknown reference curve {name!r}")
        style, text = _REF_STYLE[name]
        out.append(f'<polyline class="reference reference-{name}" fill="none" '
                   f'stroke-width="1.5" {style} points="{_points(grid, refs[name])}"/>')
        legend.append((style, text))

    for i, s in enumerate(plot.curves):
        color = s.style or _PALETTE[i % len(_PALETTE)]
        x, y, std = _with_origin(s)
        if std is not None:
            x, y, std = _downsample(x, y, std)
            upper = _points(x, y + std)
            lower = _points(x[::-1], (y - std)[::-1])
            out.append(f'<polygon class="band" fill="{color}" fill-opacity="0.25" '
                       f'stroke="none" points="{upper} {lower}"/>')
        else:
            x, y = _downsample(x, y)
        out.append(f'<polyline class="curve" fill="none" stroke="{color}" '
                   f'stroke-width="2" points="{_points(x, y)}"/>')
        legend.append((f'stroke="{color}"', s.label))

    for j, (style, text) in enumerate(legend):
        ly = _TOP + 16 + 16 * j
        lx = _LEFT + 10
        out.append(f'<g class="legend-entry"><line x1="{lx}" y1="{ly - 4}" x2="{lx + 24}" '
                   f'y2="{ly - 4}" stroke-width="2" {style}/>'
                   f'<text x="{lx + 30}" y="{ly}">{escape(str(text))}</text></g>')
    out.append("</svg>\n")
    return "\n".join(out).encode("utf-8")
