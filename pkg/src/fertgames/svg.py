"""Minimal SVG line chart, no plotting dependency.

One polyline, two axis lines, evenly spaced tick labels. Output is a plain
string with deterministic number formatting so charts are golden-testable.
"""

from __future__ import annotations

import math

_WIDTH = 720
_HEIGHT = 480
_MARGIN = 60
_TICKS = 5


def _fmt(x: float) -> str:
    if x == 0:
        x = 0.0
    return format(x, ".6g")


def line_chart(
    xs: list[float],
    ys: list[float],
    x_label: str,
    y_label: str,
) -> str:
    """Render y against x as a single-polyline SVG chart."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many x and y values, at least one")
    if not all(math.isfinite(v) for v in list(xs) + list(ys)):
        raise ValueError("chart values must be finite")

    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    if x_max == x_min:
        x_max = x_min + 1.0
    if y_max == y_min:
        y_max = y_min + 1.0

    plot_w = _WIDTH - 2 * _MARGIN
    plot_h = _HEIGHT - 2 * _MARGIN

    def px(x: float) -> float:
        return _MARGIN + (x - x_min) / (x_max - x_min) * plot_w

    def py(y: float) -> float:
        return _HEIGHT - _MARGIN - (y - y_min) / (y_max - y_min) * plot_h

    points = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(xs, ys))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
    ]
    for i in range(_TICKS):
        frac = i / (_TICKS - 1)
        tx = x_min + frac * (x_max - x_min)
        x_pos = _fmt(_MARGIN + frac * plot_w)
        lines.append(
            f'<text x="{x_pos}" y="{_HEIGHT - _MARGIN + 20}" font-size="12" '
            f'text-anchor="middle">{_fmt(tx)}</text>'
        )
        ty = y_min + frac * (y_max - y_min)
        y_pos = _fmt(_HEIGHT - _MARGIN - frac * plot_h)
        lines.append(
            f'<text x="{_MARGIN - 8}" y="{y_pos}" font-size="12" '
            f'text-anchor="end" dominant-baseline="middle">{_fmt(ty)}</text>'
        )
    lines.append(
        f'<text x="{_MARGIN + plot_w / 2:.6g}" y="{_HEIGHT - 12}" font-size="14" '
        f'text-anchor="middle">{x_label}</text>'
    )
    lines.append(
        f'<text x="16" y="{_MARGIN + plot_h / 2:.6g}" font-size="14" '
        f'text-anchor="middle" transform="rotate(-90 16 {_MARGIN + plot_h / 2:.6g})">'
        f"{y_label}</text>"
    )
    lines.append(
        f'<polyline points="{points}" fill="none" stroke="#2453a6" stroke-width="1.5"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
