"""Minimal polyline SVG emitter (no plotting dependency).

Plots are diagnostic extras and never influence verification outcomes.
"""

import math

_W, _H, _PAD = 640, 400, 48


def write_svg(path, series, title="", xlabel="", ylabel="", logy=False):
    """Write polyline plots for ``series`` = [(name, xs, ys), ...]."""
    pts = [(float(x), float(y)) for _, xs, ys in series
           for x, y in zip(xs, ys) if math.isfinite(x) and math.isfinite(y)]
    if not pts:
        raise ValueError("nothing to plot")
    if logy:
        pts = [(x, math.log10(y)) for x, y in pts if y > 0]
    x0 = min(p[0] for p in pts)
    x1 = max(p[0] for p in pts)
    y0 = min(p[1] for p in pts)
    y1 = max(p[1] for p in pts)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(x):
        return _PAD + (_W - 2 * _PAD) * (x - x0) / (x1 - x0)

    def sy(y):
        return _H - _PAD - (_H - 2 * _PAD) * (y - y0) / (y1 - y0)

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2}" y="20" text-anchor="middle" '
        f'font-size="14">{title}</text>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" '
        f'y2="{_H - _PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H - _PAD}" '
        f'stroke="black"/>',
        f'<text x="{_W / 2}" y="{_H - 10}" text-anchor="middle" '
        f'font-size="11">{xlabel}</text>',
        f'<text x="14" y="{_H / 2}" text-anchor="middle" font-size="11" '
        f'transform="rotate(-90 14 {_H / 2})">'
        f'{"log10 " if logy else ""}{ylabel}</text>',
    ]
    for tick in range(5):
        xv = x0 + (x1 - x0) * tick / 4
        yv = y0 + (y1 - y0) * tick / 4
        parts.append(f'<text x="{sx(xv):.1f}" y="{_H - _PAD + 14}" '
                     f'text-anchor="middle" font-size="9">{xv:.3g}</text>')
        parts.append(f'<text x="{_PAD - 4}" y="{sy(yv):.1f}" '
                     f'text-anchor="end" font-size="9">{yv:.3g}</text>')
    for i, (name, xs, ys) in enumerate(series):
        col = colors[i % len(colors)]
        coords = []
        for x, y in zip(xs, ys):
            y = math.log10(y) if logy else y
            if math.isfinite(x) and math.isfinite(y):
                coords.append(f"{sx(float(x)):.2f},{sy(float(y)):.2f}")
        parts.append(f'<polyline points="{" ".join(coords)}" fill="none" '
                     f'stroke="{col}" stroke-width="1.5"/>')
        parts.append(f'<text x="{_W - _PAD}" y="{_PAD + 14 * i}" '
                     f'text-anchor="end" font-size="10" '
                     f'fill="{col}">{name}</text>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))
        fh.write("\n")
