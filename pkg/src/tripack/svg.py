"""SVG rendering of packings.  Display only: coordinates are rounded to 12
significant digits, the certificate remains the source of truth."""

from __future__ import annotations

from .geometry import ORIENT_BASE

_PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
            "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac")

_SCALE = 640


def _fmt(v):
    return format(float(v), ".12g")


def container_outline(container):
    """Vertex loop of a container, counterclockwise."""
    kind, p = container.kind, container.params
    if kind == "unit_square":
        return [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    if kind == "rect":
        ox, oy = (float(v) for v in p["origin"])
        a, b = float(p["a"]), float(p["b"])
        return [(ox, oy), (ox + a, oy), (ox + a, oy + b), (ox, oy + b)]
    if kind == "square":
        s = float(p["side"])
        return [(0.0, 0.0), (s, 0.0), (s, s), (0.0, s)]
    if kind == "iso_tri":
        ax, ay = (float(v) for v in p["anchor"])
        c = float(p["c"])
        if p["orientation"] == ORIENT_BASE:
            return [(ax, ay), (ax + c, ay), (ax, ay + c)]
        return [(ax, ay), (ax - c, ay), (ax, ay - c)]
    if kind == "right_trap":
        b, h, big_l = float(p["b"]), float(p["h"]), float(p["L"])
        return [(0.0, 0.0), (big_l, 0.0), (big_l, h), (big_l - b, h)]
    raise ValueError(f"unknown container kind {kind!r}")


def render_svg(container, placements, annotation=None):
    """SVG text for a packing; y axis flipped so up in the model is up on
    screen, one polygon per placement with its index at the centroid."""
    outline = container_outline(container)
    xs = [x for x, _ in outline]
    ys = [y for _, y in outline]
    for pl in placements:
        for x, y in pl.vertices:
            xs.append(float(x))
            ys.append(float(y))
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    margin = 0.05 * span
    scale = _SCALE / span

    def pt(x, y):
        # flip y so larger model-y renders higher
        return ((x - xmin + margin) * scale, (ymax - y + margin) * scale)

    width = (xmax - xmin + 2 * margin) * scale
    height = (ymax - ymin + 2 * margin) * scale
    extra = 24 if annotation else 0
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height + extra)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height + extra)}">',
        f'<rect width="100%" height="100%" fill="white"/>',
    ]
    pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in
                   (pt(x, y) for x, y in outline))
    lines.append(f'<polygon points="{pts}" fill="none" stroke="#222" '
                 f'stroke-width="2"/>')
    for pl in placements:
        verts = [(float(x), float(y)) for x, y in pl.vertices]
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in
                       (pt(x, y) for x, y in verts))
        color = _PALETTE[pl.index % len(_PALETTE)]
        lines.append(f'<polygon points="{pts}" fill="{color}" '
                     f'fill-opacity="0.55" stroke="#333" stroke-width="1"/>')
        cx = sum(v[0] for v in verts) / 3
        cy = sum(v[1] for v in verts) / 3
        px, py = pt(cx, cy)
        size = max(9.0, min(18.0, scale * min(
            abs(verts[1][0] - verts[0][0]) + abs(verts[1][1] - verts[0][1]),
            1.0) * 0.25))
        lines.append(f'<text x="{_fmt(px)}" y="{_fmt(py)}" font-size="{_fmt(size)}" '
                     f'text-anchor="middle" dominant-baseline="middle" '
                     f'fill="#111" font-family="sans-serif">{pl.index}</text>')
    if annotation:
        lines.append(f'<text x="8" y="{_fmt(height + 16)}" font-size="13" '
                     f'fill="#444" font-family="monospace">{annotation}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path, container, placements, annotation=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(container, placements, annotation))
