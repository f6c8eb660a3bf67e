"""Plain SVG 1.1 renderings of tilings.

Triangles are emitted as one <polygon> element each (so the element
count equals the cell count), the depth-0 boundary as emphasized
<path> strokes, and optional vertex labels as <text>.  Output contains
no timestamps or environment data: identical requests give identical
bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Set, Tuple

from .core import CapacityError, InvalidInputError
from .subdivision import ALGO_A, ALGO_B, ALGO_CLASSICAL, brocot_level, initial_bases
from .tiling import iter_triangles

RENDER_DEPTH_CAP = {ALGO_A: 6, ALGO_B: 16, ALGO_CLASSICAL: 16}

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
)


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".")


def render_svg(
    algo: str,
    depth: int,
    labels: bool = False,
    label_cap: int = 200,
    size: int = 800,
    margin: int = 40,
) -> str:
    """Render the depth-n tiling; returns the SVG document as a string."""
    cap = RENDER_DEPTH_CAP.get(algo)
    if cap is None:
        raise InvalidInputError(f"unknown algorithm {algo!r}")
    if depth < 0:
        raise InvalidInputError("depth must be nonnegative")
    if depth > cap:
        raise CapacityError(f"render depth {depth} exceeds capacity {cap} for {algo!r}")
    if algo == ALGO_CLASSICAL:
        return _render_classical(depth, labels, label_cap, size, margin)
    return _render_square(algo, depth, labels, label_cap, size, margin)


def _render_square(algo: str, depth: int, labels: bool, label_cap: int, size: int, margin: int) -> str:
    span = size - 2 * margin

    def sx(v: Fraction) -> str:
        return _fmt(margin + float(v) * span)

    def sy(v: Fraction) -> str:
        return _fmt(margin + (1.0 - float(v)) * span)

    out: List[str] = [_HEADER.format(w=size, h=size)]
    out.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>\n')
    out.append('<g fill="none" stroke="#555" stroke-width="0.6">\n')
    verts: Set[Tuple[int, int, int]] = set()
    for tri in iter_triangles(algo, depth):
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in tri.points())
        out.append(f'<polygon points="{pts}"/>\n')
        verts.update(tuple(v) for v in tri.vertices)
    out.append("</g>\n")
    out.append('<g fill="none" stroke="#000" stroke-width="2">\n')
    for basis in initial_bases(algo):
        pts = [v.point() for v in basis.vectors]
        d = "M " + " L ".join(f"{sx(x)} {sy(y)}" for x, y in pts) + " Z"
        out.append(f'<path d="{d}"/>\n')
    out.append("</g>\n")
    if labels:
        out.append('<g font-family="monospace" font-size="10" fill="#a00">\n')
        for q, a1, a2 in sorted(verts)[:label_cap]:
            x, y = Fraction(a1, q), Fraction(a2, q)
            out.append(
                f'<text x="{sx(x)}" y="{sy(y)}">({a1},{a2})/{q}</text>\n'
            )
        out.append("</g>\n")
    out.append("</svg>\n")
    return "".join(out)


def _render_classical(depth: int, labels: bool, label_cap: int, size: int, margin: int) -> str:
    span = size - 2 * margin
    height = 120
    base_y = height / 2
    out: List[str] = [_HEADER.format(w=size, h=height)]
    out.append(f'<rect x="0" y="0" width="{size}" height="{height}" fill="white"/>\n')
    out.append(
        f'<line x1="{margin}" y1="{_fmt(base_y)}" x2="{size - margin}" '
        f'y2="{_fmt(base_y)}" stroke="#000" stroke-width="2"/>\n'
    )
    level = brocot_level(depth)
    out.append('<g stroke="#555" stroke-width="1">\n')
    for f in level:
        x = _fmt(margin + float(f) * span)
        out.append(f'<line x1="{x}" y1="{_fmt(base_y - 12)}" x2="{x}" y2="{_fmt(base_y + 12)}"/>\n')
    out.append("</g>\n")
    if labels:
        out.append('<g font-family="monospace" font-size="10" fill="#a00">\n')
        for f in level[:label_cap]:
            x = _fmt(margin + float(f) * span)
            out.append(
                f'<text x="{x}" y="{_fmt(base_y - 18)}" text-anchor="middle">'
                f"{f.numerator}/{f.denominator}</text>\n"
            )
        out.append("</g>\n")
    out.append("</svg>\n")
    return "".join(out)
