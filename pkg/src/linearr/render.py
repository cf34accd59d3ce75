"""SVG and TikZ pictures of real arrangements.

This is the only module that uses floating point. Exact coordinates are
embedded in the complex numbers (zeta_n -> exp(2 pi i / n)) and moved to a
real chart; arrangements that are not real in the chosen chart are refused.

Charts act on line coefficients:

``identity``
    (a, b, c) as is.
``circle``
    (a, i b, c); undoes the change of coordinates used for the Boroczky
    family, in which the unit circle is X^2 - Y^2 - Z^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .arrangement import Arrangement
from .kernel import ProjLine, ProjPoint, incident
from .solver import augmented_lines

__all__ = [
    "CHARTS",
    "RenderError",
    "Scene",
    "embed",
    "real_line",
    "real_point",
    "scene",
    "to_svg",
    "to_tikz",
]

CHARTS = ("identity", "circle")
_TOL = 1e-9


class RenderError(ValueError):
    pass


def embed(x) -> complex:
    return complex(x)


def _realify(v: Sequence[complex], what: str) -> tuple[float, float, float]:
    big = max(v, key=abs)
    if abs(big) == 0:
        raise RenderError(f"zero {what}")
    w = [c / big for c in v]
    if any(abs(c.imag) > _TOL for c in w):
        raise RenderError(f"{what} is not real in this chart")
    return tuple(c.real for c in w)


def real_line(l: ProjLine, chart: str) -> tuple[float, float, float]:
    a, b, c = (embed(x) for x in l.coords)
    if chart == "circle":
        b = 1j * b
    elif chart != "identity":
        raise RenderError(f"unknown chart {chart!r}; choose from {CHARTS}")
    return _realify((a, b, c), f"line {l}")


def real_point(p: ProjPoint, chart: str) -> tuple[float, float, float]:
    x, y, z = (embed(c) for c in p.coords)
    if chart == "circle":
        y = -1j * y
    elif chart != "identity":
        raise RenderError(f"unknown chart {chart!r}; choose from {CHARTS}")
    return _realify((x, y, z), f"point {p}")


def _pick_chart(A: Arrangement, chart: str) -> str:
    if chart != "auto":
        for l in A.lines:
            real_line(l, chart)
        return chart
    for c in CHARTS:
        try:
            for l in A.lines:
                real_line(l, c)
        except RenderError:
            continue
        return c
    raise RenderError("arrangement has no real picture in any supported chart")


Box = tuple[float, float, float, float]


@dataclass
class Scene:
    box: Box
    lines: list[tuple[float, float, float]] = field(default_factory=list)
    dashed: list[tuple[float, float, float]] = field(default_factory=list)
    points: list[tuple[float, float]] = field(default_factory=list)
    chart: str = "identity"


def _affine(p: tuple[float, float, float]) -> tuple[float, float] | None:
    x, y, z = p
    if abs(z) < _TOL:
        return None
    return (x / z, y / z)


def _bbox(pts: list[tuple[float, float]], margin: float = 0.25) -> Box:
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    w = max(max(xs) - min(xs), 1.0)
    h = max(max(ys) - min(ys), 1.0)
    return (min(xs) - margin * w, min(ys) - margin * h, max(xs) + margin * w, max(ys) + margin * h)


def scene(
    A: Arrangement,
    *,
    chart: str = "auto",
    dashed: Sequence[ProjLine] = (),
    show_collinearities: bool = False,
    box: Box | None = None,
) -> Scene:
    """Collect floating-point geometry for drawing.

    Marked points are the singular points of multiplicity at least three and,
    when ``show_collinearities`` is set, the singular points on lines outside
    A that carry three or more of them.
    """
    chart = _pick_chart(A, chart)
    sing = A.singular_points
    marked = [p for p, m in A.multiplicities.items() if m >= 3]
    dashed = list(dashed)
    if show_collinearities:
        extra = [
            l for l in augmented_lines(A)[len(A):]
            if sum(incident(p, l) for p in sing) >= 3
        ]
        if not dashed:
            dashed = extra
        for l in extra:
            marked.extend(p for p in sing if incident(p, l) and p not in marked)
    pts = [q for q in (_affine(real_point(p, chart)) for p in marked) if q is not None]
    if box is None:
        ref = pts if len(pts) >= 2 else [
            q for q in (_affine(real_point(p, chart)) for p in sing) if q is not None
        ]
        box = _bbox(ref or [(-1.0, -1.0), (1.0, 1.0)])
    return Scene(
        box=box,
        lines=[real_line(l, chart) for l in A.lines],
        dashed=[real_line(l, chart) for l in dashed],
        points=pts,
        chart=chart,
    )


def _clip(l: tuple[float, float, float], box: Box):
    """Segment of a x + b y + c = 0 inside the box, or None."""
    a, b, c = l
    x0, y0, x1, y1 = box
    hits = []
    if abs(b) > _TOL:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - _TOL <= y <= y1 + _TOL:
                hits.append((x, y))
    if abs(a) > _TOL:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - _TOL <= x <= x1 + _TOL:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    return hits[0], hits[-1]


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def to_svg(S: Scene, width: int = 600) -> str:
    x0, y0, x1, y1 = S.box
    scale = width / (x1 - x0)
    height = round((y1 - y0) * scale)

    def tx(p):
        return _fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for l in S.lines:
        seg = _clip(l, S.box)
        if seg:
            (ax, ay), (bx, by) = tx(seg[0]), tx(seg[1])
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-width="2"/>')
    for l in S.dashed:
        seg = _clip(l, S.box)
        if seg:
            (ax, ay), (bx, by) = tx(seg[0]), tx(seg[1])
            out.append(
                f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="red" stroke-width="2" '
                'stroke-dasharray="6,6"/>'
            )
    for p in S.points:
        cx, cy = tx(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="5" fill="#4d4dff" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_tikz(S: Scene) -> str:
    x0, y0, x1, y1 = S.box
    out = [
        r"\begin{tikzpicture}[line cap=round,line join=round,x=1.0cm,y=1.0cm]",
        rf"\clip({_fmt(x0)},{_fmt(y0)}) rectangle ({_fmt(x1)},{_fmt(y1)});",
    ]
    for style, group in (("line width=2pt", S.lines), ("line width=2pt,dash pattern=on 2pt off 2pt,color=red", S.dashed)):
        for l in group:
            seg = _clip(l, S.box)
            if seg:
                (ax, ay), (bx, by) = seg
                out.append(rf"\draw [{style}] ({_fmt(ax)},{_fmt(ay)}) -- ({_fmt(bx)},{_fmt(by)});")
    for x, y in S.points:
        out.append(rf"\draw [fill=blue!70] ({_fmt(x)},{_fmt(y)}) circle (2.5pt);")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"
