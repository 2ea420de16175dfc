"""SVG pictures of a region with one of its coronas."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .bruteforce import Corona, is_valid_corona
from .lattice import LEFT_TILTED, RIGHT_TILTED, VERTICAL, Region, Shape, Vertex

SQRT3_2 = math.sqrt(3) / 2


@dataclass(frozen=True)
class StyleConfig:
    stroke_width: float = 1.0
    fills: dict = field(default_factory=lambda: {
        LEFT_TILTED: "#e41a1c",
        RIGHT_TILTED: "#377eb8",
        VERTICAL: "#4daf4a",
    })
    scale: float = 40.0
    margin: float = 10.0
    outline_width: float = 3.0


def plane_point(v: Vertex, scale: float = 1.0) -> tuple[float, float]:
    a, b = v
    return (a + b / 2) * scale, b * SQRT3_2 * scale


def _fmt(value: float) -> str:
    s = f"{value:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_corona(r: Region, c: Corona, style: StyleConfig = StyleConfig()) -> str:
    """SVG document text: one polygon per lozenge, then the region outline."""
    check = is_valid_corona(r, c.lozenges)
    if not check:
        raise ValueError(f"not a corona of {r.shape}: {check.violation}")

    polys = [(lz.orientation, [plane_point(v, style.scale) for v in lz.vertices()]) for lz in c]
    outline = [plane_point(v, style.scale) for v in r.corners]
    pts = [p for _, ps in polys for p in ps] + outline
    min_x = min(p[0] for p in pts)
    max_x = max(p[0] for p in pts)
    min_y = min(p[1] for p in pts)
    max_y = max(p[1] for p in pts)
    m = style.margin
    width = max_x - min_x + 2 * m
    height = max_y - min_y + 2 * m

    def points(ps: Iterable[tuple[float, float]]) -> str:
        # screen y grows downwards
        return " ".join(f"{_fmt(x - min_x + m)},{_fmt(max_y - y + m)}" for x, y in ps)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<title>{r.shape}: corona with {len(c)} lozenges</title>',
        f'<g stroke="black" stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round">',
    ]
    for orientation, ps in polys:
        lines.append(
            f'<polygon class="lozenge {orientation}" fill="{style.fills[orientation]}" points="{points(ps)}"/>'
        )
    lines.append("</g>")
    lines.append(
        f'<polygon class="region" fill="none" stroke="black" '
        f'stroke-width="{_fmt(style.outline_width)}" points="{points(outline)}"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def corona_filename(shape: Shape, index: int) -> str:
    return f"{shape.kind}_{'-'.join(map(str, shape.sides))}_{index}.svg"


def write_coronas(r: Region, coronas: Iterable[Corona], out_dir, style: StyleConfig = StyleConfig()) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for i, c in enumerate(coronas):
        path = out / corona_filename(r.shape, i)
        path.write_text(render_corona(r, c, style), encoding="utf-8")
        written.append(path)
    return written
