"""Abacus rendering as ASCII, SVG and JSON."""
from __future__ import annotations

import json

from .abacus import Abacus

MAX_RUNNERS = 64

CELL = 40
RADIUS = 15


def _check_size(a: Abacus):
    if a.runner_count > MAX_RUNNERS:
        raise ValueError(f"abacus has {a.runner_count} runners; at most {MAX_RUNNERS} can be rendered")


def to_svg(a: Abacus) -> str:
    """Beads are outlined circles labelled with their value; spacers keep only the label."""
    _check_size(a)
    width, height = a.runner_count * CELL, a.row_count * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for j in range(a.row_count):
        cy = height - (j + 0.5) * CELL
        for i in range(a.runner_count):
            cx = (i + 0.5) * CELL
            value = i + j * a.runner_count
            if a[i, j]:
                out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{RADIUS}" fill="none" stroke="black"/>')
            out.append(
                f'<text x="{cx:g}" y="{cy:g}" text-anchor="middle" dominant-baseline="central" '
                f'font-size="12">{value}</text>'
            )
    out.append("</svg>")
    return "\n".join(out)


def render(a: Abacus, fmt: str = "ascii") -> str:
    _check_size(a)
    if fmt == "ascii":
        return a.to_ascii()
    if fmt == "svg":
        return to_svg(a)
    if fmt == "json":
        return json.dumps(a.to_json(), separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}")


def parse_json(text: str) -> Abacus:
    return Abacus.from_json(json.loads(text))
