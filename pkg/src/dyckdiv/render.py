"""ASCII and SVG drawings of Dyck and Schröder paths.

Steps: ``a`` = (+1, +1), ``b`` = (+1, -1), ``c`` = (+1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple
from xml.sax.saxutils import quoteattr

from .words import HOOLEY_ALPHABET, check_alphabet

_DY = {"a": 1, "b": -1, "c": 0}


def path_points(w: str) -> List[Tuple[int, int]]:
    check_alphabet(w, HOOLEY_ALPHABET)
    x = y = 0
    pts = [(0, 0)]
    for ch in w:
        x += 1
        y += _DY[ch]
        pts.append((x, y))
    return pts


def render_ascii(w: str) -> str:
    """One column per letter, top row first.

    >>> print(render_ascii("aabb"))
     /\\
    /  \\
    """
    pts = path_points(w)
    if not w:
        return ""
    lo = min(y for _, y in pts)
    hi = max(y for _, y in pts)
    # a step from height y to y+1 occupies text row y, b steps use row y-1,
    # and a c step at height y is an underscore on the floor of row y
    flat_on_top = any(ch == "c" and pts[i][1] == hi for i, ch in enumerate(w))
    rows = max(hi - lo + flat_on_top, 1)
    grid = [[" "] * len(w) for _ in range(rows)]
    for i, ch in enumerate(w):
        y = pts[i][1]
        if ch == "a":
            grid[y - lo][i] = "/"
        elif ch == "b":
            grid[y - 1 - lo][i] = "\\"
        else:
            grid[y - lo][i] = "_"
    return "\n".join("".join(row).rstrip() for row in reversed(grid))


@dataclass(frozen=True)
class RenderSpec:
    word: str
    format: str = "svg"
    cell_size: int = 20

    def __post_init__(self) -> None:
        check_alphabet(self.word, HOOLEY_ALPHABET)
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.cell_size < 1:
            raise ValueError("cell_size must be a positive integer")

    def render(self) -> str:
        if self.format == "ascii":
            return render_ascii(self.word)
        return render_svg(self.word, self.cell_size)


def render_svg(w: str, cell_size: int = 20) -> str:
    """A single-polyline SVG document on a unit grid.

    Points are written in path coordinates (y up); a ``scale(1,-1)``
    transform flips them into SVG's y-down frame.
    """
    pts = path_points(w)
    width = max(len(w), 1)
    top = max(max(y for _, y in pts), 1)
    bottom = min(y for _, y in pts)
    pad = 0.5
    vb_w = width + 2 * pad
    vb_h = top - bottom + 2 * pad
    points = " ".join(f"{x},{y}" for x, y in pts)
    caption = w if w else "ε"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vb_w * cell_size:g}" '
        f'height="{vb_h * cell_size:g}" viewBox="{-pad:g} {-top - pad:g} {vb_w:g} {vb_h:g}">\n'
        f"  <title>{caption}</title>\n"
        f'  <polyline points={quoteattr(points)} transform="scale(1,-1)" '
        'fill="none" stroke="black" stroke-width="0.08" stroke-linejoin="round"/>\n'
        "</svg>\n"
    )
