"""SVG and PBM output.

SVG documents carry a fixed header, elements ordered by cell coordinate, and
every number printed with six fractional digits, so equal inputs give equal
bytes. Square cells are unit squares; hex cells are pointy-top hexagons with
unit center spacing (see :mod:`uwca.lattice` for the embedding).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import gasket, genealogy, lattice
from .engine import AutomatonState
from .errors import StyleError
from .lattice import Cell, LatticeKind


class RenderMode(enum.Enum):
    PLAIN = "plain"
    BY_GENERATION = "generation"
    FERTILITY = "fertility"
    GASKET_DOTS = "gasket-dots"
    GASKET_SOLID = "gasket-solid"
    TREE_OVERLAY = "tree"


@dataclass(frozen=True)
class RenderStyle:
    mode: RenderMode = RenderMode.PLAIN
    show_grid: bool = False
    cell_size: int = 10

    def __post_init__(self):
        if self.cell_size <= 0:
            raise StyleError("cell_size must be positive")


LIVE_FILL = "#6fa8dc"
PALE_FILL = "#cfe2f3"
GRID_STROKE = "#d9d9d9"
CELL_STROKE = "#404040"
FERTILITY_COLORS = {
    "patriarch": "#000000",
    3: "#1f4fd8",
    2: "#8e44ad",
    1: "#d62728",
    0: "#2ca02c",
}

_HEX_R = 1.0 / math.sqrt(3.0)
_HEX_CORNERS = [
    (_HEX_R * math.cos(math.radians(30 + 60 * i)), _HEX_R * math.sin(math.radians(30 + 60 * i)))
    for i in range(6)
]


def _num(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    """Maps planar coordinates (y up) onto SVG user units (y down)."""

    def __init__(self, kind: LatticeKind, radius: int, cell_size: int):
        self.kind = kind
        self.s = float(cell_size)
        if kind is LatticeKind.SQUARE:
            self.half_w = self.half_h = radius + 0.5
        else:
            self.half_w = radius + 0.5
            self.half_h = radius * lattice.SQRT3_2 + _HEX_R
        self.margin = self.s
        self.width = 2 * self.half_w * self.s + 2 * self.margin
        self.height = 2 * self.half_h * self.s + 2 * self.margin

    def xy(self, px: float, py: float) -> tuple[float, float]:
        return (px + self.half_w) * self.s + self.margin, (self.half_h - py) * self.s + self.margin

    def center(self, c: Cell) -> tuple[float, float]:
        return self.xy(*lattice.center(self.kind, c))

    def cell(self, c: Cell, fill: str, stroke: str = CELL_STROKE) -> str:
        if self.kind is LatticeKind.SQUARE:
            x, y = self.xy(c[0] - 0.5, c[1] + 0.5)
            return (
                f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(self.s)}" height="{_num(self.s)}" '
                f'fill="{fill}" stroke="{stroke}"/>'
            )
        px, py = lattice.center(self.kind, c)
        pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in (self.xy(px + dx, py + dy) for dx, dy in _HEX_CORNERS))
        return f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}"/>'

    def header(self) -> list[str]:
        w, h = _num(self.width), _num(self.height)
        return [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
            f'<rect x="0.000000" y="0.000000" width="{w}" height="{h}" fill="#ffffff"/>',
        ]


def _in_gasket(kind: LatticeKind, c: Cell) -> bool:
    for k in lattice.slices_of(kind, c):
        sc = lattice.slice_coords(kind, k, c)
        if sc.a & sc.b == 0:
            return True
    return False


def gasket_cells(state: AutomatonState) -> list[Cell]:
    """Live cells whose slice coordinates pass the gasket test, each once."""
    return [c for c, _ in state.live_items() if _in_gasket(state.kind, c)]


def _generation_fill(g: int, top: int) -> str:
    t = g / top if top else 0.0
    # dark blue for the patriarch fading to pale blue at the newest generation
    lo, hi = (0x0b, 0x30, 0x6b), (0xcf, 0xe2, 0xf3)
    rgb = [round(a + (b - a) * t) for a, b in zip(lo, hi)]
    return "#" + "".join(f"{v:02x}" for v in rgb)


def _fertility_fills(state: AutomatonState) -> dict[Cell, str]:
    kind = state.kind
    potential = genealogy.potential_fertility(state)
    fills = {}
    for c, g in state.live_items():
        if c == kind.patriarch:
            fills[c] = FERTILITY_COLORS["patriarch"]
            continue
        n = potential[c] if g == state.generation else len(genealogy.children_of(state, c))
        if n == 2 and kind is LatticeKind.SQUARE:
            raise StyleError(f"square cell {c!r} has two children; the square palette has no such class")
        if n not in FERTILITY_COLORS:
            raise StyleError(f"cell {c!r} has {n} children, outside the fertility palette")
        fills[c] = FERTILITY_COLORS[n]
    return fills


def render_state(state: AutomatonState, style: RenderStyle = RenderStyle()) -> str:
    kind = state.kind
    radius = max(state.generation, 0) + (1 if style.show_grid else 0)
    canvas = _Canvas(kind, radius, style.cell_size)
    mode = style.mode
    lines = canvas.header()
    items = state.live_items()

    if style.show_grid:
        lines.append('<g id="grid">')
        for c in sorted(lattice.ball(kind, radius)):
            if not state.is_live(c):
                lines.append(canvas.cell(c, "none", GRID_STROKE))
        lines.append("</g>")

    marked = set(gasket_cells(state)) if mode in (RenderMode.GASKET_DOTS, RenderMode.GASKET_SOLID) else set()
    fills = _fertility_fills(state) if mode is RenderMode.FERTILITY else {}

    lines.append('<g id="cells">')
    for c, g in items:
        if mode is RenderMode.BY_GENERATION:
            fill = _generation_fill(g, state.generation)
        elif mode is RenderMode.FERTILITY:
            fill = fills[c]
        elif mode is RenderMode.GASKET_SOLID:
            fill = "#000000" if c in marked else LIVE_FILL
        elif mode in (RenderMode.GASKET_DOTS, RenderMode.TREE_OVERLAY):
            fill = PALE_FILL
        else:
            fill = LIVE_FILL
        lines.append(canvas.cell(c, fill))
    lines.append("</g>")

    if mode is RenderMode.GASKET_DOTS:
        r = _num(0.2 * canvas.s)
        lines.append('<g id="gasket" fill="#000000">')
        for c in sorted(marked):
            x, y = canvas.center(c)
            lines.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{r}"/>')
        lines.append("</g>")
    elif mode is RenderMode.TREE_OVERLAY:
        lines.append(f'<g id="tree" stroke="#000000" stroke-width="{_num(0.15 * canvas.s)}">')
        for parent, child in genealogy.family_tree_edges(state):
            x1, y1 = canvas.center(parent)
            x2, y2 = canvas.center(child)
            lines.append(f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"/>')
        lines.append("</g>")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_gasket(n: int, style: RenderStyle = RenderStyle()) -> str:
    """Rows 0..n of Pascal's triangle mod 2 as upward triangles."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s = float(style.cell_size)
    h = s * lattice.SQRT3_2
    margin = s
    width = (n + 1) * s + 2 * margin
    height = (n + 1) * h + 2 * margin
    mid = width / 2
    w, hh = _num(width), _num(height)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{hh}" viewBox="0 0 {w} {hh}">',
        f'<rect x="0.000000" y="0.000000" width="{w}" height="{hh}" fill="#ffffff"/>',
        '<g id="gasket" fill="#000000">',
    ]
    for row, mask in enumerate(gasket.gasket_generate(n)):
        top = margin + row * h
        for pos in sorted(gasket.mask_to_set(mask)):
            ax = mid + (pos - row / 2) * s
            pts = [(ax, top), (ax - s / 2, top + h), (ax + s / 2, top + h)]
            lines.append('<polygon points="' + " ".join(f"{_num(x)},{_num(y)}" for x, y in pts) + '"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def render_bitmap(state: AutomatonState) -> str:
    """Plain PBM (P1) of the square ``[-gen, gen]^2`` box, top row is y = gen."""
    if state.kind is not LatticeKind.SQUARE:
        raise StyleError("bitmap output supports the square lattice only")
    n = state.generation
    size = 2 * n + 1
    out = ["P1", f"# uwca square generation {n}", f"{size} {size}"]
    for y in range(n, -n - 1, -1):
        out.append("".join("1" if state.is_live((x, y)) else "0" for x in range(-n, n + 1)))
    return "\n".join(out) + "\n"
