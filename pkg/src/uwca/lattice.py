"""Square and hexagonal lattice geometry.

Cells are plain integer tuples. Square cells are ``(x, y)``; hex cells are
cube coordinates ``(x, y, z)`` with ``x + y + z == 0``. The patriarch is the
all-zero cell.

Hex axis directions, in counter-clockwise cyclic order::

    u0 = ( 1, -1,  0)   right
    u1 = ( 1,  0, -1)   60 degrees
    u2 = ( 0,  1, -1)   120 degrees
    u3 = (-1,  1,  0)   left
    u4 = (-1,  0,  1)   240 degrees
    u5 = ( 0, -1,  1)   300 degrees

Hex centers are embedded pointy-top with unit spacing and ``u0`` pointing
along +x: ``(x, y, z) -> (x + z/2, -sqrt(3)/2 * z)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from .errors import CellNotInSlice, InvalidCoordinate, PathCapExceeded, UnknownSymmetry

Cell = Tuple[int, ...]


class LatticeKind(enum.Enum):
    SQUARE = "square"
    HEX = "hex"

    @property
    def degree(self) -> int:
        return 4 if self is LatticeKind.SQUARE else 6

    @property
    def patriarch(self) -> Cell:
        return (0, 0) if self is LatticeKind.SQUARE else (0, 0, 0)

    @property
    def directions(self) -> tuple[Cell, ...]:
        return SQUARE_DIRECTIONS if self is LatticeKind.SQUARE else HEX_DIRECTIONS

    @property
    def group_order(self) -> int:
        return 2 * self.degree


SQUARE_DIRECTIONS: tuple[Cell, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))
HEX_DIRECTIONS: tuple[Cell, ...] = (
    (1, -1, 0),
    (1, 0, -1),
    (0, 1, -1),
    (-1, 1, 0),
    (-1, 0, 1),
    (0, -1, 1),
)

SQRT3_2 = math.sqrt(3.0) / 2.0


def as_kind(kind: LatticeKind | str) -> LatticeKind:
    if isinstance(kind, LatticeKind):
        return kind
    return LatticeKind(kind)


def validate(kind: LatticeKind, c: Cell) -> Cell:
    """Return ``c`` as a tuple of ints or raise InvalidCoordinate."""
    c = tuple(c)
    if kind is LatticeKind.SQUARE:
        if len(c) != 2:
            raise InvalidCoordinate(f"square cell needs 2 coordinates, got {c!r}")
    else:
        if len(c) != 3:
            raise InvalidCoordinate(f"hex cell needs 3 cube coordinates, got {c!r}")
        if c[0] + c[1] + c[2] != 0:
            raise InvalidCoordinate(f"hex cube coordinates must sum to 0, got {c!r}")
    if not all(isinstance(v, int) for v in c):
        raise InvalidCoordinate(f"coordinates must be integers, got {c!r}")
    return c


def add(a: Cell, b: Cell) -> Cell:
    return tuple(p + q for p, q in zip(a, b))


def scale(k: int, a: Cell) -> Cell:
    return tuple(k * p for p in a)


def neighbors(kind: LatticeKind, c: Cell) -> list[Cell]:
    """Side-adjacent cells, in the cyclic order of ``kind.directions``."""
    c = validate(kind, c)
    return [add(c, d) for d in kind.directions]


def manhattan_distance(kind: LatticeKind, a: Cell, b: Cell) -> int:
    a = validate(kind, a)
    b = validate(kind, b)
    total = sum(abs(p - q) for p, q in zip(a, b))
    return total if kind is LatticeKind.SQUARE else total // 2


def norm(kind: LatticeKind, c: Cell) -> int:
    """Manhattan distance from the patriarch, without validation."""
    if kind is LatticeKind.SQUARE:
        return abs(c[0]) + abs(c[1])
    return (abs(c[0]) + abs(c[1]) + abs(c[2])) // 2


def center(kind: LatticeKind, c: Cell) -> tuple[float, float]:
    """Planar position of the cell center (y axis pointing up)."""
    if kind is LatticeKind.SQUARE:
        return float(c[0]), float(c[1])
    return c[0] + c[2] / 2.0, -SQRT3_2 * c[2]


def squared_distance(kind: LatticeKind, a: Cell, b: Cell) -> int:
    """Exact squared Euclidean distance between centers."""
    if kind is LatticeKind.SQUARE:
        dx, dy = a[0] - b[0], a[1] - b[1]
        return dx * dx + dy * dy
    # |(dx + dz/2, -sqrt(3)/2 dz)|^2 = dx^2 + dx*dz + dz^2
    dx, dz = a[0] - b[0], a[2] - b[2]
    return dx * dx + dx * dz + dz * dz


def geometric_distance(kind: LatticeKind, a: Cell, b: Cell) -> float:
    a = validate(kind, a)
    b = validate(kind, b)
    return math.sqrt(squared_distance(kind, a, b))


# --- symmetry -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Symmetry:
    """Element of the dihedral group fixing the patriarch.

    Acts as ``rotate^rotation`` applied after an optional reflection across
    the axis through ``directions[0]``. Rotation steps are 90 degrees on the
    square lattice and 60 degrees on the hex lattice, counter-clockwise.
    """

    rotation: int = 0
    reflect: bool = False


def symmetry_group(kind: LatticeKind) -> list[Symmetry]:
    return [Symmetry(r, s) for s in (False, True) for r in range(kind.degree)]


def _rotate(kind: LatticeKind, c: Cell, times: int) -> Cell:
    times %= kind.degree
    if kind is LatticeKind.SQUARE:
        x, y = c
        for _ in range(times):
            x, y = -y, x
        return (x, y)
    x, y, z = c
    for _ in range(times):
        x, y, z = -y, -z, -x
    return (x, y, z)


def _reflect(kind: LatticeKind, c: Cell) -> Cell:
    if kind is LatticeKind.SQUARE:
        return (c[0], -c[1])
    x, y, z = c
    return (-y, -x, -z)


def apply_symmetry(kind: LatticeKind, g: Symmetry, c: Cell) -> Cell:
    if not isinstance(g, Symmetry) or not 0 <= g.rotation < kind.degree:
        raise UnknownSymmetry(f"{g!r} is not an element of the {kind.value} dihedral group")
    c = validate(kind, c)
    if g.reflect:
        c = _reflect(kind, c)
    return _rotate(kind, c, g.rotation)


def on_corner_axis(kind: LatticeKind, c: Cell) -> bool:
    """True iff the center lies on a mirror line through patriarch corners."""
    c = validate(kind, c)
    if c == kind.patriarch:
        return False
    if kind is LatticeKind.SQUARE:
        return abs(c[0]) == abs(c[1])
    # multiples of (2,-1,-1) and its rotations: two coordinates equal, third = -2x
    x, y, z = c
    return x == y or y == z or x == z


# --- slices ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SliceCoord:
    slice_index: int
    a: int
    b: int


def _slice_basis(kind: LatticeKind, k: int) -> tuple[Cell, Cell]:
    dirs = kind.directions
    return dirs[k % kind.degree], dirs[(k + 1) % kind.degree]


def _local(kind: LatticeKind, k: int, c: Cell) -> tuple[int, int]:
    # Rotate slice k onto slice 0 and read off the components.
    r = _rotate(kind, c, -k)
    if kind is LatticeKind.SQUARE:
        return r[0], r[1]
    return -r[1], -r[2]


def slices_of(kind: LatticeKind, c: Cell) -> frozenset[int]:
    c = validate(kind, c)
    out = set()
    for k in range(kind.degree):
        a, b = _local(kind, k, c)
        if a >= 0 and b >= 0:
            out.add(k)
    return frozenset(out)


def slice_coords(kind: LatticeKind, k: int, c: Cell) -> SliceCoord:
    if not 0 <= k < kind.degree:
        raise CellNotInSlice(f"slice index {k} out of range for {kind.value}")
    c = validate(kind, c)
    a, b = _local(kind, k, c)
    if a < 0 or b < 0:
        raise CellNotInSlice(f"{c!r} is not in {kind.value} slice {k}")
    return SliceCoord(k, a, b)


def slice_cell(kind: LatticeKind, sc: SliceCoord) -> Cell:
    first, second = _slice_basis(kind, sc.slice_index)
    return add(scale(sc.a, first), scale(sc.b, second))


# --- enumeration ----------------------------------------------------------


def ball(kind: LatticeKind, radius: int, center_cell: Cell | None = None) -> Iterator[Cell]:
    """All cells within Manhattan distance ``radius`` of a cell, sorted."""
    c0 = kind.patriarch if center_cell is None else center_cell
    if kind is LatticeKind.SQUARE:
        for dx in range(-radius, radius + 1):
            rest = radius - abs(dx)
            for dy in range(-rest, rest + 1):
                yield (c0[0] + dx, c0[1] + dy)
    else:
        for dx in range(-radius, radius + 1):
            for dy in range(max(-radius, -dx - radius), min(radius, -dx + radius) + 1):
                yield (c0[0] + dx, c0[1] + dy, c0[2] - dx - dy)


def ring(kind: LatticeKind, radius: int) -> list[Cell]:
    """Cells at Manhattan distance exactly ``radius``, sorted."""
    if radius == 0:
        return [kind.patriarch]
    dirs = kind.directions
    out = []
    # walk each side from corner radius*d_k towards radius*d_{k+1}
    for k in range(kind.degree):
        start, end = scale(radius, dirs[k]), scale(radius, dirs[(k + 1) % kind.degree])
        for t in range(radius):
            out.append(tuple(s + (e - s) * t // radius for s, e in zip(start, end)))
    return sorted(out)


def enumerate_shortest_paths(kind: LatticeKind, a: Cell, b: Cell, cap: int = 100_000) -> list[list[Cell]]:
    """Every minimum-length neighbor walk from ``a`` to ``b``.

    Raises PathCapExceeded as soon as more than ``cap`` paths are found.
    """
    a = validate(kind, a)
    b = validate(kind, b)
    paths: list[list[Cell]] = []
    path = [a]

    def extend(cur: Cell, left: int) -> None:
        if left == 0:
            paths.append(list(path))
            if len(paths) > cap:
                raise PathCapExceeded(f"more than {cap} shortest paths from {a!r} to {b!r}")
            return
        for d in kind.directions:
            nxt = add(cur, d)
            if manhattan_distance(kind, nxt, b) == left - 1:
                path.append(nxt)
                extend(nxt, left - 1)
                path.pop()

    extend(a, manhattan_distance(kind, a, b))
    return paths


def format_cell(c: Cell) -> str:
    return ",".join(str(v) for v in c)


def parse_cell(kind: LatticeKind, text: str) -> Cell:
    try:
        c = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise InvalidCoordinate(f"cannot parse cell {text!r}") from exc
    return validate(kind, c)
