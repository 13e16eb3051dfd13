"""Pascal's triangle mod 2, 2-adic orders, and the square eventually-alive test.

Rows are held as Python ints used as bitsets: bit ``p`` of row ``r`` is set
iff C(r, p) is odd.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import PreconditionError

INFINITE = math.inf
TwoAdicOrder = Union[int, float]


@dataclass(frozen=True, order=True)
class GasketCoord:
    row: int
    pos: int

    def __post_init__(self):
        if not 0 <= self.pos <= self.row:
            raise PreconditionError(f"position {self.pos} outside row {self.row}")


def nu2(n: int) -> TwoAdicOrder:
    """Exponent of the largest power of two dividing ``n``; ``inf`` for 0."""
    if n == 0:
        return INFINITE
    n = abs(n)
    return (n & -n).bit_length() - 1


def binomial_is_odd(row: int, pos: int) -> bool:
    if row < 0 or not 0 <= pos <= row:
        raise PreconditionError(f"position {pos} outside row {row}")
    # odd iff adding pos and row - pos in binary never carries
    return pos & (row - pos) == 0


def row_mask(row: int) -> int:
    mask = 0
    for pos in range(row + 1):
        if pos & (row - pos) == 0:
            mask |= 1 << pos
    return mask


def gasket_row(row: int) -> frozenset[int]:
    return frozenset(p for p in range(row + 1) if binomial_is_odd(row, p))


def gasket_generate(n: int) -> list[int]:
    """Row bitsets 0..n built by the local rule.

    A cell is present iff exactly one of its two upper neighbors is, which
    for bitsets is ``row ^ (row << 1)``.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    rows = [1]
    for _ in range(n):
        prev = rows[-1]
        rows.append(prev ^ (prev << 1))
    return rows


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return frozenset(out)


def row_size(row: int) -> int:
    """Number of odd entries in the row, ``2 ** popcount(row)``."""
    return 1 << bin(row).count("1")


def eventually_alive_square(x: int, y: int) -> bool:
    """Different 2-adic orders of the coordinates; the patriarch counts as alive."""
    if x == 0 and y == 0:
        return True
    return nu2(x) != nu2(y)
