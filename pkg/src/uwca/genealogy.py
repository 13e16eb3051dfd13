"""Parents, children, lineages and fertility over an automaton state."""

from __future__ import annotations

import enum
from collections import Counter
from typing import Iterator, Optional

from . import lattice
from .engine import AutomatonState, step
from .errors import CellNotLive, FertilityNotFinal
from .lattice import Cell, LatticeKind

SQUARE_FERTILITY = frozenset({0, 1, 3})
HEX_FERTILITY = frozenset({0, 1, 2, 3})


class FertilityClass(enum.Enum):
    PATRIARCH = "patriarch"
    LEAF = 0
    ONE = 1
    TWO = 2
    THREE = 3

    @classmethod
    def from_count(cls, n: int) -> "FertilityClass":
        # counts above 3 have no class of their own; callers check domains
        return cls(n)


def permitted_fertility(kind: LatticeKind) -> frozenset[int]:
    return SQUARE_FERTILITY if kind is LatticeKind.SQUARE else HEX_FERTILITY


def _require_live(state: AutomatonState, c: Cell) -> int:
    c = lattice.validate(state.kind, c)
    g = state.generation_of(c)
    if g < 0:
        raise CellNotLive(f"{c!r} is not live at generation {state.generation}")
    return g


def parent_of(state: AutomatonState, c: Cell) -> Optional[Cell]:
    _require_live(state, c)
    return state.record(tuple(c)).parent


def children_of(state: AutomatonState, c: Cell) -> list[Cell]:
    """Live neighbors whose parent is ``c``, in neighbor order."""
    _require_live(state, c)
    c = tuple(c)
    out = []
    for n in lattice.neighbors(state.kind, c):
        rec = state.record(n)
        if rec is not None and rec.parent == c:
            out.append(n)
    return out


def lineage(state: AutomatonState, c: Cell) -> list[Cell]:
    _require_live(state, c)
    chain = [tuple(c)]
    parent = state.record(chain[-1]).parent
    while parent is not None:
        chain.append(parent)
        parent = state.record(parent).parent
    return chain


def is_final(state: AutomatonState, c: Cell) -> bool:
    return state.generation >= state.generation_of(c) + 1


def fertility_class(state: AutomatonState, c: Cell) -> FertilityClass:
    g = _require_live(state, c)
    c = tuple(c)
    if c == state.kind.patriarch:
        return FertilityClass.PATRIARCH
    if state.generation < g + 1:
        raise FertilityNotFinal(f"children of {c!r} are not final at generation {state.generation}")
    return FertilityClass.from_count(len(children_of(state, c)))


def child_counts(state: AutomatonState) -> Iterator[tuple[Cell, int, int]]:
    """``(cell, generation, child count)`` for every finalized non-patriarch cell."""
    counts: Counter = Counter()
    items = state.live_items()
    for c, _ in items:
        rec = state.record(c)
        if rec.parent is not None:
            counts[rec.parent] += 1
    for c, g in items:
        if g == 0 or g >= state.generation:
            continue
        yield c, g, counts[c]


def fertility_histogram(state: AutomatonState) -> dict[int, int]:
    """Child count -> number of finalized non-patriarch cells.

    Keys outside :func:`permitted_fertility` are kept so callers can report them.
    """
    hist = Counter(n for _, _, n in child_counts(state))
    return dict(sorted(hist.items()))


def out_of_domain(state: AutomatonState) -> list[Cell]:
    allowed = permitted_fertility(state.kind)
    return [c for c, _, n in child_counts(state) if n not in allowed]


def family_tree_edges(state: AutomatonState) -> list[tuple[Cell, Cell]]:
    """``(parent, child)`` pairs sorted by child."""
    edges = []
    for c, _ in state.live_items():
        parent = state.record(c).parent
        if parent is not None:
            edges.append((parent, c))
    edges.sort(key=lambda e: e[1])
    return edges


def tree_lines(state: AutomatonState) -> Iterator[str]:
    """Edge-list export: ``parent child`` per line, comma-joined coordinates."""
    for parent, child in family_tree_edges(state):
        yield f"{lattice.format_cell(parent)} {lattice.format_cell(child)}\n"


def potential_fertility(state: AutomatonState) -> dict[Cell, int]:
    """Frontier cell -> number of children it would get at the next step."""
    nxt, born = step(state, budget=state.population_size + state.frontier_idx.shape[0] * state.kind.degree)
    counts = {c: 0 for c in state.frontier}
    for b in born:
        p = nxt.record(b).parent
        counts[p] = counts.get(p, 0) + 1
    return counts
