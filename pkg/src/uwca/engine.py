"""Ulam-Warburton growth on the square and hex lattices.

A dead cell is born when exactly one of its neighbors is alive; live cells
never die. The state keeps two dense grids over a square bounding box:

* ``gen``: birth generation per cell, ``-1`` for dead cells;
* ``par``: index into ``kind.directions`` pointing from the cell to its parent.

Square cell ``(x, y)`` sits at grid position ``(row=y, col=x)``; hex cell
``(x, y, z)`` at ``(row=z, col=x)``. Both lie within ``[-R, R]`` for a cell at
distance ``R``, and the grid keeps one ring of padding so neighbor lookups
never need bounds checks.

:func:`step` only examines dead neighbors of the frontier. A dead cell with a
single live neighbor outside the frontier already had that single neighbor
one generation earlier and would have been born then, so nothing is missed.
:func:`step_naive` scans the whole ball instead and is kept as an oracle.
"""

from __future__ import annotations

import hashlib
import os
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterator, Optional

import numba
import numpy as np

from . import lattice
from .errors import CellBudgetExceeded, InvalidCoordinate
from .lattice import Cell, LatticeKind

DEFAULT_CELL_BUDGET = 50_000_000
BUDGET_ENV = "UWCA_CELL_BUDGET"


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_CELL_BUDGET


@dataclass(frozen=True)
class BirthRecord:
    generation: int
    parent: Optional[Cell]


@numba.njit(cache=True)
def _frontier_births(gen, frontier, offsets):
    """Cells adjacent to the frontier that have exactly one live neighbor.

    Returns ``(cells, parent_dirs)``; the grid is not modified.
    """
    deg = offsets.shape[0]
    half = deg // 2
    cap = frontier.shape[0] * deg
    out = np.empty(cap, np.int64)
    dirs = np.empty(cap, np.int8)
    k = 0
    for i in range(frontier.shape[0]):
        f = frontier[i]
        for d in range(deg):
            c = f + offsets[d]
            if gen[c] >= 0:
                continue
            live = 0
            for e in range(deg):
                if gen[c + offsets[e]] >= 0:
                    live += 1
                    if live > 1:
                        break
            # the single live neighbor is f itself, so each birth is found once
            if live == 1:
                out[k] = c
                dirs[k] = (d + half) % deg
                k += 1
    return out[:k], dirs[:k]


def _grid_dtype(max_generation: int):
    return np.int16 if max_generation < np.iinfo(np.int16).max else np.int32


class AutomatonState:
    """Automaton snapshot.

    Treat instances as values: :func:`step` returns a fresh state and leaves
    its input untouched.
    """

    def __init__(self, kind: LatticeKind, radius: int, dtype=np.int16):
        self.kind = kind
        self.radius = radius
        self.width = 2 * radius + 3
        self.gen = np.full(self.width * self.width, -1, dtype=dtype)
        self.par = np.full(self.width * self.width, -1, dtype=np.int8)
        self.frontier_idx = np.empty(0, np.int64)
        self.generation = 0
        self.births_per_generation: list[int] = []
        self.offsets = np.array([self._delta(d) for d in kind.directions], dtype=np.int64)

    # -- indexing --

    def _delta(self, d: Cell) -> int:
        if self.kind is LatticeKind.SQUARE:
            return d[1] * self.width + d[0]
        return d[2] * self.width + d[0]

    def index(self, c: Cell) -> int:
        """Flat grid index of ``c``, or -1 when ``c`` lies outside the grid."""
        x, r = (c[0], c[1]) if self.kind is LatticeKind.SQUARE else (c[0], c[2])
        if abs(x) > self.radius + 1 or abs(r) > self.radius + 1:
            return -1
        off = self.radius + 1
        return (r + off) * self.width + (x + off)

    def cell_at(self, idx: int) -> Cell:
        off = self.radius + 1
        r, col = divmod(int(idx), self.width)
        x, r = col - off, r - off
        if self.kind is LatticeKind.SQUARE:
            return (x, r)
        return (x, -x - r, r)

    def cells_at(self, idx: np.ndarray) -> list[Cell]:
        off = self.radius + 1
        rows, cols = np.divmod(idx.astype(np.int64), self.width)
        xs = (cols - off).tolist()
        rs = (rows - off).tolist()
        if self.kind is LatticeKind.SQUARE:
            return list(zip(xs, rs))
        return [(x, -x - r, r) for x, r in zip(xs, rs)]

    # -- queries --

    def generation_of(self, c: Cell) -> int:
        """Birth generation of ``c``, or -1 if dead."""
        i = self.index(c)
        return -1 if i < 0 else int(self.gen[i])

    def is_live(self, c: Cell) -> bool:
        return self.generation_of(c) >= 0

    def record(self, c: Cell) -> Optional[BirthRecord]:
        i = self.index(c)
        if i < 0 or self.gen[i] < 0:
            return None
        d = int(self.par[i])
        parent = None if d < 0 else lattice.add(c, self.kind.directions[d])
        return BirthRecord(int(self.gen[i]), parent)

    @property
    def live(self) -> "LiveView":
        return LiveView(self)

    @property
    def frontier(self) -> frozenset[Cell]:
        return frozenset(self.cells_at(self.frontier_idx))

    @property
    def population_size(self) -> int:
        return sum(self.births_per_generation)

    def live_items(self) -> list[tuple[Cell, int]]:
        """``(cell, generation)`` pairs sorted by cell."""
        idx = np.flatnonzero(self.gen >= 0)
        gens = self.gen[idx].tolist()
        return sorted(zip(self.cells_at(idx), gens))

    def copy(self, radius: Optional[int] = None) -> "AutomatonState":
        radius = self.radius if radius is None else radius
        out = AutomatonState(self.kind, radius, self.gen.dtype)
        if radius == self.radius:
            out.gen[:] = self.gen
            out.par[:] = self.par
            out.frontier_idx = self.frontier_idx.copy()
        else:
            idx = np.flatnonzero(self.gen >= 0)
            new_idx = np.array([out.index(c) for c in self.cells_at(idx)], dtype=np.int64)
            out.gen[new_idx] = self.gen[idx]
            out.par[new_idx] = self.par[idx]
            out.frontier_idx = np.sort(
                np.array([out.index(c) for c in self.cells_at(self.frontier_idx)], dtype=np.int64)
            )
        out.generation = self.generation
        out.births_per_generation = list(self.births_per_generation)
        return out

    def digest(self) -> str:
        """SHA-256 of the raw grids. Equal digests mean equal live maps and parents
        for states of the same radius."""
        h = hashlib.sha256()
        h.update(f"{self.kind.value} {self.generation} {self.radius}\n".encode())
        h.update(memoryview(self.gen))
        h.update(memoryview(self.par))
        return h.hexdigest()

    def __repr__(self):
        return (
            f"AutomatonState(kind={self.kind.value}, generation={self.generation}, "
            f"live={self.population_size})"
        )


class LiveView(Mapping):
    """Read-only ``Cell -> BirthRecord`` mapping over a state."""

    def __init__(self, state: AutomatonState):
        self._state = state

    def __getitem__(self, c):
        rec = self._state.record(tuple(c))
        if rec is None:
            raise KeyError(c)
        return rec

    def __contains__(self, c):
        return self._state.is_live(tuple(c))

    def __iter__(self) -> Iterator[Cell]:
        return (c for c, _ in self._state.live_items())

    def __len__(self):
        return self._state.population_size


def new_automaton(kind: LatticeKind | str, radius: int = 8, dtype=np.int16) -> AutomatonState:
    kind = lattice.as_kind(kind)
    state = AutomatonState(kind, max(radius, 1), dtype)
    i = state.index(kind.patriarch)
    state.gen[i] = 0
    state.frontier_idx = np.array([i], dtype=np.int64)
    state.births_per_generation = [1]
    return state


def _ensure_room(state: AutomatonState) -> AutomatonState:
    if state.generation + 1 <= state.radius:
        return state
    return state.copy(radius=max(2 * state.radius, state.generation + 1))


def _advance(state: AutomatonState, budget: int) -> np.ndarray:
    """Apply one generation in place; returns flat indices of newborns."""
    cells, dirs = _frontier_births(state.gen, state.frontier_idx, state.offsets)
    total = state.population_size + cells.shape[0]
    if total > budget:
        raise CellBudgetExceeded(
            f"generation {state.generation + 1} would hold {total} live cells, budget is {budget}"
        )
    state.generation += 1
    state.gen[cells] = state.generation
    state.par[cells] = dirs
    state.frontier_idx = cells
    state.births_per_generation.append(int(cells.shape[0]))
    return cells


def step(state: AutomatonState, budget: Optional[int] = None) -> tuple[AutomatonState, list[Cell]]:
    budget = default_budget() if budget is None else budget
    nxt = _ensure_room(state)
    if nxt is state:
        nxt = state.copy()
    born = _advance(nxt, budget)
    return nxt, sorted(nxt.cells_at(born))


def step_naive(state: AutomatonState, budget: Optional[int] = None) -> tuple[AutomatonState, list[Cell]]:
    """Reference stepper: exhaustive scan of every dead cell in the ball.

    Works on Python dicts through the lattice module only and shares no code
    with the frontier kernel.
    """
    budget = default_budget() if budget is None else budget
    kind = state.kind
    live = {c: state.record(c) for c, _ in state.live_items()}
    births: dict[Cell, Cell] = {}
    for c in lattice.ball(kind, state.generation + 1):
        if c in live:
            continue
        around = [n for n in lattice.neighbors(kind, c) if n in live]
        if len(around) == 1:
            births[c] = around[0]
    if len(live) + len(births) > budget:
        raise CellBudgetExceeded(
            f"generation {state.generation + 1} would hold {len(live) + len(births)} live cells, "
            f"budget is {budget}"
        )
    g = state.generation + 1
    live.update({c: BirthRecord(g, p) for c, p in births.items()})
    return from_records(kind, live, g), sorted(births)


def from_records(kind: LatticeKind, records: Mapping, generation: int) -> AutomatonState:
    """Build a state from an explicit ``Cell -> BirthRecord`` mapping."""
    kind = lattice.as_kind(kind)
    radius = max([lattice.norm(kind, c) for c in records] + [generation, 1])
    state = AutomatonState(kind, radius, _grid_dtype(generation))
    counts = [0] * (generation + 1)
    dirs = {d: i for i, d in enumerate(kind.directions)}
    for c, rec in records.items():
        c = lattice.validate(kind, c)
        i = state.index(c)
        state.gen[i] = rec.generation
        counts[rec.generation] += 1
        if rec.parent is not None:
            delta = tuple(p - q for p, q in zip(rec.parent, c))
            if delta not in dirs:
                raise InvalidCoordinate(f"parent {rec.parent!r} is not a neighbor of {c!r}")
            state.par[i] = dirs[delta]
    state.generation = generation
    state.births_per_generation = counts
    state.frontier_idx = np.sort(np.flatnonzero(state.gen == generation)).astype(np.int64)
    return state


def run(kind: LatticeKind | str, n: int, budget: Optional[int] = None) -> AutomatonState:
    """State after ``n`` generations, grown in place on a preallocated grid."""
    if n < 0:
        raise ValueError("generation count must be non-negative")
    budget = default_budget() if budget is None else budget
    state = new_automaton(kind, radius=max(n, 1), dtype=_grid_dtype(n))
    for _ in range(n):
        _advance(state, budget)
    return state


def population(state: AutomatonState) -> list[tuple[int, int, int]]:
    """``(generation, births, cumulative)`` rows for generations 0..state.generation."""
    rows = []
    total = 0
    for g, b in enumerate(state.births_per_generation):
        total += b
        rows.append((g, b, total))
    return rows


def snapshot_lines(state: AutomatonState) -> Iterator[str]:
    """Snapshot text, one ``generation parent cell`` line per live cell.

    Coordinates are comma-joined; the patriarch's parent is ``-``. Lines are
    ordered by generation, then by cell.
    """
    kind = state.kind
    items = sorted(state.live_items(), key=lambda it: (it[1], it[0]))
    yield f"# uwca snapshot lattice={kind.value} generation={state.generation}\n"
    for c, g in items:
        rec = state.record(c)
        parent = "-" if rec.parent is None else lattice.format_cell(rec.parent)
        yield f"{g} {parent} {lattice.format_cell(c)}\n"


def dumps(state: AutomatonState) -> str:
    return "".join(snapshot_lines(state))


def loads(text: str) -> AutomatonState:
    lines = text.splitlines()
    header = dict(part.split("=", 1) for part in lines[0].split()[3:])
    kind = LatticeKind(header["lattice"])
    generation = int(header["generation"])
    records = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        g, parent, cell = line.split()
        records[lattice.parse_cell(kind, cell)] = BirthRecord(
            int(g), None if parent == "-" else lattice.parse_cell(kind, parent)
        )
    return from_records(kind, records, generation)
