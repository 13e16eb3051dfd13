"""Pioneers and checks of the automaton's structural claims.

Every ``verify_*`` function returns a :class:`VerificationReport` whose
``counterexamples`` list holds the offending cells; a report passes exactly
when that list is empty.

Report text format, one report per block, blocks separated by a blank line::

    [report <claim-id>]
    param.<name> = <value>        (sorted by name)
    passed = true|false
    count.<name> = <value>        (sorted by name)
    counterexamples = <total>
      <cell>                      (at most 100, sorted)
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import engine, gasket, genealogy, lattice
from .engine import AutomatonState
from .errors import CellNotInSlice, PreconditionError
from .lattice import Cell, LatticeKind

MAX_LISTED = 100


@dataclass
class VerificationReport:
    claim_id: str
    parameters: dict
    counterexamples: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_text(self) -> str:
        out = io.StringIO()
        out.write(f"[report {self.claim_id}]\n")
        for k in sorted(self.parameters):
            out.write(f"param.{k} = {_fmt(self.parameters[k])}\n")
        out.write(f"passed = {'true' if self.passed else 'false'}\n")
        for k in sorted(self.counts):
            out.write(f"count.{k} = {_fmt(self.counts[k])}\n")
        cells = sorted(self.counterexamples)
        out.write(f"counterexamples = {len(cells)}\n")
        for c in cells[:MAX_LISTED]:
            out.write(f"  {lattice.format_cell(c)}\n")
        return out.getvalue()


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, LatticeKind):
        return v.value
    return str(v)


def reports_to_text(reports: Iterable[VerificationReport]) -> str:
    return "\n".join(r.to_text() for r in reports)


def _params(state: AutomatonState, **extra) -> dict:
    return {"lattice": state.kind, "generation": state.generation, **extra}


# --- pioneers -------------------------------------------------------------


def pioneers(state: AutomatonState) -> set[Cell]:
    kind = state.kind
    return {c for c, g in state.live_items() if g == lattice.norm(kind, c)}


def gasket_pairs(n: int) -> set[tuple[int, int]]:
    """Slice components ``(a, b)`` of gasket cells in rows 0..n."""
    return {(a, row - a) for row in range(n + 1) for a in range(row + 1) if a & (row - a) == 0}


def verify_pioneer_gasket(state: AutomatonState, slice_index: int) -> VerificationReport:
    kind = state.kind
    if not 0 <= slice_index < kind.degree:
        raise CellNotInSlice(f"slice index {slice_index} out of range for {kind.value}")
    found = set()
    for c in pioneers(state):
        if slice_index in lattice.slices_of(kind, c):
            sc = lattice.slice_coords(kind, slice_index, c)
            found.add((sc.a, sc.b))
    expected = gasket_pairs(state.generation)
    extra = found - expected
    missing = expected - found
    bad = [lattice.slice_cell(kind, lattice.SliceCoord(slice_index, a, b)) for a, b in extra | missing]
    return VerificationReport(
        "pioneer-gasket",
        _params(state, slice=slice_index),
        bad,
        {"pioneers_in_slice": len(found), "gasket_cells": len(expected),
         "pioneer_not_gasket": len(extra), "gasket_not_pioneer": len(missing)},
    )


def verify_containment(state: AutomatonState) -> VerificationReport:
    kind = state.kind
    pairs = gasket_pairs(state.generation)
    missing = set()
    for k in range(kind.degree):
        for a, b in pairs:
            c = lattice.slice_cell(kind, lattice.SliceCoord(k, a, b))
            if not state.is_live(c):
                missing.add(c)
    return VerificationReport(
        "containment", _params(state), sorted(missing),
        {"gasket_pairs_per_slice": len(pairs), "slices": kind.degree},
    )


# --- symmetry -------------------------------------------------------------


def verify_symmetry(state: AutomatonState) -> VerificationReport:
    kind = state.kind
    live = {c for c, _ in state.live_items()}
    moved = set()
    for g in lattice.symmetry_group(kind):
        for c in live:
            if lattice.apply_symmetry(kind, g, c) not in live:
                moved.add(c)
    corner = {c for c in live if lattice.on_corner_axis(kind, c)}
    return VerificationReport(
        "symmetry", _params(state), sorted(moved | corner),
        {"group_order": kind.group_order, "not_invariant": len(moved), "corner_axis_live": len(corner)},
    )


# --- genealogy ------------------------------------------------------------


def verify_parent_generation(state: AutomatonState) -> VerificationReport:
    bad = []
    checked = 0
    for c, g in state.live_items():
        rec = state.record(c)
        if rec.parent is None:
            if g != 0:
                bad.append(c)
            continue
        checked += 1
        if state.generation_of(rec.parent) != g - 1:
            bad.append(c)
    return VerificationReport("parent-generation", _params(state), bad, {"checked": checked})


def verify_distance_bound(state: AutomatonState) -> VerificationReport:
    kind = state.kind
    items = state.live_items()
    bad = [c for c, g in items if lattice.norm(kind, c) > g]
    return VerificationReport("distance-bound", _params(state), bad, {"checked": len(items)})


def verify_fertility_domain(state: AutomatonState) -> VerificationReport:
    hist = genealogy.fertility_histogram(state)
    counts = {f"children_{k}": v for k, v in hist.items()}
    counts["finalized"] = sum(hist.values())
    return VerificationReport(
        "fertility-domain", _params(state), genealogy.out_of_domain(state), counts
    )


def verify_pioneer_closure(state: AutomatonState) -> VerificationReport:
    pio = pioneers(state)
    bad = [c for c in pio if (p := state.record(c).parent) is not None and p not in pio]
    return VerificationReport("pioneer-closure", _params(state), sorted(bad), {"pioneers": len(pio)})


def verify_complete_ring(state: AutomatonState) -> VerificationReport:
    """At generation 2^k - 1 every cell at that distance is a pioneer."""
    n = state.generation
    if (n + 1) & n:
        raise PreconditionError(f"generation {n} is not of the form 2^k - 1")
    bad = [c for c in lattice.ring(state.kind, n) if state.generation_of(c) != n]
    return VerificationReport("complete-ring", _params(state), bad, {"ring_size": len(lattice.ring(state.kind, n))})


def verify_even_distance_children(state: AutomatonState) -> VerificationReport:
    """Forward direction decides the pass flag; the converse is tallied only."""
    if state.generation < 2:
        raise PreconditionError("needs generation >= 2")
    kind = state.kind
    forward_bad = []
    three = even = even_not_three = 0
    for c, _, n in genealogy.child_counts(state):
        d = lattice.norm(kind, c)
        if n == 3:
            three += 1
            if d % 2:
                forward_bad.append(c)
        if d % 2 == 0:
            even += 1
            if n != 3:
                even_not_three += 1
    return VerificationReport(
        "even-distance-children", _params(state), forward_bad,
        {"three_children": three, "even_distance": even,
         "converse_violations": even_not_three, "converse_holds": even_not_three == 0},
    )


# --- distance -------------------------------------------------------------


def verify_monotone_paths(kind: LatticeKind, radius: int, cap: int = 100_000) -> VerificationReport:
    kind = lattice.as_kind(kind)
    origin = kind.patriarch
    bad = []
    n_paths = 0
    targets = 0
    for b in lattice.ball(kind, radius):
        targets += 1
        for path in lattice.enumerate_shortest_paths(kind, origin, b, cap):
            n_paths += 1
            d = [lattice.squared_distance(kind, origin, c) for c in path]
            if any(q <= p for p, q in zip(d, d[1:])):
                bad.append(b)
                break
    return VerificationReport(
        "monotone-paths", {"lattice": kind, "radius": radius}, bad,
        {"targets": targets, "paths": n_paths},
    )


# --- 2-adic predicate -----------------------------------------------------


def verify_eventually_alive(state: AutomatonState, radius: int) -> VerificationReport:
    """Compare live cells in the ball against the 2-adic predicate.

    Live-but-false cells always fail. Predicate-true-but-dead cells only count
    when no cell in the ball was born during the last ``radius`` generations.
    """
    n = state.generation
    if state.kind is not LatticeKind.SQUARE:
        raise PreconditionError("the 2-adic predicate is defined for the square lattice only")
    if n < 2 * radius or (n + 1) & n:
        raise PreconditionError(f"need generation >= 2*radius and generation + 1 a power of 2, got {n}, {radius}")
    dead_true, live_false = [], []
    late = 0
    for c in lattice.ball(state.kind, radius):
        g = state.generation_of(c)
        pred = gasket.eventually_alive_square(*c)
        if g >= 0:
            if not pred:
                live_false.append(c)
            if g > n - radius:
                late += 1
        elif pred:
            dead_true.append(c)
    stable = late == 0
    bad = live_false + (dead_true if stable else [])
    return VerificationReport(
        "eventually-alive", _params(state, radius=radius), bad,
        {"stable": stable, "late_births": late,
         "predicate_true_dead": len(dead_true), "live_predicate_false": len(live_false)},
    )


# --- sequences ------------------------------------------------------------


def sequence_export(kind: LatticeKind | str, n: int, budget: Optional[int] = None) -> list[tuple[int, int, int]]:
    return engine.population(engine.run(kind, n, budget))


def sequence_csv(rows: Iterable[tuple[int, int, int]]) -> str:
    lines = ["generation,births,cumulative"]
    lines += [f"{g},{b},{c}" for g, b, c in rows]
    return "\n".join(lines) + "\n"


# --- claim registry -------------------------------------------------------

CLAIMS = (
    "pioneer-gasket",
    "containment",
    "symmetry",
    "parent-generation",
    "distance-bound",
    "fertility-domain",
    "pioneer-closure",
    "complete-ring",
    "even-distance-children",
    "monotone-paths",
    "eventually-alive",
)


def run_claim(
    claim: str,
    state: AutomatonState,
    slices: Optional[list[int]] = None,
    radius: Optional[int] = None,
    path_radius: int = 6,
) -> list[VerificationReport]:
    if claim == "pioneer-gasket":
        ks = range(state.kind.degree) if slices is None else slices
        return [verify_pioneer_gasket(state, k) for k in ks]
    if claim == "monotone-paths":
        return [verify_monotone_paths(state.kind, path_radius)]
    if claim == "eventually-alive":
        r = state.generation // 2 if radius is None else radius
        return [verify_eventually_alive(state, r)]
    single = {
        "containment": verify_containment,
        "symmetry": verify_symmetry,
        "parent-generation": verify_parent_generation,
        "distance-bound": verify_distance_bound,
        "fertility-domain": verify_fertility_domain,
        "pioneer-closure": verify_pioneer_closure,
        "complete-ring": verify_complete_ring,
        "even-distance-children": verify_even_distance_children,
    }
    if claim not in single:
        raise KeyError(claim)
    return [single[claim](state)]


def applicable(claim: str, state: AutomatonState) -> bool:
    """Whether ``claim`` has its preconditions met, for ``--claims all``."""
    n = state.generation
    power = (n + 1) & n == 0
    if claim == "eventually-alive":
        return state.kind is LatticeKind.SQUARE and power
    if claim == "complete-ring":
        return power
    if claim == "even-distance-children":
        return state.kind is LatticeKind.SQUARE and n >= 2
    return True
