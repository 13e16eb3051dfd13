import pytest

from uwca import analysis, engine, genealogy, lattice
from uwca.engine import BirthRecord
from uwca.errors import CellNotInSlice, PreconditionError
from uwca.lattice import LatticeKind

SQ, HEX = LatticeKind.SQUARE, LatticeKind.HEX
KINDS = ["square", "hex"]


def corrupted(kind, n, extra):
    """Copy of run(kind, n) with extra records forced in."""
    s = engine.run(kind, n)
    records = {c: s.record(c) for c in s.live}
    records.update(extra)
    return engine.from_records(kind, records, n)


def test_pioneer_examples():
    s = engine.run(SQ, 8)
    pio = analysis.pioneers(s)
    assert (0, 0) in pio
    assert (2, 1) in pio
    assert s.generation_of((3, 2)) == 7 and (3, 2) not in pio


@pytest.mark.parametrize("kind", KINDS)
def test_pioneer_gasket_gen15(kind, run_cached):
    rep = analysis.verify_pioneer_gasket(run_cached(kind, 15), 0)
    assert rep.passed and rep.counterexamples == []


def test_pioneer_gasket_gen0():
    for kind in KINDS:
        s = engine.run(kind, 0)
        for k in range(lattice.as_kind(kind).degree):
            rep = analysis.verify_pioneer_gasket(s, k)
            assert rep.passed and rep.counts["pioneers_in_slice"] == 1


def test_pioneer_gasket_bad_slice():
    with pytest.raises(CellNotInSlice):
        analysis.verify_pioneer_gasket(engine.run(SQ, 3), 4)


def test_pioneer_gasket_detects_extra_pioneer():
    # (1,1) at generation 2 would be a pioneer off the gasket
    s = corrupted("square", 3, {(1, 1): BirthRecord(2, (1, 0))})
    rep = analysis.verify_pioneer_gasket(s, 0)
    assert not rep.passed and (1, 1) in rep.counterexamples


def test_containment(run_cached):
    assert analysis.verify_containment(run_cached("square", 15)).passed
    assert analysis.verify_containment(run_cached("hex", 31)).passed
    assert analysis.verify_containment(engine.run(SQ, 0)).passed


def test_containment_detects_missing():
    s = engine.run(SQ, 3)
    records = {c: s.record(c) for c in s.live if c != (3, 0)}
    rep = analysis.verify_containment(engine.from_records(SQ, records, 3))
    assert rep.counterexamples == [(3, 0)]


@pytest.mark.parametrize("kind", KINDS)
def test_symmetry(kind, run_cached):
    rep = analysis.verify_symmetry(run_cached(kind, 64))
    assert rep.passed
    assert rep.counts["group_order"] == (8 if kind == "square" else 12)
    assert analysis.verify_symmetry(engine.run(kind, 0)).passed


def test_hex_diagonal_never_born(run_cached):
    s = run_cached("hex", 16)
    assert lattice.on_corner_axis(HEX, (2, -1, -1))
    assert not s.is_live((2, -1, -1))


def test_symmetry_detects_asymmetry_and_corner_cells():
    s = corrupted("square", 3, {(1, 1): BirthRecord(2, (1, 0))})
    rep = analysis.verify_symmetry(s)
    assert (1, 1) in rep.counterexamples
    assert rep.counts["corner_axis_live"] == 1
    assert rep.counts["not_invariant"] >= 1


@pytest.mark.parametrize("kind", KINDS)
def test_parent_generation_and_distance(kind, run_cached):
    s = run_cached(kind, 64)
    assert analysis.verify_parent_generation(s).passed
    assert analysis.verify_distance_bound(s).passed
    assert analysis.verify_parent_generation(engine.run(kind, 1)).passed
    assert analysis.verify_distance_bound(engine.run(kind, 0)).passed


def test_parent_generation_detects_skip():
    s = corrupted("square", 7, {(6, 0): BirthRecord(7, (5, 0))})
    rep = analysis.verify_parent_generation(s)
    assert (6, 0) in rep.counterexamples


@pytest.mark.parametrize("kind", KINDS)
def test_monotone_paths(kind):
    rep = analysis.verify_monotone_paths(kind, 6)
    assert rep.passed
    assert analysis.verify_monotone_paths(kind, 1).passed


def test_monotone_paths_counts():
    rep = analysis.verify_monotone_paths("square", 2)
    # targets: 13 cells; paths: 1 + 4*1 + 4*1 + 4*2
    assert rep.counts == {"targets": 13, "paths": 17}


def test_even_distance_children(run_cached):
    s = run_cached("square", 64)
    counts = {c: n for c, _, n in genealogy.child_counts(s)}
    assert counts[(2, 0)] == 3 and lattice.norm(SQ, (2, 0)) % 2 == 0
    assert counts[(2, 1)] == 0 and lattice.norm(SQ, (2, 1)) % 2 == 1
    rep = analysis.verify_even_distance_children(s)
    assert rep.passed
    assert "converse_violations" in rep.counts
    with pytest.raises(PreconditionError):
        analysis.verify_even_distance_children(engine.run(SQ, 1))


def test_eventually_alive(run_cached):
    rep = analysis.verify_eventually_alive(run_cached("square", 31), 15)
    assert rep.passed
    assert rep.counts["stable"] is True
    assert rep.counts["predicate_true_dead"] == 0
    assert rep.counts["live_predicate_false"] == 0
    assert not run_cached("square", 31).is_live((3, 3))
    assert engine.run(SQ, 3).is_live((2, 1))


def test_eventually_alive_preconditions():
    with pytest.raises(PreconditionError):
        analysis.verify_eventually_alive(engine.run(SQ, 30), 15)
    with pytest.raises(PreconditionError):
        analysis.verify_eventually_alive(engine.run(SQ, 31), 16)
    with pytest.raises(PreconditionError):
        analysis.verify_eventually_alive(engine.run(HEX, 31), 15)


def test_eventually_alive_flags_live_predicate_false():
    s = corrupted("square", 15, {(1, 1): BirthRecord(2, (1, 0))})
    rep = analysis.verify_eventually_alive(s, 7)
    assert (1, 1) in rep.counterexamples


def test_sequence_export():
    assert [r[2] for r in analysis.sequence_export("square", 7)] == [1, 5, 9, 21, 25, 37, 49, 85]
    assert [r[2] for r in analysis.sequence_export("hex", 3)] == [1, 7, 13, 31]
    assert analysis.sequence_export("square", 0) == [(0, 1, 1)]
    assert analysis.sequence_csv([(0, 1, 1)]) == "generation,births,cumulative\n0,1,1\n"


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [15, 31, 63, 64])
def test_claims_hold_across_generations(kind, n, run_cached):
    s = run_cached(kind, n)
    for rep in (
        analysis.verify_symmetry(s),
        analysis.verify_parent_generation(s),
        analysis.verify_distance_bound(s),
        analysis.verify_containment(s),
        analysis.verify_pioneer_closure(s),
    ):
        assert rep.passed, rep.to_text()


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("k", range(1, 7))
def test_complete_ring(kind, k, run_cached):
    s = run_cached(kind, 2**k - 1)
    rep = analysis.verify_complete_ring(s)
    assert rep.passed
    assert rep.counts["ring_size"] == lattice.as_kind(kind).degree * (2**k - 1)


def test_complete_ring_precondition():
    with pytest.raises(PreconditionError):
        analysis.verify_complete_ring(engine.run(SQ, 6))


def test_report_text_format():
    bad_state = corrupted("square", 3, {(1, 1): BirthRecord(2, (1, 0))})
    text = analysis.verify_parent_generation(engine.run(SQ, 1)).to_text()
    assert text == (
        "[report parent-generation]\n"
        "param.generation = 1\n"
        "param.lattice = square\n"
        "passed = true\n"
        "count.checked = 4\n"
        "counterexamples = 0\n"
    )
    bad = analysis.verify_symmetry(bad_state).to_text()
    assert "passed = false\n" in bad and "  1,1\n" in bad


def test_report_truncates_listing():
    rep = analysis.VerificationReport("x", {}, [(i, 0) for i in range(250)])
    lines = rep.to_text().splitlines()
    assert "counterexamples = 250" in lines
    assert sum(line.startswith("  ") for line in lines) == analysis.MAX_LISTED
    assert not rep.passed


@pytest.mark.parametrize("kind", KINDS)
def test_reports_are_deterministic(kind):
    def all_reports():
        s = engine.run(kind, 31)
        reps = []
        for claim in analysis.CLAIMS:
            if analysis.applicable(claim, s):
                reps += analysis.run_claim(claim, s)
        return analysis.reports_to_text(reps)

    assert all_reports() == all_reports()


def test_run_claim_unknown():
    with pytest.raises(KeyError):
        analysis.run_claim("no-such", engine.run(SQ, 3))
