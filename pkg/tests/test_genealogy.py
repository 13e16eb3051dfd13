import pytest

from uwca import engine, genealogy, lattice
from uwca.errors import CellNotLive, FertilityNotFinal
from uwca.genealogy import FertilityClass
from uwca.lattice import LatticeKind

SQ, HEX = LatticeKind.SQUARE, LatticeKind.HEX


def test_parent_of():
    s = engine.run(SQ, 5)
    assert genealogy.parent_of(s, (1, 0)) == (0, 0)
    assert genealogy.parent_of(s, (2, 1)) == (2, 0)
    assert genealogy.parent_of(s, (0, 0)) is None
    with pytest.raises(CellNotLive):
        genealogy.parent_of(s, (1, 1))


def test_children_of():
    assert len(genealogy.children_of(engine.run(SQ, 1), (0, 0))) == 4
    assert genealogy.children_of(engine.run(SQ, 2), (1, 0)) == [(2, 0)]
    assert len(genealogy.children_of(engine.run(HEX, 1), (0, 0, 0))) == 6


def test_lineage():
    s = engine.run(SQ, 6)
    assert genealogy.lineage(s, (0, 0)) == [(0, 0)]
    assert genealogy.lineage(s, (2, 1)) == [(2, 1), (2, 0), (1, 0), (0, 0)]


@pytest.mark.parametrize("kind", [SQ, HEX])
def test_lineage_length(kind, run_cached):
    s = run_cached(kind.value, 32)
    for c, g in s.live_items():
        chain = genealogy.lineage(s, c)
        assert len(chain) == g + 1
        assert chain[-1] == kind.patriarch
        assert all(b in lattice.neighbors(kind, a) for a, b in zip(chain, chain[1:]))


def test_fertility_class():
    s = engine.run(SQ, 4)
    assert genealogy.fertility_class(s, (0, 0)) is FertilityClass.PATRIARCH
    assert genealogy.fertility_class(engine.run(SQ, 3), (2, 0)) is FertilityClass.THREE
    assert genealogy.fertility_class(s, (2, 1)) is FertilityClass.LEAF
    with pytest.raises(FertilityNotFinal):
        genealogy.fertility_class(engine.run(SQ, 3), (2, 1))


def test_histogram_examples():
    assert genealogy.fertility_histogram(engine.run(SQ, 1)) == {}
    assert set(genealogy.fertility_histogram(engine.run(SQ, 16))) <= {0, 1, 3}
    assert set(genealogy.fertility_histogram(engine.run(HEX, 16))) <= {0, 1, 2, 3}


def test_histogram_reports_out_of_domain_keys():
    # hand-built state: (1,0) gets two children, which the square rule never produces
    B = engine.BirthRecord
    records = {
        (0, 0): B(0, None), (1, 0): B(1, (0, 0)),
        (2, 0): B(2, (1, 0)), (1, 1): B(2, (1, 0)),
    }
    fake = engine.from_records(SQ, records, 3)
    assert genealogy.fertility_histogram(fake) == {0: 2, 2: 1}
    assert genealogy.out_of_domain(fake) == [(1, 0)]


def test_family_tree_edges():
    assert genealogy.family_tree_edges(engine.run(SQ, 0)) == []
    s = engine.run(SQ, 6)
    edges = genealogy.family_tree_edges(s)
    assert len(edges) == 48 == s.population_size - 1


@pytest.mark.parametrize("kind", [SQ, HEX])
def test_tree_is_rooted_spanning(kind, run_cached):
    s = run_cached(kind.value, 64)
    children = {}
    for p, c in genealogy.family_tree_edges(s):
        children.setdefault(p, []).append(c)
    seen = {kind.patriarch}
    stack = [kind.patriarch]
    while stack:
        for c in children.get(stack.pop(), []):
            assert c not in seen
            seen.add(c)
            stack.append(c)
    assert seen == set(s.live)


@pytest.mark.parametrize("kind", [SQ, HEX])
def test_child_lists_are_final(kind):
    early = engine.run(kind, 20)
    late = engine.run(kind, 40)
    for c, g in early.live_items():
        if genealogy.is_final(early, c):
            assert genealogy.children_of(early, c) == genealogy.children_of(late, c)


def test_tree_lines_format():
    lines = list(genealogy.tree_lines(engine.run(SQ, 1)))
    assert lines == ["0,0 -1,0\n", "0,0 0,-1\n", "0,0 0,1\n", "0,0 1,0\n"]


def test_potential_fertility_is_next_step_children():
    s = engine.run(HEX, 5)
    pot = genealogy.potential_fertility(s)
    nxt = engine.run(HEX, 6)
    assert set(pot) == s.frontier
    for c, n in pot.items():
        assert n == len(genealogy.children_of(nxt, c))
