import networkx as nx
import pytest
from hypothesis import given, settings

from dfscolor.errors import BudgetExceeded, GraphStructureError, NoOddCycle
from dfscolor.generators import complete, cycle, groetzsch, path, petersen
from dfscolor.graph import Coloring, Graph, blocks, is_biconnected, is_cycle, validate_coloring
from dfscolor.oracles import (
    chromatic_number_exact,
    clique_number_exact,
    cycle_stats,
    forbidden_subgraph_check,
    maximum_clique,
    residue_cycle_counts,
)
from tests import oracles
from tests.strategies import graphs


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphStructureError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphStructureError):
        Graph(3, [(0, 3)])
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_validate_coloring_examples():
    assert validate_coloring(cycle(4), [0, 1, 0, 1])
    verdict = validate_coloring(path(2), [0, 0])
    assert not verdict and verdict.witness == (0, 1)
    with pytest.raises(GraphStructureError):
        validate_coloring(cycle(4), [0, 1, 0])


def test_coloring_range_is_checked():
    with pytest.raises(GraphStructureError):
        Coloring((0, 3), 2)
    assert Coloring.of([0, 2, 2]).num_colors == 2


def test_cycle_stats_examples():
    c6 = cycle_stats(cycle(6))
    assert (c6.spectrum, c6.girth, c6.odd_circumference) == ((6,), 6, None)
    with pytest.raises(NoOddCycle):
        c6.require_odd_circumference()
    k4 = cycle_stats(complete(4))
    assert (k4.spectrum, k4.girth, k4.odd_circumference) == ((3, 4), 3, 3)
    pet = cycle_stats(petersen())
    assert pet.spectrum == (5, 6, 8, 9)
    assert pet.odd_circumference == 9
    assert pet.longest_path == 9


def test_forest_has_no_cycles():
    s = cycle_stats(path(5))
    assert s.spectrum == () and s.girth is None and s.longest_path == 4


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded, match="21"):
        cycle_stats(path(21))
    with pytest.raises(BudgetExceeded):
        chromatic_number_exact(path(21))
    assert cycle_stats(path(21), limit=21).longest_path == 20


def test_chromatic_number_examples():
    assert chromatic_number_exact(cycle(5))[0] == 3
    assert chromatic_number_exact(complete(4))[0] == 4
    chi, witness = chromatic_number_exact(groetzsch())
    assert chi == 4
    assert validate_coloring(groetzsch(), witness)
    assert chromatic_number_exact(Graph(0))[0] == 0


def test_clique_examples():
    assert clique_number_exact(complete(4)) == 4
    assert clique_number_exact(groetzsch()) == 2
    assert clique_number_exact(petersen()) == 2
    assert sorted(maximum_clique(complete(4))) == [0, 1, 2, 3]


def test_forbidden_subgraph_examples():
    c5 = cycle(5)
    assert not forbidden_subgraph_check(c5, "triangle").present
    found = forbidden_subgraph_check(c5, "C5")
    assert found.present and is_cycle(c5, found.witness)
    tri = forbidden_subgraph_check(complete(4), "triangle")
    assert tri.present and is_cycle(complete(4), tri.witness)
    assert not forbidden_subgraph_check(petersen(), "triangle").present
    assert forbidden_subgraph_check(petersen(), "C5").present
    with pytest.raises(ValueError):
        forbidden_subgraph_check(c5, "K4")


def test_block_examples():
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(bowtie)
    assert len(bd.blocks) == 2 and bd.cut_vertices == (2,)
    assert len(blocks(cycle(6)).blocks) == 1 and blocks(cycle(6)).cut_vertices == ()
    p4 = blocks(path(4))
    assert len(p4.blocks) == 3 and all(b.is_bridge for b in p4.blocks)
    assert p4.cut_vertices == (1, 2)
    assert is_biconnected(cycle(5)) and not is_biconnected(bowtie)


def test_residue_cycle_count_examples():
    assert residue_cycle_counts(cycle(5), 3) == {0: (), 1: (), 2: (5,)}
    k4 = residue_cycle_counts(complete(4), 3)
    assert k4[0] == (3,) and k4[1] == (4,)
    assert residue_cycle_counts(petersen(), 4) == {0: (8,), 1: (5, 9), 2: (6,), 3: ()}


def test_is_cycle():
    g = cycle(5)
    assert is_cycle(g, [0, 1, 2, 3, 4])
    assert not is_cycle(g, [0, 1, 2])
    assert not is_cycle(g, [0, 1, 0, 1])


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_spectrum_matches_networkx(g):
    s = cycle_stats(g)
    expected = oracles.cycle_lengths(g)
    assert set(s.spectrum) == expected
    assert s.girth == (min(expected) if expected else None)
    odd = sorted(x for x in expected if x % 2)
    assert s.odd_lengths == tuple(odd)
    assert s.odd_circumference == (odd[-1] if odd else None)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_longest_path_matches_brute_force(g):
    assert cycle_stats(g).longest_path == oracles.longest_path_edges(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    chi, witness = chromatic_number_exact(g)
    assert chi == oracles.chromatic_number(g)
    assert validate_coloring(g, witness) and witness.num_colors == chi


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_clique_number_matches_networkx(g):
    assert clique_number_exact(g) == oracles.clique_number(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_blocks_match_networkx(g):
    h = oracles.to_nx(g)
    bd = blocks(g)
    ours = sorted(tuple(sorted(b.vertices)) for b in bd.blocks)
    theirs = sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
    assert ours == theirs
    assert set(bd.cut_vertices) == set(nx.articulation_points(h))
    covered = sorted(e for b in bd.blocks for e in b.edges)
    assert covered == sorted(g.edges)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_components_and_bipartiteness_match_networkx(g):
    h = oracles.to_nx(g)
    assert sorted(map(sorted, g.components())) == sorted(map(sorted, nx.connected_components(h)))
    assert g.is_bipartite() == nx.is_bipartite(h)
    two = g.two_coloring()
    if two is not None:
        assert oracles.is_proper(g, two)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_triangle_and_c5_checks(g):
    lengths = oracles.cycle_lengths(g)
    tri = forbidden_subgraph_check(g, "triangle")
    c5 = forbidden_subgraph_check(g, "C5")
    assert tri.present == (3 in lengths)
    assert c5.present == (5 in lengths)
    for found, size in ((tri, 3), (c5, 5)):
        if found.present:
            assert len(found.witness) == size and is_cycle(g, found.witness)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_merge_color_classes_keeps_proper(g):
    from dfscolor.graph import merge_color_classes

    distinct = list(range(g.n))
    merged = merge_color_classes(g, distinct)
    assert oracles.is_proper(g, merged)
    assert len(set(merged)) <= max(g.n, 0)
    again = merge_color_classes(g, merged)
    assert len(set(again)) <= len(set(merged))
