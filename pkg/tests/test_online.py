import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dfscolor.dfs import dfs_tree
from dfscolor.errors import ContractViolation, HypothesisViolation, ParameterError
from dfscolor.generators import complete, cycle, empty, path, random_girth5
from dfscolor.online import (
    ALGORITHMS,
    FirstFit,
    ModuloLevel,
    Presentation,
    QuadGroup,
    first_fit_girth5_bound,
    make_factory,
    parity_greedy_levels,
    quad_group_color,
    quad_group_period,
    replay,
)
from tests import oracles
from tests.strategies import graphs


def run_ff(g, order=None):
    return replay(FirstFit, Presentation.of_order(g, order or range(g.n)))


def test_first_fit_examples():
    assert run_ff(path(4)) == (0, 1, 0, 1)
    assert run_ff(cycle(5)) == (0, 1, 0, 1, 2)
    assert run_ff(complete(1)) == (0,)
    assert run_ff(empty(4)) == (0, 0, 0, 0)
    assert run_ff(complete(4)) == (0, 1, 2, 3)


def test_empty_presentation():
    assert replay(FirstFit, Presentation((), ())) == ()


def test_modulo_level_examples():
    s = ModuloLevel(3)
    assert [s.step([], d) for d in range(8)] == [0, 1, 2, 3, 0, 1, 2, 3]
    assert ModuloLevel(5).step([], 11) == 5
    with pytest.raises(ParameterError):
        ModuloLevel(4)
    with pytest.raises(ParameterError):
        ModuloLevel(1)


def test_quad_group_examples():
    assert quad_group_period(5) == 8
    assert [quad_group_color(i, 5) for i in range(8)] == [0, 1, 0, 1, 2, 3, 2, 3]
    assert QuadGroup(5).bound(100) == 4 == (5 + 3) // 2
    assert quad_group_period(7) == 12
    assert QuadGroup(7).bound(100) == 6 == (7 + 5) // 2
    with pytest.raises(ParameterError):
        QuadGroup(6)


@pytest.mark.parametrize("ell", [5, 7, 9, 11, 13, 15])
def test_quad_group_palette_and_spacing(ell):
    period = quad_group_period(ell)
    assert period > ell and period % 4 == 0
    colors = [quad_group_color(i, ell) for i in range(3 * period)]
    assert len(set(colors)) == period // 2
    # equal colors sit at even distance (same parity) or at least ell+1 apart
    for i, a in enumerate(colors):
        for j in range(i + 1, len(colors)):
            if colors[j] == a:
                assert (j - i) % 2 == 0 or j - i > ell


def test_session_rejects_future_positions():
    s = FirstFit()
    s.step([])
    with pytest.raises(ContractViolation):
        s.step([1])
    with pytest.raises(ContractViolation):
        Presentation((0, 1), ((), (1,)))


def test_make_factory():
    assert set(ALGORITHMS) == {"first-fit", "modulo-level", "quad-group"}
    assert isinstance(make_factory("modulo-level", ell=3)(), ModuloLevel)
    with pytest.raises(ParameterError):
        make_factory("greedy-magic")
    with pytest.raises(ParameterError):
        make_factory("quad-group", ell=4)


def test_presentation_graph_roundtrip():
    g = cycle(5)
    p = Presentation.of_order(g, [4, 2, 0, 1, 3])
    h = p.graph()
    assert h.m == g.m
    assert all(g.has_edge(p.vertices[a], p.vertices[b]) for a, b in h.edges)


def test_parity_greedy_examples():
    # a tree: no back edges, no odd cycles
    assert parity_greedy_levels([], 4, 0) == (1, 0, 1, 0, 1)
    t = dfs_tree(cycle(5), 0)
    lv = {(t.depth[a], t.depth[b]) for a, b in t.back_edges}
    colors = parity_greedy_levels(sorted(lv), t.height, 1)
    assert colors == (2, 0, 2, 0, 3)
    assert len(set(colors)) <= 2 * 1 + 2
    with pytest.raises(HypothesisViolation):
        parity_greedy_levels(sorted(lv), t.height, 0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_first_fit_is_proper_in_any_order(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    colors = run_ff(g, order)
    by_vertex = dict(zip(order, colors))
    assert oracles.is_proper(g, by_vertex)
    assert max(colors, default=-1) + 1 <= g.max_degree() + 1


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.integers(0, 3))
def test_replay_is_deterministic(g, which):
    factory = [FirstFit, lambda: ModuloLevel(5), lambda: QuadGroup(9), lambda: ModuloLevel(3)][which]
    p = Presentation.of_order(g, range(g.n), tags=list(range(g.n)))
    assert replay(factory, p) == replay(factory, p)


@settings(max_examples=40, deadline=None)
@given(st.integers(10, 200), st.floats(0.02, 0.3), st.integers(0, 10**6))
def test_first_fit_girth5_bound(n, p, seed):
    g = random_girth5(n, p, seed)
    used = len(set(run_ff(g)))
    assert used <= first_fit_girth5_bound(n) == 2 * math.sqrt(n)
