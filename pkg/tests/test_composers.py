import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dfscolor.composers import (
    ExactPathColorer,
    FirstFitPathColorer,
    color_by_level_parity,
    compose_bands,
    compose_paths,
    compose_recursive,
)
from dfscolor.dfs import dfs_tree, leaf_heavy_decomposition
from dfscolor.errors import ContractViolation, HypothesisViolation, NoOddCycle, ParameterError
from dfscolor.generators import binary_tree, complete, cycle, groetzsch, path, petersen, random_girth5
from dfscolor.graph import Graph, is_cycle
from dfscolor.online import FirstFit, ModuloLevel, OnlineSession, QuadGroup
from dfscolor.oracles import clique_number_exact, cycle_stats, longest_path_length
from tests import oracles
from tests.strategies import graphs, non_bipartite

BOWTIE = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


class Flaky(OnlineSession):
    """Ignores its input and counts up across calls: not deterministic per presentation."""

    counter = 0

    def _choose(self, earlier, tag):
        Flaky.counter += 1
        return Flaky.counter


def test_first_fit_on_tree_uses_two_colors():
    out = compose_paths(binary_tree(3), FirstFit)
    assert out.colors_used == 2 and out.within_bound


def test_modulo_level_on_k4():
    out = compose_paths(complete(4), lambda: ModuloLevel(3))
    assert out.coloring.colors == (0, 1, 2, 3)
    assert out.bound.value == 4


def test_nondeterministic_algorithm_is_caught():
    with pytest.raises(ContractViolation):
        compose_paths(binary_tree(2), Flaky)


def test_prefix_colors_agree_across_paths():
    g = binary_tree(3)
    out = compose_paths(g, lambda: QuadGroup(5))
    t = dfs_tree(g, 0)
    for v in range(g.n):
        assert out.coloring.colors[v] == [0, 1, 0, 1, 2, 3, 2, 3][t.depth[v]]


def test_understated_ell_yields_cycle_witness():
    g = cycle(9)
    with pytest.raises(HypothesisViolation) as info:
        compose_paths(g, lambda: ModuloLevel(3))
    (witness,) = info.value.witness
    assert is_cycle(g, witness) and len(witness) == 9


def test_bands_single_band_matches_paths():
    g = complete(4)
    assert compose_bands(g, 3, FirstFit).coloring == compose_paths(g, FirstFit).coloring


def test_bands_on_bowtie():
    out = compose_bands(BOWTIE, 3, FirstFit)
    assert oracles.is_proper(BOWTIE, out.coloring.colors)
    assert out.colors_used <= out.bound.value


def test_bands_errors():
    with pytest.raises(NoOddCycle):
        compose_bands(cycle(6), 3, FirstFit)
    with pytest.raises(ParameterError):
        compose_bands(cycle(5), 4, FirstFit)


def test_bands_mixed_blocks():
    # a 5-cycle, a pendant 4-cycle and a bridge
    g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (7, 4), (7, 8)])
    out = compose_bands(g, 5, FirstFit)
    assert oracles.is_proper(g, out.coloring.colors)


def test_recursive_examples():
    out = compose_recursive(path(7), FirstFitPathColorer(declared_k=2))
    assert out.bound.params["levels"] == 1 and out.colors_used <= 2
    out = compose_recursive(binary_tree(3), FirstFitPathColorer(declared_k=2))
    assert out.colors_used <= 2 * 4 and out.within_bound
    g = groetzsch()
    out = compose_recursive(g, ExactPathColorer())
    leaves = leaf_heavy_decomposition(dfs_tree(g, 0)).leaf_count
    assert oracles.is_proper(g, out.coloring.colors)
    assert out.colors_used <= out.bound.params["k"] * (math.floor(math.log2(leaves)) + 1)


def test_recursive_declared_k_is_enforced():
    with pytest.raises(ContractViolation):
        compose_recursive(complete(4), ExactPathColorer(declared_k=3))


def test_level_parity_on_petersen():
    out = color_by_level_parity(petersen())
    assert out.bound.value == 2 * 2 + 2
    assert out.within_bound


def test_longest_path_bound_fails_on_single_edge():
    # with p counted in edges, K2 has p = 1 and omega = 2 but needs 2 colors
    g = complete(2)
    used = compose_paths(g, FirstFit).colors_used
    p, omega = longest_path_length(g), clique_number_exact(g)
    assert used == 2 > (p + omega) / 2
    assert used <= (p + 1 + omega) / 2


@settings(max_examples=120, deadline=None)
@given(non_bipartite(max_n=10))
def test_modulo_level_within_ell_plus_one(g):
    ell = cycle_stats(g).odd_circumference
    out = compose_paths(g, lambda: ModuloLevel(ell))
    assert oracles.is_proper(g, out.coloring.colors)
    assert out.colors_used <= ell + 1


@settings(max_examples=120, deadline=None)
@given(non_bipartite(max_n=10))
def test_bands_within_bound(g):
    ell = cycle_stats(g).odd_circumference
    for factory in (FirstFit, lambda: ModuloLevel(ell)):
        out = compose_bands(g, ell, factory)
        assert oracles.is_proper(g, out.coloring.colors)
        assert out.within_bound


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10))
def test_first_fit_composition_proper_and_bounded(g):
    out = compose_paths(g, FirstFit)
    assert oracles.is_proper(g, out.coloring.colors)
    p = longest_path_length(g)
    assert out.colors_used <= (p + 1 + clique_number_exact(g)) / 2 or g.n == 0


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10))
def test_level_parity_within_bound(g):
    out = color_by_level_parity(g)
    assert oracles.is_proper(g, out.coloring.colors)
    assert out.colors_used <= 2 * len(cycle_stats(g).odd_lengths) + 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_recursive_within_bound(g):
    out = compose_recursive(g, ExactPathColorer())
    assert oracles.is_proper(g, out.coloring.colors)
    assert out.within_bound


@settings(max_examples=80, deadline=None)
@given(non_bipartite(max_n=10), st.sampled_from([3, 5]))
def test_understated_ell_never_silently_wrong(g, guess):
    # either the coloring is proper or the error carries a real cycle
    try:
        out = compose_paths(g, lambda: ModuloLevel(guess))
    except HypothesisViolation as exc:
        assert all(is_cycle(g, c) for c in exc.witness)
    else:
        assert oracles.is_proper(g, out.coloring.colors)


@settings(max_examples=20, deadline=None)
@given(st.integers(20, 120), st.integers(0, 10**6))
def test_bands_first_fit_girth5(n, seed):
    g = random_girth5(n, 0.08, seed)
    if g.is_bipartite():
        return
    # the girth-5 estimate only needs some odd ell covering every odd cycle
    ell = n if n % 2 else n - 1
    out = compose_bands(g, ell, FirstFit)
    assert oracles.is_proper(g, out.coloring.colors)
    assert out.colors_used <= 3 * 2 * math.sqrt(ell + 1)
