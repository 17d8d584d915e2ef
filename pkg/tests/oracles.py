"""Reference implementations that share no code with the package.

They are deliberately naive (networkx enumeration, itertools brute force) so
that agreement with the package's bitmask searches means something.
"""

from __future__ import annotations

import itertools

import networkx as nx

from dfscolor.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def cycle_lengths(g: Graph) -> set[int]:
    return {len(c) for c in nx.simple_cycles(to_nx(g))}


def longest_path_edges(g: Graph) -> int:
    # plain recursive search over simple paths
    best = 0

    def walk(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.remove(w)

    for s in range(g.n):
        walk(s, {s}, 0)
    return best


def is_k_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    for colors in itertools.product(range(k), repeat=g.n - 1):
        full = (0, *colors)  # vertex 0 fixed by symmetry
        if all(full[u] != full[v] for u, v in g.edges):
            return True
    return False


def chromatic_number(g: Graph) -> int:
    k = 0 if g.n == 0 else 1
    while not is_k_colorable(g, k):
        k += 1
    return k


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def is_proper(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)
