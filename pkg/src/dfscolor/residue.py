"""Colorings from DFS depth residues mod k.

Each colorer either returns a coloring within its bound or raises
:class:`~dfscolor.errors.HypothesisViolation` carrying cycles of the input
that refute the hypothesis, so no exhaustive precheck is needed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from dfscolor.composers import Bound, ComposedColoring, compose_paths
from dfscolor.dfs import DfsTree, dfs_forest
from dfscolor.errors import HypothesisViolation, ParameterError
from dfscolor.graph import Coloring, Graph, is_cycle, merge_color_classes, validate_coloring
from dfscolor.online import FirstFit


@dataclass(frozen=True)
class ResidueClasses:
    k: int
    classes: tuple[tuple[int, ...], ...]
    forest: tuple[DfsTree, ...]

    def tree_of(self, v: int) -> DfsTree:
        for t in self.forest:
            if t.depth[v] is not None:
                return t
        raise KeyError(v)

    def depth(self, v: int) -> int:
        return self.tree_of(v).depth[v]  # type: ignore[return-value]


def residue_classes(g: Graph, k: int) -> ResidueClasses:
    if k < 2:
        raise ParameterError(f"modulus must be at least 2, got {k}")
    forest = tuple(dfs_forest(g))
    classes: list[list[int]] = [[] for _ in range(k)]
    for t in forest:
        for v in t.preorder:
            classes[t.depth[v] % k].append(v)  # type: ignore[operator]
    return ResidueClasses(k, tuple(tuple(sorted(c)) for c in classes), forest)


def _path_between(t: DfsTree, a: int, b: int) -> list[int]:
    """Tree path from ``a`` to ``b`` for tree-comparable ``a``, ``b``."""
    if t.depth[a] <= t.depth[b]:  # type: ignore[operator]
        return t.tree_path(a, b)
    return t.tree_path(b, a)[::-1]


def _checked(g: Graph, cycle: list[int], k: int, residue: int) -> tuple[int, ...]:
    if not is_cycle(g, cycle) or len(cycle) % k != residue % k:
        raise AssertionError(f"extracted witness {cycle} is not a cycle of length {residue} mod {k}")
    return tuple(cycle)


def color_residue1(g: Graph, k: int, r: int) -> ComposedColoring:
    """At most ``r`` distinct cycle lengths = 1 (mod k) gives at most ``(r+1)k`` colors.

    Class ``W_i`` is First-Fit colored in order of depth (ties by id) from
    its own palette of ``r + 1`` colors. A vertex's colored neighbors in its
    class are ancestors at depths = its depth (mod k), each closing a cycle
    of a different length = 1 (mod k). Non-adjacent color classes are merged
    at the end, which never adds colors.
    """
    if r < 0:
        raise ParameterError("r must be non-negative")
    rc = residue_classes(g, k)
    colors = [0] * g.n
    trace = [""] * g.n
    for i, members in enumerate(rc.classes):
        local: dict[int, int] = {}
        for v in sorted(members, key=lambda u: (rc.depth(u), u)):
            nbrs = [w for w in g.adj[v] if w in local]
            taken = {local[w] for w in nbrs}
            c = 0
            while c in taken:
                c += 1
            if c > r:
                t = rc.tree_of(v)
                cycles = [
                    _checked(g, t.tree_path(w, v), k, 1)
                    for w in sorted(nbrs, key=lambda u: -t.depth[u])[: r + 1]  # type: ignore[operator]
                ]
                raise HypothesisViolation(
                    f"vertex {v} has {len(nbrs)} earlier neighbors in W_{i}: "
                    f"more than {r} distinct cycle lengths = 1 (mod {k})",
                    cycles,
                )
            local[v] = c
            colors[v] = i * (r + 1) + c
            trace[v] = f"W{i}"
    coloring = Coloring.of(merge_color_classes(g, colors))
    assert validate_coloring(g, coloring)
    return ComposedColoring(coloring, Bound("(r+1)k", (r + 1) * k, {"r": r, "k": k}), tuple(trace))


def color_residue2(g: Graph, k: int, s: int) -> ComposedColoring:
    """At most ``s`` distinct cycle lengths = 2 (mod k) gives at most ``sk+k+1`` colors.

    First Fit along root-to-leaf DFS paths. If some vertex needs color
    ``sk+k+1`` or more it has that many adjacent ancestors; some residue
    class of their depths then holds ``s+2`` of them, and pairing the
    deepest with each other one closes ``s+1`` cycles of distinct lengths
    = 2 (mod k).
    """
    if k < 2:
        raise ParameterError(f"modulus must be at least 2, got {k}")
    if s < 0:
        raise ParameterError("s must be non-negative")
    limit = s * k + k + 1
    composed = compose_paths(g, FirstFit)
    over = [v for v, c in enumerate(composed.coloring.colors) if c >= limit]
    if over:
        v = over[0]
        forest = dfs_forest(g)
        t = next(t for t in forest if t.depth[v] is not None)
        dv = t.depth[v]
        groups: dict[int, list[int]] = defaultdict(list)
        for w in g.adj[v]:
            if t.depth[w] < dv:  # type: ignore[operator]
                groups[t.depth[w] % k].append(w)  # type: ignore[operator]
        big = next((grp for _, grp in sorted(groups.items()) if len(grp) >= s + 2), None)
        if big is None:
            raise AssertionError(f"vertex {v} over the bound without a residue class of {s + 2} ancestors")
        big.sort(key=lambda u: -t.depth[u])  # type: ignore[operator]
        deepest = big[0]
        cycles = [_checked(g, [v] + t.tree_path(w, deepest)[::-1], k, 2) for w in big[1 : s + 2]]
        raise HypothesisViolation(
            f"vertex {v} needs color {composed.coloring.colors[v]}: "
            f"more than {s} distinct cycle lengths = 2 (mod {k})",
            cycles,
        )
    return ComposedColoring(composed.coloring, Bound("sk+k+1", limit, {"s": s, "k": k}), composed.trace)


def _forest_cycle(vertices: list[int], edges: list[tuple[int, int]]) -> list[int] | None:
    """Some cycle of the graph ``(vertices, edges)``, or ``None`` if it is a forest."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree_adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree_adj[a].append(b)
            tree_adj[b].append(a)
            continue
        prev = {a: a}
        queue = [a]
        for x in queue:
            for y in tree_adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path
    return None


def _residue3_witness(g: Graph, t: DfsTree, cycle: list[int], k: int) -> tuple[int, ...]:
    """A cycle of length = 3 (mod k) built from a cycle inside one class."""
    depth = t.depth
    m = len(cycle)
    at = max(range(m), key=lambda j: depth[cycle[j]])  # type: ignore[arg-type, return-value]
    u = cycle[at]
    a, b = cycle[(at - 1) % m], cycle[(at + 1) % m]
    # u is deepest, so both its cycle neighbors are its ancestors
    if depth[a] < depth[b]:  # type: ignore[operator]
        v, w, step = a, b, 1
    else:
        v, w, step = b, a, -1
    x = cycle[(at + 2 * step) % m]
    if depth[x] < depth[w]:  # type: ignore[operator]
        return _checked(g, [u] + _path_between(t, v, x) + [w], k, 3)
    j = (at + 2 * step) % m
    while True:
        z, y = cycle[j], cycle[(j + step) % m]
        if not t.is_ancestor(w, y):
            break
        j = (j + step) % m
    # z is below w, y is a proper ancestor of w
    return _checked(g, [u] + _path_between(t, v, y) + t.tree_path(w, z)[::-1], k, 3)


def color_residue3(g: Graph, k: int) -> ComposedColoring:
    """No cycle of length = 3 (mod k) gives at most ``2k`` colors.

    Each class induces a forest, 2-colored by depth parity from its smallest
    vertex with a palette of its own; non-adjacent color classes are merged
    at the end. A cycle inside a class is turned into a witness cycle of
    length = 3 (mod k).
    """
    rc = residue_classes(g, k)
    colors = [0] * g.n
    trace = [""] * g.n
    for i, members in enumerate(rc.classes):
        inside = set(members)
        edges = [(a, b) for a in members for b in g.adj[a] if b in inside and a < b]
        cyc = _forest_cycle(list(members), edges)
        if cyc is not None:
            t = rc.tree_of(cyc[0])
            raise HypothesisViolation(
                f"W_{i} induces a cycle {cyc}: the graph has a cycle of length = 3 (mod {k})",
                [_residue3_witness(g, t, cyc, k)],
            )
        parity: dict[int, int] = {}
        for s in members:
            if s in parity:
                continue
            parity[s] = 0
            queue = [s]
            for x in queue:
                for y in g.adj[x]:
                    if y in inside and y not in parity:
                        parity[y] = 1 - parity[x]
                        queue.append(y)
        for v in members:
            colors[v] = 2 * i + parity[v]
            trace[v] = f"W{i}"
    coloring = Coloring.of(merge_color_classes(g, colors))
    assert validate_coloring(g, coloring)
    return ComposedColoring(coloring, Bound("2k", 2 * k, {"k": k}), tuple(trace))
