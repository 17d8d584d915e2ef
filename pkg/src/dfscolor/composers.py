"""Turn an online algorithm plus a DFS decomposition into a full coloring."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Protocol

from dfscolor.dfs import DfsTree, band_pieces, bands, dfs_forest, dfs_tree, leaf_heavy_decomposition, root_to_leaf_paths
from dfscolor.errors import ContractViolation, HypothesisViolation, NoOddCycle, ParameterError
from dfscolor.graph import Coloring, Graph, blocks, validate_coloring
from dfscolor.online import SessionFactory, parity_greedy_levels
from dfscolor.oracles import CHROMATIC_LIMIT, chromatic_number_exact, cycle_stats


@dataclass(frozen=True)
class Bound:
    """A concrete instance of a color bound."""

    formula: str
    value: float
    params: dict[str, float] = field(default_factory=dict)

    def __str__(self) -> str:
        ps = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.formula} = {self.value:g}" + (f" ({ps})" if ps else "")


@dataclass(frozen=True)
class ComposedColoring:
    coloring: Coloring
    bound: Bound
    trace: tuple[str, ...]

    @property
    def colors_used(self) -> int:
        return self.coloring.num_colors

    @property
    def within_bound(self) -> bool:
        return self.colors_used <= self.bound.value


def _witness_for_edge(forest: Sequence[DfsTree], u: int, v: int) -> tuple[int, ...]:
    # every edge is ancestor-descendant in its tree; the tree path closes a cycle
    for t in forest:
        if t.depth[u] is not None:
            a, d = (u, v) if t.depth[u] < t.depth[v] else (v, u)  # type: ignore[operator]
            return tuple(t.tree_path(a, d))
    return (u, v)


def _finish(g: Graph, colors: Sequence[int], forest: Sequence[DfsTree], why: str) -> Coloring:
    coloring = Coloring.of(colors)
    verdict = validate_coloring(g, coloring)
    if not verdict:
        u, v = verdict.witness  # type: ignore[misc]
        raise HypothesisViolation(f"{why}: edge ({u}, {v}) is monochromatic", [_witness_for_edge(forest, u, v)])
    return coloring


def _subtree_paths(t: DfsTree, top: int, inside: set[int] | None) -> list[list[int]]:
    """Root-to-leaf paths of the subtree under ``top``, kept inside ``inside``."""
    kids = t.children
    paths = []
    stack = [[top]]
    while stack:
        path = stack.pop()
        below = [c for c in kids[path[-1]] if inside is None or c in inside]
        if not below:
            paths.append(path)
        for c in reversed(below):
            stack.append(path + [c])
    return paths


def _present_paths(
    g: Graph,
    paths: Sequence[Sequence[int]],
    factory: SessionFactory,
    colors: list[int | None],
    trace: list[str],
    label: str,
) -> int:
    """Feed each path to a fresh session; returns the most colors any path used."""
    most = 0
    for i, path in enumerate(paths):
        session = factory()
        pos: dict[int, int] = {}
        for depth, v in enumerate(path):
            earlier = sorted(pos[w] for w in g.adj[v] if w in pos)
            c = session.step(earlier, depth)
            if colors[v] is None:
                colors[v] = c
                trace[v] = f"{label}path{i}"
            elif colors[v] != c:
                raise ContractViolation(
                    f"vertex {v} got color {c} on path {i} but {colors[v]} earlier: algorithm is not deterministic"
                )
            pos[v] = depth
        most = max(most, len(set(session.colors)))
    return most


def compose_paths(g: Graph, factory: SessionFactory) -> ComposedColoring:
    """Color every root-to-leaf DFS path with a fresh online session.

    Shared path prefixes are replayed identically, so the per-path colors
    agree and assemble into one coloring. Components share palettes.
    """
    colors: list[int | None] = [None] * g.n
    trace = [""] * g.n
    forest = dfs_forest(g)
    height = 0
    for t in forest:
        paths = root_to_leaf_paths(t).paths
        _present_paths(g, paths, factory, colors, trace, f"tree{t.root}:")
        height = max(height, t.height)
    coloring = _finish(g, colors, forest, "path composition produced an improper coloring")  # type: ignore[arg-type]
    bound = Bound("A(h+1)", factory().bound(height + 1), {"h": height})
    return ComposedColoring(coloring, bound, tuple(trace))


def _band_coloring(b: Graph, ell: int, factory: SessionFactory) -> tuple[list[int], list[str], int]:
    t = dfs_tree(b, 0)
    local: list[int | None] = [None] * b.n
    trace = [""] * b.n
    band_of = [0] * b.n
    per_piece = 0
    for j, members in bands(t, ell + 1).bands:
        inside = set(members)
        for top in band_pieces(t, members):
            paths = _subtree_paths(t, top, inside)
            per_piece = max(per_piece, _present_paths(b, paths, factory, local, trace, f"band{j}:piece{top}:"))
        for v in members:
            band_of[v] = j
    width = max(c for c in local if c is not None) + 1  # type: ignore[type-var]
    out = [(band_of[v] % 3) * width + local[v] for v in range(b.n)]  # type: ignore[operator]
    return out, trace, width


def compose_bands(g: Graph, ell: int, factory: SessionFactory) -> ComposedColoring:
    """Band composition: levels grouped ``ell + 1`` at a time, three rotating palettes.

    Applied block by block. Bipartite blocks are 2-colored directly. Blocks
    are merged in breadth-first block-cut-tree order: a new block meets the
    colored part in exactly one cut vertex, and swapping two colors inside
    the new block makes it agree there.
    """
    if ell % 2 == 0 or ell < 3:
        raise ParameterError(f"odd circumference must be odd and >= 3, got {ell}")
    if g.is_bipartite():
        raise NoOddCycle("graph is bipartite; 2-color it directly")
    decomposition = blocks(g)
    colors: list[int | None] = [None] * g.n
    trace = [""] * g.n
    by_vertex: dict[int, list[int]] = {}
    for bi, blk in enumerate(decomposition.blocks):
        for v in blk.vertices:
            by_vertex.setdefault(v, []).append(bi)
    placed = [False] * len(decomposition.blocks)
    widest = 1
    for start in range(g.n):
        if colors[start] is not None:
            continue
        if start not in by_vertex:
            colors[start] = 0
            trace[start] = "isolated"
            continue
        queue = deque([by_vertex[start][0]])
        placed[queue[0]] = True
        while queue:
            bi = queue.popleft()
            blk = decomposition.blocks[bi]
            sub, order = g.induced(blk.vertices)
            two = sub.two_coloring()
            if two is not None:
                local, local_trace = two, ["bipartite-block"] * sub.n
            else:
                local, local_trace, width = _band_coloring(sub, ell, factory)
                widest = max(widest, width)
            anchor = [i for i, v in enumerate(order) if colors[v] is not None]
            if len(anchor) > 1:
                raise AssertionError(f"block {bi} meets the colored part in {len(anchor)} vertices")
            if anchor:
                want, have = colors[order[anchor[0]]], local[anchor[0]]
                swap = {want: have, have: want}
                local = [swap.get(c, c) for c in local]
            for i, v in enumerate(order):
                if colors[v] is None:
                    colors[v] = local[i]
                    trace[v] = f"block{bi}:{local_trace[i]}"
                for nb in by_vertex[v]:
                    if not placed[nb]:
                        placed[nb] = True
                        queue.append(nb)
    forest = dfs_forest(g)
    coloring = _finish(g, colors, forest, f"band composition with ell={ell} is improper; some block has a longer odd cycle")  # type: ignore[arg-type]
    per_band = factory().bound(ell + 1)
    bound = Bound("3*A(ell+1)", 3 * max(per_band, 1), {"ell": ell, "A(ell+1)": per_band})
    return ComposedColoring(coloring, bound, tuple(trace))


class PathColorer(Protocol):
    """Colors a graph whose vertices ``0..m-1`` form a path in that order."""

    declared_k: int | None

    def __call__(self, path_graph: Graph) -> Sequence[int]: ...


class ExactPathColorer:
    """Optimal coloring of each path-induced subgraph (exhaustive search)."""

    def __init__(self, declared_k: int | None = None, limit: int = CHROMATIC_LIMIT) -> None:
        self.declared_k = declared_k
        self.limit = limit

    def __call__(self, path_graph: Graph) -> Sequence[int]:
        return chromatic_number_exact(path_graph, self.limit)[1].colors


class FirstFitPathColorer:
    """First Fit along the path order."""

    def __init__(self, declared_k: int | None = None) -> None:
        self.declared_k = declared_k

    def __call__(self, path_graph: Graph) -> Sequence[int]:
        out: list[int] = []
        for v in range(path_graph.n):
            taken = {out[w] for w in path_graph.adj[v] if w < v}
            c = 0
            while c in taken:
                c += 1
            out.append(c)
        return out


def compose_recursive(g: Graph, path_colorer: PathColorer | None = None) -> ComposedColoring:
    """Leaf-heavy recursive path decomposition with one palette per recursion level.

    Spines on the same recursion level lie in pairwise incomparable subtrees
    of the DFS tree, so no edge joins two of them and they can share a
    palette.
    """
    colorer = path_colorer if path_colorer is not None else ExactPathColorer()
    forest = dfs_forest(g)
    pending: list[tuple[tuple[int, ...], int, list[int], str]] = []
    used_k = 0
    levels = 1
    leaf_bound = 1
    for t in forest:
        lh = leaf_heavy_decomposition(t)
        levels = max(levels, lh.recursion_levels)
        leaf_bound = max(leaf_bound, math.floor(math.log2(lh.leaf_count)) + 1)
        for spine in lh.spines:
            sub, order = g.induced(spine.vertices)
            local = list(colorer(sub))
            if len(local) != sub.n or not validate_coloring(sub, local):
                raise ContractViolation(f"path colorer returned an improper coloring of spine {order}")
            k = max(local, default=-1) + 1
            if colorer.declared_k is not None and k > colorer.declared_k:
                raise ContractViolation(f"path colorer used {k} colors, more than its declared {colorer.declared_k}")
            used_k = max(used_k, k)
            label = f"tree{t.root}:level{spine.level}:top_depth{spine.top_depth}"
            pending.append((order, spine.level, local, label))
    k = colorer.declared_k if colorer.declared_k is not None else max(used_k, 1)
    colors = [0] * g.n
    trace = [""] * g.n
    for order, level, local, label in pending:
        for v, c in zip(order, local):
            colors[v] = (level - 1) * k + c
            trace[v] = label
    coloring = _finish(g, colors, forest, "recursive composition produced an improper coloring")
    bound = Bound("k*levels", k * levels, {"k": k, "levels": levels, "floor(log2 leaves)+1": leaf_bound})
    return ComposedColoring(coloring, bound, tuple(trace))


def color_by_level_parity(g: Graph, odd_length_count: int | None = None, limit: int = 20) -> ComposedColoring:
    """Color each DFS level as a unit with the parity-greedy level palette.

    ``odd_length_count`` defaults to the exact number of distinct odd cycle
    lengths (exhaustive, so gated by ``limit``).
    """
    if odd_length_count is None:
        odd_length_count = len(cycle_stats(g, limit).odd_lengths)
    forest = dfs_forest(g)
    colors = [0] * g.n
    trace = [""] * g.n
    for t in forest:
        depth = t.depth
        level_edges = {(depth[u], depth[v]) for u, v in t.back_edges}
        level_colors = parity_greedy_levels(sorted(level_edges), t.height, odd_length_count)  # type: ignore[arg-type]
        for v in t.preorder:
            colors[v] = level_colors[depth[v]]  # type: ignore[index]
            trace[v] = f"tree{t.root}:level{depth[v]}"
    coloring = _finish(g, colors, forest, "level-parity coloring is improper")
    bound = Bound("2L+2", 2 * odd_length_count + 2, {"L": odd_length_count})
    return ComposedColoring(coloring, bound, tuple(trace))
