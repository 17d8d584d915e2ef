"""DFS trees and the decompositions built on them.

Neighbors are always explored in ascending vertex id, so every tree (and
every coloring derived from one) is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from dfscolor.errors import GraphStructureError, ParameterError
from dfscolor.graph import Edge, Graph


@dataclass(frozen=True)
class DfsTree:
    """Rooted DFS tree of the root's connected component.

    ``parent[v]``/``depth[v]`` are ``None`` for vertices outside the
    component. Back edges are stored as ``(ancestor, descendant)``.
    """

    graph: Graph = field(repr=False)
    root: int
    parent: tuple[int | None, ...]
    depth: tuple[int | None, ...]
    preorder: tuple[int, ...]
    tree_edges: tuple[Edge, ...]
    back_edges: tuple[Edge, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.preorder

    @property
    def spans_graph(self) -> bool:
        return len(self.preorder) == self.graph.n

    @property
    def height(self) -> int:
        return max(d for d in self.depth if d is not None)

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in self.preorder}
        for v in self.preorder:
            p = self.parent[v]
            if p is not None:
                kids[p].append(v)
        return {v: tuple(c) for v, c in kids.items()}

    def is_ancestor(self, a: int, d: int) -> bool:
        """True if ``a`` lies on the tree path from the root to ``d`` (inclusive)."""
        da, dd = self.depth[a], self.depth[d]
        if da is None or dd is None or da > dd:
            return False
        v: int | None = d
        while v is not None and self.depth[v] > da:  # type: ignore[operator]
            v = self.parent[v]
        return v == a

    def tree_path(self, a: int, d: int) -> list[int]:
        """Vertices on the tree path from ancestor ``a`` down to ``d``, inclusive."""
        path = [d]
        while path[-1] != a:
            p = self.parent[path[-1]]
            if p is None:
                raise GraphStructureError(f"{a} is not an ancestor of {d}")
            path.append(p)
        path.reverse()
        return path


def dfs_tree(g: Graph, root: int = 0) -> DfsTree:
    if not 0 <= root < g.n:
        raise GraphStructureError(f"root {root} outside 0..{g.n - 1}")
    parent: list[int | None] = [None] * g.n
    depth: list[int | None] = [None] * g.n
    depth[root] = 0
    preorder = [root]
    tree_edges: list[Edge] = []
    stack = [(root, iter(g.adj[root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if depth[w] is None:
                parent[w] = v
                depth[w] = depth[v] + 1  # type: ignore[operator]
                preorder.append(w)
                tree_edges.append((v, w))
                stack.append((w, iter(g.adj[w])))
                break
        else:
            stack.pop()
    tree_set = {frozenset(e) for e in tree_edges}
    back: list[Edge] = []
    for u, v in g.edges:
        if depth[u] is None or frozenset((u, v)) in tree_set:
            continue
        back.append((u, v) if depth[u] < depth[v] else (v, u))  # type: ignore[operator]
    back.sort()
    return DfsTree(g, root, tuple(parent), tuple(depth), tuple(preorder), tuple(tree_edges), tuple(back))


def dfs_forest(g: Graph) -> list[DfsTree]:
    """One DFS tree per connected component, rooted at its smallest vertex."""
    trees = []
    covered = [False] * g.n
    for v in range(g.n):
        if not covered[v]:
            t = dfs_tree(g, v)
            for u in t.preorder:
                covered[u] = True
            trees.append(t)
    return trees


def levels(t: DfsTree) -> list[tuple[int, ...]]:
    """Level sets ``V[0..height]``; raises if some level is not independent."""
    out: list[list[int]] = [[] for _ in range(t.height + 1)]
    for v in t.preorder:
        out[t.depth[v]].append(v)  # type: ignore[index]
    g = t.graph
    for i, level in enumerate(out):
        members = set(level)
        for v in level:
            for w in g.adj[v]:
                if w in members:
                    raise GraphStructureError(f"level {i} is not independent: edge ({v}, {w})")
    return [tuple(sorted(level)) for level in out]


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[tuple[int, ...], ...]


def root_to_leaf_paths(t: DfsTree) -> PathDecomposition:
    """One root-to-leaf path per leaf, leaves taken in preorder."""
    kids = t.children
    paths = []
    for leaf in t.preorder:
        if not kids[leaf]:
            paths.append(tuple(t.tree_path(t.root, leaf)))
    return PathDecomposition(tuple(paths))


@dataclass(frozen=True)
class BandDecomposition:
    band_height: int
    bands: tuple[tuple[int, tuple[int, ...]], ...]

    @staticmethod
    def palette_of_band(j: int) -> int:
        return j % 3


def bands(t: DfsTree, h: int) -> BandDecomposition:
    """Split the tree into bands of ``h`` consecutive levels."""
    if h < 1:
        raise ParameterError(f"band height must be at least 1, got {h}")
    out: dict[int, list[int]] = {}
    for v in t.preorder:
        out.setdefault(t.depth[v] // h, []).append(v)  # type: ignore[operator]
    return BandDecomposition(h, tuple((j, tuple(sorted(out[j]))) for j in sorted(out)))


def band_pieces(t: DfsTree, members: tuple[int, ...]) -> list[int]:
    """Roots of the maximal subtrees of ``t`` inside a band, in preorder."""
    inside = set(members)
    return [v for v in t.preorder if v in inside and t.parent[v] not in inside]


@dataclass(frozen=True)
class Spine:
    vertices: tuple[int, ...]
    level: int
    top_depth: int

    @property
    def palette_key(self) -> tuple[int, int]:
        return (self.level, self.top_depth)


@dataclass(frozen=True)
class LeafHeavyDecomposition:
    spines: tuple[Spine, ...]
    leaf_count: int

    @property
    def recursion_levels(self) -> int:
        return max(s.level for s in self.spines)


def subtree_leaf_counts(t: DfsTree) -> dict[int, int]:
    kids = t.children
    counts: dict[int, int] = {}
    for v in reversed(t.preorder):
        counts[v] = sum(counts[c] for c in kids[v]) or 1
    return counts


def leaf_heavy_decomposition(t: DfsTree) -> LeafHeavyDecomposition:
    """Recursive spine decomposition following the leaf-heaviest child.

    Each spine starts at a subtree root and repeatedly descends into the
    child whose subtree has most leaves (ties: smaller id). The off-spine
    subtrees are decomposed recursively one level deeper; each has at most
    half the leaves of the subtree it hangs from.
    """
    if not t.preorder:
        raise GraphStructureError("empty tree")
    kids = t.children
    leaves = subtree_leaf_counts(t)
    spines: list[Spine] = []
    work = deque([(t.root, 1)])
    while work:
        top, level = work.popleft()
        spine = [top]
        v = top
        while kids[v]:
            heavy = max(kids[v], key=lambda c: (leaves[c], -c))
            for c in kids[v]:
                if c != heavy:
                    if 2 * leaves[c] > leaves[top]:
                        raise AssertionError(f"off-spine subtree at {c} holds more than half the leaves of {top}")
                    work.append((c, level + 1))
            spine.append(heavy)
            v = heavy
        spines.append(Spine(tuple(spine), level, t.depth[top]))  # type: ignore[arg-type]
    return LeafHeavyDecomposition(tuple(spines), leaves[t.root])
