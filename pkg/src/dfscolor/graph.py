"""Core graph and coloring types, properness checking, block decomposition."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from dfscolor.errors import GraphStructureError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    ``adj`` holds ascending neighbor tuples and ``adj_mask`` the same
    neighborhoods as bitmasks (used by the exhaustive oracles).
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    adj_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphStructureError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphStructureError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphStructureError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            seen.add(_norm(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "adj_mask", tuple(sum(1 << w for w in a) for a in nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_mask[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced by ``vertices``.

        Returns the subgraph (relabelled to ``0..k-1`` in the given order) and
        the tuple mapping new ids back to original ids.
        """
        order = tuple(dict.fromkeys(vertices))
        index = {v: i for i, v in enumerate(order)}
        sub_edges = [
            (index[u], index[w]) for u in order for w in self.adj[u] if w in index and u < w
        ]
        return Graph(len(order), sub_edges), order

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps: list[tuple[int, ...]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def two_coloring(self) -> list[int] | None:
        """A proper 2-coloring if the graph is bipartite, else ``None``."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = [s]
            for v in queue:
                for w in self.adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        return side

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color id in ``0..palette_size-1``."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.palette_size:
                raise GraphStructureError(
                    f"vertex {v} has color {c}, outside palette 0..{self.palette_size - 1}"
                )

    @classmethod
    def of(cls, colors: Iterable[int]) -> Coloring:
        """Wrap a color list, sizing the palette to the largest id used."""
        cs = tuple(int(c) for c in colors)
        return cls(cs, max(cs, default=-1) + 1)

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))


@dataclass(frozen=True)
class ColoringVerdict:
    valid: bool
    witness: Edge | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_coloring(g: Graph, c: Coloring | Sequence[int]) -> ColoringVerdict:
    """Check properness; on failure the verdict carries a monochromatic edge.

    A color array whose length differs from ``g.n`` is a structural error,
    not an improper coloring.
    """
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise GraphStructureError(f"coloring has {len(colors)} entries for a graph on {g.n} vertices")
    for u, v in g.edges:
        if colors[u] == colors[v]:
            return ColoringVerdict(False, (u, v))
    return ColoringVerdict(True)


def merge_color_classes(g: Graph, colors: Sequence[int]) -> list[int]:
    """Greedily merge color classes with no edge between them.

    Classes are taken in increasing color order and each joins the first
    merged class it has no edge to. Proper input stays proper and the
    number of colors never grows.
    """
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    merged: list[int] = []  # vertex mask per merged class
    out = [0] * len(colors)
    for c in sorted(classes):
        mask = 0
        for v in classes[c]:
            mask |= 1 << v
        reach = 0
        for v in classes[c]:
            reach |= g.adj_mask[v]
        slot = next((i for i, m in enumerate(merged) if not m & reach), len(merged))
        if slot == len(merged):
            merged.append(0)
        merged[slot] |= mask
        for v in classes[c]:
            out[v] = slot
    return out


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Block-cut decomposition (Hopcroft-Tarjan, iterative).

    Isolated vertices belong to no block. Blocks are emitted in the order
    their DFS completes, with ascending-id exploration from each component's
    smallest vertex.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    found: list[Block] = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        root_children = 0
        # frames: (vertex, parent, next neighbor index)
        stack: list[list[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(g.adj[v]):
                frame[2] += 1
                w = g.adj[v][i]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append(_norm(v, w))
                    if v == root:
                        root_children += 1
                    stack.append([w, v, 0])
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append(_norm(v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp_edges: list[Edge] = []
                target = _norm(parent, v)
                while True:
                    e = edge_stack.pop()
                    comp_edges.append(e)
                    if e == target:
                        break
                verts = sorted({x for e in comp_edges for x in e})
                found.append(Block(tuple(verts), tuple(sorted(comp_edges))))
        if root_children > 1:
            cut.add(root)
    return BlockDecomposition(tuple(found), tuple(sorted(cut)))


def is_biconnected(g: Graph) -> bool:
    """True for connected graphs on >= 3 vertices with no cut vertex."""
    if g.n < 3 or not g.is_connected():
        return False
    return len(blocks(g).blocks) == 1


def is_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True if ``cycle`` lists >= 3 distinct vertices, consecutive ones (and last-first) adjacent."""
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % m]) for i in range(m))
