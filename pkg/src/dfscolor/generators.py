"""Graph families used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

import ast
import random
from dataclasses import dataclass, field

from dfscolor.errors import ParameterError
from dfscolor.graph import Graph


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    name: str = ""
    provenance: str = ""
    relabel: dict[int, int] | None = field(default=None, compare=False)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def empty(n: int) -> Graph:
    _need(n >= 0, "n must be non-negative")
    return Graph(n)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs at least 1 vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    _need(leaves >= 1, "star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def binary_tree(depth: int) -> Graph:
    """Perfect binary tree, heap-numbered from root 0."""
    _need(depth >= 0, "depth must be non-negative")
    n = 2 ** (depth + 1) - 1
    return Graph(n, [((i - 1) // 2, i) for i in range(1, n)])


def caterpillar(spine: int) -> Graph:
    """Path ``0..spine-1`` with one pendant leaf on every inner spine vertex."""
    _need(spine >= 3, "caterpillar spine needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(i, spine + i - 1) for i in range(1, spine - 1)]
    return Graph(spine + spine - 2, edges)


def mycielskian(g: Graph) -> Graph:
    """Vertices ``v_i`` (0..n-1), shadows ``u_i`` (n..2n-1), apex ``2n``."""
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph(2 * n + 1, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def groetzsch() -> Graph:
    return mycielskian(cycle(5))


def random_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 0 and 0.0 <= p <= 1.0, "need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _prune(g: Graph, max_cycle: int) -> Graph:
    # drop every edge lying on a short cycle when it is the smallest such edge
    # still present; deleting edges never creates cycles, so one pass suffices
    adj = [set(a) for a in g.adj]
    for u, v in g.edges:
        if max_cycle >= 3 and adj[u] & adj[v]:
            adj[u].discard(v)
            adj[v].discard(u)
            continue
        if max_cycle >= 4 and any(adj[a] & (adj[v] - {u, a}) for a in adj[u] - {v}):
            adj[u].discard(v)
            adj[v].discard(u)
    return Graph(g.n, [(u, v) for u in range(g.n) for v in adj[u] if u < v])


def random_triangle_free(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample with one edge of every triangle deleted."""
    return _prune(random_graph(n, p, seed), 3)


def random_girth5(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample with one edge of every triangle and 4-cycle deleted."""
    return _prune(random_graph(n, p, seed), 4)


FAMILIES = {
    f.__name__: f
    for f in (
        empty, path, cycle, complete, star, binary_tree, caterpillar, mycielskian,
        petersen, groetzsch, random_graph, random_triangle_free, random_girth5,
    )
}


def _evaluate(node: ast.AST) -> object:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return node.value
    if isinstance(node, ast.Name) and node.id in FAMILIES:
        return FAMILIES[node.id]()
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        fn = FAMILIES.get(node.func.id)
        if fn is None:
            raise ParameterError(f"unknown family {node.func.id!r}; known: {', '.join(sorted(FAMILIES))}")
        try:
            return fn(*(_evaluate(a) for a in node.args))
        except TypeError as exc:
            raise ParameterError(f"{node.func.id}: {exc}") from None
    if isinstance(node, ast.Name):
        raise ParameterError(f"unknown family {node.id!r}; known: {', '.join(sorted(FAMILIES))}")
    raise ParameterError(f"unsupported expression {ast.unparse(node)!r}")


def generate(spec: str) -> GraphDocument:
    """Build a family member from an expression such as ``mycielskian(cycle(5))``."""
    try:
        tree = ast.parse(spec.strip(), mode="eval")
    except SyntaxError:
        raise ParameterError(f"cannot parse family expression {spec!r}") from None
    g = _evaluate(tree.body)
    if not isinstance(g, Graph):
        raise ParameterError(f"{spec!r} does not describe a graph")
    return GraphDocument(g, name=spec.strip(), provenance=f"generated: {spec.strip()}")
