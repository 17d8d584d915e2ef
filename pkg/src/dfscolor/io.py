"""Edge-list and DIMACS ``.col`` reading/writing.

Edge list: one ``u v`` pair per line, ``#`` starts a comment, blank lines
are ignored. Two comment directives are understood: ``# name: <label>`` and
``# n: <count>`` (the latter keeps isolated vertices across a round trip).
Vertex ids that are not exactly ``0..n-1`` are re-indexed in ascending
order and the mapping is returned in ``GraphDocument.relabel``.

DIMACS: ``c`` comments, ``p edge <n> <m>``, ``e <u> <v>`` with 1-based ids.
"""

from __future__ import annotations

import warnings
from typing import Literal

from dfscolor.errors import GraphStructureError
from dfscolor.generators import GraphDocument
from dfscolor.graph import Coloring, Graph


class ParseError(GraphStructureError):
    def __init__(self, lineno: int, message: str) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class DuplicateEdgeWarning(UserWarning):
    pass


def _add_edge(seen: set[tuple[int, int]], u: int, v: int, lineno: int) -> None:
    if u == v:
        raise ParseError(lineno, f"self-loop at vertex {u}")
    key = (min(u, v), max(u, v))
    if key in seen:
        warnings.warn(f"line {lineno}: duplicate edge {key} ignored", DuplicateEdgeWarning, stacklevel=3)
    seen.add(key)


def _parse_edgelist(text: str) -> GraphDocument:
    name = ""
    declared_n: int | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name:"):
                name = body[5:].strip()
            elif body.startswith("n:"):
                try:
                    declared_n = int(body[2:])
                except ValueError:
                    raise ParseError(lineno, f"bad vertex count {body[2:].strip()!r}") from None
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"vertex ids must be integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex ids must be non-negative")
        _add_edge(seen, u, v, lineno)
    ids = {x for e in seen for x in e}
    if declared_n is not None and all(x < declared_n for x in ids):
        return GraphDocument(Graph(declared_n, seen), name=name, provenance="edgelist")
    n = max(ids, default=-1) + 1
    if ids == set(range(n)):
        return GraphDocument(Graph(n, seen), name=name, provenance="edgelist")
    relabel = {old: new for new, old in enumerate(sorted(ids))}
    g = Graph(len(relabel), [(relabel[u], relabel[v]) for u, v in seen])
    return GraphDocument(g, name=name, provenance="edgelist", relabel=relabel)


def _parse_dimacs(text: str) -> GraphDocument:
    n: int | None = None
    m_declared = 0
    name = ""
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            if len(parts) > 2 and parts[1] == "name:":
                name = " ".join(parts[2:])
            continue
        try:
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ParseError(lineno, "expected 'p edge <n> <m>'")
                n, m_declared = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None:
                    raise ParseError(lineno, "edge line before the 'p' line")
                if len(parts) != 3:
                    raise ParseError(lineno, "expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ParseError(lineno, f"vertex outside 1..{n}")
                _add_edge(seen, u - 1, v - 1, lineno)
            else:
                raise ParseError(lineno, f"unknown line type {parts[0]!r}")
        except ValueError:
            raise ParseError(lineno, f"malformed line {raw.strip()!r}") from None
    if n is None:
        raise GraphStructureError("DIMACS input has no 'p edge' line")
    if m_declared != len(seen):
        warnings.warn(f"'p' line declares {m_declared} edges, found {len(seen)}", stacklevel=2)
    return GraphDocument(Graph(n, seen), name=name, provenance="dimacs")


def parse_graph(text: str, fmt: Literal["edgelist", "dimacs"] = "edgelist") -> GraphDocument:
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def emit_graph(doc: GraphDocument, fmt: Literal["edgelist", "dimacs"] = "edgelist") -> str:
    g = doc.graph
    if fmt == "edgelist":
        head = [f"# name: {doc.name}"] if doc.name else []
        head.append(f"# n: {g.n}")
        return "\n".join(head + [f"{u} {v}" for u, v in g.edges]) + "\n"
    if fmt == "dimacs":
        head = [f"c name: {doc.name}"] if doc.name else []
        head.append(f"p edge {g.n} {g.m}")
        return "\n".join(head + [f"e {u + 1} {v + 1}" for u, v in g.edges]) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def sniff_format(text: str) -> Literal["edgelist", "dimacs"]:
    for raw in text.splitlines():
        parts = raw.split()
        if parts and parts[0] in ("p", "e", "c"):
            return "dimacs"
        if parts and not parts[0].startswith("#"):
            return "edgelist"
    return "edgelist"


def emit_coloring(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colors))


def parse_coloring(text: str) -> Coloring:
    """Read ``vertex color`` lines; every vertex ``0..n-1`` must appear once."""
    found: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            v, c = int(parts[0]), int(parts[1])
            if len(parts) != 2 or v < 0 or c < 0:
                raise ValueError
        except (ValueError, IndexError):
            raise ParseError(lineno, f"expected 'vertex color', got {line!r}") from None
        if v in found:
            raise ParseError(lineno, f"vertex {v} colored twice")
        found[v] = c
    if set(found) != set(range(len(found))):
        raise GraphStructureError("coloring must list every vertex 0..n-1 exactly once")
    return Coloring.of(found[v] for v in range(len(found)))
