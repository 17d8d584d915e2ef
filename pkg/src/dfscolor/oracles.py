"""Exact, exponential-time oracles for the graph parameters the bounds use.

Every oracle is gated by a vertex budget; exceeding it raises
:class:`~dfscolor.errors.BudgetExceeded` rather than approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from dfscolor.errors import BudgetExceeded, NoOddCycle
from dfscolor.graph import Coloring, Graph, blocks

CYCLE_LIMIT = 20
CHROMATIC_LIMIT = 20
CLIQUE_LIMIT = 30
SUBGRAPH_LIMIT = 30


def _check_budget(what: str, g: Graph, limit: int) -> None:
    if g.n > limit:
        raise BudgetExceeded(what, g.n, limit)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CycleStats:
    girth: int | None
    spectrum: tuple[int, ...]
    odd_lengths: tuple[int, ...]
    odd_circumference: int | None
    longest_path: int

    @property
    def circumference(self) -> int | None:
        return self.spectrum[-1] if self.spectrum else None

    def require_odd_circumference(self) -> int:
        if self.odd_circumference is None:
            raise NoOddCycle("graph is bipartite: no odd cycle, odd circumference undefined")
        return self.odd_circumference


def _block_spectrum(b: Graph) -> set[int]:
    # cycles are enumerated by their smallest vertex s; the search state
    # (visited set, endpoint) is memoised so each is expanded once
    n = b.n
    possible = set(range(3, n + 1))
    if b.is_bipartite():
        possible = {L for L in possible if L % 2 == 0}
    found: set[int] = set()
    adj = b.adj_mask
    full = (1 << n) - 1
    for s in range(n - 2):
        allowed = full & ~((1 << (s + 1)) - 1)
        closes = adj[s]
        seen: set[tuple[int, int]] = set()
        stack = [(1 << s, s)]
        while stack:
            mask, v = stack.pop()
            for w in _bits(adj[v] & allowed & ~mask):
                nm = mask | (1 << w)
                if (nm, w) in seen:
                    continue
                seen.add((nm, w))
                size = nm.bit_count()
                if size >= 3 and (closes >> w) & 1:
                    found.add(size)
                    if found >= possible:
                        return found
                stack.append((nm, w))
    return found


def cycle_spectrum(g: Graph, limit: int = CYCLE_LIMIT) -> tuple[int, ...]:
    """Sorted set of all cycle lengths of ``g``, computed block by block."""
    _check_budget("cycle spectrum", g, limit)
    lengths: set[int] = set()
    for blk in blocks(g).blocks:
        if blk.is_bridge:
            continue
        sub, _ = g.induced(blk.vertices)
        lengths |= _block_spectrum(sub)
    return tuple(sorted(lengths))


def longest_path_length(g: Graph, limit: int = CYCLE_LIMIT) -> int:
    """Number of edges in a longest simple path of ``g``."""
    _check_budget("longest path", g, limit)
    best = 0
    for comp in g.components():
        if len(comp) - 1 <= best:
            continue
        sub, _ = g.induced(comp)
        target = sub.n
        adj = sub.adj_mask
        seen: set[tuple[int, int]] = set()
        stack = [(1 << v, v) for v in range(sub.n)]
        done = False
        while stack and not done:
            mask, v = stack.pop()
            for w in _bits(adj[v] & ~mask):
                nm = mask | (1 << w)
                if (nm, w) in seen:
                    continue
                seen.add((nm, w))
                size = nm.bit_count()
                if size - 1 > best:
                    best = size - 1
                    if size == target:
                        done = True
                        break
                stack.append((nm, w))
    return best


def cycle_stats(g: Graph, limit: int = CYCLE_LIMIT) -> CycleStats:
    spectrum = cycle_spectrum(g, limit)
    odd = tuple(L for L in spectrum if L % 2 == 1)
    return CycleStats(
        girth=spectrum[0] if spectrum else None,
        spectrum=spectrum,
        odd_lengths=odd,
        odd_circumference=odd[-1] if odd else None,
        longest_path=longest_path_length(g, limit),
    )


def residue_cycle_counts(g: Graph, k: int, limit: int = CYCLE_LIMIT) -> dict[int, tuple[int, ...]]:
    """Distinct cycle lengths grouped by residue mod ``k`` (every residue keyed)."""
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    out: dict[int, list[int]] = {r: [] for r in range(k)}
    for L in cycle_spectrum(g, limit):
        out[L % k].append(L)
    return {r: tuple(v) for r, v in out.items()}


def _dsatur_order_color(g: Graph) -> list[int]:
    colors = [-1] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (len(sat[u]), g.degree(u), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            sat[w].add(c)
    return colors


def _k_coloring(g: Graph, k: int) -> list[int] | None:
    colors = [-1] * g.n
    # counts[v][c]: number of neighbors of v currently colored c
    counts = [[0] * k for _ in range(g.n)]
    sat = [0] * g.n

    def assign(v: int, c: int, delta: int) -> None:
        for w in g.adj[v]:
            row = counts[w]
            if delta > 0:
                if row[c] == 0:
                    sat[w] += 1
                row[c] += 1
            else:
                row[c] -= 1
                if row[c] == 0:
                    sat[w] -= 1

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = -1
        best = (-1, -1)
        for u in range(g.n):
            if colors[u] < 0:
                key = (sat[u], g.degree(u))
                if key > best:
                    best, v = key, u
        if sat[v] >= k:
            return False
        row = counts[v]
        for c in range(min(k, used + 1)):
            if row[c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if solve(remaining - 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    return colors if solve(g.n, 0) else None


def chromatic_number_exact(g: Graph, limit: int = CHROMATIC_LIMIT) -> tuple[int, Coloring]:
    """Chromatic number and a witness coloring, by exhaustive k-colorability search."""
    _check_budget("chromatic number", g, limit)
    if g.n == 0:
        return 0, Coloring((), 0)
    result = [0] * g.n
    chi = 1
    for comp in g.components():
        sub, order = g.induced(comp)
        upper = _dsatur_order_color(sub)
        lo = 1 if sub.m == 0 else (2 if sub.is_bipartite() else 3)
        lo = max(lo, chi)
        best = upper
        hi = max(upper) + 1
        for k in range(lo, hi):
            found = _k_coloring(sub, k)
            if found is not None:
                best = found
                break
        chi = max(chi, max(best) + 1)
        for i, v in enumerate(order):
            result[v] = best[i]
    return chi, Coloring(tuple(result), chi)


def maximum_clique(g: Graph, limit: int = CLIQUE_LIMIT) -> tuple[int, ...]:
    """A maximum clique (sorted vertex tuple), via pivoting Bron-Kerbosch."""
    _check_budget("clique number", g, limit)
    if g.n == 0:
        return ()
    adj = g.adj_mask
    best = [0]

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            if r.bit_count() > best[0].bit_count():
                best[0] = r
            return
        if r.bit_count() + p.bit_count() <= best[0].bit_count():
            return
        pivot = max(_bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in _bits(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return tuple(_bits(best[0]))


def clique_number_exact(g: Graph, limit: int = CLIQUE_LIMIT) -> int:
    return len(maximum_clique(g, limit))


@dataclass(frozen=True)
class SubgraphCheck:
    present: bool
    witness: tuple[int, ...] | None = None


def forbidden_subgraph_check(
    g: Graph, which: Literal["triangle", "C5"], limit: int = SUBGRAPH_LIMIT
) -> SubgraphCheck:
    """Detect a triangle or a (not necessarily induced) 5-cycle.

    The witness is listed in cycle order.
    """
    _check_budget(f"{which} search", g, limit)
    adj = g.adj_mask
    if which == "triangle":
        for u, v in g.edges:
            common = adj[u] & adj[v]
            if common:
                w = (common & -common).bit_length() - 1
                return SubgraphCheck(True, (u, v, w))
        return SubgraphCheck(False)
    if which == "C5":
        for a in range(g.n):
            above = ~((1 << (a + 1)) - 1)
            path = [a]

            def extend(mask: int) -> bool:
                v = path[-1]
                if len(path) == 5:
                    return (adj[v] >> a) & 1 == 1
                for w in _bits(adj[v] & above & ~mask):
                    path.append(w)
                    if extend(mask | (1 << w)):
                        return True
                    path.pop()
                return False

            if extend(1 << a):
                return SubgraphCheck(True, tuple(path))
        return SubgraphCheck(False)
    raise ValueError(f"unknown subgraph {which!r}; expected 'triangle' or 'C5'")
