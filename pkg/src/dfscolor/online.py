"""Deterministic online coloring algorithms.

A session sees one vertex per step together with the positions of its
already-presented neighbors, plus an optional static tag supplied by the
presenter (tree depth or index along a path). It must return a color
immediately and may never revise it.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from dfscolor.errors import ContractViolation, HypothesisViolation, ParameterError
from dfscolor.graph import Graph


class OnlineSession:
    """Base class: bookkeeping and contract checks shared by all algorithms."""

    name = "abstract"

    def __init__(self) -> None:
        self.colors: list[int] = []

    @property
    def seen(self) -> int:
        return len(self.colors)

    def step(self, earlier: Sequence[int], tag: int | None = None) -> int:
        """Present the next vertex; ``earlier`` lists positions of its earlier neighbors."""
        for p in earlier:
            if not 0 <= p < self.seen:
                raise ContractViolation(
                    f"step {self.seen} references position {p}, which has not been presented"
                )
        c = self._choose(earlier, self.seen if tag is None else tag)
        self.colors.append(c)
        return c

    def _choose(self, earlier: Sequence[int], tag: int) -> int:
        raise NotImplementedError

    def bound(self, n: int) -> int:
        """Colors this algorithm may use on ``n`` presented vertices of its graph class."""
        return n


class FirstFit(OnlineSession):
    """Smallest color absent from the colored neighborhood."""

    name = "first-fit"

    def _choose(self, earlier: Sequence[int], tag: int) -> int:
        taken = {self.colors[p] for p in earlier}
        c = 0
        while c in taken:
            c += 1
        return c


def first_fit_girth5_bound(n: int) -> float:
    """Ceiling on First Fit colors over ``n`` vertices of girth >= 5."""
    return 2 * math.sqrt(n)


def _check_odd(ell: int, minimum: int) -> None:
    if ell % 2 == 0 or ell < minimum:
        raise ParameterError(f"odd circumference must be odd and >= {minimum}, got {ell}")


class ModuloLevel(OnlineSession):
    """Color = depth mod (ell + 1); proper whenever ell >= the true odd circumference."""

    name = "modulo-level"

    def __init__(self, ell: int) -> None:
        _check_odd(ell, 3)
        super().__init__()
        self.ell = ell

    def _choose(self, earlier: Sequence[int], tag: int) -> int:
        return tag % (self.ell + 1)

    def bound(self, n: int) -> int:
        return min(n, self.ell + 1)


def quad_group_period(ell: int) -> int:
    """Smallest multiple of four that is at least ell + 3."""
    _check_odd(ell, 5)
    return ell + 3 if ell % 4 == 1 else ell + 5


def quad_group_color(index: int, ell: int) -> int:
    r = index % quad_group_period(ell)
    k = r // 4
    return 2 * k if r % 2 == 0 else 2 * k + 1


class QuadGroup(OnlineSession):
    """Groups of four consecutive path indices share two colors.

    Indices ``4k`` and ``4k+2`` (mod the period) get color ``2k``; ``4k+1`` and
    ``4k+3`` get ``2k+1``. Proper on triangle-free paths-with-back-edges whose
    odd cycles are no longer than ``ell``.
    """

    name = "quad-group"

    def __init__(self, ell: int) -> None:
        self.period = quad_group_period(ell)
        super().__init__()
        self.ell = ell

    def _choose(self, earlier: Sequence[int], tag: int) -> int:
        return quad_group_color(tag, self.ell)

    def bound(self, n: int) -> int:
        return min(n, self.period // 2)


SessionFactory = Callable[[], OnlineSession]

ALGORITHMS: dict[str, type[OnlineSession]] = {
    FirstFit.name: FirstFit,
    ModuloLevel.name: ModuloLevel,
    QuadGroup.name: QuadGroup,
}


def make_factory(name: str, **params: int) -> SessionFactory:
    """Zero-argument session factory for a registered algorithm."""
    try:
        cls = ALGORITHMS[name]
    except KeyError:
        raise ParameterError(f"unknown online algorithm {name!r}; known: {sorted(ALGORITHMS)}") from None
    cls(**params)  # validate parameters eagerly
    return lambda: cls(**params)


@dataclass(frozen=True)
class Presentation:
    """Vertex order plus, per step, positions of earlier neighbors and an optional tag."""

    vertices: tuple[int, ...]
    earlier: tuple[tuple[int, ...], ...]
    tags: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.earlier) != len(self.vertices):
            raise ContractViolation("presentation needs one neighbor list per vertex")
        if self.tags is not None and len(self.tags) != len(self.vertices):
            raise ContractViolation("presentation needs one tag per vertex")
        for i, ps in enumerate(self.earlier):
            if any(not 0 <= p < i for p in ps):
                raise ContractViolation(f"step {i} references a position that does not precede it")

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def of_order(cls, g: Graph, order: Sequence[int], tags: Sequence[int] | None = None) -> Presentation:
        """Present ``order`` (a sequence of distinct vertices of ``g``) online."""
        pos: dict[int, int] = {}
        earlier = []
        for i, v in enumerate(order):
            earlier.append(tuple(sorted(pos[w] for w in g.adj[v] if w in pos)))
            pos[v] = i
        return cls(tuple(order), tuple(earlier), None if tags is None else tuple(tags))

    def graph(self) -> Graph:
        """The presented graph, on positions ``0..len-1``."""
        return Graph(len(self), [(p, i) for i, ps in enumerate(self.earlier) for p in ps])


def replay(factory: SessionFactory, presentation: Presentation) -> tuple[int, ...]:
    """Run a fresh session over a presentation and return the color of each step."""
    session = factory()
    tags = presentation.tags
    return tuple(
        session.step(ps, None if tags is None else tags[i]) for i, ps in enumerate(presentation.earlier)
    )


def parity_greedy_levels(level_edges: Sequence[tuple[int, int]], height: int, odd_length_count: int) -> tuple[int, ...]:
    """Color the levels ``0..height`` of a DFS tree.

    ``level_edges`` are pairs of levels joined by some graph edge. Odd levels
    draw from ``0..L`` and even levels from ``L+1..2L+1`` where ``L`` is the
    number of distinct odd cycle lengths; each level, in increasing order,
    takes the smallest palette color not held by an earlier same-parity level
    it is adjacent to. Two same-parity levels ``i < j`` joined by an edge
    close an odd cycle of length ``j - i + 1``, so at most ``L`` earlier
    levels can conflict; running out of colors means ``L`` was understated.
    """
    if odd_length_count < 0:
        raise ParameterError("number of odd cycle lengths must be non-negative")
    L = odd_length_count
    earlier_nbrs: list[set[int]] = [set() for _ in range(height + 1)]
    for a, b in level_edges:
        if a != b and (a - b) % 2 == 0:
            lo, hi = sorted((a, b))
            earlier_nbrs[hi].add(lo)
    colors: list[int] = []
    for i in range(height + 1):
        base = 0 if i % 2 == 1 else L + 1
        taken = {colors[j] for j in earlier_nbrs[i]}
        for c in range(base, base + L + 1):
            if c not in taken:
                colors.append(c)
                break
        else:
            raise HypothesisViolation(
                f"level {i} conflicts with {len(earlier_nbrs[i])} earlier same-parity levels, "
                f"more than the {L} distinct odd cycle lengths supplied"
            )
    return tuple(colors)
