"""Adaptive adversary forcing any deterministic online colorer to use k bins.

The adversary keeps a hidden proper k-coloring ("true colors"); the
algorithm's colors are called bins. With current color set
``S_i = {0..k-1} - {i}``, each new vertex is joined to every earlier vertex of
true color ``i`` and then receives a true color from ``S_i`` not yet in its
bin. Every neighborhood is monochromatic, so the graph is triangle-free, and
every bin holds distinct true colors, so ``k*k`` vertices need ``k`` bins.

When the bin the algorithm would pick already holds all of ``S_i``, the
adversary (which can simulate the deterministic algorithm) moves on to the
next color set before revealing the vertex. If that happens for every color
set, the ``k`` saturated bins are pairwise distinct and the game stops early
with ``k`` bins already in use.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from dfscolor.errors import ContractViolation, GraphStructureError, ParameterError
from dfscolor.graph import Graph
from dfscolor.online import Presentation, SessionFactory, replay
from dfscolor.oracles import forbidden_subgraph_check


@dataclass(frozen=True)
class Step:
    earlier: tuple[int, ...]
    bin: int
    color: int
    set_index: int


@dataclass(frozen=True)
class AdversaryTranscript:
    k: int
    steps: tuple[Step, ...]
    stalled: bool = False

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def graph(self) -> Graph:
        return Graph(self.n, [(p, i) for i, s in enumerate(self.steps) for p in s.earlier])

    @property
    def presentation(self) -> Presentation:
        return Presentation(tuple(range(self.n)), tuple(s.earlier for s in self.steps))

    @property
    def true_colors(self) -> tuple[int, ...]:
        return tuple(s.color for s in self.steps)

    @property
    def bins(self) -> tuple[int, ...]:
        return tuple(s.bin for s in self.steps)

    @property
    def bins_used(self) -> int:
        return len(set(self.bins))

    def to_text(self) -> str:
        lines = ["# adversary transcript: neighbors bin color set", f"k {self.k}", f"stalled {int(self.stalled)}"]
        for s in self.steps:
            nbrs = ",".join(map(str, s.earlier)) or "-"
            lines.append(f"{nbrs} {s.bin} {s.color} {s.set_index}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> AdversaryTranscript:
        k = None
        stalled = False
        steps = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "k" and len(parts) == 2:
                    k = int(parts[1])
                elif parts[0] == "stalled" and len(parts) == 2:
                    stalled = bool(int(parts[1]))
                elif len(parts) == 4:
                    earlier = () if parts[0] == "-" else tuple(int(p) for p in parts[0].split(","))
                    steps.append(Step(earlier, int(parts[1]), int(parts[2]), int(parts[3])))
                else:
                    raise ValueError("expected 'neighbors bin color set'")
            except ValueError as exc:
                raise GraphStructureError(f"transcript line {lineno}: {exc}") from None
        if k is None:
            raise GraphStructureError("transcript has no 'k' header line")
        return cls(k, tuple(steps), stalled)


def run_adversary(factory: SessionFactory, k: int) -> AdversaryTranscript:
    """Play the game for up to ``k*k`` vertices against a fresh session."""
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    session = factory()
    steps: list[Step] = []
    bins: list[int] = []
    by_color: list[list[int]] = [[] for _ in range(k)]
    held: dict[int, set[int]] = {}
    current = 0
    stalled = False
    while len(steps) < k * k:
        for attempt in range(k):
            i = (current + attempt) % k
            earlier = tuple(by_color[i])
            b = copy.deepcopy(session).step(earlier)
            clash = next((p for p in earlier if bins[p] == b), None)
            if clash is not None:
                raise ContractViolation(
                    f"algorithm put vertex {len(steps)} in bin {b} next to its neighbor {clash}"
                )
            in_bin = held.get(b, set())
            free = [c for c in range(k) if c != i and c not in in_bin]
            if not free and not earlier and i not in in_bin:
                free = [i]
            if free:
                break
        else:
            stalled = True
            break
        current = i
        if session.step(earlier) != b:
            raise ContractViolation(f"algorithm is not deterministic at step {len(steps)}")
        c = free[0]
        by_color[c].append(len(steps))
        held.setdefault(b, set()).add(c)
        bins.append(b)
        steps.append(Step(earlier, b, c, i))
    transcript = AdversaryTranscript(k, tuple(steps), stalled)
    if replay(factory, transcript.presentation) != transcript.bins:
        raise ContractViolation("replaying the game produced different bins: algorithm is not deterministic")
    return transcript


@dataclass(frozen=True)
class TranscriptVerdict:
    failures: tuple[tuple[str, tuple[int, ...]], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def verify_transcript(t: AdversaryTranscript) -> TranscriptVerdict:
    """Re-check every invariant of a finished game, independently of the driver.

    Each failure names the invariant and a witness (edge, triangle, or bin
    members).
    """
    failures: list[tuple[str, tuple[int, ...]]] = []
    for i, s in enumerate(t.steps):
        bad = [p for p in s.earlier if not 0 <= p < i]
        if bad:
            failures.append(("neighbor positions precede the vertex", (i, *bad)))
    if failures:
        return TranscriptVerdict(tuple(failures))
    g = t.graph
    tri = forbidden_subgraph_check(g, "triangle", limit=max(g.n, 1))
    if tri.present:
        failures.append(("triangle-free", tri.witness))  # type: ignore[arg-type]
    colors = t.true_colors
    out_of_range = [v for v, c in enumerate(colors) if not 0 <= c < t.k]
    if out_of_range:
        failures.append((f"true colors within 0..{t.k - 1}", tuple(out_of_range)))
    mono = next(((u, v) for u, v in g.edges if colors[u] == colors[v]), None)
    if mono is not None:
        failures.append(("true coloring proper", mono))
    improper_bin = next(((u, v) for u, v in g.edges if t.bins[u] == t.bins[v]), None)
    if improper_bin is not None:
        failures.append(("bins are independent sets", improper_bin))
    members: dict[int, list[int]] = {}
    for v, b in enumerate(t.bins):
        members.setdefault(b, []).append(v)
    for b, vs in sorted(members.items()):
        if len(vs) > t.k:
            failures.append((f"bin {b} holds at most k vertices", tuple(vs)))
        elif len({colors[v] for v in vs}) != len(vs):
            failures.append((f"bin {b} holds distinct true colors", tuple(vs)))
    if t.n > 0 and t.bins_used < t.k:
        failures.append(("bins used >= k", tuple(sorted(members))))
    return TranscriptVerdict(tuple(failures))
