"""Named coloring methods with their bound instances, as run by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from dfscolor.composers import (
    Bound,
    ComposedColoring,
    ExactPathColorer,
    color_by_level_parity,
    compose_bands,
    compose_paths,
    compose_recursive,
)
from dfscolor.errors import HypothesisViolation, ParameterError
from dfscolor.graph import Coloring, Graph, validate_coloring
from dfscolor.online import FirstFit, ModuloLevel, QuadGroup, first_fit_girth5_bound, make_factory
from dfscolor.oracles import (
    CYCLE_LIMIT,
    clique_number_exact,
    cycle_stats,
    forbidden_subgraph_check,
    longest_path_length,
)
from dfscolor.residue import color_residue1, color_residue2, color_residue3

METHODS = ("level-parity", "modulo-level", "bands", "quad-group", "first-fit", "recursive", "residue1", "residue2", "residue3")


@dataclass(frozen=True)
class MethodReport:
    method: str
    composed: ComposedColoring
    proper: bool
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def colors_used(self) -> int:
        return self.composed.colors_used

    @property
    def bound(self) -> Bound:
        return self.composed.bound

    @property
    def passed(self) -> bool:
        return self.proper and self.colors_used <= self.bound.value


def _odd_circumference(g: Graph, ell: int | None, limit: int) -> int:
    if ell is not None:
        return ell
    return cycle_stats(g, limit).require_odd_circumference()


def _bipartite_report(method: str, g: Graph) -> MethodReport:
    two = g.two_coloring()
    assert two is not None
    c = Coloring.of(two)
    composed = ComposedColoring(c, Bound("2 (bipartite)", 2), ("bipartite",) * g.n)
    return MethodReport(method, composed, bool(validate_coloring(g, c)), {"note": "no odd cycle; 2-colored directly"})


def run_method(
    g: Graph,
    method: str,
    *,
    ell: int | None = None,
    algo: str = "first-fit",
    k: int | None = None,
    r: int | None = None,
    s: int | None = None,
    limit: int = CYCLE_LIMIT,
) -> MethodReport:
    """Run one named method; every report re-validates properness itself."""
    notes: dict[str, str] = {}
    if method in ("modulo-level", "bands", "quad-group") and g.is_bipartite():
        return _bipartite_report(method, g)
    if method == "level-parity":
        if ell is not None:
            odd_count = (ell - 1) // 2
            notes["L"] = f"at most {odd_count}, from ell={ell}"
        else:
            odd_count = len(cycle_stats(g, limit).odd_lengths)
        composed = color_by_level_parity(g, odd_count)
    elif method == "modulo-level":
        ell = _odd_circumference(g, ell, limit)
        composed = compose_paths(g, lambda: ModuloLevel(ell))
        composed = ComposedColoring(composed.coloring, Bound("ell+1", ell + 1, {"ell": ell}), composed.trace)
    elif method == "quad-group":
        tri = forbidden_subgraph_check(g, "triangle", limit=max(g.n, 1))
        if tri.present:
            raise HypothesisViolation("graph is not triangle-free", [tri.witness])  # type: ignore[list-item]
        ell = _odd_circumference(g, ell, limit)
        composed = compose_paths(g, lambda: QuadGroup(ell))
        formula = "(ell+3)/2" if ell % 4 == 1 else "(ell+5)/2"
        composed = ComposedColoring(
            composed.coloring, Bound(formula, QuadGroup(ell).period // 2, {"ell": ell}), composed.trace
        )
    elif method == "first-fit":
        composed = compose_paths(g, FirstFit)
        p = longest_path_length(g, limit)
        omega = clique_number_exact(g, max(limit, g.n))
        stated = (p + omega) / 2
        notes["stated_bound"] = f"(p+omega)/2 = {stated:g} with p={p} edges"
        notes["stated_bound_holds"] = "yes" if composed.colors_used <= stated else "no"
        composed = ComposedColoring(
            composed.coloring, Bound("(p+1+omega)/2", (p + 1 + omega) / 2, {"p": p, "omega": omega}), composed.trace
        )
    elif method == "bands":
        ell = _odd_circumference(g, ell, limit)
        composed = compose_bands(g, ell, make_factory(algo, **({} if algo == "first-fit" else {"ell": ell})))
        if algo == "first-fit" and g.n <= limit:
            girth = cycle_stats(g, limit).girth
            if girth is None or girth >= 5:
                per_band = first_fit_girth5_bound(ell + 1)
                composed = ComposedColoring(
                    composed.coloring,
                    Bound("3*2*sqrt(ell+1)", 3 * per_band, {"ell": ell}),
                    composed.trace,
                )
                notes["graph_class"] = "girth >= 5"
    elif method == "recursive":
        composed = compose_recursive(g, ExactPathColorer(limit=max(limit, g.n)))
    elif method in ("residue1", "residue2", "residue3"):
        if k is None:
            raise ParameterError(f"{method} needs --k")
        if method == "residue1":
            if r is None:
                raise ParameterError("residue1 needs --r")
            composed = color_residue1(g, k, r)
        elif method == "residue2":
            if s is None:
                raise ParameterError("residue2 needs --s")
            composed = color_residue2(g, k, s)
        else:
            composed = color_residue3(g, k)
    else:
        raise ParameterError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    proper = bool(validate_coloring(g, composed.coloring))
    return MethodReport(method, composed, proper, notes)

