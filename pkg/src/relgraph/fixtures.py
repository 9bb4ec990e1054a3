"""Small named graphs and spans used in tests, docs and the CLI fixtures."""

from __future__ import annotations

from .graph import INF, EdgeDecl, Graph
from .pushout import PushoutDiagram
from .relative import RelativeGraph


def loop() -> Graph:
    """One vertex ``v`` with a loop ``d``; its Toeplitz algebra is the classical one."""
    return Graph(("v",), (EdgeDecl("d", "v", "v"),))


def chain() -> Graph:
    """``v --e--> u``."""
    return Graph(("u", "v"), (EdgeDecl("e", "v", "u"),))


def figure7() -> Graph:
    """Loop ``d`` at ``u`` and bundles ``e_i: v -> u``, ``f_i: w -> u``."""
    return Graph(("u", "v", "w"), (
        EdgeDecl("d", "u", "u"),
        EdgeDecl("e", "v", "u", INF),
        EdgeDecl("f", "w", "u", INF),
    ))


def figure8() -> Graph:
    """As :func:`figure7` but with a single edge ``e: v -> u``."""
    return Graph(("u", "v", "w"), (
        EdgeDecl("d", "u", "u"),
        EdgeDecl("e", "v", "u"),
        EdgeDecl("f", "w", "u", INF),
    ))


def _restrict(g: Graph, keep) -> Graph:
    keep = set(keep)
    return Graph(tuple(keep), tuple(d for d in g.edges if d.src in keep and d.rng in keep))


def figure7_span() -> PushoutDiagram:
    """The figure-7 span with ``A_i = reg F_i``: not admissible."""
    E = figure7()
    F0 = RelativeGraph(_restrict(E, "u"), {"u"})
    F1 = RelativeGraph(_restrict(E, "uv"), set())
    F2 = RelativeGraph(_restrict(E, "uw"), set())
    return PushoutDiagram.of(F0, F1, F2)


def figure8_span() -> PushoutDiagram:
    """The figure-8 span with ``A_i = reg F_i``: admissible."""
    E = figure8()
    F0 = RelativeGraph(_restrict(E, "u"), {"u"})
    F1 = RelativeGraph(_restrict(E, "uv"), {"u"})
    F2 = RelativeGraph(_restrict(E, "uw"), set())
    return PushoutDiagram.of(F0, F1, F2)


def degenerate_span(rg: RelativeGraph) -> PushoutDiagram:
    return PushoutDiagram.of(rg, rg, rg)


def fan_span(A0=(), apex_edge: bool = False) -> PushoutDiagram:
    """Acyclic span: apex ``u`` (optionally fed by ``x --g--> u``), legs add
    ``v --a--> u`` and ``w --b--> u``.  All ``A_i`` empty except ``A0``."""
    base_v = ["u"] + (["x"] if apex_edge else [])
    base_e = [EdgeDecl("g", "x", "u")] if apex_edge else []
    F0 = Graph(tuple(base_v), tuple(base_e))
    F1 = Graph(tuple(base_v + ["v"]), tuple(base_e + [EdgeDecl("a", "v", "u")]))
    F2 = Graph(tuple(base_v + ["w"]), tuple(base_e + [EdgeDecl("b", "w", "u")]))
    return PushoutDiagram.of(RelativeGraph(F0, set(A0)), RelativeGraph(F1), RelativeGraph(F2))
