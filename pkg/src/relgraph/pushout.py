"""Pushouts of spans of relative-graph inclusions.

The colimit of ``(F1,A1) <- (F0,A0) -> (F2,A2)`` is the amalgamated union
``E = F1 u_{F0} F2`` with

    A = (A1 - F0) u (A2 - F0) u (A1 n A2).

Amalgamation is by name: the two legs must overlap in exactly ``F0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConsistencyError, InputError
from .graph import Graph, fmt_set, regular_vertices
from .relative import (
    InclusionMorphism,
    RelativeGraph,
    Violation,
    check_morphism,
    validate_relative,
)


@dataclass(frozen=True)
class PushoutDiagram:
    apex: RelativeGraph
    left: InclusionMorphism
    right: InclusionMorphism

    @classmethod
    def of(cls, apex: RelativeGraph, F1: RelativeGraph, F2: RelativeGraph) -> PushoutDiagram:
        return cls(apex, InclusionMorphism(apex, F1), InclusionMorphism(apex, F2))

    @property
    def F0(self) -> RelativeGraph:
        return self.apex

    @property
    def F1(self) -> RelativeGraph:
        return self.left.amb

    @property
    def F2(self) -> RelativeGraph:
        return self.right.amb

    def with_A0(self, A0) -> PushoutDiagram:
        return PushoutDiagram.of(self.apex.with_A(A0), self.F1, self.F2)


@dataclass(frozen=True)
class PushoutResult:
    colimit: RelativeGraph
    leg1: InclusionMorphism
    leg2: InclusionMorphism


class Cocone(NamedTuple):
    target: RelativeGraph
    gamma1: InclusionMorphism
    gamma2: InclusionMorphism


def overlap_violations(d: PushoutDiagram) -> list[str]:
    """Name clashes between the legs outside the apex."""
    F0, F1, F2 = d.F0.graph, d.F1.graph, d.F2.graph
    out = []
    stray_v = sorted((F1.vertex_set & F2.vertex_set) - F0.vertex_set)
    if stray_v:
        out.append(f"vertex {stray_v[0]!r} is shared by both legs but not in the apex")
    shared_e = set(F1.edge_map) & set(F2.edge_map)
    stray_e = sorted(shared_e - set(F0.edge_map))
    if stray_e:
        out.append(f"edge {stray_e[0]!r} is shared by both legs but not in the apex")
    clash = sorted(n for n in shared_e if F1.edge_map[n] != F2.edge_map[n])
    if clash:
        out.append(f"edge {clash[0]!r} is declared differently in the two legs")
    return out


def validate_diagram(d: PushoutDiagram, *, ignore_A0: bool = False) -> list[str]:
    """All reasons ``d`` is not a valid span; empty when it is.

    With ``ignore_A0`` the apex's ``A`` is not checked against the legs
    (condition (3)), which is what :func:`relgraph.pullback.suggest_a0`
    needs.
    """
    out = []
    if d.left.sub != d.apex or d.right.sub != d.apex:
        out.append("legs do not start at the apex")
    for name, rg in (("apex", d.F0), ("left", d.F1), ("right", d.F2)):
        out += [f"{name}: {v}" for v in validate_relative(rg)]
    if out:
        return out
    for name, leg in (("left", d.left), ("right", d.right)):
        for v in check_morphism(leg.sub, leg.amb):
            if ignore_A0 and v.condition == "(3)":
                continue
            out.append(f"{name} leg: {v}")
    out += overlap_violations(d)
    return out


def _require_diagram(d: PushoutDiagram) -> None:
    problems = validate_diagram(d)
    if problems:
        raise InputError(f"invalid pushout diagram: {problems[0]}")


def pushout_A(A1, A2, F0_vertices) -> frozenset[str]:
    A1, A2, F0v = frozenset(A1), frozenset(A2), frozenset(F0_vertices)
    return (A1 - F0v) | (A2 - F0v) | (A1 & A2)


def compute_pushout(d: PushoutDiagram) -> PushoutResult:
    _require_diagram(d)
    F0, F1, F2 = d.F0, d.F1, d.F2
    E = Graph(tuple(F1.vertices | F2.vertices),
              tuple(set(F1.graph.edges) | set(F2.graph.edges)))
    A = pushout_A(F1.A, F2.A, F0.vertices)
    colimit = RelativeGraph(E, A)
    res = PushoutResult(colimit, InclusionMorphism(F1, colimit), InclusionMorphism(F2, colimit))
    _assert_pushout(d, res)
    return res


def _assert_pushout(d: PushoutDiagram, res: PushoutResult) -> None:
    E, A = res.colimit.graph, res.colimit.A
    fail = []
    if not A <= regular_vertices(E):
        fail.append(f"A contains singular vertices {fmt_set(A - regular_vertices(E))}")
    for leg in (res.leg1, res.leg2):
        problems = check_morphism(leg.sub, leg.amb)
        if problems:
            fail.append(f"leg {leg} is not a morphism: {problems[0]}")
    H1, H2 = res.leg1.complement, res.leg2.complement
    if H1 & H2:
        fail.append("complements of the legs intersect")
    if H2 != d.F1.vertices - d.F0.vertices or H1 != d.F2.vertices - d.F0.vertices:
        fail.append("complement identities H_{F0,F1} = H_{F2,E}, H_{F0,F2} = H_{F1,E} fail")
    if not (d.F1.A & d.F2.A) <= d.F0.vertices:
        fail.append("A1 n A2 is not contained in F0")
    if fail:
        raise ConsistencyError("pushout construction: " + "; ".join(fail))


def mediating(d: PushoutDiagram, res: PushoutResult, cocone: Cocone) -> InclusionMorphism:
    """The unique morphism ``phi`` from the pushout into a cocone's target."""
    G, g1, g2 = cocone
    if g1.sub != d.F1 or g2.sub != d.F2:
        raise InputError("cocone legs do not start at the legs of the diagram")
    if g1.amb != G or g2.amb != G:
        raise InputError("cocone legs disagree on their common target")
    for leg in (g1, g2):
        problems = check_morphism(leg.sub, leg.amb)
        if problems:
            raise InputError(f"cocone leg is not a morphism: {problems[0]}")
    problems: list[Violation] = check_morphism(res.colimit, G)
    if problems:
        raise ConsistencyError(f"mediating inclusion is not a morphism: {problems[0]}")
    phi = InclusionMorphism(res.colimit, G)
    for beta, gamma in ((res.leg1, g1), (res.leg2, g2)):
        if (beta.sub, phi.amb) != (gamma.sub, gamma.amb):
            raise ConsistencyError("mediating morphism does not factor the cocone")
    return phi


def a12(d: PushoutDiagram) -> frozenset[str]:
    """``(A1 u A2) n F0``; always contained in ``A0`` for a valid diagram."""
    out = (d.F1.A | d.F2.A) & d.F0.vertices
    if not out <= d.F0.A and not validate_diagram(d):
        raise ConsistencyError(f"A12 = {fmt_set(out)} is not contained in A0 = {fmt_set(d.F0.A)}")
    return out
