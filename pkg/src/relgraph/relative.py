"""Relative graphs ``(F, B)`` and the inclusion morphisms between them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConsistencyError, InputError
from .graph import Graph, fmt_set, is_hereditary, regular_vertices, validate_graph


@dataclass(frozen=True)
class RelativeGraph:
    """A graph together with the set ``A`` of regular vertices where the
    Cuntz-Krieger summation relation is imposed."""

    graph: Graph
    A: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))

    @property
    def vertices(self) -> frozenset[str]:
        return self.graph.vertex_set

    def with_A(self, A: Iterable[str]) -> RelativeGraph:
        return RelativeGraph(self.graph, frozenset(A))

    def __str__(self) -> str:
        return f"({fmt_set(self.graph.vertices)}, A={fmt_set(self.A)})"


@dataclass(frozen=True)
class Violation:
    """One failed condition, with a single (lexicographically least) witness."""

    condition: str
    witness: str
    message: str

    def __str__(self) -> str:
        return f"[{self.condition}] {self.message}"


def validate_relative(rg: RelativeGraph) -> list[Violation]:
    out = [Violation("graph", "", p) for p in validate_graph(rg.graph)]
    if out:
        return out
    reg = regular_vertices(rg.graph)
    for v in sorted(rg.A - reg):
        if v in rg.graph.vertex_set:
            out.append(Violation("A-regular", v, f"vertex {v!r} in A is singular"))
        else:
            out.append(Violation("A-regular", v, f"vertex {v!r} in A is not in the graph"))
    return out


@dataclass(frozen=True)
class InclusionMorphism:
    """A name-preserving inclusion ``(F, B) -> (E, A)``.

    Construction does not validate; see :func:`check_morphism` and
    :func:`morphism`.
    """

    sub: RelativeGraph
    amb: RelativeGraph

    @property
    def complement(self) -> frozenset[str]:
        """``H_{F,E} = E^0 minus F^0``."""
        return self.amb.vertices - self.sub.vertices

    def __str__(self) -> str:
        return f"{self.sub} -> {self.amb}"


def check_morphism(sub: RelativeGraph, amb: RelativeGraph) -> list[Violation]:
    """Check the inclusion ``sub -> amb`` against the morphism conditions.

    Returns an empty list when the inclusion is a morphism.  Conditions are
    reported as ``containment``, ``(1)`` (heredity of the complement), ``(2)``
    (fullness of the edge set) and ``(3)`` (``A`` meets ``F`` inside ``B``).
    """
    F, E = sub.graph, amb.graph
    out: list[Violation] = []

    bad = sorted(F.vertex_set - E.vertex_set)
    if bad:
        out.append(Violation("containment", bad[0], f"vertex {bad[0]!r} is missing from the target"))
    mismatched = sorted(d.name for d in F.edges if E.edge_map.get(d.name) != d)
    if mismatched:
        name = mismatched[0]
        what = "missing from" if name not in E.edge_map else "declared differently in"
        out.append(Violation("containment", name, f"edge {name!r} is {what} the target"))
    if out:
        return out

    H = E.vertex_set - F.vertex_set
    leaks = sorted(d.name for d in E.edges if d.rng in H and d.src not in H)
    if leaks:
        out.append(Violation("(1)", leaks[0],
                             f"complement {fmt_set(H)} is not hereditary: edge {leaks[0]!r} "
                             f"has range in it and source outside"))
    missing = sorted(d.name for d in E.edges
                     if d.src in F.vertex_set and d.rng in F.vertex_set and d.name not in F.edge_map)
    if missing:
        out.append(Violation("(2)", missing[0],
                             f"edge {missing[0]!r} joins vertices of the subgraph but is not in it"))
    extra = sorted((amb.A & F.vertex_set) - sub.A)
    if extra:
        out.append(Violation("(3)", extra[0],
                             f"vertex {extra[0]!r} is in the target's A but not in the source's A"))
    return out


def morphism(sub: RelativeGraph, amb: RelativeGraph) -> InclusionMorphism:
    """Build the inclusion ``sub -> amb``, raising if it is not a morphism."""
    problems = check_morphism(sub, amb)
    if problems:
        raise InputError(f"not a morphism {sub} -> {amb}: {problems[0]}")
    return InclusionMorphism(sub, amb)


def identity(rg: RelativeGraph) -> InclusionMorphism:
    return InclusionMorphism(rg, rg)


def compose(inner: InclusionMorphism, outer: InclusionMorphism) -> InclusionMorphism:
    """``outer . inner``; the result is re-checked rather than trusted."""
    if inner.amb != outer.sub:
        raise InputError("cannot compose: target of the inner morphism is not the source of the outer")
    problems = check_morphism(inner.sub, outer.amb)
    if problems:
        raise ConsistencyError(f"composite of morphisms is not a morphism: {problems[0]}")
    return InclusionMorphism(inner.sub, outer.amb)


@dataclass(frozen=True)
class IdealGenerators:
    """Generators of the kernel of ``TC*(E,A) -> TC*(F,B)``.

    ``vertex_projections`` lists the ``v`` with generator ``p_v``;
    ``gap_projections`` the ``v`` with generator ``p_v - sum_{e in vF^1} s_e s_e^*``.
    """

    vertex_projections: frozenset[str]
    gap_projections: frozenset[str]


def quotient_generators(mor: InclusionMorphism) -> IdealGenerators:
    problems = check_morphism(mor.sub, mor.amb)
    if problems:
        raise InputError(f"invalid morphism: {problems[0]}")
    H = mor.complement
    if not is_hereditary(mor.amb.graph, H):
        raise ConsistencyError("morphism check passed with a non-hereditary complement")
    return IdealGenerators(frozenset(H), frozenset(mor.sub.A - mor.amb.A))
