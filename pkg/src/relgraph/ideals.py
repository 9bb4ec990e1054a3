"""Gauge-invariant ideals as vertex-set codes.

A code ``(H, B)`` with ``H`` hereditary and ``B`` inside ``reg(F_H)`` names the
open invariant set

    U(H, B) = E* H E^inf  u  E*(H u B)

of the path space.  In a relative context ``(E, A)`` the unit space loses the
finite paths with source in ``A``, so a code denotes ``U(H, B)`` minus
``E*A`` there.  Everything below reduces to vertex sets and reachability; open
sets are never built extensionally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Iterable, Sequence

from .errors import ConsistencyError, InputError
from .graph import (
    Graph,
    Lasso,
    Path,
    breaking_vertices,
    complement_subgraph,
    d_reaches_cycle,
    fmt_set,
    hereditary_closure,
    is_hereditary,
    is_saturated,
    lasso_vertices,
    lasso_violation,
    path_source,
    regular_vertices,
    require_path,
)
from .relative import RelativeGraph

# A unit-space context is nothing more than a relative graph.
RelativeUnitSpaceContext = RelativeGraph


@dataclass(frozen=True)
class IdealCode:
    H: frozenset[str] = frozenset()
    B: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "H", frozenset(self.H))
        object.__setattr__(self, "B", frozenset(self.B))

    def key(self):
        return (len(self.H), sorted(self.H), len(self.B), sorted(self.B))

    def label(self) -> str:
        return f"H={fmt_set(self.H)} B={fmt_set(self.B)}"

    __str__ = label


def validate_code(c: IdealCode, g: Graph) -> list[str]:
    out = []
    stray = (c.H | c.B) - g.vertex_set
    if stray:
        return [f"unknown vertices {fmt_set(stray)}"]
    if not is_hereditary(g, c.H):
        out.append(f"H={fmt_set(c.H)} is not hereditary")
        return out
    bad = c.B - regular_vertices(complement_subgraph(g, c.H))
    if bad:
        out.append(f"B contains {fmt_set(bad)}, not regular in the complement of H")
    return out


def _require_code(c: IdealCode, g: Graph) -> None:
    problems = validate_code(c, g)
    if problems:
        raise InputError(f"invalid ideal code {c}: {problems[0]}")


def contains_finite_path(c: IdealCode, ctx: RelativeGraph, alpha: Path) -> bool:
    g = ctx.graph
    require_path(g, alpha)
    s = path_source(g, alpha)
    return s in (c.H | c.B) and s not in ctx.A


def contains_lasso(c: IdealCode, ctx: RelativeGraph, x: Lasso) -> bool:
    why = lasso_violation(ctx.graph, x)
    if why is not None:
        raise InputError(f"invalid lasso {x}: {why}")
    return bool(lasso_vertices(ctx.graph, x) & c.H)


def _upstream(g: Graph, v: str) -> frozenset[str]:
    """``s(vE*)``: every vertex with a path to ``v``, including ``v``."""
    return hereditary_closure(g, {v})


def zv_subset(codes: Sequence[IdealCode], ctx: RelativeGraph, v: str) -> bool:
    """Whether the cylinder ``Z(v)``, within the unit space, lies in the union of ``codes``."""
    g = ctx.graph
    if v not in g.vertex_set:
        raise InputError(f"unknown vertex {v!r}")
    all_H = frozenset().union(*(c.H for c in codes))
    covered = all_H.union(*(c.B for c in codes))
    if not (_upstream(g, v) - ctx.A) <= covered:
        return False
    return not d_reaches_cycle(g, v, g.vertex_set - all_H)


def canonicalize_union(codes: Sequence[IdealCode], ctx: RelativeGraph) -> IdealCode:
    """The canonical code of the union of the coded sets.

    The canonical form is the one whose ``H u B`` contains ``A``, i.e. the code
    of the union together with the removed part ``E*A``; it is the
    representative listed by :func:`enumerate_ideal_codes`.
    """
    g = ctx.graph
    for c in codes:
        _require_code(c, g)
    H = frozenset(v for v in g.vertices if zv_subset(codes, ctx, v))
    finite = frozenset().union(*(c.H | c.B for c in codes)) - ctx.A
    B = (finite | ctx.A) - H
    out = IdealCode(H, B)
    problems = validate_code(out, g)
    if problems:
        raise ConsistencyError(f"canonical code {out} is invalid: {problems[0]}")
    return out


def code_subset(c1: IdealCode, c2: IdealCode, ctx: RelativeGraph) -> bool:
    """Whether the set coded by ``c1`` lies inside the one coded by ``c2``."""
    g = ctx.graph
    if not ((c1.H | c1.B) - ctx.A) <= ((c2.H | c2.B) - ctx.A):
        return False
    # an infinite path visiting H1 and avoiding H2 has its tail in H1 - H2
    inside = c1.H - c2.H
    return not any(d_reaches_cycle(g, w, inside) for w in inside)


def code_disjoint(c1: IdealCode, c2: IdealCode, ctx: RelativeGraph) -> bool:
    g = ctx.graph
    if ((c1.H | c1.B) & (c2.H | c2.B)) - ctx.A:
        return False
    both = c1.H & c2.H
    return not any(d_reaches_cycle(g, w, g.vertex_set) for w in both)


def code_equal(c1: IdealCode, c2: IdealCode, ctx: RelativeGraph) -> bool:
    return canonicalize_union([c1], ctx) == canonicalize_union([c2], ctx)


def enumerate_hereditary(g: Graph) -> list[frozenset[str]]:
    """All hereditary vertex sets, ordered by size and then by name.

    Branches on the least undecided vertex: either it enters together with its
    hereditary closure, or it is excluded together with everything it reaches.
    Each hereditary set is produced exactly once.
    """
    verts = g.vertices
    closure = {v: hereditary_closure(g, {v}) for v in verts}
    reaches = {v: frozenset(w for w in verts if v in closure[w]) for v in verts}
    found: list[frozenset[str]] = []

    def branch(included: frozenset[str], excluded: frozenset[str]) -> None:
        for v in verts:
            if v not in included and v not in excluded:
                break
        else:
            found.append(included)
            return
        if not closure[v] & excluded:
            branch(included | closure[v], excluded)
        branch(included, excluded | reaches[v])

    branch(frozenset(), frozenset())
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def _subsets(items: Iterable[str]):
    items = sorted(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def enumerate_ideal_codes(ctx: RelativeGraph) -> list[IdealCode]:
    """Codes of the gauge-invariant ideals of ``TC*(E, A)``.

    These are the codes with ``A`` inside ``H u B``; for ``A`` empty, all codes.
    """
    g, A = ctx.graph, ctx.A
    out = []
    for H in enumerate_hereditary(g):
        reg_F = regular_vertices(complement_subgraph(g, H))
        forced = A - H
        if not forced <= reg_F:
            continue
        for extra in _subsets(reg_F - forced):
            out.append(IdealCode(H, forced | frozenset(extra)))
    return sorted(out, key=IdealCode.key)


@dataclass
class IdealLattice:
    """Codes ordered by inclusion of the coded sets, with the cover relation."""

    codes: list[IdealCode]
    below: dict[int, set[int]] = field(default_factory=dict)
    covers: list[tuple[int, int]] = field(default_factory=list)

    @property
    def bottom(self) -> IdealCode:
        (i,) = [i for i in range(len(self.codes)) if not self.below[i] - {i}]
        return self.codes[i]

    @property
    def top(self) -> IdealCode:
        n = len(self.codes)
        (i,) = [i for i in range(n) if len(self.below[i]) == n]
        return self.codes[i]

    def is_chain(self) -> bool:
        sizes = sorted(len(b) for b in self.below.values())
        return sizes == list(range(1, len(self.codes) + 1))

    def to_dot(self, name: str = "ideals") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, c in enumerate(self.codes):
            lines.append(f'  n{i} [label="{c.label()}"];')
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "codes": [{"H": sorted(c.H), "B": sorted(c.B)} for c in self.codes],
            "covers": [list(p) for p in self.covers],
        }


def ideal_lattice(ctx: RelativeGraph) -> IdealLattice:
    codes = enumerate_ideal_codes(ctx)
    n = len(codes)
    below = {j: {i for i in range(n) if code_subset(codes[i], codes[j], ctx)} for j in range(n)}
    for j in range(n):
        for i in below[j]:
            if j in below[i] and i != j:
                raise ConsistencyError(f"distinct codes {codes[i]} and {codes[j]} code the same set")
    covers = []
    for j in range(n):
        strict = below[j] - {j}
        for i in sorted(strict):
            if not any(i in below[k] for k in strict - {i}):
                covers.append((i, j))
    return IdealLattice(codes, below, covers)


def ck_ideal_codes(g: Graph) -> list[IdealCode]:
    """Ideal codes of the graph algebra ``C*(E) = TC*(E, reg E)``.

    Each must have the classical shape: ``H`` saturated and ``B`` equal to the
    regular vertices outside ``H`` plus some breaking vertices of ``H``.
    """
    reg = regular_vertices(g)
    codes = enumerate_ideal_codes(RelativeGraph(g, reg))
    for c in codes:
        if not is_saturated(g, c.H):
            raise ConsistencyError(f"graph-algebra ideal {c} has unsaturated H")
        base = reg - c.H
        if not (base <= c.B and c.B - base <= breaking_vertices(g, c.H)):
            raise ConsistencyError(f"graph-algebra ideal {c} does not have the classical shape")
    return codes
