"""Random spans, relative graphs and cocones for property testing.

Spans are built from a vertex partition ``E^0 = F0 u H1 u H2`` where
``H1`` and ``H2`` are disjoint hereditary sets: edges may run inside a part
or from ``H1``/``H2`` into ``F0``, never out of ``F0`` and never between
``H1`` and ``H2``.  Then ``F_i`` is the complement of ``H_i`` and ``F0`` the
complement of both, which is the general shape of a pushout.
"""

from __future__ import annotations

import random
import string

from .graph import INF, ONE, EdgeDecl, Graph, complement_subgraph, regular_vertices
from .pushout import Cocone, PushoutDiagram, PushoutResult
from .relative import InclusionMorphism, RelativeGraph, check_morphism


def _sample_subset(rng: random.Random, items, p: float = 0.5) -> frozenset[str]:
    return frozenset(x for x in sorted(items) if rng.random() < p)


def _edges(rng, allowed_pairs, n_edges, n_bundles, prefix="e", bundle_pairs=()):
    """Random edges; bundles land in ``bundle_pairs`` half the time when given."""
    out = []
    if not allowed_pairs:
        return out
    for k in range(n_edges):
        pool = allowed_pairs
        if k < n_bundles and bundle_pairs and rng.random() < 0.5:
            pool = bundle_pairs
        src, dst = rng.choice(pool)
        out.append(EdgeDecl(f"{prefix}{k}", src, dst, INF if k < n_bundles else ONE))
    return out


def random_graph(rng: random.Random, max_vertices: int = 8, max_edges: int = 12,
                 max_bundles: int = 2, acyclic: bool = False) -> Graph:
    n = rng.randint(1, max_vertices)
    names = list(string.ascii_lowercase[:n])
    order = names[:]
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    pairs = [(s, r) for s in names for r in names if not acyclic or rank[s] > rank[r]]
    m = rng.randint(0, max_edges)
    nb = rng.randint(0, min(max_bundles, m))
    return Graph(tuple(names), tuple(_edges(rng, pairs, m, nb)))


def random_relative(rng: random.Random, **kw) -> RelativeGraph:
    g = random_graph(rng, **kw)
    return RelativeGraph(g, _sample_subset(rng, regular_vertices(g)))


def random_span(rng: random.Random, max_vertices: int = 8, max_edges: int = 12,
                max_bundles: int = 2, acyclic: bool = False, ck: bool = False) -> PushoutDiagram:
    """A valid span; with ``ck`` every graph carries ``A = reg`` (and the legs
    may then fail to be morphisms, which the caller must filter)."""
    n = rng.randint(1, max_vertices)
    names = list(string.ascii_lowercase[:n])
    n0 = rng.randint(1, n)
    n1 = rng.randint(0, n - n0)
    part = {}
    for i, v in enumerate(names):
        part[v] = 0 if i < n0 else (1 if i < n0 + n1 else 2)
    order = names[:]
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    pairs = [(s, r) for s in names for r in names
             if (part[s] == part[r] or part[r] == 0)
             and (not acyclic or rank[s] > rank[r])]
    m = rng.randint(0, max_edges)
    nb = 0 if acyclic else rng.randint(0, min(max_bundles, m))
    # bundles from a leg into the apex make the interesting singular vertices
    into_apex = [(s, r) for s, r in pairs if part[s] != 0 and part[r] == 0]
    E = Graph(tuple(names), tuple(_edges(rng, pairs, m, nb, bundle_pairs=into_apex)))

    H1 = frozenset(v for v in names if part[v] == 1)
    H2 = frozenset(v for v in names if part[v] == 2)
    F0 = complement_subgraph(E, H1 | H2)
    F1 = complement_subgraph(E, H1)
    F2 = complement_subgraph(E, H2)
    reg0 = regular_vertices(F0)
    if ck:
        A = [regular_vertices(F) for F in (F0, F1, F2)]
        return PushoutDiagram.of(*(RelativeGraph(F, a) for F, a in zip((F0, F1, F2), A)))
    A_legs = []
    for F in (F1, F2):
        cand = {v for v in regular_vertices(F) if v not in F0.vertex_set or v in reg0}
        A_legs.append(_sample_subset(rng, cand))
    A12 = (A_legs[0] | A_legs[1]) & F0.vertex_set
    A0 = A12 | _sample_subset(rng, reg0 - A12, 0.4)
    return PushoutDiagram.of(RelativeGraph(F0, A0), RelativeGraph(F1, A_legs[0]),
                             RelativeGraph(F2, A_legs[1]))


def ck_valid(d: PushoutDiagram) -> bool:
    return not check_morphism(d.F0, d.F1) and not check_morphism(d.F0, d.F2)


def random_cocone(rng: random.Random, d: PushoutDiagram, res: PushoutResult,
                  max_new: int = 2, max_new_edges: int = 4) -> Cocone:
    """A cocone under the span: the colimit plus a few vertices ``x*`` whose
    edges only point into existing vertices or among themselves."""
    E = res.colimit.graph
    new = [f"x{i}" for i in range(rng.randint(0, max_new))]
    targets = list(E.vertices) + new
    pairs = [(s, r) for s in new for r in targets]
    extra = _edges(rng, pairs, rng.randint(0, max_new_edges) if pairs else 0,
                   rng.randint(0, 1), prefix="c")
    G = Graph(tuple(targets), E.edges + tuple(extra))
    A = res.colimit.A
    reg = regular_vertices(G)
    cand = (reg & frozenset(new)) | (reg & A)
    target = RelativeGraph(G, _sample_subset(rng, cand))
    return Cocone(target, InclusionMorphism(d.F1, target), InclusionMorphism(d.F2, target))
