"""Directed graphs in the Australian convention.

An edge ``e`` goes from ``src(e)`` to ``rng(e)``; a vertex *receives* the
edges whose range it is, and paths compose like morphisms: ``e1 e2 ... en``
is a path when ``src(e_i) == rng(e_{i+1})``.  Its range is ``rng(e1)`` and its
source is ``src(en)``.

Infinite receivers are modelled by edge *bundles*: a single declaration of
countably-infinite cardinality standing for members ``name[1], name[2], ...``.
All vertex-level questions only depend on whether a vertex receives zero,
finitely many, or infinitely many edges, so bundles never need expanding
except by the truncated path oracles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError

ONE = "1"
INF = "inf"
CARDINALITIES = (ONE, INF)

DEFAULT_MAX_BUNDLE_INDEX = 2


@dataclass(frozen=True, order=True)
class EdgeDecl:
    name: str
    src: str
    rng: str
    card: str = ONE

    @property
    def infinite(self) -> bool:
        return self.card == INF

    def members(self, max_bundle_index: int = DEFAULT_MAX_BUNDLE_INDEX) -> list[EdgeRef]:
        """Addressable members; bundles are truncated to indices ``1..max_bundle_index``."""
        if self.infinite:
            return [EdgeRef(self.name, i) for i in range(1, max_bundle_index + 1)]
        return [EdgeRef(self.name)]


@dataclass(frozen=True, order=True)
class EdgeRef:
    decl: str
    index: int | None = None

    def __str__(self) -> str:
        if self.index is None:
            return self.decl
        return f"{self.decl}[{self.index}]"

    def key(self) -> tuple[str, int]:
        return (self.decl, 0 if self.index is None else self.index)


@dataclass(frozen=True)
class Path:
    """A finite path, given by its range vertex and its edges (range first).

    The length-zero path at ``v`` is ``Path(v)``.
    """

    root: str
    steps: tuple[EdgeRef, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        if not self.steps:
            return self.root
        return " ".join(str(s) for s in self.steps)

    def sort_key(self):
        return (len(self.steps), self.root, tuple(s.key() for s in self.steps))


@dataclass(frozen=True)
class Lasso:
    """The eventually periodic infinite path ``prefix cycle cycle ...``."""

    prefix: Path
    cycle: Path

    def __str__(self) -> str:
        head = "" if not self.prefix.steps else str(self.prefix) + " "
        return f"{head}({self.cycle})^inf"


@dataclass(frozen=True)
class Graph:
    """A finite directed graph whose edge declarations may be infinite bundles.

    Construction never raises; use :func:`validate_graph` to check the
    invariants.  Vertices and edges are kept sorted by name.
    """

    vertices: tuple[str, ...] = ()
    edges: tuple[EdgeDecl, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def edge_map(self) -> dict[str, EdgeDecl]:
        return {d.name: d for d in self.edges}

    @cached_property
    def _received(self) -> dict[str, tuple[EdgeDecl, ...]]:
        out: dict[str, list[EdgeDecl]] = {v: [] for v in self.vertices}
        for d in self.edges:
            out.setdefault(d.rng, []).append(d)
        return {v: tuple(ds) for v, ds in out.items()}

    @cached_property
    def _emitted(self) -> dict[str, tuple[EdgeDecl, ...]]:
        out: dict[str, list[EdgeDecl]] = {v: [] for v in self.vertices}
        for d in self.edges:
            out.setdefault(d.src, []).append(d)
        return {v: tuple(ds) for v, ds in out.items()}

    def edge(self, name: str) -> EdgeDecl:
        try:
            return self.edge_map[name]
        except KeyError:
            raise InputError(f"unknown edge {name!r}") from None

    def received(self, v: str) -> tuple[EdgeDecl, ...]:
        """The declarations in ``vE^1``, i.e. with range ``v``."""
        return self._received.get(v, ())

    def emitted(self, v: str) -> tuple[EdgeDecl, ...]:
        return self._emitted.get(v, ())

    @property
    def acyclic(self) -> bool:
        return not any(d_reaches_cycle(self, v, self.vertex_set) for v in self.vertices)

    @property
    def bundle_free(self) -> bool:
        return not any(d.infinite for d in self.edges)


def validate_graph(g: Graph) -> list[str]:
    """Return the list of invariant violations; empty means the graph is valid."""
    problems = []
    seen: set[str] = set()
    for v in g.vertices:
        if not v:
            problems.append("empty vertex name")
        elif v in seen:
            problems.append(f"duplicate vertex {v!r}")
        seen.add(v)
    names: set[str] = set()
    for d in g.edges:
        if not d.name:
            problems.append("empty edge name")
        elif d.name in names:
            problems.append(f"duplicate edge {d.name!r}")
        names.add(d.name)
        for end in (d.src, d.rng):
            if end not in seen:
                problems.append(f"unresolved vertex {end!r} in edge {d.name!r}")
        if d.card not in CARDINALITIES:
            problems.append(f"edge {d.name!r} has unknown cardinality {d.card!r}")
    return problems


def sources(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if not g.received(v))


def infinite_receivers(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if any(d.infinite for d in g.received(v)))


def singular_vertices(g: Graph) -> frozenset[str]:
    return sources(g) | infinite_receivers(g)


def regular_vertices(g: Graph) -> frozenset[str]:
    """Vertices receiving a finite, nonzero number of edges."""
    return g.vertex_set - singular_vertices(g)


def _check_subset(g: Graph, S: Iterable[str]) -> frozenset[str]:
    S = frozenset(S)
    stray = S - g.vertex_set
    if stray:
        raise InputError(f"not vertices of the graph: {sorted(stray)}")
    return S


def hereditary_closure(g: Graph, S: Iterable[str]) -> frozenset[str]:
    """Smallest hereditary set containing ``S``.

    Hereditary means closed under passing from the range of an edge to its
    source.
    """
    S = _check_subset(g, S)
    seen = set(S)
    queue = deque(sorted(S))
    while queue:
        v = queue.popleft()
        for d in g.received(v):
            if d.src not in seen:
                seen.add(d.src)
                queue.append(d.src)
    return frozenset(seen)


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    H = _check_subset(g, H)
    return all(d.src in H for d in g.edges if d.rng in H)


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    """True iff every regular vertex all of whose edges come from ``H`` is in ``H``."""
    H = _check_subset(g, H)
    for v in regular_vertices(g) - H:
        if all(d.src in H for d in g.received(v)):
            return False
    return True


def _require_hereditary(g: Graph, H: Iterable[str]) -> frozenset[str]:
    H = _check_subset(g, H)
    if not is_hereditary(g, H):
        leak = min(d.name for d in g.edges if d.rng in H and d.src not in H)
        raise InputError(f"set {sorted(H)} is not hereditary (edge {leak!r} leaves it)")
    return H


def complement_subgraph(g: Graph, H: Iterable[str]) -> Graph:
    """The graph ``F_H``: vertices outside ``H`` and the edges among them."""
    H = _require_hereditary(g, H)
    keep = g.vertex_set - H
    # heredity of H makes "src outside H" equivalent to "both ends outside H"
    return Graph(tuple(keep), tuple(d for d in g.edges if d.src in keep))


def breaking_vertices(g: Graph, H: Iterable[str]) -> frozenset[str]:
    """Vertices regular in ``F_H`` but singular in ``g``."""
    F = complement_subgraph(g, H)
    return regular_vertices(F) & singular_vertices(g)


# -- paths -----------------------------------------------------------------


def path_violation(g: Graph, p: Path) -> str | None:
    """Why ``p`` is not a path of ``g``, or ``None`` if it is."""
    if p.root not in g.vertex_set:
        return f"unknown vertex {p.root!r}"
    at = p.root
    for step in p.steps:
        d = g.edge_map.get(step.decl)
        if d is None:
            return f"unknown edge {step.decl!r}"
        if d.infinite != (step.index is not None):
            return f"edge reference {step} does not match cardinality of {d.name!r}"
        if step.index is not None and step.index < 1:
            return f"bundle index must be positive in {step}"
        if d.rng != at:
            return f"edge {step} has range {d.rng!r}, expected {at!r}"
        at = d.src
    return None


def is_valid_path(g: Graph, p: Path) -> bool:
    return path_violation(g, p) is None


def require_path(g: Graph, p: Path) -> Path:
    why = path_violation(g, p)
    if why is not None:
        raise InputError(f"invalid path {p}: {why}")
    return p


def path_source(g: Graph, p: Path) -> str:
    if not p.steps:
        return p.root
    return g.edge(p.steps[-1].decl).src


def path_vertices(g: Graph, p: Path) -> list[str]:
    """Vertices visited, from the range to the source."""
    out = [p.root]
    for step in p.steps:
        out.append(g.edge(step.decl).src)
    return out


def concat(g: Graph, a: Path, b: Path) -> Path:
    """The path ``ab``; defined iff ``s(a) == r(b)``."""
    if path_source(g, a) != b.root:
        raise InputError(f"cannot compose {a} with {b}: s({a}) != r({b})")
    return Path(a.root, a.steps + b.steps)


def lasso_violation(g: Graph, x: Lasso) -> str | None:
    for part in (x.prefix, x.cycle):
        why = path_violation(g, part)
        if why is not None:
            return why
    if not x.cycle.steps:
        return "cycle must be non-empty"
    if path_source(g, x.prefix) != x.cycle.root:
        return "prefix does not end where the cycle starts"
    if path_source(g, x.cycle) != x.cycle.root:
        return "cycle does not close"
    return None


def lasso_vertices(g: Graph, x: Lasso) -> set[str]:
    return set(path_vertices(g, x.prefix)) | set(path_vertices(g, x.cycle))


def iter_paths(g: Graph, max_len: int, max_bundle_index: int = DEFAULT_MAX_BUNDLE_INDEX) -> Iterator[Path]:
    frontier = [Path(v) for v in g.vertices]
    for _ in range(max_len + 1):
        yield from frontier
        nxt = []
        for p in frontier:
            for d in g.received(path_source(g, p)):
                for m in d.members(max_bundle_index):
                    nxt.append(Path(p.root, p.steps + (m,)))
        frontier = nxt


def enumerate_paths(g: Graph, max_len: int | None = None,
                    max_bundle_index: int = DEFAULT_MAX_BUNDLE_INDEX) -> list[Path]:
    """All paths of length at most ``max_len`` (default ``|E^0| + 2``), sorted."""
    if max_len is None:
        max_len = len(g.vertices) + 2
    return sorted(iter_paths(g, max_len, max_bundle_index), key=Path.sort_key)


def d_reaches_cycle(g: Graph, start: str, allowed: Iterable[str]) -> bool:
    """Whether some infinite path from ``start`` stays inside ``allowed``.

    Walks the digraph with an arc ``rng(d) -> src(d)`` per declaration; an
    infinite path exists iff the walk can reach a cycle without leaving
    ``allowed``.  Vertices with no way forward are peeled off until the
    survivors are exactly those with an infinite path.
    """
    allowed = frozenset(allowed)
    if start not in allowed:
        return False
    alive = set(allowed)
    out_deg = {v: 0 for v in alive}
    preds: dict[str, list[str]] = {v: [] for v in alive}
    for d in g.edges:
        if d.rng in alive and d.src in alive:
            out_deg[d.rng] += 1
            preds[d.src].append(d.rng)
    dead = deque(v for v, k in out_deg.items() if k == 0)
    while dead:
        v = dead.popleft()
        alive.discard(v)
        for w in preds[v]:
            out_deg[w] -= 1
            if out_deg[w] == 0:
                dead.append(w)
    return start in alive


def fmt_set(S: Iterable[str]) -> str:
    return "{" + ",".join(sorted(S)) + "}"
