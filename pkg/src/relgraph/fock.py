"""Exact finite-dimensional model of ``TC*(E, A)`` for finite acyclic graphs.

The algebra acts on the span of the finite paths whose source is not in
``A``: ``P_v`` keeps the paths with range ``v`` and ``S_e`` prepends ``e``.
Every orbit is finite, so the algebra is a direct sum of full matrix blocks,
one for each vertex ``v`` outside ``A`` of size ``|E*v|`` (paths with source
``v``).  All matrices are 0/1 integer matrices; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np
import scipy.sparse as sp

from .errors import ConsistencyError, InputError
from .graph import Graph, Path, EdgeRef, path_source, regular_vertices
from .ideals import IdealCode, validate_code
from .pullback import u_codes
from .pushout import PushoutDiagram, PushoutResult, a12
from .relative import RelativeGraph

Matrix = sp.csr_matrix


@dataclass
class PathBasis:
    paths: list[Path]
    graph: Graph

    def __post_init__(self):
        self.index = {p: i for i, p in enumerate(self.paths)}

    def __len__(self) -> int:
        return len(self.paths)

    def source(self, i: int) -> str:
        return path_source(self.graph, self.paths[i])


@dataclass
class MatrixRep:
    basis: PathBasis
    P: dict[str, Matrix]
    S: dict[str, Matrix]

    @property
    def size(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class CKViolation:
    relation: str
    generators: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.relation} fails at {', '.join(self.generators)}: {self.message}"


def _require_finite(ctx: RelativeGraph) -> Graph:
    g = ctx.graph
    if not g.bundle_free:
        raise InputError("the matrix model needs a graph without infinite bundles")
    if not g.acyclic:
        raise InputError("the matrix model needs an acyclic graph")
    if not ctx.A <= regular_vertices(g):
        raise InputError("A must consist of regular vertices")
    return g


def path_basis(ctx: RelativeGraph) -> PathBasis:
    """Finite paths with source outside ``A``, sorted by (source, length, names)."""
    g = _require_finite(ctx)
    found = []
    frontier = [Path(v) for v in g.vertices]
    while frontier:
        found.extend(frontier)
        frontier = [Path(p.root, p.steps + (EdgeRef(d.name),))
                    for p in frontier for d in g.received(path_source(g, p))]
    keep = [p for p in found if path_source(g, p) not in ctx.A]
    keep.sort(key=lambda p: (path_source(g, p), len(p), [s.decl for s in p.steps]))
    return PathBasis(keep, g)


def _matrix(n: int, entries: Iterable[tuple[int, int]]) -> Matrix:
    entries = list(entries)
    rows = [i for i, _ in entries]
    cols = [j for _, j in entries]
    data = np.ones(len(entries), dtype=np.int64)
    return sp.csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.int64)


def build_rep(ctx: RelativeGraph) -> MatrixRep:
    g = _require_finite(ctx)
    basis = path_basis(ctx)
    n = len(basis)
    P = {v: _matrix(n, [(i, i) for i, p in enumerate(basis.paths) if p.root == v])
         for v in g.vertices}
    S = {}
    for d in g.edges:
        pairs = []
        for j, beta in enumerate(basis.paths):
            if beta.root == d.src:
                pairs.append((basis.index[Path(d.rng, (EdgeRef(d.name),) + beta.steps)], j))
        S[d.name] = _matrix(n, pairs)
    return MatrixRep(basis, P, S)


def _same(a: Matrix, b: Matrix) -> bool:
    return (a != b).nnz == 0


def _is_zero(a: Matrix) -> bool:
    return a.count_nonzero() == 0


def verify_ck(rep: MatrixRep, ctx: RelativeGraph) -> list[CKViolation]:
    """Check the relations of ``TC*(E, A)``; an empty list means all hold.

    Violations are listed in relation order: 0/1 entries, projections, (CK1),
    (CK2), (CK3), (TCK4) on ``A``, nonzero gap projections on ``reg E - A``.
    """
    g = ctx.graph
    out: list[CKViolation] = []
    n = rep.size
    zero = sp.csr_matrix((n, n), dtype=np.int64)

    for kind, mats in (("P", rep.P), ("S", rep.S)):
        for name, m in sorted(mats.items()):
            if m.shape != (n, n) or not set(np.unique(m.data)) <= {0, 1}:
                out.append(CKViolation("0/1", (f"{kind}_{name}",), "entries outside {0,1}"))

    verts = list(g.vertices)
    for i, v in enumerate(verts):
        p = rep.P[v]
        if not _same(p @ p, p) or not _same(p.T, p):
            out.append(CKViolation("projection", (f"P_{v}",), "not a projection"))
        for w in verts[i + 1:]:
            if not _is_zero(p @ rep.P[w]):
                out.append(CKViolation("orthogonality", (f"P_{v}", f"P_{w}"), "P_v P_w != 0"))

    for d in g.edges:
        s = rep.S[d.name]
        if not _same(s.T @ s, rep.P[d.src]):
            out.append(CKViolation("CK1", (f"S_{d.name}",), f"S*S != P_{d.src}"))
    names = [d.name for d in g.edges]
    for i, e in enumerate(names):
        for f in names:
            if e != f and not _is_zero(rep.S[e].T @ rep.S[f]):
                out.append(CKViolation("CK2", (f"S_{e}", f"S_{f}"), "S_e* S_f != 0"))
    for d in g.edges:
        s = rep.S[d.name]
        if not _same(rep.P[d.rng] @ s, s):
            out.append(CKViolation("CK3", (f"S_{d.name}",), f"P_{d.rng} S != S"))

    reg = regular_vertices(g)
    for v in verts:
        if v not in reg:
            continue
        ranges = zero.copy()
        for d in g.received(v):
            ranges = ranges + rep.S[d.name] @ rep.S[d.name].T
        gap = rep.P[v] - ranges
        if v in ctx.A and not _is_zero(gap):
            out.append(CKViolation("TCK4", (f"P_{v}",), "P_v != sum of S_e S_e*"))
        if v not in ctx.A and _is_zero(gap):
            out.append(CKViolation("gap", (f"P_{v}",), "gap projection vanishes outside A"))
    return out


def block_decomposition(ctx: RelativeGraph) -> dict[str, int]:
    """``v -> |E*v|`` for each vertex outside ``A``."""
    basis = path_basis(ctx)
    sizes = {v: 0 for v in ctx.graph.vertices if v not in ctx.A}
    for i in range(len(basis)):
        sizes[basis.source(i)] += 1
    return sizes


def block_dimension(ctx: RelativeGraph) -> int:
    return sum(k * k for k in block_decomposition(ctx).values())


class _Span:
    """Exact row-reduced span of sparse rational vectors."""

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def add(self, vec: dict[int, int]) -> bool:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for k, x in self.rows[p].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return True


def _flatten(m: Matrix) -> dict[int, int]:
    coo = m.tocoo()
    n = m.shape[1]
    return {int(i) * n + int(j): int(x) for i, j, x in zip(coo.row, coo.col, coo.data) if x}


def algebra_dimension(rep: MatrixRep) -> int:
    """Dimension of the algebra generated by ``P_v``, ``S_e`` and ``S_e*``.

    Computed from the matrices alone by closing the span of the generators
    under right multiplication, with exact rational elimination.
    """
    gens = list(rep.P.values()) + list(rep.S.values()) + [s.T.tocsr() for s in rep.S.values()]
    span = _Span()
    queue = []
    for g in gens:
        if span.add(_flatten(g)):
            queue.append(g)
    while queue:
        m = queue.pop()
        for g in gens:
            prod = (m @ g).tocsr()
            if span.add(_flatten(prod)):
                queue.append(prod)
    return len(span)


def ideal_blocks(c: IdealCode, ctx: RelativeGraph) -> frozenset[str]:
    """Blocks making up the ideal coded by ``c``: ``(H u B) - A``."""
    g = _require_finite(ctx)
    problems = validate_code(c, g)
    if problems:
        raise InputError(f"invalid ideal code {c}: {problems[0]}")
    return frozenset((c.H | c.B) - ctx.A)


def ideal_dimension(c: IdealCode, ctx: RelativeGraph) -> int:
    sizes = block_decomposition(ctx)
    return sum(sizes[v] ** 2 for v in ideal_blocks(c, ctx))


def block_projection(rep: MatrixRep, blocks: Iterable[str]) -> Matrix:
    blocks = set(blocks)
    n = rep.size
    return _matrix(n, [(i, i) for i in range(n) if rep.basis.source(i) in blocks])


def generator_support(rep: MatrixRep, gens: Iterable[Matrix]) -> frozenset[str]:
    """Blocks in which some generator has a nonzero component.

    The algebra is block diagonal, so the ideal generated by ``gens`` is the
    sum of exactly these blocks.
    """
    hit = set()
    for m in gens:
        coo = m.tocoo()
        for i, x in zip(coo.row, coo.data):
            if x:
                hit.add(rep.basis.source(int(i)))
    return frozenset(hit)


def kernel_generators(rep: MatrixRep, E: RelativeGraph, F: Graph, B: Iterable[str]) -> list[Matrix]:
    """Matrices of ``p_v`` (``v`` outside ``F``) and ``p_v - sum_{e in vF^1} s_e s_e*`` (``v`` in ``B - A``)."""
    out = [rep.P[v] for v in sorted(E.vertices - F.vertex_set)]
    for v in sorted(frozenset(B) - E.A):
        m = rep.P[v].copy()
        for d in F.received(v):
            m = m - rep.S[d.name] @ rep.S[d.name].T
        out.append(m.tocsr())
    return out


@dataclass
class PedersenReport:
    supports: dict[str, frozenset[str]]
    dimensions: dict[str, int]
    quotient_dimension: int
    pullback: bool
    checks: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "supports": {k: sorted(v) for k, v in self.supports.items()},
            "dimensions": self.dimensions,
            "quotient_dimension": self.quotient_dimension,
            "pullback": self.pullback,
            "checks": self.checks,
        }


def verify_pedersen(d: PushoutDiagram, res: PushoutResult) -> PedersenReport:
    """Check the pullback square numerically in the matrix model of ``(E, A)``."""
    ctx = res.colimit
    rep = build_rep(ctx)
    problems = verify_ck(rep, ctx)
    if problems:
        raise ConsistencyError(f"matrix model violates {problems[0]}")
    u = u_codes(d, res)
    A12 = a12(d)
    codes = {"0": u.u0, "1": u.u1, "2": u.u2, "12": u.u12}
    legs = {"0": (d.F0.graph, d.F0.A), "1": (d.F1.graph, d.F1.A),
            "2": (d.F2.graph, d.F2.A), "12": (d.F0.graph, A12)}

    supports = {k: ideal_blocks(c, ctx) for k, c in codes.items()}
    dims = {k: ideal_dimension(c, ctx) for k, c in codes.items()}
    gens = {k: kernel_generators(rep, ctx, F, B) for k, (F, B) in legs.items()}

    checks = {}
    checks["generator_support"] = all(generator_support(rep, gens[k]) == supports[k] for k in codes)
    checks["disjoint"] = not supports["1"] & supports["2"]
    checks["union"] = supports["1"] | supports["2"] == supports["12"]
    Q1, Q2 = block_projection(rep, supports["1"]), block_projection(rep, supports["2"])
    checks["zero_product"] = _is_zero(Q1 @ Q2) and all(
        _is_zero(a @ b) for a in gens["1"] for b in gens["2"])
    quotient = block_dimension(RelativeGraph(d.F0.graph, A12))
    total = block_dimension(ctx)
    checks["dimension"] = total == dims["1"] + dims["2"] + quotient
    failed = sorted(k for k, ok in checks.items() if not ok)
    if failed:
        raise ConsistencyError(f"pullback square fails {', '.join(failed)}")
    return PedersenReport(supports, dims, quotient, supports["12"] == supports["0"], checks)


def dump_matrices(rep: MatrixRep) -> str:
    """Coordinate-list text: a header per generator then ``row col value`` lines."""
    lines = ["# basis"]
    lines += [f"{i} {p}" for i, p in enumerate(rep.basis.paths)]
    for kind, mats in (("P", rep.P), ("S", rep.S)):
        for name in sorted(mats):
            coo = mats[name].tocoo()
            lines.append(f"# {kind}_{name}")
            entries = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
            lines += [f"{i} {j} {x}" for i, j, x in entries if x]
    return "\n".join(lines) + "\n"
