"""When does a pushout of relative graphs give a pullback of algebras?

For the pushout ``(E, A)`` of a span ``(F1,A1) <- (F0,A0) -> (F2,A2)`` each
graph ``F_i`` is a quotient of ``TC*(E, A)`` whose kernel is coded by

    U^(i) = (H_{F_i,E}, A_i - A)      for i in 0, 1, 2, 12,

where ``F12 := F0`` carries ``A12 = (A1 u A2) n F0``.  The square is a pullback
exactly when the span is *admissible*: ``A0`` is covered by ``A1 u A2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConsistencyError, InputError
from .graph import regular_vertices, singular_vertices
from .ideals import IdealCode, canonicalize_union, code_disjoint, code_subset
from .pushout import PushoutDiagram, PushoutResult, a12, compute_pushout, validate_diagram


class UCodes(NamedTuple):
    u0: IdealCode
    u1: IdealCode
    u2: IdealCode
    u12: IdealCode


def u_codes(d: PushoutDiagram, res: PushoutResult) -> UCodes:
    E = res.colimit
    A = E.A

    def code(F, Ai):
        return IdealCode(E.vertices - F.vertices, frozenset(Ai) - A)

    return UCodes(
        code(d.F0, d.F0.A),
        code(d.F1, d.F1.A),
        code(d.F2, d.F2.A),
        code(d.F0, a12(d)),
    )


def check_disjoint(d: PushoutDiagram, res: PushoutResult) -> bool:
    """``I1 I2 = 0``: the kernels of the two legs have disjoint open sets."""
    u = u_codes(d, res)
    ok = code_disjoint(u.u1, u.u2, res.colimit)
    if not ok:
        raise ConsistencyError(f"U1 = {u.u1} and U2 = {u.u2} intersect")
    return ok


def check_union(d: PushoutDiagram, res: PushoutResult) -> bool:
    """``I1 + I2 = I12``."""
    u = u_codes(d, res)
    ctx = res.colimit
    ok = canonicalize_union([u.u1, u.u2], ctx) == canonicalize_union([u.u12], ctx)
    if not ok:
        raise ConsistencyError(f"U1 u U2 differs from U12 = {u.u12}")
    return ok


def check_containment(d: PushoutDiagram, res: PushoutResult) -> bool:
    """``I12`` is contained in ``I0``."""
    u = u_codes(d, res)
    ok = code_subset(u.u12, u.u0, res.colimit)
    if not ok:
        raise ConsistencyError(f"U12 = {u.u12} is not inside U0 = {u.u0}")
    return ok


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    cond_b: bool
    cond_c: bool
    cond_e: bool
    cond_ideal: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "A0_covered": self.cond_b,
            "A0_equals_A12": self.cond_c,
            "singular_split": self.cond_e,
            "I0_equals_I12": self.cond_ideal,
            "witness": self.witness,
        }


def admissibility(d: PushoutDiagram, res: PushoutResult) -> AdmissibilityReport:
    """Decide admissibility four independent ways and insist they agree."""
    A0, A1, A2 = d.F0.A, d.F1.A, d.F2.A
    cond_b = A0 <= A1 | A2
    cond_c = A0 == a12(d)
    sing1, sing2 = singular_vertices(d.F1.graph), singular_vertices(d.F2.graph)
    reg_E = regular_vertices(res.colimit.graph)
    cond_e = (A0 & sing1 <= A2) and (A0 & sing2 <= A1) and (A0 & reg_E <= A1 | A2)
    u = u_codes(d, res)
    ctx = res.colimit
    cond_ideal = canonicalize_union([u.u0], ctx) == canonicalize_union([u.u12], ctx)

    flags = (cond_b, cond_c, cond_e, cond_ideal)
    if len(set(flags)) != 1:
        raise ConsistencyError(f"admissibility conditions disagree: (b,c,e,d) = {flags}")
    witness = None
    if not cond_b:
        witness = min(A0 - (A1 | A2))
    return AdmissibilityReport(cond_b, cond_b, cond_c, cond_e, cond_ideal, witness)


def ck_admissibility(d: PushoutDiagram) -> bool:
    """Graph-algebra case: admissible iff ``sing F1 n sing F2 n reg F0`` is empty."""
    for name, rg in (("F0", d.F0), ("F1", d.F1), ("F2", d.F2)):
        if rg.A != regular_vertices(rg.graph):
            raise InputError(f"{name} must carry A = reg {name}")
    verdict = not (singular_vertices(d.F1.graph) & singular_vertices(d.F2.graph)
                   & regular_vertices(d.F0.graph))
    report = admissibility(d, compute_pushout(d))
    if report.admissible != verdict:
        raise ConsistencyError("graph-algebra criterion disagrees with admissibility")
    return verdict


def suggest_a0(d: PushoutDiagram) -> frozenset[str]:
    """The only admissible choice of ``A0``: ``A12``.

    The diagram's own ``A0`` is ignored, so this also repairs spans whose apex
    ``A`` is too small for the inclusions to be morphisms.
    """
    problems = validate_diagram(d, ignore_A0=True)
    if problems:
        raise InputError(f"invalid pushout diagram: {problems[0]}")
    A0 = (d.F1.A | d.F2.A) & d.F0.vertices
    if not A0 <= regular_vertices(d.F0.graph):
        raise InputError(f"no admissible A0 exists: A12 contains singular vertices of F0")
    repaired = d.with_A0(A0)
    if not admissibility(repaired, compute_pushout(repaired)).admissible:
        raise ConsistencyError("repaired diagram is not admissible")
    return A0
