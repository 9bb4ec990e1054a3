"""Command line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 input
error, 3 internal-consistency failure (always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import ConsistencyError, InputError
from .fock import block_decomposition, build_rep, dump_matrices, verify_ck, verify_pedersen
from .formats import dumps, load_relative, relative_to_dict, save_relative
from .graph import (
    breaking_vertices,
    complement_subgraph,
    fmt_set,
    infinite_receivers,
    is_hereditary,
    is_saturated,
    regular_vertices,
    sources,
)
from .ideals import enumerate_hereditary, ideal_lattice
from .pullback import admissibility, suggest_a0, u_codes
from .pushout import PushoutDiagram, compute_pushout
from .relative import InclusionMorphism, RelativeGraph, check_morphism, quotient_generators

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


def _vertex_list(text: str | None) -> frozenset[str] | None:
    if text is None:
        return None
    return frozenset(x.strip() for x in text.split(",") if x.strip())


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _diagram(args) -> PushoutDiagram:
    return PushoutDiagram.of(load_relative(args.apex), load_relative(args.left), load_relative(args.right))


def cmd_analyze(args) -> int:
    g = load_relative(args.graph).graph
    reg = regular_vertices(g)
    data = {
        "vertices": list(g.vertices),
        "regular": sorted(reg),
        "sources": sorted(sources(g)),
        "infinite_receivers": sorted(infinite_receivers(g)),
        "hereditary_sets": [sorted(H) for H in enumerate_hereditary(g)],
    }
    lines = [
        f"vertices:           {fmt_set(g.vertices)}",
        f"regular:            {fmt_set(reg)}",
        f"sources:            {fmt_set(sources(g))}",
        f"infinite receivers: {fmt_set(infinite_receivers(g))}",
        f"hereditary sets:    {len(data['hereditary_sets'])}",
    ]
    H = _vertex_list(args.H)
    if H is not None:
        if not H <= g.vertex_set:
            raise InputError(f"--H names unknown vertices {fmt_set(H - g.vertex_set)}")
        her = is_hereditary(g, H)
        data["H"] = {"set": sorted(H), "hereditary": her, "saturated": is_saturated(g, H)}
        lines.append(f"H = {fmt_set(H)}: hereditary={her} saturated={data['H']['saturated']}")
        if her:
            F = complement_subgraph(g, H)
            B = breaking_vertices(g, H)
            data["H"].update(complement_vertices=list(F.vertices),
                             complement_edges=[d.name for d in F.edges], breaking=sorted(B))
            lines.append(f"  F_H = ({fmt_set(F.vertices)}, {fmt_set(d.name for d in F.edges)})")
            lines.append(f"  breaking vertices: {fmt_set(B)}")
    if args.plot:
        from .plotting import plot_graph
        plot_graph(g, args.plot)
        lines.append(f"figure written to {args.plot}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_check_morphism(args) -> int:
    sub, amb = load_relative(args.sub), load_relative(args.amb)
    problems = check_morphism(sub, amb)
    data = {"morphism": not problems,
            "violations": [{"condition": v.condition, "witness": v.witness, "message": v.message}
                           for v in problems]}
    if problems:
        _emit(args, "not a morphism\n" + "\n".join(f"  {v}" for v in problems), data)
        return EXIT_NO
    gens = quotient_generators(InclusionMorphism(sub, amb))
    data["kernel_generators"] = {"vertex": sorted(gens.vertex_projections),
                                 "gap": sorted(gens.gap_projections)}
    _emit(args, "morphism: ok\n"
                f"kernel generated by p_v for v in {fmt_set(gens.vertex_projections)}"
                f" and gap projections at {fmt_set(gens.gap_projections)}", data)
    return EXIT_OK


def cmd_pushout(args) -> int:
    d = _diagram(args)
    res = compute_pushout(d)
    E = res.colimit
    if args.out:
        save_relative(E, args.out)
    data = {"pushout": relative_to_dict(E),
            "H_F1_E": sorted(res.leg1.complement), "H_F2_E": sorted(res.leg2.complement)}
    lines = [
        f"E^0 = {fmt_set(E.graph.vertices)}",
        f"E^1 = {fmt_set(x.name for x in E.graph.edges)}",
        f"A   = {fmt_set(E.A)}",
        f"H_F1,E = {fmt_set(res.leg1.complement)}   H_F2,E = {fmt_set(res.leg2.complement)}",
    ]
    if args.out:
        lines.append(f"pushout written to {args.out}")
    else:
        lines.append(dumps(relative_to_dict(E)).rstrip())
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_ideals(args) -> int:
    rg = load_relative(args.graph)
    A = _vertex_list(args.A)
    if A is not None:
        rg = RelativeGraph(rg.graph, A)
        if not A <= regular_vertices(rg.graph):
            raise InputError(f"--A must list regular vertices, got {fmt_set(A)}")
    lat = ideal_lattice(rg)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(lat.to_dot())
    if args.plot:
        from .plotting import plot_hasse
        plot_hasse(lat, args.plot)
    lines = [f"{len(lat.codes)} gauge-invariant ideals of TC*(E, A={fmt_set(rg.A)})"]
    lines += [f"  [{i}] {c.label()}" for i, c in enumerate(lat.codes)]
    lines.append("covers: " + ", ".join(f"{lo}<{hi}" for lo, hi in lat.covers))
    for flag, what in ((args.dot, "DOT"), (args.plot, "figure")):
        if flag:
            lines.append(f"{what} written to {flag}")
    _emit(args, "\n".join(lines), lat.to_dict())
    return EXIT_OK


def cmd_admissible(args) -> int:
    d = _diagram(args)
    if args.suggest:
        A0 = suggest_a0(d)
        _emit(args, f"admissible A0 = {fmt_set(A0)}", {"A0": sorted(A0)})
        return EXIT_OK
    res = compute_pushout(d)
    rep = admissibility(d, res)
    u = u_codes(d, res)
    data = rep.to_dict()
    data["U"] = {k: {"H": sorted(c.H), "B": sorted(c.B)} for k, c in zip(("0", "1", "2", "12"), u)}
    lines = [f"admissible: {'yes' if rep.admissible else 'no'}"]
    lines += [f"  U({k}) = {c.label()}" for k, c in zip(("0", "1", "2", "12"), u)]
    lines.append(f"  A0 in A1 u A2: {rep.cond_b}  A0 = A12: {rep.cond_c}  "
                 f"singular split: {rep.cond_e}  I0 = I12: {rep.cond_ideal}")
    if rep.witness is not None:
        lines.append(f"  witness: {rep.witness}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if rep.admissible else EXIT_NO


def cmd_fock(args) -> int:
    rg = load_relative(args.graph)
    rep = build_rep(rg)
    blocks = block_decomposition(rg)
    problems = verify_ck(rep, rg)
    data = {"blocks": blocks, "dimension": sum(k * k for k in blocks.values()),
            "basis": [str(p) for p in rep.basis.paths],
            "relations": "ok" if not problems else [str(p) for p in problems]}
    lines = [f"basis size {rep.size}; blocks " +
             ", ".join(f"{v}:{k}" for v, k in blocks.items()),
             f"algebra dimension {data['dimension']}",
             "relations: ok" if not problems else f"relations: {problems[0]}"]
    if args.dump_matrices:
        lines.append(dump_matrices(rep).rstrip())
    _emit(args, "\n".join(lines), data)
    if problems:
        raise ConsistencyError(f"matrix model violates {problems[0]}")
    return EXIT_OK


def cmd_verify_pullback(args) -> int:
    d = _diagram(args)
    res = compute_pushout(d)
    rep = verify_pedersen(d, res)
    verdict = admissibility(d, res).admissible
    if verdict != rep.pullback:
        raise ConsistencyError("matrix-model verdict disagrees with admissibility")
    lines = [f"pullback: {'yes' if rep.pullback else 'no'}"]
    for k in ("0", "1", "2", "12"):
        lines.append(f"  I{k}: blocks {fmt_set(rep.supports[k])} dim {rep.dimensions[k]}")
    lines.append(f"  quotient TC*(F0, A12) dim {rep.quotient_dimension}")
    _emit(args, "\n".join(lines), rep.to_dict())
    return EXIT_OK if rep.pullback else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify vertices, optionally study a set H")
    p.add_argument("graph")
    p.add_argument("--H", help="comma-separated vertex set")
    p.add_argument("--plot", metavar="PATH", help="draw the graph to an image file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-morphism", help="is the inclusion SUB -> AMB a morphism?")
    p.add_argument("sub")
    p.add_argument("amb")
    p.set_defaults(func=cmd_check_morphism)

    for name, func, helptext in (
        ("pushout", cmd_pushout, "pushout of APEX -> LEFT, APEX -> RIGHT"),
        ("admissible", cmd_admissible, "does the pushout give a pullback of algebras?"),
        ("verify-pullback", cmd_verify_pullback, "check the pullback in the matrix model"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("apex")
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=func)
        if name == "pushout":
            p.add_argument("--out", metavar="PATH", help="write the pushout relative graph")
        if name == "admissible":
            p.add_argument("--suggest", action="store_true", help="print the admissible A0")

    p = sub.add_parser("ideals", help="gauge-invariant ideal lattice")
    p.add_argument("graph")
    p.add_argument("--A", help="comma-separated vertices where (TCK4) holds")
    p.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as DOT")
    p.add_argument("--plot", metavar="PATH", help="draw the Hasse diagram to an image file")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("fock", help="exact matrix model of a finite acyclic relative graph")
    p.add_argument("graph")
    p.add_argument("--dump-matrices", action="store_true")
    p.set_defaults(func=cmd_fock)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_BUG


def main() -> None:
    sys.exit(run())
