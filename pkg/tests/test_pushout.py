import random

import pytest
from hypothesis import given, settings, strategies as st

from relgraph.errors import InputError
from relgraph.fixtures import degenerate_span, fan_span, figure7, figure7_span, figure8, figure8_span, loop
from relgraph.graph import EdgeDecl, Graph, INF, is_hereditary
from relgraph.pushout import Cocone, PushoutDiagram, a12, compute_pushout, mediating, validate_diagram
from relgraph.relative import InclusionMorphism, RelativeGraph, check_morphism
from relgraph.sampling import random_cocone, random_span


class TestComputePushout:
    def test_figure7(self):
        res = compute_pushout(figure7_span())
        assert res.colimit.graph == figure7() and res.colimit.A == set()
        assert res.leg1.complement == {"w"} and res.leg2.complement == {"v"}

    def test_figure8(self):
        res = compute_pushout(figure8_span())
        assert res.colimit.graph == figure8() and res.colimit.A == set()

    def test_degenerate(self):
        rg = RelativeGraph(loop(), {"v"})
        assert compute_pushout(degenerate_span(rg)).colimit == rg

    def test_A_formula(self):
        # A1 \ F0 survives, A1 n A2 survives, A1 n F0 alone does not
        d = fan_span(A0={"u"}, apex_edge=True)
        F1 = RelativeGraph(d.F1.graph, {"u"})
        F2 = RelativeGraph(d.F2.graph, {"u"})
        res = compute_pushout(PushoutDiagram.of(d.F0, F1, F2))
        assert res.colimit.A == {"u"}

    def test_stray_shared_vertex(self):
        F0 = RelativeGraph(Graph(("u",), ()))
        F1 = RelativeGraph(Graph(("u", "z"), ()))
        F2 = RelativeGraph(Graph(("u", "z"), ()))
        with pytest.raises(InputError, match="z"):
            compute_pushout(PushoutDiagram.of(F0, F1, F2))

    def test_bundle_cardinality_mismatch(self):
        F0 = RelativeGraph(Graph(("u", "v"), ()))
        F1 = RelativeGraph(Graph(("u", "v"), (EdgeDecl("e", "v", "u"),)))
        F2 = RelativeGraph(Graph(("u", "v"), (EdgeDecl("e", "v", "u", INF),)))
        assert validate_diagram(PushoutDiagram.of(F0, F1, F2))
        with pytest.raises(InputError):
            compute_pushout(PushoutDiagram.of(F0, F1, F2))

    def test_leg_not_morphism(self):
        d = figure8_span()
        bad = PushoutDiagram.of(d.F0.with_A(set()), d.F1, d.F2)  # (3) fails for leg 1
        with pytest.raises(InputError):
            compute_pushout(bad)


class TestMediating:
    def test_pushout_itself(self):
        d = figure8_span()
        res = compute_pushout(d)
        E = res.colimit
        phi = mediating(d, res, Cocone(E, InclusionMorphism(d.F1, E), InclusionMorphism(d.F2, E)))
        assert phi.sub == phi.amb == E

    def test_extra_isolated_vertex(self):
        d = figure8_span()
        res = compute_pushout(d)
        E = res.colimit
        G = RelativeGraph(Graph(E.graph.vertices + ("z",), E.graph.edges), E.A)
        phi = mediating(d, res, Cocone(G, InclusionMorphism(d.F1, G), InclusionMorphism(d.F2, G)))
        assert check_morphism(phi.sub, phi.amb) == []
        assert is_hereditary(G.graph, phi.complement)

    def test_disagreeing_targets(self):
        d = figure8_span()
        res = compute_pushout(d)
        E = res.colimit
        G = RelativeGraph(Graph(E.graph.vertices + ("z",), E.graph.edges), E.A)
        with pytest.raises(InputError):
            mediating(d, res, Cocone(G, InclusionMorphism(d.F1, G), InclusionMorphism(d.F2, E)))


class TestA12:
    def test_examples(self):
        assert a12(figure7_span()) == set()
        assert a12(figure8_span()) == {"u"}
        assert a12(fan_span()) == set()


spans = st.integers(0, 100_000).map(lambda s: random_span(random.Random(s)))


@settings(max_examples=200, deadline=None)
@given(spans)
def test_pushout_structure(d):
    assert validate_diagram(d) == []
    res = compute_pushout(d)
    E = res.colimit
    H1, H2 = res.leg1.complement, res.leg2.complement
    assert not H1 & H2
    assert E.graph.vertex_set == d.F1.graph.vertex_set | d.F2.graph.vertex_set
    assert {x.name for x in E.graph.edges} == {x.name for x in d.F1.graph.edges} | {x.name for x in d.F2.graph.edges}
    assert check_morphism(d.F1, E) == [] and check_morphism(d.F2, E) == []
    assert a12(d) <= d.F0.A


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 100_000))
def test_universal_property(seed):
    rng = random.Random(seed)
    d = random_span(rng)
    res = compute_pushout(d)
    cocone = random_cocone(rng, d, res)
    phi = mediating(d, res, cocone)
    assert check_morphism(phi.sub, phi.amb) == []
