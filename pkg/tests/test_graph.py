import random

import pytest
from hypothesis import given, settings, strategies as st

from relgraph.errors import InputError
from relgraph.fixtures import chain, figure7, figure8, loop
from relgraph.graph import (
    INF,
    EdgeDecl,
    EdgeRef,
    Graph,
    Lasso,
    Path,
    breaking_vertices,
    complement_subgraph,
    d_reaches_cycle,
    enumerate_paths,
    hereditary_closure,
    infinite_receivers,
    is_hereditary,
    is_saturated,
    is_valid_path,
    lasso_violation,
    path_source,
    regular_vertices,
    singular_vertices,
    sources,
    validate_graph,
)
from relgraph.sampling import random_graph

import oracles


def sub(g, keep):
    keep = set(keep)
    return Graph(tuple(keep), tuple(d for d in g.edges if d.src in keep and d.rng in keep))


class TestValidate:
    def test_figure7_ok(self):
        assert validate_graph(figure7()) == []

    def test_empty_ok(self):
        assert validate_graph(Graph((), ())) == []

    def test_missing_endpoint(self):
        g = Graph(("u",), (EdgeDecl("e", "x", "u"),))
        problems = validate_graph(g)
        assert problems and "unresolved vertex" in problems[0]

    def test_duplicate_names(self):
        g = Graph(("u",), (EdgeDecl("e", "u", "u"), EdgeDecl("e", "u", "u")))
        assert validate_graph(g)


class TestVertexClasses:
    def test_figure7(self):
        g = figure7()
        assert regular_vertices(g) == set()
        assert infinite_receivers(g) == {"u"}
        assert sources(g) == {"v", "w"}

    def test_figure8_ambient_and_leg(self):
        g = figure8()
        assert regular_vertices(g) == set()
        assert regular_vertices(sub(g, "uv")) == {"u"}

    def test_loop(self):
        assert regular_vertices(loop()) == {"v"}

    def test_partition(self):
        g = figure8()
        assert regular_vertices(g) | singular_vertices(g) == g.vertex_set
        assert not regular_vertices(g) & singular_vertices(g)


class TestHereditary:
    def test_closure_examples(self):
        g = figure7()
        assert hereditary_closure(g, {"v"}) == {"v"}
        assert hereditary_closure(g, {"u"}) == {"u", "v", "w"}
        assert hereditary_closure(g, set()) == set()

    def test_saturation(self):
        F1 = sub(figure8(), "uv")
        assert is_saturated(F1, {"v"})
        c = chain()
        assert not is_saturated(c, {"v"})
        for g in (figure7(), figure8(), c, loop()):
            assert is_hereditary(g, g.vertex_set) and is_saturated(g, g.vertex_set)

    def test_complement(self):
        F = complement_subgraph(figure7(), {"v", "w"})
        assert F.vertices == ("u",) and [d.name for d in F.edges] == ["d"]
        assert complement_subgraph(figure7(), set()) == figure7()
        F1 = complement_subgraph(figure8(), {"w"})
        assert F1.vertex_set == {"u", "v"} and {d.name for d in F1.edges} == {"d", "e"}

    def test_complement_rejects_non_hereditary(self):
        with pytest.raises(InputError):
            complement_subgraph(figure7(), {"u"})

    def test_breaking(self):
        assert breaking_vertices(sub(figure7(), "uv"), {"v"}) == {"u"}
        assert breaking_vertices(sub(figure8(), "uv"), {"v"}) == set()
        assert breaking_vertices(figure7(), set()) == set()
        with pytest.raises(InputError):
            breaking_vertices(figure7(), {"u"})


class TestPaths:
    @staticmethod
    def names(paths):
        return {"".join(r.decl for r in p.steps) or p.root for p in paths}

    def test_chain(self):
        assert self.names(enumerate_paths(chain(), 2)) == {"u", "v", "e"}

    def test_loop(self):
        assert self.names(enumerate_paths(loop(), 3)) == {"v", "d", "dd", "ddd"}

    def test_max_len_zero(self):
        assert all(len(p) == 0 for p in enumerate_paths(figure7(), 0))

    def test_bundle_members(self):
        paths = enumerate_paths(figure7(), 1)
        refs = {str(p.steps[0]) for p in paths if len(p) == 1}
        assert {"d", "e[1]", "e[2]", "f[1]", "f[2]"} == refs

    def test_validity(self):
        g = figure7()
        assert is_valid_path(g, Path("u", (EdgeRef("d"), EdgeRef("e", 1))))
        assert path_source(g, Path("u", (EdgeRef("d"), EdgeRef("e", 1)))) == "v"
        assert not is_valid_path(g, Path("u", (EdgeRef("e", 1), EdgeRef("d"))))
        assert not is_valid_path(g, Path("u", (EdgeRef("e"),)))  # bundle member needs an index
        assert not is_valid_path(g, Path("u", (EdgeRef("d", 1),)))

    def test_lasso(self):
        g = figure7()
        assert lasso_violation(g, Lasso(Path("u"), Path("u", (EdgeRef("d"),)))) is None
        assert lasso_violation(g, Lasso(Path("u"), Path("u", (EdgeRef("e", 1),)))) is not None

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_oracle(self, seed):
        g = random_graph(random.Random(seed), max_vertices=5, max_edges=6)
        L = 3
        mine = sorted((p.root, tuple(r.key() for r in p.steps)) for p in enumerate_paths(g, L))
        ref = sorted((p.root, tuple((n, i or 0) for n, i in p.members))
                     for p in oracles.truncated_paths(g, L))
        assert mine == ref


class TestReachesCycle:
    def test_examples(self):
        assert d_reaches_cycle(loop(), "v", {"v"})
        assert not d_reaches_cycle(chain(), "u", {"u", "v"})
        assert d_reaches_cycle(figure7(), "u", {"u"})

    def test_start_outside_allowed(self):
        assert not d_reaches_cycle(loop(), "v", set())


graphs = st.integers(0, 10_000).map(lambda s: random_graph(random.Random(s), max_vertices=7, max_edges=10))


@settings(max_examples=150, deadline=None)
@given(graphs, st.data())
def test_reaches_cycle_matches_long_walk(g, data):
    allowed = data.draw(st.sets(st.sampled_from(g.vertices)))
    for v in g.vertices:
        expected = oracles.has_long_walk(g, v, allowed, len(g.vertices) + 1)
        assert d_reaches_cycle(g, v, allowed) == expected


@settings(max_examples=150, deadline=None)
@given(graphs, st.data())
def test_closure_is_least_hereditary_superset(g, data):
    S = data.draw(st.sets(st.sampled_from(g.vertices)))
    C = hereditary_closure(g, S)
    assert C == oracles.closure(g, S)
    assert is_hereditary(g, C) and S <= C
    assert hereditary_closure(g, C) == C


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_classes_partition_vertices(g):
    reg, src, inf = regular_vertices(g), sources(g), infinite_receivers(g)
    assert reg | src | inf == g.vertex_set
    assert not reg & src and not reg & inf and not src & inf
    assert reg == oracles.regular(g)


@settings(max_examples=100, deadline=None)
@given(graphs, st.data())
def test_breaking_vertices_definition(g, data):
    H = hereditary_closure(g, data.draw(st.sets(st.sampled_from(g.vertices))))
    F = complement_subgraph(g, H)
    assert not (F.vertex_set & H)
    B = breaking_vertices(g, H)
    assert B == regular_vertices(F) & singular_vertices(g)
    for v in B:
        # infinitely many from H, finitely many (nonzero) from outside
        assert any(d.card == INF and d.src in H for d in g.received(v))
        assert any(d.src not in H for d in g.received(v))
