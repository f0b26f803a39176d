"""Partially commutative Lyndon-Shirshov bases.

A commutation graph kills the bracket of each edge pair.  The oracle is
expansion in the trace algebra: monomials are normalized to the least
trace-equivalent sequence, and the partially commutative Lie algebra
embeds there, so equality of normalized expansions is equality.
"""

import itertools

import pytest

from oracles import expand, expand_comb
from rblie.expr import parse_word
from rblie.lincomb import LinComb
from rblie.pcls import (
    CommGraph,
    LSContext,
    PCLSContext,
    enum_ls,
    enum_pcls,
    format_graph,
    is_pcls,
    lie_mult,
    load_graph,
    parse_graph_text,
    pc_mult,
)
from rblie.terms import Alphabet


@pytest.fixture
def path_abc(abc):
    # a - b - c
    return CommGraph(abc.names, [("a", "b"), ("b", "c")])


@pytest.fixture
def edge_ab(abc):
    return CommGraph(abc.names, [("a", "b")])


class TestCommGraph:
    def test_edges_are_unordered(self, abc):
        g = CommGraph(abc.names, [("b", "a")])
        assert g.adjacent("a", "b")
        assert g.adjacent("b", "a")
        assert not g.adjacent("a", "c")

    def test_loop_rejected(self, abc):
        with pytest.raises(ValueError):
            CommGraph(abc.names, [("a", "a")])

    def test_unknown_vertex_rejected(self, abc):
        with pytest.raises(ValueError):
            CommGraph(abc.names, [("a", "z")])

    def test_complete(self, abc):
        g = CommGraph.complete(abc)
        assert len(g.edges) == 3

    def test_empty(self, abc):
        assert CommGraph.empty(abc).edges == frozenset()


class TestGraphFiles:
    def test_parse_and_format_roundtrip(self, abc):
        text = "# three vertices, one path\nedge b c\n\nedge a b\n"
        g = parse_graph_text(text, abc)
        assert g.edges == CommGraph(abc.names, [("a", "b"), ("b", "c")]).edges
        canonical = format_graph(g)
        assert canonical == "edge a b\nedge b c\n"
        again = parse_graph_text(canonical, abc)
        assert again.edges == g.edges
        assert format_graph(again) == canonical

    def test_malformed_line_reports_number(self, abc):
        with pytest.raises(ValueError, match="line 2"):
            parse_graph_text("edge a b\nedge a\n", abc)

    def test_unknown_name_reports_number(self, abc):
        with pytest.raises(ValueError, match="line 1"):
            parse_graph_text("edge a z\n", abc)

    def test_load_demo_graph(self, abc):
        g = load_graph("demos/graphs/path.graph", abc)
        assert g.adjacent("a", "b")
        assert not g.adjacent("b", "c")

    def test_empty_file_is_empty_graph(self, abc):
        assert parse_graph_text("", abc).edges == frozenset()


class TestMembership:
    def test_edge_bracket_not_admissible(self, abc, edge_ab):
        assert not is_pcls(parse_word("[a,b]", abc), abc, edge_ab)
        assert is_pcls(parse_word("[a,c]", abc), abc, edge_ab)
        assert is_pcls(parse_word("[b,c]", abc), abc, edge_ab)

    def test_one_nonadjacent_left_letter_saves_a_node(self, abc, edge_ab):
        # [[a,c],b]: the head of the right half is b; a commutes with it
        # but c does not, and one witness letter is enough
        assert is_pcls(parse_word("[[a,c],b]", abc), abc, edge_ab)
        # [a,[b,c]]: the only left letter commutes with the head b
        assert not is_pcls(parse_word("[a,[b,c]]", abc), abc, edge_ab)

    def test_still_requires_ls_shape(self, abc, edge_ab):
        assert not is_pcls(parse_word("[b,a]", abc), abc, edge_ab)
        assert not is_pcls(parse_word("[c,[a,b]]", abc), abc, edge_ab)


class TestEnumeration:
    def test_single_edge_degree_two(self, abc, edge_ab):
        got = [str(w) for w in enum_pcls(abc, edge_ab, 2)]
        assert got == ["a", "[a,c]", "b", "[b,c]", "c"]

    def test_complete_graph_keeps_letters_only(self, abc):
        got = enum_pcls(abc, CommGraph.complete(abc), 5)
        assert got == list(abc.gens())

    def test_empty_graph_matches_free_basis(self, abc):
        assert enum_pcls(abc, CommGraph.empty(abc), 5) == enum_ls(abc, 5)

    def test_admissible_words_shrink_with_edges(self, abc, path_abc):
        free = set(enum_ls(abc, 4))
        constrained = set(enum_pcls(abc, path_abc, 4))
        assert constrained < free


class TestProduct:
    def test_adjacent_letters_bracket_to_zero(self, abc, path_abc):
        ctx = PCLSContext(abc, path_abc)
        a, b, c = abc.gens()
        assert pc_mult(ctx, a, b) == LinComb()
        assert pc_mult(ctx, c, b) == LinComb()
        assert pc_mult(ctx, a, c) == LinComb.single(parse_word("[a,c]", abc))

    def test_frozen_zero_product(self, abc, path_abc):
        # [[a,c],b] = [[a,b],c] + [a,[c,b]] and both pieces die
        ctx = PCLSContext(abc, path_abc)
        u = parse_word("[a,c]", abc)
        assert pc_mult(ctx, u, abc.gen("b")) == LinComb()

    def test_empty_graph_agrees_with_free_product(self, abc):
        pctx = PCLSContext(abc, CommGraph.empty(abc))
        lctx = LSContext(abc)
        words = enum_ls(abc, 4)
        for u, v in itertools.product(words, repeat=2):
            if u.deg + v.deg > 6:
                continue
            assert pc_mult(pctx, u, v) == lie_mult(lctx, u, v)


def _graphs(abc):
    return {
        "empty": CommGraph.empty(abc),
        "path": CommGraph(abc.names, [("a", "b"), ("b", "c")]),
        "complete": CommGraph.complete(abc),
    }


@pytest.fixture(params=["empty", "path", "complete"])
def graph_ctx(request, abc):
    return PCLSContext(abc, _graphs(abc)[request.param])


class TestIdentities:
    def test_matches_trace_algebra(self, abc, graph_ctx):
        graph = graph_ctx.graph

        def commutes(x, y):
            return graph.adjacent(x.name, y.name)

        words = enumerate_words(graph_ctx, 5)
        for u, v in itertools.product(words, repeat=2):
            if u.deg + v.deg > 6:
                continue
            got = expand_comb(pc_mult(graph_ctx, u, v), commutes)
            pu = expand(u, commutes)
            pv = expand(v, commutes)
            assert got == (pu * pv - pv * pu).normalized(commutes), (u, v)

    def test_anticommutativity(self, abc, graph_ctx):
        words = enumerate_words(graph_ctx, 6)
        for u, v in itertools.product(words, repeat=2):
            if u.deg + v.deg > 7:
                continue
            total = pc_mult(graph_ctx, u, v) + pc_mult(graph_ctx, v, u)
            assert total.is_zero, (u, v)

    def test_jacobi(self, abc, graph_ctx):
        words = enumerate_words(graph_ctx, 5)
        for u, v, w in itertools.product(words, repeat=3):
            if u.deg + v.deg + w.deg > 7:
                continue
            total = graph_ctx.mult_comb(pc_mult(graph_ctx, u, v), w)
            total += graph_ctx.mult_comb(pc_mult(graph_ctx, v, w), u)
            total += graph_ctx.mult_comb(pc_mult(graph_ctx, w, u), v)
            assert total.is_zero, (u, v, w)

    def test_closure(self, abc, graph_ctx):
        words = enumerate_words(graph_ctx, 4)
        for u, v in itertools.product(words, repeat=2):
            if u.deg + v.deg > 6:
                continue
            for w in pc_mult(graph_ctx, u, v):
                assert graph_ctx.is_basis_word(w)
                assert w.deg == u.deg + v.deg


def enumerate_words(ctx, max_deg):
    return enum_pcls(ctx.alphabet, ctx.graph, max_deg)
