import itertools

import pytest
from hypothesis import given, settings, strategies as st

from coplex.auxgraph import (PATH, TRIANGLE, VERTEX, aux_cliques_by_formula,
                             build_aux_by_twins, build_aux_direct, co3plex_to_stable,
                             stable_to_co3plex, twin_and_contract)
from coplex.chordal import is_chordal, maximal_cliques_chordal, maximal_cliques_general
from coplex.graph import CapExceeded, Graph, generate_random_chordal
from coplex.structures import Co3Plex, enumerate_co3plexes, enumerate_stable_sets

from conftest import C, K, P3, PAW

f = frozenset


def node_family(a, cliques, offset=0):
    return {f(a.nodes[i - offset] for i in k) for k in cliques}


chordal_graphs = st.builds(generate_random_chordal, st.integers(1, 7),
                           st.sampled_from([0.3, 0.6, 1.0]), st.integers(0, 10**6))


class TestDirect:
    def test_p3(self):
        a = build_aux_direct(P3())
        assert a.nodes == (f({1}), f({2}), f({3}), f({1, 2}), f({1, 2, 3}), f({2, 3}))
        assert a.kinds == (VERTEX,) * 3 + (PATH,) * 3
        every = {f(e) for e in itertools.combinations(a.nodes, 2)}
        assert a.labeled_edges() == every - {f((f({1}), f({3})))}

    def test_single_edge(self):
        a = build_aux_direct(Graph.from_edges(2, [(1, 2)]))
        assert len(a.nodes) == 3 and len(a.labeled_edges()) == 3

    def test_k3(self):
        a = build_aux_direct(K(3))
        assert len(a.nodes) == 7 and len(a.labeled_edges()) == 21
        assert a.kinds.count(TRIANGLE) == 1

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_aux_direct(K(4), cap=5)

    @settings(max_examples=40, deadline=None)
    @given(chordal_graphs)
    def test_adjacency_invariant(self, g):
        a = build_aux_direct(g)
        for i, j in itertools.combinations(range(len(a.nodes)), 2):
            union = a.nodes[i] | a.nodes[j]
            # connected iff some edge or shared vertex joins the two connected parts
            joined = bool(a.nodes[i] & a.nodes[j]) or any(
                g.has_edge(u, v) for u in a.nodes[i] for v in a.nodes[j])
            assert (j in a.adjacency[i]) == joined, union


class TestTwins:
    def test_fig1c_intermediate(self):
        h = twin_and_contract(P3(), f({1, 2}))
        assert h.n == 4 and h.label(4) == f({1, 2})
        assert h.neighbors(4) == {1, 2, 3}

    def test_fig1d_intermediate(self):
        h = twin_and_contract(twin_and_contract(P3(), f({1, 2})), f({2, 3}))
        assert h.label(5) == f({2, 3})
        assert h.neighbors(5) == {1, 2, 3, 4}

    @pytest.mark.parametrize("g", [P3(), K(3), PAW(), C(4), C(5)], ids=["P3", "K3", "paw", "C4", "C5"])
    def test_matches_direct(self, g):
        assert build_aux_by_twins(g).labeled_edges() == build_aux_direct(g).labeled_edges()

    def test_disconnected_member(self):
        with pytest.raises(ValueError):
            twin_and_contract(P3(), f({1, 3}))

    @settings(max_examples=30, deadline=None)
    @given(chordal_graphs)
    def test_random_matches_direct(self, g):
        assert build_aux_by_twins(g).labeled_edges() == build_aux_direct(g).labeled_edges()


class TestBijection:
    def test_whole_path(self):
        a = build_aux_direct(P3())
        c = stable_to_co3plex(a, {a.index()[f({1, 2, 3})]})
        assert c.s == (1, 2, 3) and c.components == ((1, 2, 3),)

    def test_empty(self):
        a = build_aux_direct(P3())
        assert stable_to_co3plex(a, set()).s == ()
        assert co3plex_to_stable(a, ()) == f()

    def test_two_singletons(self):
        a = build_aux_direct(P3())
        c = stable_to_co3plex(a, {0, 2})
        assert c.s == (1, 3) and c.components == ((1,), (3,))
        assert co3plex_to_stable(a, c) == {0, 2}

    def test_rejects_non_stable(self):
        a = build_aux_direct(P3())
        with pytest.raises(ValueError):
            stable_to_co3plex(a, {0, 1})

    def test_rejects_non_co3plex(self):
        a = build_aux_direct(K(4))
        with pytest.raises(ValueError):
            co3plex_to_stable(a, (1, 2, 3, 4))

    def test_hole_component_has_no_node(self):
        a = build_aux_direct(C(4))
        with pytest.raises(ValueError, match="neither"):
            co3plex_to_stable(a, Co3Plex.from_set(C(4), (1, 2, 3, 4)))

    @settings(max_examples=40, deadline=None)
    @given(chordal_graphs)
    def test_counts_and_inverse(self, g):
        a = build_aux_direct(g)
        stables = enumerate_stable_sets(a.to_graph())
        plexes = enumerate_co3plexes(g)
        assert len(stables) == len(plexes)
        images = set()
        for st_ in stables:
            ss = f(v - 1 for v in st_)
            c = stable_to_co3plex(a, ss)
            assert co3plex_to_stable(a, c) == ss
            images.add(c.s)
        assert images == set(plexes)


class TestCliqueFormula:
    def test_p3(self):
        a = build_aux_direct(P3())
        cs = maximal_cliques_chordal(P3())
        fam = node_family(a, aux_cliques_by_formula(P3(), cs, a))
        assert fam == {f({f({1}), f({2}), f({1, 2}), f({2, 3}), f({1, 2, 3})}),
                       f({f({2}), f({3}), f({1, 2}), f({2, 3}), f({1, 2, 3})})}

    def test_k3(self):
        a = build_aux_direct(K(3))
        cs = aux_cliques_by_formula(K(3), maximal_cliques_chordal(K(3)), a)
        assert len(cs) == 1 and len(cs[0]) == 7

    def test_non_chordal(self):
        a = build_aux_direct(C(4))
        with pytest.raises(ValueError):
            aux_cliques_by_formula(C(4), maximal_cliques_general(C(4)), a)

    @settings(max_examples=40, deadline=None)
    @given(chordal_graphs)
    def test_equals_enumeration(self, g):
        a = build_aux_direct(g)
        formula = node_family(a, aux_cliques_by_formula(g, maximal_cliques_chordal(g), a))
        enumerated = node_family(a, maximal_cliques_general(a.to_graph()), offset=1)
        assert formula == enumerated


@pytest.mark.parametrize("g, chordal", [(P3(), True), (K(4), True), (PAW(), True),
                                        (C(4), False), (C(5), False), (C(6), False)])
def test_chordality_preserved(g, chordal):
    assert is_chordal(g) == chordal
    assert is_chordal(build_aux_direct(g).to_graph()) == chordal
