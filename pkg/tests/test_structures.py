import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coplex.graph import CapExceeded, Graph, generate_random_chordal
from coplex.structures import (ComponentCatalog, Co3Plex, brute_force_max_co3plex,
                               enumerate_co3plexes, enumerate_induced_paths,
                               enumerate_stable_sets, enumerate_triangles, induces_path,
                               induces_triangle, is_co3plex)

from conftest import C, K, P3, PAW, make


def all_subsets(g):
    for size in range(g.n + 1):
        yield from itertools.combinations(g.vertices, size)


def path_like(g, s):
    """Independent path test: a spanning walk visiting every vertex once along edges,
    with no other edges inside ``s``."""
    s = tuple(s)
    if len(s) < 2:
        return False
    inner = sum(1 for u, v in itertools.combinations(s, 2) if g.has_edge(u, v))
    if inner != len(s) - 1:
        return False
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
               for p in itertools.permutations(s))


chordal_graphs = st.builds(generate_random_chordal, st.integers(1, 8),
                           st.sampled_from([0.3, 0.6, 1.0]), st.integers(0, 10**6))


class TestCo3Plex:
    def test_c4_whole(self):
        assert is_co3plex(C(4), [1, 2, 3, 4])

    def test_k4_whole(self):
        assert not is_co3plex(K(4), [1, 2, 3, 4])

    def test_star(self):
        assert not is_co3plex(make(4, [(1, 2), (1, 3), (1, 4)]), [1, 2, 3, 4])

    def test_components(self):
        c = Co3Plex.from_set(PAW(), [4, 1, 2])
        assert c.s == (1, 2, 4) and c.components == ((1, 2), (4,))


class TestTriangles:
    def test_k4(self):
        assert enumerate_triangles(K(4)) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    def test_p3(self):
        assert enumerate_triangles(P3()) == []

    def test_paw(self):
        brute = [s for s in itertools.combinations(PAW().vertices, 3) if induces_triangle(PAW(), s)]
        assert enumerate_triangles(PAW()) == brute == [(1, 2, 3)]


class TestInducedPaths:
    def test_p3(self):
        keys = {tuple(sorted(p)) for p in enumerate_induced_paths(P3())}
        assert keys == {(1, 2), (2, 3), (1, 2, 3)}
        assert keys == {s for s in all_subsets(P3()) if path_like(P3(), s)}

    def test_k3(self):
        assert enumerate_induced_paths(K(3)) == [(1, 2), (1, 3), (2, 3)]

    def test_single_vertex(self):
        assert enumerate_induced_paths(Graph(1, frozenset())) == []

    def test_orientation(self):
        for p in enumerate_induced_paths(C(6)):
            assert p[0] < p[-1]

    def test_cap(self):
        with pytest.raises(CapExceeded, match="cap of 5"):
            enumerate_induced_paths(K(5), cap=5)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(1, 7), st.floats(0, 1), st.randoms(use_true_random=False))
    def test_exactly_the_induced_paths(self, n, p, rng):
        g = make(n, [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])
        paths = enumerate_induced_paths(g)
        keys = [tuple(sorted(q)) for q in paths]
        assert len(keys) == len(set(keys))
        assert set(keys) == {s for s in all_subsets(g) if path_like(g, s)}
        for q in paths:
            assert all(g.has_edge(a, b) for a, b in zip(q, q[1:]))
            assert induces_path(g, q)


class TestStableSets:
    def test_k3(self):
        assert len(enumerate_stable_sets(K(3))) == 4

    def test_two_isolated(self):
        assert enumerate_stable_sets(Graph(2, frozenset())) == [(), (1,), (1, 2), (2,)]

    def test_k6_minus_edge(self):
        g = make(6, [e for e in itertools.combinations(range(1, 7), 2) if e != (1, 3)])
        sets = enumerate_stable_sets(g)
        assert len(sets) == 8 and (1, 3) in sets

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_stable_sets(Graph(5, frozenset()), cap=10)

    @given(chordal_graphs)
    def test_against_subsets(self, g):
        brute = [s for s in all_subsets(g)
                 if not any(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))]
        assert enumerate_stable_sets(g) == sorted(brute)


class TestBruteForce:
    def test_p3(self):
        c, v = brute_force_max_co3plex(P3())
        assert c.s == (1, 2, 3) and v == 3

    def test_k4(self):
        _, v = brute_force_max_co3plex(K(4))
        assert v == 3

    def test_k4_weighted(self):
        c, v = brute_force_max_co3plex(K(4).with_weights([5, 1, 1, 1]))
        assert v == 7 and c.s == (1, 2, 3)

    def test_negative_weights(self):
        c, v = brute_force_max_co3plex(P3().with_weights([-1, -2, -3]))
        assert c.s == () and v == 0

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_force_max_co3plex(Graph(30, frozenset()))

    @given(chordal_graphs)
    def test_co3plexes_against_subsets(self, g):
        assert enumerate_co3plexes(g) == sorted(s for s in all_subsets(g) if is_co3plex(g, s))

    @given(chordal_graphs, st.data())
    def test_monotone_in_weights(self, g, data):
        w = data.draw(st.lists(st.integers(-3, 9), min_size=g.n, max_size=g.n))
        v = data.draw(st.integers(1, g.n))
        bump = data.draw(st.fractions(0, 5))
        _, before = brute_force_max_co3plex(g.with_weights(w))
        w2 = list(map(Fraction, w))
        w2[v - 1] += bump
        _, after = brute_force_max_co3plex(g.with_weights(w2))
        assert after >= before

    @settings(max_examples=60, deadline=None)
    @given(chordal_graphs)
    def test_components_are_paths_or_triangles(self, g):
        cat = ComponentCatalog.of(g)
        members = set(cat.triangles) | set(cat.path_keys())
        for s in enumerate_co3plexes(g):
            for comp in Co3Plex.from_set(g, s).components:
                assert len(comp) == 1 or tuple(comp) in members
