"""Graph construction, parsing and the isomorphism test against brute force."""

import random

import pytest
from hypothesis import given, strategies as st

from symgame.errors import ParameterError
from symgame.graphs import (Graph, automorphisms, canonical_key, find_involutory_fixed_edge_free_automorphism,
                            from_display, is_automorphism, make_graph, parse_graph_spec, subgraphs_isomorphic,
                            to_display)
from symgame.oracles import all_graphs, brute_force_canonical, brute_force_isomorphic


def test_families_have_standard_numbering():
    p = make_graph("path", 4)
    assert p.vertex_count == 5 and p.edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    c = make_graph("cycle", 5)
    assert c.edges[-1] == (4, 0)
    assert make_graph("complete", 5).edge_count == 10
    assert make_graph("complete_bipartite", 2, 3).edge_count == 6


@pytest.mark.parametrize("spec,name", [("P5", "P5"), ("C7", "C7"), ("K6", "K6"), ("K3,3", "K3,3"), ("K_{3,5}", "K3,5")])
def test_parse_graph_spec(spec, name):
    assert parse_graph_spec(spec).name == name


@pytest.mark.parametrize("bad", ["X5", "P", "Kx", "C2"])
def test_parse_graph_spec_rejects(bad):
    with pytest.raises(ParameterError):
        parse_graph_spec(bad)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ParameterError):
        Graph(3, ((0, 0),))
    with pytest.raises(ParameterError):
        Graph(3, ((0, 1), (1, 0)))


def test_display_is_one_based():
    assert to_display(0) == 1 and from_display(1) == 0


def test_involution_found_exactly_when_expected():
    assert find_involutory_fixed_edge_free_automorphism(make_graph("path", 6)) is not None
    assert find_involutory_fixed_edge_free_automorphism(make_graph("path", 5)) is None
    assert find_involutory_fixed_edge_free_automorphism(make_graph("cycle", 6)) is not None


def test_automorphism_counts():
    assert len(automorphisms(make_graph("cycle", 6))) == 12
    assert len(automorphisms(make_graph("complete", 4))) == 24
    assert all(is_automorphism(make_graph("path", 4), p) for p in automorphisms(make_graph("path", 4)))


@st.composite
def graph_and_two_subsets(draw):
    g = draw(st.sampled_from([h for h in all_graphs(6) if h.edge_count >= 1]))
    k = draw(st.integers(0, g.edge_count))
    e1 = draw(st.sets(st.integers(0, g.edge_count - 1), min_size=k, max_size=k))
    e2 = draw(st.sets(st.integers(0, g.edge_count - 1), min_size=k, max_size=k))
    return g, e1, e2


@given(graph_and_two_subsets())
def test_subgraphs_isomorphic_matches_brute_force(case):
    g, e1, e2 = case
    assert subgraphs_isomorphic(g, e1, e2) == brute_force_isomorphic(g, e1, e2)


@given(st.integers(1, 12), st.data())
def test_linear_fast_path_matches_brute_force(n, data):
    g = make_graph("path", n) if data.draw(st.booleans()) or n < 3 else make_graph("cycle", n)
    k = data.draw(st.integers(0, n // 2))
    e1 = data.draw(st.sets(st.integers(0, n - 1), min_size=k, max_size=k))
    e2 = data.draw(st.sets(st.integers(0, n - 1), min_size=k, max_size=k))
    if max(len({v for e in s for v in g.edges[e]}) for s in (e1, e2)) <= 7:
        assert subgraphs_isomorphic(g, e1, e2) == brute_force_isomorphic(g, e1, e2)


def test_canonical_key_is_invariant_under_automorphisms():
    g = make_graph("cycle", 6)
    rng = random.Random(3)
    for _ in range(40):
        edges = rng.sample(range(6), 4)
        red, blue = set(edges[:2]), set(edges[2:])
        for perm in automorphisms(g):
            img = lambda s: {g.edge_index[(perm[a], perm[b])] for a, b in (g.edges[e] for e in s)}  # noqa: E731
            assert canonical_key(g, red, blue) == canonical_key(g, img(red), img(blue))


def test_brute_force_canonical_identifies_isomorphic_sets():
    g = make_graph("complete", 4)
    # a triangle and another triangle, a path of length 3 vs a star
    assert brute_force_canonical(g, [0, 1, 3]) == brute_force_canonical(g, [3, 4, 5])
    assert brute_force_canonical(g, [0, 3, 5]) != brute_force_canonical(g, [0, 1, 2])
