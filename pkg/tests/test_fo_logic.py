"""First-order sentences: syntax, text form, evaluation and the Phi_k family."""

import random

import pytest
from hypothesis import given, strategies as st

from symgame.errors import CapabilityError, ParameterError
from symgame.fo_logic import (And, Edge, Eq, Exists, Forall, Iff, Implies, Not, Or, build_phi_k, edge_respecting_permutations,
                              evaluate, free_variables, is_closed, parse, quantifier_count, quantifier_depth,
                              random_sentence, sentence_pool, serialize)
from symgame.graphs import Graph, make_graph
from symgame.oracles import all_graphs


def naive(f, g, env):
    """Direct recursive reading of the semantics."""
    if isinstance(f, Edge):
        return env[f.y] in g.adjacency[env[f.x]]
    if isinstance(f, Eq):
        return env[f.x] == env[f.y]
    if isinstance(f, Not):
        return not naive(f.f, g, env)
    if isinstance(f, And):
        return all(naive(p, g, env) for p in f.parts)
    if isinstance(f, Or):
        return any(naive(p, g, env) for p in f.parts)
    if isinstance(f, Implies):
        return (not naive(f.a, g, env)) or naive(f.b, g, env)
    if isinstance(f, Iff):
        return naive(f.a, g, env) == naive(f.b, g, env)
    pick = all if isinstance(f, Forall) else any
    return pick(naive(f.body, g, {**env, f.var: x}) for x in range(g.vertex_count))


GRAPHS = all_graphs(4)


@given(st.integers(0, 10**6), st.integers(1, 4), st.sampled_from(GRAPHS))
def test_evaluate_matches_naive_semantics(seed, q, g):
    f = random_sentence(random.Random(seed), q)
    assert is_closed(f) and quantifier_count(f) == q
    assert evaluate(f, g) == naive(f, g, {})


@given(st.integers(0, 10**6), st.integers(1, 5))
def test_text_form_round_trips(seed, q):
    f = random_sentence(random.Random(seed), q)
    assert parse(serialize(f)) == f


def test_parse_known_sentence():
    f = parse("(forall x (exists y (E x y)))")
    assert f == Forall("x", Exists("y", Edge("x", "y")))
    assert evaluate(f, make_graph("cycle", 4))
    assert not evaluate(f, Graph(3, ((0, 1),)))


def test_free_variables_are_rejected():
    f = Exists("x", Edge("x", "y"))
    assert free_variables(f) == {"y"}
    with pytest.raises(ParameterError):
        evaluate(f, make_graph("path", 2))


def test_sentence_pool_is_seeded():
    assert sentence_pool(5, 3, seed=1) == sentence_pool(5, 3, seed=1)


def test_phi_k_shape():
    phi = build_phi_k(2)
    assert quantifier_count(phi) == 8 and quantifier_depth(phi) == 8 and is_closed(phi)
    assert len(edge_respecting_permutations(2)) == 8
    assert len(edge_respecting_permutations(3)) == 48


@pytest.mark.parametrize("g,k,expected", [
    (make_graph("path", 2), 1, True),
    (make_graph("path", 4), 2, True),
    (make_graph("cycle", 4), 2, True),
    (Graph(5, ((0, 1), (0, 2), (1, 2), (3, 4))), 2, False),  # triangle plus an edge: L = 1
    (Graph(5, ((0, 4), (1, 3), (2, 3), (3, 4))), 2, False),
])
def test_phi_k_examples(g, k, expected):
    assert evaluate(build_phi_k(k), g) is expected


def test_phi_k_limits():
    with pytest.raises(CapabilityError):
        build_phi_k(4)
    with pytest.raises(CapabilityError):
        evaluate(build_phi_k(3), make_graph("complete", 7), budget=10**6)
