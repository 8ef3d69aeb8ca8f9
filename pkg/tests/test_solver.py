"""Exact solvers against brute force and against each other."""

import pytest

from symgame.engine import play_sym
from symgame.errors import CapabilityError
from symgame.graphs import make_graph
from symgame.oracles import all_graphs, brute_force_value
from symgame.solver import (check_sym_ef_inequality, graphs_isomorphic, optimal_strategy, solve_ef, solve_sym)

SMALL = [g for g in all_graphs(5) if g.edge_count >= 2]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"v{g.vertex_count}e{g.edge_count}:{g.edges}")
def test_solver_matches_plain_minimax(g):
    assert solve_sym(g, fresh=True).value == brute_force_value(g)


@pytest.mark.parametrize("g", SMALL[::3], ids=lambda g: f"{g.edges}")
def test_reduction_does_not_change_values(g):
    assert solve_sym(g, reduction="none", fresh=True).value == solve_sym(g, fresh=True).value


@pytest.mark.parametrize("n,value", [(3, 1), (5, 2), (7, 2), (9, 3), (11, 4)])
def test_odd_path_values(n, value):
    assert solve_sym(make_graph("path", n)).value == value


@pytest.mark.parametrize("n,value", [(3, 1), (5, 2), (7, 3), (9, 3)])
def test_odd_cycle_values(n, value):
    assert solve_sym(make_graph("cycle", n)).value == value


def test_k33_and_k6():
    assert solve_sym(make_graph("complete_bipartite", 3, 3)).value == 3
    assert solve_sym(make_graph("complete", 6)).value == 3


def test_sym_plus_can_be_strictly_shorter():
    g = make_graph("path", 11)
    assert solve_sym(g, variant="sym_plus").value == 3 < solve_sym(g).value


@pytest.mark.parametrize("spec", [("path", 7), ("cycle", 7), ("complete", 4)])
def test_optimal_players_realise_the_value(spec):
    g = make_graph(*spec)
    value = solve_sym(g).value
    out, _ = play_sym(g, optimal_strategy(g, "A"), optimal_strategy(g, "B"))
    assert out.survived_rounds == value


def test_edge_budget_is_a_capability_error():
    with pytest.raises(CapabilityError):
        solve_sym(make_graph("path", 40))


@pytest.mark.parametrize("n,value", [(2, 1), (3, 2), (4, 2), (5, 2), (6, 3), (7, 3)])
def test_ef_path_values(n, value):
    assert solve_ef(make_graph("path", n), make_graph("path", n + 1)).value == value


def test_ef_isomorphic_graphs_never_end():
    assert graphs_isomorphic(make_graph("cycle", 5), make_graph("cycle", 5))
    g = make_graph("cycle", 5)
    assert solve_ef(g, g, round_limit=4).value == 4


def test_ef_without_reduction_agrees():
    g0, g1 = make_graph("cycle", 5), make_graph("cycle", 6)
    assert solve_ef(g0, g1, reduction=False).value == solve_ef(g0, g1).value


def test_inequality_report():
    r = check_sym_ef_inequality(make_graph("path", 5), make_graph("cycle", 5))
    assert r["logical_holds"]
