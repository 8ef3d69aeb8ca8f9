"""Strategy behaviour on small cases, checked exhaustively where feasible."""

import math

import pytest

from symgame.engine import play_sym
from symgame.errors import ParameterError
from symgame.graphs import make_graph
from symgame.oracles import exhaustive_min_survival
from symgame.solver import optimal_strategy, solve_sym
from symgame.strategies import (STRATEGIES, AdversarialRandomA, BipartiteB, BreakerComplete, BreakerCycle,
                                BreakerPath, GreedyCopyB, RandomStrategy, make_strategy, mirror_strategy,
                                translated_for, verify_breaker_complete)
from symgame.strategies.bipartite import guaranteed_rounds
from symgame.strategies.breaker_complete import classify_position
from symgame.strategies.breaker_cycle import cycle_case
from symgame.strategies.breaker_path import compact_t, phi_step


# mirror -----------------------------------------------------------------

@pytest.mark.parametrize("spec", [("path", 4), ("path", 6), ("cycle", 4), ("cycle", 6), ("complete_bipartite", 2, 2)])
def test_mirror_survives_every_line(spec):
    g = make_graph(*spec)
    assert exhaustive_min_survival(g, lambda: mirror_strategy(g)) == g.edge_count // 2


def test_mirror_needs_an_involution():
    with pytest.raises(ParameterError):
        mirror_strategy(make_graph("path", 5))


# translated ---------------------------------------------------------------

@pytest.mark.parametrize("n", [9, 15, 33])
@pytest.mark.parametrize("seed", [0, 1])
def test_translated_beats_lower_bound_against_random(n, seed):
    g = make_graph("path", n)
    out, _ = play_sym(g, RandomStrategy(), translated_for(g), seed=seed)
    assert out.survived_rounds > 0.5 * math.log2(n - 1) - 1


def test_translated_on_cycles():
    g = make_graph("cycle", 17)
    out, _ = play_sym(g, AdversarialRandomA(), translated_for(g), seed=2)
    assert out.survived_rounds > 0.5 * math.log2(17) - 0.5


# path breaker ---------------------------------------------------------------

def test_phi_step():
    assert phi_step(101, 99) == 100 and phi_step(101, 51) == 76


def test_first_series_of_the_n101_example():
    """With t = 50 on P_101 the first series is 51..99 and s_2 = phi(99) = 100."""
    g = make_graph("path", 101)
    a = BreakerPath(t=50, strict=False)
    play_sym(g, a, translated_for(g))
    first, second = a.ledger.records[:2]
    assert (first.s, first.f) == (51, 99)
    assert first.a_moves == list(range(51, 100))
    assert second.a_moves[0] == 100


@pytest.mark.parametrize("n", [7, 9, 11, 13])
def test_path_breaker_beats_optimal_b(n):
    g = make_graph("path", n)
    out, _ = play_sym(g, BreakerPath(), optimal_strategy(g, "B"))
    assert out.winner == "A" and out.survived_rounds == solve_sym(g).value


@pytest.mark.parametrize("n", [17, 33, 65, 129])
@pytest.mark.parametrize("b", [GreedyCopyB, RandomStrategy])
def test_path_breaker_wins_within_bound(n, b):
    g = make_graph("path", n)
    a = BreakerPath(strict=False)
    out, _ = play_sym(g, a, b(), seed=3)
    assert out.winner == "A"
    assert out.survived_rounds <= 3.5 * math.log2(n) ** 2
    assert not a.ledger.enforced_violations


def test_path_breaker_rejects_even_n():
    g = make_graph("path", 8)
    with pytest.raises(ParameterError):
        BreakerPath().start(g, "A")


def test_compact_t_leaves_room():
    for n in range(9, 400, 2):
        t = compact_t(n)
        assert 3 <= t <= (n - 1) // 2


# cycle breaker -------------------------------------------------------------

def test_cycle_cases():
    assert cycle_case(3) == 1  # the n = 7 walk-through: longer gap of length 3
    assert cycle_case(4) == 2


@pytest.mark.parametrize("n", [7, 9, 11])
def test_cycle_breaker_beats_optimal_b(n):
    g = make_graph("cycle", n)
    out, _ = play_sym(g, BreakerCycle(), optimal_strategy(g, "B"))
    # L(C_7) = 3 = floor(7/2): there B survives everything, elsewhere A wins
    assert out.survived_rounds == solve_sym(g).value
    assert (out.winner == "A") == (out.survived_rounds < n // 2)


@pytest.mark.parametrize("n", [21, 65, 257])
def test_cycle_breaker_wins_against_translated(n):
    g = make_graph("cycle", n)
    out, _ = play_sym(g, BreakerCycle(), translated_for(g))
    assert out.winner == "A" and out.survived_rounds <= 3.5 * math.log2(n) ** 2


# K_n breaker -------------------------------------------------------------------

def test_k6_every_line_won_within_seven_moves():
    stats = verify_breaker_complete(6, reduce=True)
    assert stats["all_win"] and stats["latest_win"] <= 7
    assert None not in stats["positions"]


def test_k6_against_optimal_b():
    g = make_graph("complete", 6)
    out, _ = play_sym(g, BreakerComplete(), optimal_strategy(g, "B"))
    assert out.winner == "A" and out.survived_rounds <= 6


def test_classify_position_on_a_star_answered_by_a_star():
    g = make_graph("complete", 6)
    red = {g.edge_index[(0, i)] for i in (1, 2, 3)}
    blue = {g.edge_index[(5, i)] for i in (1, 2, 4)}
    assert classify_position(g, red, blue) in {1, 2, 3, 4, 5}


# bipartite ---------------------------------------------------------------------

def test_bipartite_guarantee_on_k33_against_optimal_a():
    g = make_graph("complete_bipartite", 3, 3)
    out, _ = play_sym(g, optimal_strategy(g, "A"), BipartiteB())
    assert out.survived_rounds >= guaranteed_rounds(3, 3) == 1


@pytest.mark.parametrize("seed", range(5))
def test_bipartite_guarantee_on_k55(seed):
    g = make_graph("complete_bipartite", 5, 5)
    out, _ = play_sym(g, RandomStrategy(), BipartiteB(), seed=seed)
    assert out.survived_rounds >= 2


def test_bipartite_rejects_even_sides():
    with pytest.raises(ParameterError):
        BipartiteB().start(make_graph("complete_bipartite", 2, 3), "B")


# registry ----------------------------------------------------------------------

def test_registry_names():
    for name in ("mirror", "translated", "breaker-path", "breaker-cycle", "breaker-kn", "bipartite-b",
                 "optimal", "random", "greedy-copy"):
        assert name in STRATEGIES


def test_registry_side_check():
    with pytest.raises(ParameterError):
        make_strategy("mirror", make_graph("path", 4), "A")
    with pytest.raises(ParameterError):
        make_strategy("nope", make_graph("path", 4), "A")


# EF duplicator ---------------------------------------------------------------------

@pytest.mark.parametrize("family,n", [("path", n) for n in range(2, 9)] + [("cycle", n) for n in range(3, 8)])
def test_threshold_duplicator_meets_its_guarantee_against_optimal_spoiler(family, n):
    from symgame.engine import play_ef
    from symgame.solver import OptimalSpoiler
    from symgame.strategies.duplicator import ThresholdDuplicator, ef_pair, guaranteed_rounds

    g0, g1 = ef_pair(family, n)
    out, _ = play_ef(g0, g1, OptimalSpoiler(vertex_budget=20), ThresholdDuplicator())
    assert out.survived_rounds >= guaranteed_rounds(g0, g1)
