"""Referee behaviour: legality, outcomes, transcripts and terminal play."""

import json

import pytest

from symgame.engine import (ScriptedStrategy, SymState, dump_transcript, interactive_play, play_ef, play_sym,
                            replay_transcript)
from symgame.errors import ParameterError
from symgame.graphs import make_graph
from symgame.solver import OptimalDuplicator, OptimalSpoiler, solve_ef
from symgame.strategies import RandomStrategy, mirror_strategy, translated_for


def test_illegal_move_loses_for_the_mover():
    g = make_graph("path", 4)
    out, tr = play_sym(g, ScriptedStrategy([0]), ScriptedStrategy([0]))
    assert (out.winner, out.reason, out.illegal_by) == ("A", "illegal_move", "B")
    out, _ = play_sym(g, ScriptedStrategy([9]), ScriptedStrategy([]))
    assert (out.winner, out.illegal_by) == ("B", "A")


def test_broken_isomorphism_ends_the_game():
    g = make_graph("path", 4)
    # red {1}, blue {2}: two single edges, fine; red {1,3} vs blue {2,4}: both two single edges... end edge
    out, _ = play_sym(g, ScriptedStrategy([0, 1]), ScriptedStrategy([3, 2]))
    assert out.survived_rounds == 2 and out.winner == "B"
    out, _ = play_sym(g, ScriptedStrategy([0, 1]), ScriptedStrategy([2, 3]))
    assert out.winner == "B"  # {0,1} ~ {2,3}: both P_2
    out, _ = play_sym(make_graph("path", 6), ScriptedStrategy([0, 1]), ScriptedStrategy([3, 5]))
    assert (out.survived_rounds, out.winner, out.reason) == (1, "A", "isomorphism_broken")


def test_round_limit_gives_no_winner():
    g = make_graph("path", 10)
    out, tr = play_sym(g, RandomStrategy(), mirror_strategy(g), round_limit=2, seed=1)
    assert out.winner is None and out.reason == "round_limit" and tr["round_limit"] == 2


def test_transcript_is_one_based_and_replays():
    g = make_graph("path", 9)
    out, tr = play_sym(g, RandomStrategy(), translated_for(g), seed=4)
    assert all(1 <= r["a_edge"] <= 9 for r in tr["rounds"])
    assert replay_transcript(dump_transcript(tr)) == out


def test_same_seed_same_transcript():
    g = make_graph("cycle", 9)
    runs = [dump_transcript(play_sym(g, RandomStrategy(), RandomStrategy(), seed=7)[1]) for _ in range(2)]
    assert runs[0] == runs[1]


def test_sym_plus_requires_witness_extension():
    g = make_graph("path", 4)
    state = SymState(g, "sym_plus")
    for e in (0, 3):
        state.play(e)
    assert state.check_round()


def test_unknown_variant():
    with pytest.raises(ParameterError):
        SymState(make_graph("path", 2), "other")


def test_interactive_play_scripted_input():
    g = make_graph("path", 4)
    inputs = iter(["x", "7", "1", "2"])
    lines = []
    out, tr = interactive_play(g, "A", mirror_strategy(g), input_fn=lambda _: next(inputs), output_fn=lines.append)
    assert out.winner == "B" and out.survived_rounds == 2
    assert any("not an edge number" in s for s in lines)
    assert any("does not exist" in s for s in lines)


def test_interactive_play_quit_keeps_partial_transcript():
    g = make_graph("path", 6)
    inputs = iter(["3", "q"])
    out, tr = interactive_play(g, "A", mirror_strategy(g), input_fn=lambda _: next(inputs), output_fn=lambda s: None)
    assert tr["aborted"] == "quit" and len(tr["rounds"]) == 1 and out.winner is None
    json.dumps(tr)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_optimal_ef_players_realise_the_value(n):
    g0, g1 = make_graph("path", n), make_graph("path", n + 1)
    value = solve_ef(g0, g1).value
    out, _ = play_ef(g0, g1, OptimalSpoiler(), OptimalDuplicator())
    assert out.winner == "A" and out.survived_rounds == value
