"""Strategies for both games, addressable by name.

``make_strategy(name, graph, side)`` builds a fresh instance; ``STRATEGIES``
lists the names the CLI accepts and which side each one plays.
"""

from __future__ import annotations

from ..errors import ParameterError
from .bipartite import BipartiteB, bipartite_B_strategy
from .breaker_complete import BreakerComplete, breaker_complete_strategy, verify_breaker_complete
from .breaker_cycle import BreakerCycle, breaker_cycle_strategy
from .breaker_path import BreakerPath, breaker_path_strategy
from .duplicator import ThresholdDuplicator, duplicator_cycle_strategy, duplicator_path_strategy
from .heuristics import AdversarialRandomA, GreedyCopyB, RandomStrategy, heuristic_opponents
from .mirror import MirrorStrategy, mirror_strategy
from .translated import TranslatedStrategy, translated_for, translated_strategy


def _optimal(g, side, variant="sym", **kw):
    from ..solver import optimal_strategy

    return optimal_strategy(g, side, variant, **kw)


# name -> (sides it can play, factory(graph, side, **kw))
STRATEGIES = {
    "mirror": ("B", lambda g, side, **kw: mirror_strategy(g, **kw)),
    "translated": ("B", lambda g, side, **kw: translated_for(g)),
    "breaker-path": ("A", lambda g, side, **kw: BreakerPath(**kw)),
    "breaker-cycle": ("A", lambda g, side, **kw: BreakerCycle(**kw)),
    "breaker-kn": ("A", lambda g, side, **kw: BreakerComplete(**kw)),
    "bipartite-b": ("B", lambda g, side, **kw: BipartiteB()),
    "optimal": ("AB", _optimal),
    "random": ("AB", lambda g, side, **kw: RandomStrategy(**kw)),
    "greedy-copy": ("B", lambda g, side, **kw: GreedyCopyB()),
    "adversarial-random": ("A", lambda g, side, **kw: AdversarialRandomA(**kw)),
}


def make_strategy(name: str, graph, side: str, **kw):
    if name not in STRATEGIES:
        raise ParameterError(f"unknown strategy {name!r}; known: {', '.join(STRATEGIES)}")
    sides, factory = STRATEGIES[name]
    if side not in sides:
        raise ParameterError(f"strategy {name!r} plays side {sides}, not {side}")
    return factory(graph, side, **kw)


__all__ = [
    "STRATEGIES", "make_strategy", "heuristic_opponents",
    "MirrorStrategy", "mirror_strategy", "TranslatedStrategy", "translated_strategy", "translated_for",
    "BreakerPath", "breaker_path_strategy", "BreakerCycle", "breaker_cycle_strategy",
    "BreakerComplete", "breaker_complete_strategy", "verify_breaker_complete",
    "BipartiteB", "bipartite_B_strategy", "ThresholdDuplicator", "duplicator_path_strategy",
    "duplicator_cycle_strategy", "RandomStrategy", "GreedyCopyB", "AdversarialRandomA",
]
