"""Baseline opponents used for large-n simulation.

All of them are deterministic given the seed passed to ``start``.
"""

from __future__ import annotations

import random

from ..engine import Strategy
from ..errors import CapabilityError
from ..graphs import Graph, edge_permutation, find_involutory_fixed_edge_free_automorphism, iso_preserving_replies

INVOLUTION_SEARCH_LIMIT = 12


class RandomStrategy(Strategy):
    """Uniformly random legal move.

    For B the draw is restricted to isomorphism-keeping replies whenever one
    exists (``keep_iso``), otherwise the opponent would lose in round one and
    tell us nothing.
    """

    name = "random"

    def __init__(self, keep_iso: bool = True):
        self.keep_iso = keep_iso

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        self.rng = random.Random(f"{seed}:{side}:random")

    def move(self, state):
        if state.to_move == "B" and self.keep_iso:
            replies = _keeping_replies(state)
            if replies:
                return self.rng.choice(replies)
        return self.rng.choice(state.free_edges)


def _keeping_replies(state) -> list:
    if state.variant == "sym":
        return iso_preserving_replies(state.graph, state.red, state.blue)
    a = state.red_moves[-1]
    out = []
    for e in state.free_edges:
        fr = state.witnesses.copy()
        if fr.extend(a, e):
            out.append(e)
    return out


def _reflection(g: Graph):
    """Vertex map used as the copy target: reflection for paths, a mirror for cycles."""
    n = g.vertex_count
    if g.family == "path":
        return tuple(n - 1 - v for v in range(n))
    if g.family == "cycle":
        return tuple((-v) % n for v in range(n))
    return None


class GreedyCopyB(Strategy):
    """Copy A along an involution when the graph has one, else stay isomorphic.

    The fallback reply is the isomorphism-keeping edge closest (by index) to
    the reflection of A's edge, which makes B build its components as a
    mirror picture of A's as long as that is possible.
    """

    name = "greedy-copy"

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        self.rng = random.Random(f"{seed}:{side}:greedy")
        self.image = None
        phi = None
        if graph.family in ("path", "cycle") and graph.edge_count % 2 == 0:
            n = graph.vertex_count
            phi = tuple(n - 1 - v for v in range(n)) if graph.family == "path" else \
                tuple((v + n // 2) % n for v in range(n))
        elif graph.vertex_count <= INVOLUTION_SEARCH_LIMIT:
            try:
                phi = find_involutory_fixed_edge_free_automorphism(graph)
            except CapabilityError:
                phi = None
        if phi is not None:
            self.image = edge_permutation(graph, phi)
        refl = _reflection(graph)
        self.reflect = edge_permutation(graph, refl) if refl is not None else None

    def move(self, state):
        a = state.red_moves[-1]
        if self.image is not None and state.is_legal(self.image[a]):
            return self.image[a]
        replies = _keeping_replies(state)
        if replies:
            if self.reflect is not None:
                target = self.reflect[a]
                return min(replies, key=lambda e: (abs(e - target), e))
            return replies[0]
        return self.rng.choice(state.free_edges)


class AdversarialRandomA(Strategy):
    """Sample candidate edges and keep the one leaving B the fewest good replies."""

    name = "adversarial-random"

    def __init__(self, samples: int = 8):
        self.samples = samples

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        self.rng = random.Random(f"{seed}:{side}:adversarial")

    def move(self, state):
        free = state.free_edges
        cands = free if len(free) <= self.samples else self.rng.sample(free, self.samples)
        best, choice = None, None
        for e in cands:
            k = len(iso_preserving_replies(state.graph, state.red | {e}, state.blue))
            if best is None or k < best:
                best, choice = k, e
        return choice


def heuristic_opponents() -> dict:
    """Catalog of baseline strategies: name -> (side, factory)."""
    return {
        "random-A": ("A", RandomStrategy),
        "adversarial-random-A": ("A", AdversarialRandomA),
        "random-B": ("B", RandomStrategy),
        "greedy-copy-B": ("B", GreedyCopyB),
    }
