"""B's strategy on K_{m,l} with m, l odd, via a partial involution built during play.

The involution fixes the smaller vertex class pointwise.  When a red edge
reaches a vertex ``y`` of the larger class that has no partner yet, ``y`` is
paired with a vertex of that class that no coloured edge touches; B then
answers every red edge ``e`` with its image.  Coloured edges come in pairs
``{e, sigma(e)}``, so the image is always free and red and blue stay
isomorphic while partners last: ``(max(m, l) - 1) / 2`` rounds.
"""

from __future__ import annotations

from ..engine import Strategy
from ..errors import InvariantViolation, ParameterError
from ..graphs import iso_preserving_replies


def guaranteed_rounds(m: int, l: int) -> int:
    return (max(m, l) - 1) // 2


class BipartiteB(Strategy):
    """B on K_{m,l}; ``pairs`` is the involution on the larger class built so far."""

    name = "bipartite-b"

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        if graph.family != "complete_bipartite":
            raise ParameterError("bipartite_B needs K_{m,l}")
        m, l = graph.params
        if m % 2 == 0 or l % 2 == 0:
            raise ParameterError("bipartite_B needs odd m and l")
        self.m, self.l = m, l
        # the larger class moves, the other one stays fixed
        self.moving = set(range(m, m + l)) if l >= m else set(range(m))
        self.pairs = {}
        self.guarantee = guaranteed_rounds(m, l)
        self.exhausted_at = None

    def _image(self, e: int):
        u, v = self.graph.edges[e]
        u2, v2 = self.pairs.get(u, u), self.pairs.get(v, v)
        return self.graph.edge_index.get((u2, v2))

    def _pair(self, y: int, state) -> bool:
        touched = {v for f in state.red | state.blue for v in self.graph.edges[f]}
        pool = sorted(x for x in self.moving if x != y and x not in self.pairs and x not in touched)
        if not pool:
            return False
        self.pairs[y] = pool[0]
        self.pairs[pool[0]] = y
        return True

    def move(self, state):
        a = state.red_moves[-1]
        y = next(v for v in self.graph.edges[a] if v in self.moving)
        b = None
        if y in self.pairs or self._pair(y, state):
            b = self._image(a)
            if b is not None and not state.is_legal(b):
                b = None
        elif self.exhausted_at is None:
            self.exhausted_at = state.round + 1
        if b is not None:
            return b
        if state.round < self.guarantee:
            raise InvariantViolation(
                f"pairing pool exhausted in round {state.round + 1} of K{self.m},{self.l} "
                f"before the guaranteed {self.guarantee} rounds", self.pairs)
        # past the guarantee the involution may be broken; keep isomorphism if possible
        replies = iso_preserving_replies(self.graph, state.red, state.blue)
        return replies[0] if replies else state.free_edges[0]


def bipartite_B_strategy(m: int, l: int) -> BipartiteB:
    if m % 2 == 0 or l % 2 == 0:
        raise ParameterError("bipartite_B_strategy needs odd m and l")
    return BipartiteB()
