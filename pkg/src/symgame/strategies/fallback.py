"""Safety-net move choice for A when a breaker's program does not apply."""

from __future__ import annotations

from ..graphs import iso_preserving_replies, to_mask
from ..solver import SymSolver

EXACT_FREE_EDGES = 12


class FallbackA:
    """Exact search once few edges are free, otherwise leave B the fewest good replies."""

    def __init__(self, graph, exact_free: int = EXACT_FREE_EDGES):
        self.graph = graph
        self.exact_free = exact_free
        self._solver = None

    def move(self, state) -> int:
        free = state.free_edges
        if len(free) <= self.exact_free:
            if self._solver is None:
                self._solver = SymSolver(self.graph, reduction="none", edge_budget=self.graph.edge_count)
            red, blue = to_mask(state.red), to_mask(state.blue)
            return min((self._solver.half_value(red | 1 << e, blue), e) for e in free)[1]
        best, choice = None, None
        for e in free:
            k = len(iso_preserving_replies(self.graph, state.red | {e}, state.blue))
            if best is None or k < best:
                best, choice = k, e
                if k == 0:
                    break
        return choice
