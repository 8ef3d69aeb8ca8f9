"""B copies A's edge through an involutory, fixed-edge-free automorphism."""

from __future__ import annotations

from ..engine import Strategy
from ..errors import ParameterError
from ..graphs import (Graph, edge_permutation, find_involutory_fixed_edge_free_automorphism,
                      fixed_edges, is_automorphism, is_involution)


class MirrorStrategy(Strategy):
    """Answer every red edge ``e`` with ``phi'(e)``.

    With ``phi`` involutory and fixing no edge, ``phi'`` pairs up the edges,
    so the image of A's edge is always free and ``phi`` itself maps red onto
    blue after every round.
    """

    name = "mirror"

    def __init__(self, phi):
        self.phi = tuple(phi)

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        _validate(graph, self.phi)
        self.edge_image = edge_permutation(graph, self.phi)

    def move(self, state):
        e = self.edge_image[state.red_moves[-1]]
        if state.is_legal(e):
            return e
        # only reachable if someone else coloured edges for us; stay legal
        return state.free_edges[0]


def _validate(g: Graph, phi) -> None:
    if len(phi) != g.vertex_count or not is_automorphism(g, phi):
        raise ParameterError("phi is not an automorphism of the graph")
    if not is_involution(phi):
        raise ParameterError("phi is not an involution")
    if fixed_edges(g, phi):
        raise ParameterError(f"phi fixes edges {sorted(e + 1 for e in fixed_edges(g, phi))}")


def mirror_strategy(g: Graph, phi=None) -> MirrorStrategy:
    """Mirror strategy for B; ``phi`` is searched for when omitted."""
    if phi is None:
        phi = find_involutory_fixed_edge_free_automorphism(g)
        if phi is None:
            raise ParameterError(f"{g.name} has no involutory fixed-edge-free automorphism")
    _validate(g, phi)
    return MirrorStrategy(phi)


def cycle_rotation(n: int) -> tuple:
    """Antipodal map of ``C_n`` for even ``n``."""
    if n % 2:
        raise ParameterError("antipodal map needs an even cycle")
    return tuple((v + n // 2) % n for v in range(n))
