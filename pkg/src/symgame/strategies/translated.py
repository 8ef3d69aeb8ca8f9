"""B on G1 built from an EF duplicator on (L(G0), L(G1)) and a B-strategy on G0.

Each round of Sym(G1) is answered by simulating one round of Sym(G0) and
two rounds of EF(L(G0), L(G1)):

1. the spoiler picks A's edge ``a`` as a vertex of L(G1);
2. the duplicator answers ``a'`` in L(G0); the simulated A_0 plays ``a'``;
3. the simulated B_0 answers ``b'``; the spoiler picks ``b'`` in L(G0);
4. the duplicator answers ``b`` in L(G1), which is B's move.

While the duplicator keeps a partial isomorphism and B_0 keeps Sym(G0)
alive, Whitney's theorem (G1 has no triangle) makes red and blue isomorphic
in G1.  That implication is asserted every round.
"""

from __future__ import annotations

from ..engine import EFState, Strategy, SymState, is_partial_isomorphism
from ..errors import InvariantViolation, ParameterError
from ..graphs import Graph, iso_preserving_replies, line_graph, subgraphs_isomorphic
from ..solver import contains_triangle


class TranslatedStrategy(Strategy):
    name = "translated"

    def __init__(self, duplicator, b0: Strategy, g0: Graph, g1: Graph):
        if contains_triangle(g1):
            raise ParameterError(f"{g1.name} contains a triangle; the line-graph translation needs a K_3-free graph")
        self.duplicator = duplicator
        self.b0 = b0
        self.g0, self.g1 = g0, g1
        self.lg0, _ = line_graph(g0)
        self.lg1, _ = line_graph(g1)

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        if graph != self.g1:
            raise ParameterError("translated strategy started on a different graph")
        self.duplicator.start(self.lg0, self.lg1, seed)
        self.b0.start(self.g0, "B", seed, "sym")
        self.ef = EFState(self.lg0, self.lg1)
        self.sim = SymState(self.g0)
        self.ef_ok = True  # duplicator has kept a partial isomorphism so far
        self.b0_ok = True  # B_0 has kept Sym(G0) alive so far
        self.ef_rounds = 0
        self.sim_rounds = 0
        self.fallback_from = None
        self.log = []

    def _dup(self, side, v):
        w = self.duplicator.move(self.ef, side, v)
        pair = (v, w) if side == 0 else (w, v)
        self.ef.pairs.append(pair)
        self.ef.sides.append(side)
        self.ef.round += 1
        if self.ef_ok and is_partial_isomorphism(self.lg0, self.lg1, self.ef.pairs):
            self.ef_rounds += 1
        else:
            self.ef_ok = False
        return w

    def move(self, state):
        a = state.red_moves[-1]
        b = None
        if self.ef_ok and self.b0_ok:
            a0 = self._dup(1, a)
            if self.ef_ok and self.sim.is_legal(a0):
                self.sim.play(a0)
                b0 = self.b0.move(self.sim)
                if self.sim.is_legal(b0):
                    self.sim.play(b0)
                    if self.sim.check_round():
                        self.sim.round += 1
                        self.sim_rounds += 1
                        b = self._dup(0, b0)
                    else:
                        self.b0_ok = False
                else:
                    self.b0_ok = False
            else:
                self.ef_ok = False
        guaranteed = self.ef_ok and self.b0_ok and b is not None
        if guaranteed and not state.is_legal(b):
            raise InvariantViolation(f"translated move {b + 1} is not free although both oracles held",
                                     self.diagnostics())
        if guaranteed and not subgraphs_isomorphic(self.g1, state.red, state.blue | {b}):
            raise InvariantViolation("oracles held but the translated reply breaks isomorphism",
                                     self.diagnostics())
        if not guaranteed:
            if self.fallback_from is None:
                self.fallback_from = state.round + 1
            replies = iso_preserving_replies(self.g1, state.red, state.blue)
            b = replies[0] if replies else state.free_edges[0]
        self.log.append({"round": state.round + 1, "a": a + 1, "b": b + 1, "translated": guaranteed})
        return b

    def diagnostics(self) -> dict:
        return {"ef_pairs": list(self.ef.pairs), "sim_history": list(self.sim.history),
                "ef_rounds": self.ef_rounds, "sim_rounds": self.sim_rounds, "log": self.log}


def translated_strategy(duplicator, b0: Strategy, g0: Graph, g1: Graph) -> TranslatedStrategy:
    return TranslatedStrategy(duplicator, b0, g0, g1)


def translated_for(g1: Graph) -> TranslatedStrategy:
    """Standard instance for odd paths / cycles: G0 is one edge longer and B_0 mirrors it."""
    from ..graphs import make_graph
    from .duplicator import ThresholdDuplicator
    from .mirror import mirror_strategy

    if g1.family not in ("path", "cycle"):
        raise ParameterError("translated_for handles paths and cycles")
    n = g1.edge_count
    g0 = make_graph(g1.family, n + 1)
    if g0.family == "path":
        phi = tuple(g0.vertex_count - 1 - v for v in range(g0.vertex_count))
    else:
        phi = tuple((v + g0.vertex_count // 2) % g0.vertex_count for v in range(g0.vertex_count))
    return TranslatedStrategy(ThresholdDuplicator(), mirror_strategy(g0, phi), g0, g1)
