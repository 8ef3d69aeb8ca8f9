"""Referee and play loops for Sym(G), Sym+(G) and the Ehrenfeucht-Fraisse game."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import ParameterError
from .graphs import Graph, graph_from_json, subgraphs_isomorphic, to_display, from_display

VARIANTS = ("sym", "sym_plus")


class Strategy:
    """Move-selection contract for one player of Sym(G).

    ``start`` is called once per game; ``move`` is called on the player's
    turn with the live :class:`SymState` (read it, do not mutate it) and must
    return an uncolored 0-based edge index.  Implementations may keep state
    between calls but must be deterministic given history and seed.
    """

    name = "abstract"

    def start(self, graph: Graph, side: str, seed: int = 0, variant: str = "sym") -> None:
        self.graph = graph
        self.side = side
        self.seed = seed
        self.variant = variant

    def move(self, state: "SymState") -> int:
        raise NotImplementedError


class WitnessFrontier:
    """All vertex maps red -> blue that extend round by round (Sym+).

    Each round pairs A's edge with B's edge, so a surviving witness must map
    the endpoints of ``a_i`` onto those of ``b_i`` for every round.  The maps
    are stored per independent block: pairs whose red or blue edges share a
    vertex are in one block, and different blocks have disjoint domains and
    images, so the frontier is the product of the blocks' map lists.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.blocks = []  # list of [red_vertices, blue_vertices, maps]

    def copy(self) -> "WitnessFrontier":
        out = WitnessFrontier(self.graph)
        out.blocks = [[set(r), set(b), list(m)] for r, b, m in self.blocks]
        return out

    def extend(self, a: int, b: int) -> bool:
        u1, u2 = self.graph.edges[a]
        x1, x2 = self.graph.edges[b]
        touching = [blk for blk in self.blocks if {u1, u2} & blk[0] or {x1, x2} & blk[1]]
        rest = [blk for blk in self.blocks if not any(blk is t for t in touching)]
        red_v = {u1, u2}.union(*(t[0] for t in touching)) if touching else {u1, u2}
        blue_v = {x1, x2}.union(*(t[1] for t in touching)) if touching else {x1, x2}
        merged = [{}]
        for t in touching:
            merged = [{**m, **n} for m in merged for n in t[2]]
        maps = []
        for m in merged:
            for p, q in ((x1, x2), (x2, x1)):
                cand = _extend_map(m, ((u1, p), (u2, q)))
                if cand is not None:
                    maps.append(cand)
        self.blocks = rest + [[red_v, blue_v, maps]]
        return bool(maps)

    @property
    def nonempty(self) -> bool:
        return all(blk[2] for blk in self.blocks)

    def count(self) -> int:
        total = 1
        for blk in self.blocks:
            total *= len(blk[2])
        return total

    def sample(self) -> Optional[dict]:
        if not self.nonempty:
            return None
        out = {}
        for blk in self.blocks:
            out.update(blk[2][0])
        return out


def _extend_map(m: dict, pairs) -> Optional[dict]:
    out = dict(m)
    image = set(out.values())
    for u, x in pairs:
        if u in out:
            if out[u] != x:
                return None
            continue
        if x in image:
            return None
        out[u] = x
        image.add(x)
    return out


@dataclass
class SymState:
    graph: Graph
    variant: str = "sym"
    red: set = field(default_factory=set)
    blue: set = field(default_factory=set)
    round: int = 0
    to_move: str = "A"
    history: list = field(default_factory=list)
    witnesses: Optional[WitnessFrontier] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ParameterError(f"unknown variant {self.variant!r}")
        if self.variant == "sym_plus" and self.witnesses is None:
            self.witnesses = WitnessFrontier(self.graph)

    @property
    def colored(self) -> set:
        return self.red | self.blue

    @property
    def free_edges(self) -> list:
        col = self.colored
        return [e for e in range(self.graph.edge_count) if e not in col]

    @property
    def max_rounds(self) -> int:
        return self.graph.edge_count // 2

    @property
    def red_moves(self) -> list:
        return [e for p, e in self.history if p == "A"]

    @property
    def blue_moves(self) -> list:
        return [e for p, e in self.history if p == "B"]

    def is_legal(self, edge) -> bool:
        return isinstance(edge, int) and 0 <= edge < self.graph.edge_count and edge not in self.red and edge not in self.blue

    def play(self, edge: int) -> None:
        mover = self.to_move
        (self.red if mover == "A" else self.blue).add(edge)
        self.to_move = "B" if mover == "A" else "A"
        self.history.append((mover, edge))

    def check_round(self) -> bool:
        """Referee check after B's move (isomorphism or witness extension)."""
        if self.variant == "sym":
            return subgraphs_isomorphic(self.graph, self.red, self.blue)
        a = self.history[-2][1]
        b = self.history[-1][1]
        return self.witnesses.extend(a, b)


@dataclass
class Outcome:
    survived_rounds: int
    winner: Optional[str]
    reason: str
    illegal_by: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "survived_rounds": self.survived_rounds,
            "winner": self.winner,
            "reason": self.reason,
            "illegal_by": self.illegal_by,
        }


def play_sym(g: Graph, strat_a: Strategy, strat_b: Strategy, variant: str = "sym",
             round_limit: Optional[int] = None, seed: int = 0, observer: Optional[Callable] = None):
    """Run one game and return ``(Outcome, transcript)``.

    An illegal move is an immediate loss for the player who made it.  The
    transcript shows edges 1-based.
    """
    state = SymState(g, variant)
    floor = state.max_rounds
    limit = floor if round_limit is None else min(round_limit, floor)
    strat_a.start(g, "A", seed, variant)
    strat_b.start(g, "B", seed, variant)
    rounds = []
    outcome = None
    while state.round < limit:
        a = strat_a.move(state)
        if not state.is_legal(a):
            rounds.append({"a_edge": _disp(a), "b_edge": None, "iso_ok": None, "illegal": "A"})
            outcome = Outcome(state.round, "B", "illegal_move", "A")
            break
        state.play(a)
        b = strat_b.move(state)
        if not state.is_legal(b):
            rounds.append({"a_edge": to_display(a), "b_edge": _disp(b), "iso_ok": None, "illegal": "B"})
            outcome = Outcome(state.round, "A", "illegal_move", "B")
            break
        state.play(b)
        ok = state.check_round()
        rounds.append({"a_edge": to_display(a), "b_edge": to_display(b), "iso_ok": ok})
        if observer is not None:
            observer(state, ok)
        if not ok:
            outcome = Outcome(state.round, "A", "isomorphism_broken")
            break
        state.round += 1
    if outcome is None:
        if state.round == floor:
            outcome = Outcome(state.round, "B", "all_edges_colored")
        else:
            outcome = Outcome(state.round, None, "round_limit")
    transcript = {
        "graph": g.to_json(),
        "variant": variant,
        "seed": seed,
        "strategies": {"A": getattr(strat_a, "name", "?"), "B": getattr(strat_b, "name", "?")},
        "rounds": rounds,
        "outcome": outcome.to_json(),
    }
    if round_limit is not None:
        transcript["round_limit"] = round_limit
    return outcome, transcript


def _disp(edge):
    return to_display(edge) if isinstance(edge, int) else repr(edge)


class ScriptedStrategy(Strategy):
    """Plays a fixed list of 0-based edges (used for transcript replay)."""

    name = "scripted"

    def __init__(self, moves):
        self.moves = list(moves)

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        self._i = 0

    def move(self, state):
        m = self.moves[self._i] if self._i < len(self.moves) else None
        self._i += 1
        return m


def replay_transcript(transcript) -> Outcome:
    """Feed a transcript's moves back through the referee."""
    if isinstance(transcript, str):
        transcript = json.loads(transcript)
    g = graph_from_json(transcript["graph"])
    a_moves, b_moves = [], []
    for r in transcript["rounds"]:
        a_moves.append(_undisp(r["a_edge"]))
        if r["b_edge"] is not None:
            b_moves.append(_undisp(r["b_edge"]))
    outcome, _ = play_sym(g, ScriptedStrategy(a_moves), ScriptedStrategy(b_moves),
                          transcript["variant"], transcript.get("round_limit"), transcript["seed"])
    return outcome


def _undisp(x):
    return from_display(x) if isinstance(x, int) else x


def dump_transcript(transcript) -> str:
    return json.dumps(transcript, sort_keys=True)


# ---------------------------------------------------------------------------
# Ehrenfeucht-Fraisse game


class EFSpoiler:
    name = "abstract-spoiler"

    def start(self, g0: Graph, g1: Graph, seed: int = 0) -> None:
        self.g0, self.g1, self.seed = g0, g1, seed

    def move(self, state: "EFState"):
        """Return ``(side, vertex)`` with side 0 or 1."""
        raise NotImplementedError


class EFDuplicator:
    name = "abstract-duplicator"

    def start(self, g0: Graph, g1: Graph, seed: int = 0) -> None:
        self.g0, self.g1, self.seed = g0, g1, seed

    def move(self, state: "EFState", side: int, vertex: int) -> int:
        """Answer a pick of ``vertex`` in graph ``side`` with a vertex of the other graph."""
        raise NotImplementedError


@dataclass
class EFState:
    g0: Graph
    g1: Graph
    pairs: list = field(default_factory=list)  # (vertex of g0, vertex of g1)
    sides: list = field(default_factory=list)  # which graph the spoiler picked from
    round: int = 0

    def graphs(self):
        return (self.g0, self.g1)

    def partner(self, side: int, vertex: int) -> Optional[int]:
        for p in self.pairs:
            if p[side] == vertex:
                return p[1 - side]
        return None


def is_partial_isomorphism(g0: Graph, g1: Graph, pairs) -> bool:
    """Equality and adjacency agree on every pair of chosen vertex pairs."""
    a0, a1 = g0.adjacency, g1.adjacency
    for (x, y), (x2, y2) in itertools.combinations(pairs, 2):
        if (x == x2) != (y == y2):
            return False
        if (x2 in a0[x]) != (y2 in a1[y]):
            return False
    return True


def default_ef_limit(g0: Graph, g1: Graph) -> int:
    return g0.vertex_count + g1.vertex_count


def play_ef(g0: Graph, g1: Graph, spoiler: EFSpoiler, duplicator: EFDuplicator,
            round_limit: Optional[int] = None, seed: int = 0):
    """Play EF(g0, g1); returns ``(Outcome, EFState)``.

    Re-picking an already chosen vertex is allowed; the duplicator must then
    answer consistently with the existing pairing.
    """
    limit = default_ef_limit(g0, g1) if round_limit is None else round_limit
    state = EFState(g0, g1)
    spoiler.start(g0, g1, seed)
    duplicator.start(g0, g1, seed)
    graphs = (g0, g1)
    while state.round < limit:
        side, v = spoiler.move(state)
        if side not in (0, 1) or not 0 <= v < graphs[side].vertex_count:
            return Outcome(state.round, "B", "illegal_move", "A"), state
        w = duplicator.move(state, side, v)
        if not isinstance(w, int) or not 0 <= w < graphs[1 - side].vertex_count:
            return Outcome(state.round, "A", "illegal_move", "B"), state
        pair = (v, w) if side == 0 else (w, v)
        state.pairs.append(pair)
        state.sides.append(side)
        if not is_partial_isomorphism(g0, g1, state.pairs):
            return Outcome(state.round, "A", "isomorphism_broken"), state
        state.round += 1
    return Outcome(state.round, "B", "round_limit"), state


# ---------------------------------------------------------------------------
# terminal play


def render_state(state: SymState) -> str:
    """One line per edge, 1-based, with its color."""
    g = state.graph
    cells = []
    for e, (u, v) in enumerate(g.edges):
        mark = "R" if e in state.red else "B" if e in state.blue else "."
        cells.append(f"{to_display(e)}:{u}-{v}[{mark}]")
    head = f"round {state.round + 1}, red={sorted(map(to_display, state.red))} blue={sorted(map(to_display, state.blue))}"
    return head + "\n" + " ".join(cells)


def interactive_play(g: Graph, human_side: str, machine: Strategy, variant: str = "sym",
                     seed: int = 0, input_fn: Callable = input, output_fn: Callable = print):
    """Human vs machine in the terminal; ``q`` quits, EOF aborts.

    Returns ``(Outcome, transcript)``.  Quitting or EOF yields an outcome
    with reason ``round_limit`` and the partial transcript.
    """
    if human_side not in ("A", "B"):
        raise ParameterError("human_side must be 'A' or 'B'")

    class Human(Strategy):
        name = "human"

        def move(self, state):
            output_fn(render_state(state))
            while True:
                try:
                    raw = input_fn(f"{human_side} edge number> ")
                except EOFError:
                    raise _Quit("eof")
                raw = raw.strip()
                if raw.lower() in ("q", "quit", "exit"):
                    raise _Quit("quit")
                try:
                    e = from_display(int(raw))
                except ValueError:
                    output_fn(f"not an edge number: {raw!r}")
                    continue
                if not 0 <= e < g.edge_count:
                    output_fn(f"edge {raw} does not exist (1..{g.edge_count})")
                    continue
                if e in state.red or e in state.blue:
                    output_fn(f"edge {raw} is already colored")
                    continue
                return e

    human = Human()
    a, b = (human, machine) if human_side == "A" else (machine, human)
    log = []
    partial = {"rounds": []}

    def observer(state, ok):
        log.append(ok)
        partial["rounds"].append({"a_edge": to_display(state.history[-2][1]),
                                  "b_edge": to_display(state.history[-1][1]), "iso_ok": ok})
        output_fn(f"after round {state.round + 1}: {'isomorphic' if ok else 'isomorphism broken'}")

    try:
        outcome, transcript = play_sym(g, a, b, variant, seed=seed, observer=observer)
    except _Quit as q:
        transcript = partial
        transcript.update({"graph": g.to_json(), "variant": variant, "seed": seed, "aborted": q.args[0]})
        outcome = Outcome(sum(1 for ok in log if ok), None, "round_limit")
        transcript["outcome"] = outcome.to_json()
    output_fn(f"winner: {outcome.winner}, rounds survived: {outcome.survived_rounds} ({outcome.reason})")
    return outcome, transcript


class _Quit(Exception):
    pass
