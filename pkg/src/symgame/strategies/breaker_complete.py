"""A's strategy on K_n (n >= 6): a 3-star, then the continuations from the five star positions.

Rounds 1-3 build a red star ``u_0; u_1, u_2, u_3``.  B must answer with a
blue 3-star, and the leaves are chosen by a two-round look-ahead so that
the position after round 3 is one of the five star positions below for
every isomorphism-keeping reply of B:

* Position 1: blue star on a new centre with leaves ``u_0, u_2, u_3``;
* Position 2: blue star on a new centre with leaves ``u_2, u_3`` and a new vertex;
* Position 3: blue star on a new centre with leaves ``u_0, u_3`` and a new vertex;
* Position 4: blue star on ``u_0`` with three new leaves ``v_1, v_2, v_3``;
* Position 5: blue star on a new ``v_0`` with leaves ``u_3, v_1, v_2``.

From there A plays the moves named in the proof (the triangle in Position 1,
the K_4 on the red star in Positions 2-3, the scripted sequences in
Positions 4-5).  Every move is checked by a bounded AND-OR search, "A wins
within k more moves against every reply", on a local copy of K_min(n,8)
spanned by the touched vertices.  The search finds the least such k; the
proof's move is played when it also wins within k moves, otherwise the
searched move is.  ``log`` records which source each move came from.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

from ..engine import Strategy, SymState
from ..errors import ParameterError
from ..graphs import canonical_form, make_graph, subgraphs_isomorphic, to_mask
from ..solver import SymSolver
from .fallback import FallbackA

MOVE_LIMIT = 7
LOCAL_ORDER = 8

# the five star positions on vertices u0=0, u1=1, u2=2, u3=3 and new vertices 4, 5, 6
_STAR = ((0, 1), (0, 2), (0, 3))
STAR_POSITIONS = {
    1: ((4, 2), (4, 0), (4, 3)),
    2: ((4, 2), (4, 3), (4, 5)),
    3: ((4, 0), (4, 3), (4, 5)),
    4: ((0, 4), (0, 5), (0, 6)),
    5: ((4, 3), (4, 5), (4, 6)),
}


def _cert(red_pairs, blue_pairs):
    verts = sorted({v for e in itertools.chain(red_pairs, blue_pairs) for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    coloured = {(idx[u], idx[v]): 1 for u, v in red_pairs}
    coloured.update({(idx[u], idx[v]): 2 for u, v in blue_pairs})
    return len(verts), canonical_form(len(verts), coloured)


_POSITION_CERTS = {_cert(_STAR, blue): pos for pos, blue in STAR_POSITIONS.items()}


def position_certificate(g, red, blue):
    """Isomorphism class of the coloured subgraph spanned by the touched vertices."""
    return _cert([g.edges[e] for e in red], [g.edges[e] for e in blue])


def classify_position(g, red, blue):
    """The star-position number (1-5) of ``(red, blue)``, or ``None``."""
    if len(red) != 3 or len(blue) != 3:
        return None
    return _POSITION_CERTS.get(position_certificate(g, red, blue))


def _vertices(g, edges) -> set:
    return {v for e in edges for v in g.edges[e]}


def _star_center(g, red):
    common = set.intersection(*(set(g.edges[e]) for e in red))
    return min(common) if common else None


def _iso_replies(g, red, blue, reduce=True):
    """B's isomorphism-keeping replies, one per touched-subgraph class if ``reduce``."""
    out, seen = [], set()
    for b in range(g.edge_count):
        if b in red or b in blue:
            continue
        nb = blue | {b}
        if not subgraphs_isomorphic(g, red, nb):
            continue
        if reduce:
            k = position_certificate(g, red, nb)
            if k in seen:
                continue
            seen.add(k)
        out.append(b)
    return out


@lru_cache(maxsize=8)
def _local_solver(order: int) -> SymSolver:
    g = make_graph("complete", order)
    return SymSolver(g, edge_budget=g.edge_count)


class BreakerComplete(Strategy):
    """A on K_n; ``move`` depends only on the position and its history."""

    name = "breaker-kn"

    def __init__(self, move_limit: int = MOVE_LIMIT, local_order: int = LOCAL_ORDER):
        self.move_limit = move_limit
        self.local_order = local_order
        self.log = []

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        if graph.family != "complete" or graph.vertex_count < 6:
            raise ParameterError("breaker_complete needs K_n with n >= 6")
        if variant != "sym":
            raise ParameterError("breaker_complete plays the sym variant")
        self.n = graph.vertex_count
        self.log = []
        self._fallback = FallbackA(graph)
        self._star_cache = {}

    def move(self, state):
        red, blue = set(state.red), set(state.blue)
        k = len(red)
        if k < 3:
            e = self._star_move(red, blue)
            self.log.append(("star", e))
            return e
        pos = classify_position(self.graph, set(state.red_moves[:3]), set(state.blue_moves[:3]))
        cand = self._template_move(state, pos)
        found = self._search(red, blue, self.move_limit - k)
        if found is not None:
            # the proof's move is kept whenever it wins as fast as the search's
            kk, e = found
            if cand is not None and cand not in red | blue and self._verified(red, blue, cand, kk):
                self.log.append(("template", cand))
                return cand
            self.log.append(("search", e))
            return e
        e = self._fallback.move(state)
        self.log.append(("fallback", e))
        return e

    # -- rounds 1-3: the star -------------------------------------------------

    def _edge(self, u, v) -> int:
        return self.graph.edge_index[(u, v)]

    def _star_candidates(self, red, blue):
        g = self.graph
        touched_b = _vertices(g, blue)
        if len(red) == 1:
            u, v = g.edges[next(iter(red))]
            centres = sorted((u, v), key=lambda x: (x in touched_b, x))
        else:
            centres = [_star_center(g, red)]
        used = _vertices(g, red)
        out = []
        for c in centres:
            leaves = sorted((x for x in range(self.n) if x not in used), key=lambda x: (x in touched_b, x))
            out.extend(self._edge(c, x) for x in leaves if self._edge(c, x) not in blue)
        return out

    def _star_ok(self, red, blue, depth) -> bool:
        """Every B reply to the star move keeps a star position reachable."""
        g = self.graph
        if len(red) == 3:
            return all(classify_position(g, red, blue | {b}) is not None for b in _iso_replies(g, red, blue))
        return all(any(self._star_ok(red | {c}, blue | {b}, depth - 1)
                       for c in self._star_candidates(red, blue | {b}))
                   for b in _iso_replies(g, red, blue))

    def _star_move(self, red, blue) -> int:
        if not red:
            return self._edge(0, 1)
        key = (position_certificate(self.graph, red, blue), tuple(sorted(red)), tuple(sorted(blue)))
        if key in self._star_cache:
            return self._star_cache[key]
        cands = self._star_candidates(red, blue)
        choice = next((c for c in cands if self._star_ok(red | {c}, blue, 3 - len(red))), cands[0])
        self._star_cache[key] = choice
        return choice

    # -- rounds 4-7: star-position continuations -------------------------------------

    def _labels(self, red, blue, pos) -> dict:
        g = self.graph
        u0 = _star_center(g, red)
        leaves = sorted(_vertices(g, red) - {u0})
        bc = _star_center(g, blue)
        bleaves = sorted(_vertices(g, blue) - {bc})
        lab = {"u0": u0, "T": leaves}
        if pos == 1:
            lab["shared"] = [x for x in leaves if x in bleaves]
        elif pos == 4:
            lab["v1"], lab["v2"], lab["v3"] = bleaves
        elif pos == 5:
            (u3,) = [x for x in bleaves if x in leaves]
            lab["u3"] = u3
            lab["v1"], lab["v2"] = [x for x in bleaves if x != u3]
        return lab

    def _template_move(self, state, pos):
        if pos is None:
            return None
        g = self.graph
        red_moves, blue_moves = state.red_moves, state.blue_moves
        red3, blue3 = set(red_moves[:3]), set(blue_moves[:3])
        lab = self._labels(red3, blue3, pos)
        k = len(red_moves)
        colored = state.red | state.blue
        T = lab["T"]
        t_edges = [self._edge(x, y) for x, y in itertools.combinations(T, 2)]
        free_t = [e for e in t_edges if e not in colored]
        if pos == 1:
            return self._edge(*lab["shared"]) if k == 3 else (free_t[0] if free_t else None)
        if pos in (2, 3):
            return free_t[0] if free_t else None
        if pos == 4:
            v1, v2, v3 = lab["v1"], lab["v2"], lab["v3"]
            if k == 3:
                return self._edge(v1, v2)
            if k == 4:
                return self._edge(v2, v3)
            if k == 5:
                b45 = blue_moves[3:5]
                if all(b in t_edges for b in b45):
                    common = set(g.edges[b45[0]]) & set(g.edges[b45[1]])
                    if common:
                        return self._edge(common.pop(), v2)
            return free_t[0] if free_t else None
        if pos == 5:
            u3, v1, v2 = lab["u3"], lab["v1"], lab["v2"]
            if k == 3:
                return self._edge(u3, v2)
            if k == 4:
                return self._edge(v2, v1)
            b45 = blue_moves[3:5]
            if not all(b in t_edges for b in b45):
                return free_t[0] if free_t else None
            (common,) = set(g.edges[b45[0]]) & set(g.edges[b45[1]])
            (other,) = set(T) - {u3, common}
            return self._edge(other, v1) if k == 5 else self._edge(common, v1)
        return None

    # -- bounded AND-OR search on a local K_m ------------------------------------

    def _project(self, red, blue, extra=()):
        g = self.graph
        touched = sorted(_vertices(g, red | blue) | set(extra))
        m = min(self.n, self.local_order)
        if len(touched) > m:
            return None
        fresh = [v for v in range(self.n) if v not in touched][: m - len(touched)]
        order = touched + fresh
        loc = {v: i for i, v in enumerate(order)}
        s = _local_solver(m)
        lg = s.g

        def to_local(e):
            u, v = g.edges[e]
            return lg.edge_index[(loc[u], loc[v])]

        def to_real(e):
            u, v = lg.edges[e]
            return g.edge_index[(order[u], order[v])]

        return s, to_mask(map(to_local, red)), to_mask(map(to_local, blue)), to_local, to_real

    @staticmethod
    def _wins(s, red, blue, a, k) -> bool:
        r2 = red | 1 << a
        return all(not s.b_survives(r2, blue | 1 << b, k - 1) for b in s.b_moves(r2, blue))

    def _verified(self, red, blue, e, k) -> bool:
        if k <= 0:
            return False
        proj = self._project(red, blue, self.graph.edges[e])
        if proj is None:
            return False
        s, r, b, to_local, _ = proj
        return self._wins(s, r, b, to_local(e), k)

    def _search(self, red, blue, k):
        """``(kk, move)`` with the least ``kk <= k`` such that ``move`` wins within kk A-moves."""
        proj = self._project(red, blue)
        if proj is None or k <= 0:
            return None
        s, r, b, _, to_real = proj
        for kk in range(1, k + 1):
            for a in s.a_moves(r, b):
                if self._wins(s, r, b, a, kk):
                    return kk, to_real(a)
        return None


def breaker_complete_strategy(n: int, **kw) -> BreakerComplete:
    if n < 6:
        raise ParameterError("breaker_complete_strategy needs n >= 6")
    return BreakerComplete(**kw)


def verify_breaker_complete(n: int, move_limit: int = MOVE_LIMIT, reduce: bool = True) -> dict:
    """Play the strategy against every B reply sequence on K_n.

    With ``reduce`` B's replies are taken one per isomorphism class of the
    resulting position.  Returns the number of explored B nodes, the latest
    winning A-move, the star positions met after round 3 and any line in
    which B survived ``move_limit`` A-moves.
    """
    g = make_graph("complete", n)
    strat = BreakerComplete(move_limit=move_limit)
    strat.start(g, "A")
    stats = {"n": n, "nodes": 0, "latest_win": 0, "positions": Counter(), "failures": [],
             "sources": Counter(), "reduce": reduce}

    def dfs(state):
        k = len(state.red)
        if k >= move_limit:
            stats["failures"].append(list(state.history))
            return
        strat.log = []
        a = strat.move(state)
        stats["sources"][strat.log[-1][0]] += 1
        red2 = state.red | {a}
        replies = _iso_replies(g, red2, state.blue, reduce=reduce)
        if not replies:
            stats["latest_win"] = max(stats["latest_win"], k + 1)
            return
        for b in replies:
            nxt = SymState(g, "sym", set(red2), state.blue | {b}, state.round + 1, "A",
                           state.history + [("A", a), ("B", b)])
            stats["nodes"] += 1
            if k + 1 == 3:
                stats["positions"][classify_position(g, nxt.red, nxt.blue)] += 1
            dfs(nxt)

    dfs(SymState(g, "sym"))
    stats["all_win"] = not stats["failures"]
    return stats
