"""Duplicator strategies for EF games on two paths or two cycles.

The threshold scheme keeps the pebbled positions of both graphs in the same
order and compares consecutive gaps: after ``r`` rounds every pair of
corresponding gaps is either equal or both at least ``2^(R-r)``.  For paths
the two endpoints are pinned as virtual pebbles, for cycles the first pick is
answered freely and the cycle is then cut there.  Once the threshold drops
below 2 the invariant no longer implies a partial isomorphism and the
duplicator answers greedily.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ..engine import EFDuplicator, is_partial_isomorphism
from ..errors import ParameterError
from ..graphs import Graph, make_graph


@dataclass
class DuplicatorTable:
    """Partial map plus the per-round threshold schedule."""

    budget: int
    pairs: list = field(default_factory=list)
    thresholds: list = field(default_factory=list)  # threshold in force after each round
    greedy_rounds: list = field(default_factory=list)  # rounds answered outside the scheme

    def threshold(self, r: int) -> int:
        """Threshold that gaps must meet after ``r`` scheme rounds."""
        return 2 ** (self.budget - r) if r <= self.budget else 0

    def to_json(self) -> dict:
        return {"budget": self.budget, "pairs": [list(p) for p in self.pairs],
                "thresholds": self.thresholds, "greedy_rounds": self.greedy_rounds}


def _path_length(g: Graph) -> int:
    return g.edge_count


class ThresholdDuplicator(EFDuplicator):
    """Gap-threshold duplicator for (P_a, P_b) or (C_a, C_b)."""

    name = "threshold-duplicator"

    def __init__(self, budget=None):
        self._budget = budget

    def start(self, g0, g1, seed=0):
        super().start(g0, g1, seed)
        if g0.family != g1.family or g0.family not in ("path", "cycle"):
            raise ParameterError("threshold duplicator needs two paths or two cycles")
        self.cyclic = g0.family == "cycle"
        self.sizes = (g0.vertex_count, g1.vertex_count)
        short = min(g0.edge_count, g1.edge_count)
        if self._budget is not None:
            budget = self._budget
        elif self.cyclic:
            budget = int(math.floor(math.log2(short))) + 1
        else:
            budget = int(math.floor(math.log2(short)))
        self.table = DuplicatorTable(budget)
        self.scheme_rounds = 0
        self.scheme_ok = True

    # positions on each side in path/cycle order, with pinned endpoints for paths
    def _anchors(self, pairs):
        if self.cyclic:
            return sorted(pairs)
        n0, n1 = self.sizes
        pts = [(0, 0), (n0 - 1, n1 - 1)] + [p for p in pairs if p not in ((0, 0), (n0 - 1, n1 - 1))]
        return sorted(set(pts))

    def _gap_ok(self, pts, thr) -> bool:
        """Gaps between consecutive anchors are equal or both >= thr, in a consistent order."""
        if any(pts[i][1] >= pts[i + 1][1] for i in range(len(pts) - 1)):
            return False
        gaps = [(q[0] - p[0], q[1] - p[1]) for p, q in zip(pts, pts[1:])]
        if self.cyclic and pts:
            p, q = pts[-1], pts[0]
            gaps.append((q[0] + self.sizes[0] - p[0], q[1] + self.sizes[1] - p[1]))
        return all(a == b or (a >= thr and b >= thr) for a, b in gaps)

    def _scheme(self, pairs, side, v, thr):
        """Answer by the threshold rule, or None if the invariant is already lost."""
        n = self.sizes
        if self.cyclic and not pairs:
            return v % n[1 - side]
        pts = self._anchors(pairs)
        for a in pts:
            if a[side] == v:
                return a[1 - side]
        if self.cyclic:
            # rotate so the gap containing v starts at an anchor with coordinate <= v
            below = [p for p in pts if p[side] < v]
            p = below[-1] if below else pts[-1]
            above = [q for q in pts if q[side] > v]
            q = above[0] if above else pts[0]
            pv, qv = p[side], q[side]
            po, qo = p[1 - side], q[1 - side]
            if qv <= pv:
                qv += n[side]
            vv = v if v > pv else v + n[side]
            if qo <= po:
                qo += n[1 - side]
        else:
            below = [p for p in pts if p[side] < v]
            above = [q for q in pts if q[side] > v]
            if not below or not above:
                return None
            p, q = below[-1], above[0]
            pv, qv, po, qo, vv = p[side], q[side], p[1 - side], q[1 - side], v
        L, L2 = qv - pv, qo - po
        d1, d2 = vv - pv, qv - vv
        if L == L2:
            y = po + d1
        elif d1 < thr:
            y = po + d1
        elif d2 < thr:
            y = qo - d2
        else:
            y = po + max(thr, min(d1, L2 - thr))
        return y % n[1 - side] if self.cyclic else y

    def _greedy(self, pairs, side, v):
        """First consistent answer, trying the gap-preserving offsets first."""
        gs = (self.g0, self.g1)
        other = self.sizes[1 - side]
        mine = {p[side]: p[1 - side] for p in pairs}
        theirs = {p[1 - side]: p[side] for p in pairs}
        adj_v, adj_o = gs[side].adjacency, gs[1 - side].adjacency

        def consistent(w):
            if w in theirs:
                return False
            for x in adj_v[v]:
                if x in mine and mine[x] not in adj_o[w]:
                    return False
            for y in adj_o[w]:
                if y in theirs and theirs[y] not in adj_v[v]:
                    return False
            return True

        prefs = []
        pts = self._anchors(pairs)
        below = [p for p in pts if p[side] < v]
        above = [q for q in pts if q[side] > v]
        if below:
            prefs.append(below[-1][1 - side] + v - below[-1][side])
        if above:
            prefs.append(above[0][1 - side] - (above[0][side] - v))
        prefs.append(v)
        for y in prefs:
            if 0 <= y < other and consistent(y):
                return y
        for k in range(other):
            for w in ((v + k) % other, (v - k) % other):
                if consistent(w):
                    return w
        return 0

    def move(self, state, side, vertex):
        partner = state.partner(side, vertex)
        if partner is not None:
            return partner
        pairs = list(dict.fromkeys(state.pairs))
        r = self.scheme_rounds
        thr = self.table.threshold(r + 1)
        w = None
        if self.scheme_ok and thr >= 1:
            w = self._scheme(pairs, side, vertex, thr)
            if w is not None:
                pair = (vertex, w) if side == 0 else (w, vertex)
                new = pairs + [pair]
                if w in {p[1 - side] for p in pairs} or not is_partial_isomorphism(self.g0, self.g1, new) \
                        or not self._gap_ok(self._anchors(new), thr):
                    w = None
        if w is None:
            self.scheme_ok = False
            self.table.greedy_rounds.append(state.round + 1)
            w = self._greedy(pairs, side, vertex)
        else:
            self.scheme_rounds += 1
            self.table.thresholds.append(thr)
        self.table.pairs.append((vertex, w) if side == 0 else (w, vertex))
        return w


def duplicator_path_strategy(n: int, budget=None) -> ThresholdDuplicator:
    """Duplicator for EF(P_n, P_{n+1}); works for any two paths."""
    if n < 2:
        raise ParameterError("n must be at least 2")
    d = ThresholdDuplicator(budget)
    d.name = f"duplicator-path-{n}"
    return d


def duplicator_cycle_strategy(n: int, budget=None) -> ThresholdDuplicator:
    """Duplicator for EF(C_n, C_{n+1}); works for any two cycles."""
    if n < 3:
        raise ParameterError("n must be at least 3")
    d = ThresholdDuplicator(budget)
    d.name = f"duplicator-cycle-{n}"
    return d


def guaranteed_rounds(g0: Graph, g1: Graph) -> int:
    """Rounds the threshold scheme provably survives on two paths / two cycles."""
    short = min(g0.edge_count, g1.edge_count)
    if g0.family == "cycle":
        return int(math.floor(math.log2(short)))
    return int(math.floor(math.log2(short))) - 1


def find_isomorphism(g0: Graph, g1: Graph):
    """A vertex bijection g0 -> g1 preserving edges, or None (small graphs / same-family shortcut)."""
    if g0.vertex_count != g1.vertex_count or g0.edge_count != g1.edge_count:
        return None
    if g0.family == g1.family and g0.params == g1.params and g0.edges == g1.edges:
        return tuple(range(g0.vertex_count))
    if g0.vertex_count > 9:
        raise ParameterError("isomorphism search limited to 9 vertices")
    e1 = {frozenset(e) for e in g1.edges}
    for perm in itertools.permutations(range(g1.vertex_count)):
        if all(frozenset((perm[u], perm[v])) in e1 for u, v in g0.edges):
            return perm
    return None


class CopyingDuplicator(EFDuplicator):
    """Perfect duplicator for isomorphic graphs: answers through a fixed isomorphism."""

    name = "copying-duplicator"

    def start(self, g0, g1, seed=0):
        super().start(g0, g1, seed)
        psi = find_isomorphism(g0, g1)
        if psi is None:
            raise ParameterError("graphs are not isomorphic")
        self.psi = psi
        self.inv = {w: v for v, w in enumerate(psi)}

    def move(self, state, side, vertex):
        return self.psi[vertex] if side == 0 else self.inv[vertex]


def ef_pair(family: str, n: int):
    """(G_n, G_{n+1}) for the path or cycle family."""
    return make_graph(family, n), make_graph(family, n + 1)
