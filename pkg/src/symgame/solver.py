"""Exact game values by memoised search.

``solve_sym`` computes the length of Sym(G) or Sym+(G) in two independent
ways, selected by ``order``:

* ``minmax`` runs a depth-first minimax over positions with alpha-beta
  windows and a bounds table (A commits first at every node);
* ``maxmin`` asks, for r = 1, 2, ..., whether B can survive r rounds
  against everything A does, and stops at the first r that fails.

The two must agree on every graph (finite perfect-information game), which
is the duality check the test-suite runs.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import deque
from dataclasses import dataclass

from .engine import (EFDuplicator, EFSpoiler, Strategy, WitnessFrontier, default_ef_limit,
                     is_partial_isomorphism)
from .errors import CapabilityError, ParameterError
from .graphs import (Graph, automorphisms, edge_graph_isomorphic, edge_set_certificate,
                     from_mask, line_graph, linear_runs, symmetry_table, to_mask)

DEFAULT_EDGE_BUDGET = 16
DEFAULT_EF_BUDGET = 18


@dataclass
class SolveReport:
    value: int
    states_expanded: int
    memo_hits: int
    elapsed: float
    reduction: str
    order: str = "minmax"
    variant: str = "sym"
    graph: str = ""

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "variant": self.variant,
            "order": self.order,
            "reduction": self.reduction,
            "value": self.value,
            "states_expanded": self.states_expanded,
            "memo_hits": self.memo_hits,
            "elapsed": round(self.elapsed, 6),
        }


def _popcount(x: int) -> int:
    return bin(x).count("1")


class SymSolver:
    """Exact values of Sym(G) positions, memoised by canonical key."""

    def __init__(self, g: Graph, reduction: str = "automorphism", edge_budget: int = DEFAULT_EDGE_BUDGET,
                 exact_vertex_limit: int = 8):
        if g.edge_count > edge_budget:
            raise CapabilityError(
                f"{g.name} has {g.edge_count} edges (budget {edge_budget}); "
                f"position count is on the order of 3^{g.edge_count} = {3 ** g.edge_count:.3g}"
            )
        if reduction not in ("automorphism", "none"):
            raise ParameterError(f"unknown reduction {reduction!r}")
        self.g = g
        self.m = g.edge_count
        self.floor = self.m // 2
        self.full = (1 << self.m) - 1
        self.reduction = reduction
        self.sym = symmetry_table(g, exact_vertex_limit) if reduction == "automorphism" else None
        self._cert = {}
        self._bounds = {}  # key -> (lo, hi) for A-to-move positions
        self._surv = {}  # key -> (max r known survivable, min r known lost)
        self.states_expanded = 0
        self.memo_hits = 0

    # -- helpers -----------------------------------------------------------

    def key(self, red: int, blue: int) -> int:
        if self.sym is None:
            return (red << self.m) | blue
        return self.sym.key(red, blue)

    def cert(self, mask: int):
        c = self._cert.get(mask)
        if c is None:
            es = from_mask(mask)
            if self.g.is_linear:
                full = self.g.family == "cycle" and len(es) == self.m
                c = (full, tuple(sorted(l for _, l in linear_runs(self.g, es))))
            else:
                c = edge_set_certificate([self.g.edges[e] for e in es])
            self._cert[mask] = c
        return c

    def iso(self, red: int, blue: int) -> bool:
        return _popcount(red) == _popcount(blue) and self.cert(red) == self.cert(blue)

    def _free(self, red: int, blue: int):
        occ = red | blue
        return [e for e in range(self.m) if not occ >> e & 1]

    def a_moves(self, red: int, blue: int) -> list:
        """A's moves, one per equivalence class of the resulting position."""
        out, seen = [], set()
        for e in self._free(red, blue):
            k = self.key(red | 1 << e, blue)
            if k not in seen:
                seen.add(k)
                out.append(e)
        return out

    def b_moves(self, red: int, blue: int) -> list:
        """B's isomorphism-keeping replies, one per equivalence class."""
        out, seen = [], set()
        for e in self._free(red, blue):
            nb = blue | 1 << e
            if not self.iso(red, nb):
                continue
            k = self.key(red, nb)
            if k not in seen:
                seen.add(k)
                out.append(e)
        return out

    def remaining(self, red: int) -> int:
        return self.floor - _popcount(red)

    # -- minmax: alpha-beta value --------------------------------------------

    def value(self, red: int = 0, blue: int = 0) -> int:
        """Rounds B still survives from an A-to-move position under optimal play."""
        return self._v(red, blue, -1, self.remaining(red) + 1)

    def half_value(self, red: int, blue: int) -> int:
        """Rounds B survives counting the round in progress (B to move)."""
        best = 0
        for e in self.b_moves(red, blue):
            best = max(best, 1 + self.value(red, blue | 1 << e))
            if best == self.remaining(red) + 1:
                break
        return best

    def _v(self, red, blue, alpha, beta):
        rem = self.remaining(red)
        if rem <= 0:
            return 0
        k = self.key(red, blue)
        lo, hi = self._bounds.get(k, (0, rem))
        if lo == hi:
            self.memo_hits += 1
            return lo
        if lo >= beta:
            self.memo_hits += 1
            return lo
        if hi <= alpha:
            self.memo_hits += 1
            return hi
        a0, b0 = max(alpha, lo), min(beta, hi)
        self.states_expanded += 1
        best = hi
        for a in self.a_moves(red, blue):
            r2 = red | 1 << a
            # B's reply: max over isomorphism-keeping edges
            h = 0
            for b in self.b_moves(r2, blue):
                h = max(h, 1 + self._v(r2, blue | 1 << b, max(a0, h) - 1, min(b0, best) - 1))
                if h >= min(b0, best):
                    break
            best = min(best, h)
            if best <= a0 or best <= lo:
                break
        if best <= a0:
            hi = min(hi, best)
        elif best >= b0:
            lo = max(lo, best)
        else:
            lo = hi = best
        self._bounds[k] = (lo, hi)
        return best

    # -- maxmin: B survives r rounds? --------------------------------------

    def b_survives(self, red: int, blue: int, r: int) -> bool:
        if r <= 0:
            return True
        if r > self.remaining(red):
            return False
        k = self.key(red, blue)
        yes, no = self._surv.get(k, (0, math.inf))
        if r <= yes:
            self.memo_hits += 1
            return True
        if r >= no:
            self.memo_hits += 1
            return False
        self.states_expanded += 1
        ok = True
        for a in self.a_moves(red, blue):
            r2 = red | 1 << a
            if not any(self.b_survives(r2, blue | 1 << b, r - 1) for b in self.b_moves(r2, blue)):
                ok = False
                break
        if ok:
            self._surv[k] = (max(yes, r), no)
        else:
            self._surv[k] = (yes, min(no, r))
        return ok

    def maxmin_value(self) -> int:
        r = 0
        while r < self.floor and self.b_survives(0, 0, r + 1):
            r += 1
        return r


class SymPlusSolver:
    """Exact values for Sym+(G); positions are the sets of (red, blue) round pairs."""

    def __init__(self, g: Graph, reduction: str = "automorphism", edge_budget: int = DEFAULT_EDGE_BUDGET,
                 exact_vertex_limit: int = 8):
        if g.edge_count > edge_budget:
            raise CapabilityError(f"{g.name} has {g.edge_count} edges (budget {edge_budget})")
        self.g = g
        self.m = g.edge_count
        self.floor = self.m // 2
        self.reduction = reduction
        if reduction == "automorphism":
            self.perms = symmetry_table(g, exact_vertex_limit).edge_perms
        else:
            self.perms = [tuple(range(self.m))]
        self._val = {}
        self._surv = {}
        self.states_expanded = 0
        self.memo_hits = 0

    def key(self, pairs) -> tuple:
        return min(tuple(sorted((p[a], p[b]) for a, b in pairs)) for p in self.perms)

    def _free(self, pairs, pending=None):
        used = {x for ab in pairs for x in ab}
        if pending is not None:
            used.add(pending)
        return [e for e in range(self.m) if e not in used]

    def _frontier(self, pairs):
        fr = WitnessFrontier(self.g)
        for a, b in pairs:
            if not fr.extend(a, b):
                return None
        return fr

    def a_moves(self, pairs):
        out, seen = [], set()
        for e in self._free(pairs):
            k = min(tuple(sorted((p[a], p[b]) for a, b in pairs)) + ((p[e],),) for p in self.perms)
            if k not in seen:
                seen.add(k)
                out.append(e)
        return out

    def b_moves(self, pairs, a, frontier=None):
        if frontier is None:
            frontier = self._frontier(pairs)
        out, seen = [], set()
        for e in self._free(pairs, a):
            fr = frontier.copy()
            if not fr.extend(a, e):
                continue
            k = self.key(pairs + ((a, e),))
            if k not in seen:
                seen.add(k)
                out.append(e)
        return out

    def value(self, pairs=()) -> int:
        pairs = tuple(pairs)
        rem = self.floor - len(pairs)
        if rem <= 0:
            return 0
        k = self.key(pairs)
        if k in self._val:
            self.memo_hits += 1
            return self._val[k]
        self.states_expanded += 1
        fr = self._frontier(pairs)
        best = rem
        for a in self.a_moves(pairs):
            h = 0
            for b in self.b_moves(pairs, a, fr):
                h = max(h, 1 + self.value(pairs + ((a, b),)))
                if h >= best:
                    break
            best = min(best, h)
            if best == 0:
                break
        self._val[k] = best
        return best

    def half_value(self, pairs, a) -> int:
        best = 0
        for b in self.b_moves(tuple(pairs), a):
            best = max(best, 1 + self.value(tuple(pairs) + ((a, b),)))
        return best

    def b_survives(self, pairs, r) -> bool:
        if r <= 0:
            return True
        if r > self.floor - len(pairs):
            return False
        k = self.key(pairs)
        yes, no = self._surv.get(k, (0, math.inf))
        if r <= yes:
            self.memo_hits += 1
            return True
        if r >= no:
            self.memo_hits += 1
            return False
        self.states_expanded += 1
        fr = self._frontier(pairs)
        ok = all(
            any(self.b_survives(pairs + ((a, b),), r - 1) for b in self.b_moves(pairs, a, fr))
            for a in self.a_moves(pairs)
        )
        self._surv[k] = (max(yes, r), no) if ok else (yes, min(no, r))
        return ok

    def maxmin_value(self) -> int:
        r = 0
        while r < self.floor and self.b_survives((), r + 1):
            r += 1
        return r


_SOLVER_CACHE = {}


def get_solver(g: Graph, variant: str = "sym", reduction: str = "automorphism",
               edge_budget: int = DEFAULT_EDGE_BUDGET):
    """Shared solver instance per (graph, variant, reduction)."""
    k = (g, variant, reduction)
    if k not in _SOLVER_CACHE:
        cls = SymSolver if variant == "sym" else SymPlusSolver
        if variant not in ("sym", "sym_plus"):
            raise ParameterError(f"unknown variant {variant!r}")
        _SOLVER_CACHE[k] = cls(g, reduction, edge_budget)
    return _SOLVER_CACHE[k]


def solve_sym(g: Graph, variant: str = "sym", order: str = "minmax", reduction: str = "automorphism",
              edge_budget: int = DEFAULT_EDGE_BUDGET, fresh: bool = False) -> SolveReport:
    """Length of Sym(G) / Sym+(G) under optimal play."""
    if order not in ("minmax", "maxmin"):
        raise ParameterError(f"unknown order {order!r}")
    if fresh:
        solver = (SymSolver if variant == "sym" else SymPlusSolver)(g, reduction, edge_budget)
    else:
        solver = get_solver(g, variant, reduction, edge_budget)
    t0 = time.perf_counter()
    s0, h0 = solver.states_expanded, solver.memo_hits
    if order == "minmax":
        v = solver.value()
    else:
        v = solver.maxmin_value()
    return SolveReport(v, solver.states_expanded - s0, solver.memo_hits - h0, time.perf_counter() - t0,
                       reduction, order, variant, g.name)


# ---------------------------------------------------------------------------
# strategy extraction


class OptimalStrategy(Strategy):
    """Plays a value-optimal move from the solved table; ties go to the lowest edge."""

    name = "optimal"

    def __init__(self, solver=None):
        self._solver = solver

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        if self._solver is None or self._solver.g != graph:
            self._solver = get_solver(graph, variant)

    def move(self, state):
        s = self._solver
        free = state.free_edges
        if self.variant == "sym":
            red, blue = to_mask(state.red), to_mask(state.blue)
            if state.to_move == "A":
                scored = [(s.half_value(red | 1 << e, blue), e) for e in free]
                return min(scored)[1]
            best, choice = -1, None
            for e in free:
                nb = blue | 1 << e
                if s.iso(red, nb):
                    v = 1 + s.value(red, nb)
                    if v > best:
                        best, choice = v, e
            return free[0] if choice is None else choice
        pairs = tuple(zip(state.red_moves, state.blue_moves))
        if state.to_move == "A":
            return min((s.half_value(pairs, e), e) for e in free)[1]
        a = state.red_moves[-1]
        best, choice = -1, None
        for e in free:
            fr = state.witnesses.copy()
            if fr.extend(a, e):
                v = 1 + s.value(pairs + ((a, e),))
                if v > best:
                    best, choice = v, e
        return free[0] if choice is None else choice


def optimal_strategy(g: Graph, side: str, variant: str = "sym", edge_budget: int = DEFAULT_EDGE_BUDGET):
    """Value-optimal strategy for either side; raises CapabilityError if ``g`` is too large."""
    if side not in ("A", "B"):
        raise ParameterError("side must be 'A' or 'B'")
    strat = OptimalStrategy(get_solver(g, variant, edge_budget=edge_budget))
    strat.name = f"optimal-{side}"
    return strat


# ---------------------------------------------------------------------------
# Ehrenfeucht-Fraisse


def _distances(g: Graph):
    out = []
    for s in range(g.vertex_count):
        d = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adjacency[v]:
                if w not in d:
                    d[w] = d[v] + 1
                    q.append(w)
        out.append(d)
    return out


def graphs_isomorphic(g0: Graph, g1: Graph) -> bool:
    if g0.vertex_count != g1.vertex_count or g0.edge_count != g1.edge_count:
        return False
    if g0.edge_count == 0:
        return True
    iso_edges = edge_graph_isomorphic(g0.edges, g1.edges)
    # isolated vertices are outside the edge-induced subgraphs; their counts agree because both totals do
    return iso_edges


class EFSolver:
    """Exact duplicator-optimal length of EF(g0, g1)."""

    def __init__(self, g0: Graph, g1: Graph, reduction: bool = True, vertex_budget: int = DEFAULT_EF_BUDGET,
                 round_limit=None):
        total = g0.vertex_count + g1.vertex_count
        if total > vertex_budget:
            raise CapabilityError(f"EF on {g0.name}, {g1.name}: {total} vertices exceeds budget {vertex_budget}")
        self.g0, self.g1 = g0, g1
        self.limit = default_ef_limit(g0, g1) if round_limit is None else round_limit
        self.isomorphic = graphs_isomorphic(g0, g1)
        if reduction:
            a0, a1 = automorphisms(g0), automorphisms(g1)
            self.perms = [(p, q) for p in a0 for q in a1]
        else:
            self.perms = [(tuple(range(g0.vertex_count)), tuple(range(g1.vertex_count)))]
        self.d0, self.d1 = _distances(g0), _distances(g1)
        self._surv = {}
        self.states_expanded = 0
        self.memo_hits = 0

    def key(self, pairs) -> tuple:
        return min(tuple(sorted((p[x], q[y]) for x, y in pairs)) for p, q in self.perms)

    def answers(self, pairs, side, v) -> list:
        """Duplicator answers keeping a partial isomorphism, most promising first."""
        gs = (self.g0, self.g1)
        other = gs[1 - side]
        for p in pairs:
            if p[side] == v:
                return [p[1 - side]]
        used = {p[1 - side] for p in pairs}
        ds = (self.d0, self.d1)
        out = []
        for w in range(other.vertex_count):
            if w in used:
                continue
            pair = (v, w) if side == 0 else (w, v)
            if not is_partial_isomorphism(self.g0, self.g1, list(pairs) + [pair]):
                continue
            score = 0
            for p in pairs:
                da = ds[side][v].get(p[side], 99)
                db = ds[1 - side][w].get(p[1 - side], 99)
                score += abs(min(da, 9) - min(db, 9))
            out.append((score, w))
        return [w for _, w in sorted(out)]

    def spoiler_moves(self, pairs) -> list:
        out = []
        for side, g in ((0, self.g0), (1, self.g1)):
            used = {p[side] for p in pairs}
            out.extend((side, v) for v in range(g.vertex_count) if v not in used)
        return out

    def dup_survives(self, pairs, r) -> bool:
        if r <= 0:
            return True
        if self.isomorphic:
            return True
        k = self.key(pairs)
        yes, no = self._surv.get(k, (0, math.inf))
        if r <= yes:
            self.memo_hits += 1
            return True
        if r >= no:
            self.memo_hits += 1
            return False
        self.states_expanded += 1
        ok = True
        seen = set()
        for side, v in self.spoiler_moves(pairs):
            found = False
            for w in self.answers(pairs, side, v):
                pair = (v, w) if side == 0 else (w, v)
                nxt = tuple(pairs) + (pair,)
                nk = self.key(nxt)
                if nk in seen:
                    found = True
                    break
                if self.dup_survives(nxt, r - 1):
                    seen.add(nk)
                    found = True
                    break
            if not found:
                ok = False
                break
        self._surv[k] = (max(yes, r), no) if ok else (yes, min(no, r))
        return ok

    def position_value(self, pairs, cap) -> int:
        """Largest r <= cap the duplicator survives from ``pairs``."""
        if self.isomorphic:
            return cap
        r = 0
        while r < cap and self.dup_survives(tuple(pairs), r + 1):
            r += 1
        return r

    def value(self) -> int:
        return self.position_value((), self.limit)


def solve_ef(g0: Graph, g1: Graph, reduction: bool = True, vertex_budget: int = DEFAULT_EF_BUDGET,
             round_limit=None) -> SolveReport:
    t0 = time.perf_counter()
    s = _ef_solver(g0, g1, reduction, vertex_budget, round_limit)
    s0, h0 = s.states_expanded, s.memo_hits
    v = s.value()
    return SolveReport(v, s.states_expanded - s0, s.memo_hits - h0, time.perf_counter() - t0,
                       "automorphism" if reduction else "none", "maxmin", "ef", f"{g0.name}|{g1.name}")


_EF_CACHE = {}


def _ef_solver(g0, g1, reduction=True, vertex_budget=DEFAULT_EF_BUDGET, round_limit=None) -> EFSolver:
    k = (g0, g1, reduction, round_limit)
    if k not in _EF_CACHE:
        _EF_CACHE[k] = EFSolver(g0, g1, reduction, vertex_budget, round_limit)
    return _EF_CACHE[k]


def _unique_pairs(pairs):
    out = []
    for p in pairs:
        if p not in out:
            out.append(p)
    return tuple(out)


class OptimalDuplicator(EFDuplicator):
    name = "optimal-duplicator"

    def __init__(self, vertex_budget: int = DEFAULT_EF_BUDGET):
        self.vertex_budget = vertex_budget

    def start(self, g0, g1, seed=0):
        super().start(g0, g1, seed)
        self.solver = _ef_solver(g0, g1, vertex_budget=self.vertex_budget)

    def move(self, state, side, vertex):
        s = self.solver
        pairs = _unique_pairs(state.pairs)
        cap = s.limit - state.round - 1
        best, choice = -1, None
        for w in s.answers(pairs, side, vertex):
            pair = (vertex, w) if side == 0 else (w, vertex)
            v = s.position_value(_unique_pairs(pairs + (pair,)), cap)
            if v > best or (v == best and w < choice):
                best, choice = v, w
        if choice is None:
            return 0
        return choice


class OptimalSpoiler(EFSpoiler):
    name = "optimal-spoiler"

    def __init__(self, vertex_budget: int = DEFAULT_EF_BUDGET):
        self.vertex_budget = vertex_budget

    def start(self, g0, g1, seed=0):
        super().start(g0, g1, seed)
        self.solver = _ef_solver(g0, g1, vertex_budget=self.vertex_budget)

    def move(self, state):
        s = self.solver
        pairs = _unique_pairs(state.pairs)
        cap = s.limit - state.round - 1
        best, choice = math.inf, None
        for side, v in s.spoiler_moves(pairs):
            worst = -1
            for w in s.answers(pairs, side, v):
                pair = (v, w) if side == 0 else (w, v)
                worst = max(worst, s.position_value(_unique_pairs(pairs + (pair,)), cap))
                if worst >= best:
                    break
            if worst < best:
                best, choice = worst, (side, v)
        if choice is None:
            return (0, 0)
        return choice


# ---------------------------------------------------------------------------
# inequalities between Sym and EF


def contains_triangle(g: Graph) -> bool:
    adj = g.adjacency
    return any(adj[u] & adj[v] for u, v in g.edges)


def check_sym_ef_inequality(g0: Graph, g1: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET,
                            vertex_budget: int = DEFAULT_EF_BUDGET) -> dict:
    """Evaluate L(Sym(G1)) >= min{L(Ef(G0,G1))/4, L(Sym(G0))} from exact values.

    When ``g1`` has no triangle the line-graph variant with factor 1/2 is
    evaluated as well.
    """
    l0 = solve_sym(g0, edge_budget=edge_budget).value
    l1 = solve_sym(g1, edge_budget=edge_budget).value
    ef = solve_ef(g0, g1, vertex_budget=vertex_budget).value
    rhs = min(ef / 4, l0)
    report = {
        "g0": g0.name,
        "g1": g1.name,
        "sym_g0": l0,
        "sym_g1": l1,
        "ef": ef,
        "logical_rhs": rhs,
        "logical_holds": l1 >= rhs,
    }
    if not contains_triangle(g1):
        lg0, _ = line_graph(g0)
        lg1, _ = line_graph(g1)
        ef_line = solve_ef(lg0, lg1, vertex_budget=vertex_budget).value
        crhs = min(ef_line / 2, l0)
        report.update({"ef_line": ef_line, "combinatorial_rhs": crhs, "combinatorial_holds": l1 >= crhs})
    return report
