"""A's two-phase strategy on odd paths, with the proof's claims checked at runtime.

Phase 1 plays series of moves building red components of strictly
decreasing length ``t - j`` from the middle of the path towards its right
end until a distinctive pair appears.  Phase 2 halves the distance inside a
distinctive pair until it is 1; the edge in between then wins.

Because red component lengths are pairwise distinct and B must keep the red
and blue run-length multisets equal, B's reply pattern is forced (open a new
component at the start of a series, extend it afterwards); only positions
are free.  The blue counterpart of a red component is therefore the blue run
B built during the same series.
"""

from __future__ import annotations

import itertools
import math

from ..engine import Strategy
from ..errors import ParameterError
from .fallback import FallbackA
from .series import (DistinctivePair, Interval, SeriesLedger, SeriesRecord, between, colored_between, gap,
                     run_containing)

# the asymptotic parameters need n > 14 t, i.e. n >= 869
OPTIMAL_MAX_N = 13


class _Stuck(Exception):
    """The program has no prescribed move in the current position."""


def asymptotic_t(n: int) -> int:
    return 4 * math.ceil(math.log2(n)) + 22


def in_asymptotic_regime(n: int) -> bool:
    return n > 14 * asymptotic_t(n)


def compact_t(n: int) -> int:
    """Series-length parameter for odd n below the asymptotic regime.

    Component lengths must stay distinct and larger than the number of
    series still to come, so ``t`` is kept above ``ceil(log n)`` plus a
    margin for Phase 2, while ``A_1`` (length t-1) must fit into the right
    half with room to spare.
    """
    if in_asymptotic_regime(n):
        return asymptotic_t(n)
    return max(3, min(asymptotic_t(n), (n - 1) // 2 - 2))


def phi_step(n: int, x: int) -> int:
    """phi(x) = x + ceil((n - x) / 2)."""
    return x + -(-(n - x) // 2)


class SeriesBreaker(Strategy):
    """Series machinery shared by the path and cycle breakers.

    Subclasses provide ``_program`` (a generator yielding line positions and
    receiving B's replies) and the line <-> edge mapping.
    """

    family = None

    def __init__(self, t=None, strict: bool = True, optimal_max_n: int = OPTIMAL_MAX_N):
        self._t = t
        self.strict = strict
        self.optimal_max_n = optimal_max_n

    # -- plumbing -----------------------------------------------------------

    def start(self, graph, side, seed=0, variant="sym"):
        super().start(graph, side, seed, variant)
        if graph.family != self.family or graph.edge_count % 2 == 0:
            raise ParameterError(f"{self.name} needs an odd {self.family}")
        self.n = n = graph.edge_count
        self.t = self._t if self._t is not None else compact_t(n)
        regime = in_asymptotic_regime(n) and self.t == asymptotic_t(n)
        self.ledger = SeriesLedger(n, self.t, strict=self.strict, regime=regime)
        self.mirrored = False
        self._gen = None
        self._fallback = None
        self._optimal = None
        if n <= self.optimal_max_n:
            from ..solver import optimal_strategy

            self._optimal = optimal_strategy(graph, "A", variant)
            self._optimal.start(graph, "A", seed, variant)
            self.ledger.event("optimal_fallback", reason=f"n={n} <= {self.optimal_max_n}")

    def _to_edge(self, p: int) -> int:
        return self.n - p if self.mirrored else p - 1

    def _from_edge(self, e: int) -> int:
        return self.n - e if self.mirrored else e + 1

    def _refresh(self, state):
        self.state = state
        self.red = {self._from_edge(e) for e in state.red}
        self.blue = {self._from_edge(e) for e in state.blue}
        self.colored = self.red | self.blue

    def _last_b(self):
        bm = self.state.blue_moves
        return self._from_edge(bm[-1]) if bm else None

    def move(self, state):
        if self._optimal is not None:
            return self._optimal.move(state)
        if self._fallback is not None:
            return self._fallback.move(state)
        self._refresh(state)
        try:
            if self._gen is None:
                self._gen = self._program()
                p = next(self._gen)
            else:
                p = self._gen.send(self._last_b())
            e = self._to_edge(p)
            if not state.is_legal(e):
                raise _Stuck(f"planned edge {p} is not free")
            return e
        except (_Stuck, StopIteration) as exc:
            reason = str(exc) if isinstance(exc, _Stuck) else "program finished"
            self.ledger.fallback = {"round": state.round + 1, "reason": reason}
            self._fallback = FallbackA(self.graph)
            return self._fallback.move(state)

    # -- one A move inside a series -----------------------------------------

    def _a(self, rec: SeriesRecord, p: int):
        if p in self.colored or not 1 <= p <= self.n:
            raise _Stuck(f"planned edge {p} unavailable in series {rec.j}")
        rec.a_moves.append(p)
        b = yield p
        rec.b_moves.append(b)
        return b

    def _close(self, rec: SeriesRecord):
        rec.comp = run_containing(self.red, rec.a_moves[-1])
        rec.s, rec.f = rec.a_moves[0], rec.a_moves[-1]
        rec.s_b, rec.f_b = rec.b_moves[0], rec.b_moves[-1]
        rec.comp_b = run_containing(self.blue, rec.b_moves[-1])
        rec.conforming = all(b in rec.comp_b for b in rec.b_moves) and rec.comp_b.size == rec.comp.size \
            and rec.comp.size == len(rec.a_moves)
        self.ledger.check("series_component", rec.comp.size == len(rec.a_moves),
                          f"series {rec.j} moves do not form one component {rec.comp}")
        for old in self.ledger.records[:-1]:
            if old.comp is None or old.comp_b is None:
                continue
            if run_containing(self.red, old.comp.lo) != old.comp or old.comp_b.lo not in self.blue \
                    or run_containing(self.blue, old.comp_b.lo) != old.comp_b:
                rec.conforming = False
                raise _Stuck(f"series {rec.j} changed the component of series {old.j}")

    def _rules(self, s: int, j: int):
        n, t = self.n, self.t
        if n - (s - 1) <= t - j:
            return "1", n
        if n - (phi_step(n, s + t - j - 1) - 1) >= t - (j + 1):
            return "2", s + t - j - 1
        f = s
        while not n - phi_step(n, f) < f - s:
            f += 1
        return "3", f

    def _make_pair(self, pair) -> DistinctivePair:
        recs = self.ledger.records
        x, y = recs[pair[0] - 1], recs[pair[1] - 1]
        if x.comp.lo > y.comp.lo:
            x, y = y, x
        return DistinctivePair(x.comp, y.comp, x.comp_b, y.comp_b, gap(x.comp, y.comp))

    def _conditions(self, cp: DistinctivePair) -> tuple:
        return cp.conditions(self.colored)

    def _check_pair(self, cp: DistinctivePair, claim: str) -> bool:
        c1, c2, c3 = self._conditions(cp)
        L = self.ledger
        L.pairs.append(cp)
        ok = L.check(f"{claim}.cond1", c1, f"d={cp.distance}")
        ok &= L.check(f"{claim}.cond2", c2, f"coloured edge between {cp.c} and {cp.d}")
        ok &= L.check(f"{claim}.cond3", c3, f"blue {cp.c_prime},{cp.d_prime} at the same distance, nothing between")
        return ok

    def _generic_pair(self):
        """Any distinctive pair among the Phase-1 components (used off the proof's path)."""
        recs = self.ledger.records
        for i in range(len(recs) - 1, 0, -1):
            for k in range(i - 1, -1, -1):
                cp = self._make_pair((recs[k].j, recs[i].j))
                if all(self._conditions(cp)):
                    self.ledger.event("generic_pair", series=(recs[k].j, recs[i].j))
                    return (recs[k].j, recs[i].j)
        raise _Stuck("no distinctive pair")

    def _round_budget_check(self):
        L = self.ledger
        played = len(self.state.red_moves)
        k = math.floor(L.log_n) + 2
        budget = sum(self.t - j for j in range(1, k + 1)) + 1
        L.check("round_budget", played <= budget, f"{played} rounds > {budget}")

    # -- Phase 2 -------------------------------------------------------------

    def _phase2(self, cp: DistinctivePair):
        L = self.ledger
        recs = L.records
        tp = L.t_prime
        d0 = cp.distance
        j = 0
        while True:
            if cp.distance == 1:
                L.phase = "last_move"
                L.event("last_move", edge=cp.c.hi + 1)
                rec = SeriesRecord(len(recs) + 1, "last", case="last")
                recs.append(rec)
                yield from self._a(rec, cp.c.hi + 1)
                raise _Stuck("B survived the last move")
            if cp.distance == 2:
                raise _Stuck("pair at distance 2")
            j += 1
            a, b = cp.c.hi, cp.d.lo
            s = (a + b) // 2  # ceil((a + b - 1) / 2)
            rec = SeriesRecord(len(recs) + 1, "two")
            recs.append(rec)
            prev_size = recs[-2].comp.size
            span = tp - j - 1
            sb = yield from self._a(rec, s)
            if a < sb < s:
                rec.case = "1"
                f = min(b - 2, s + span)
                if s + span == b - 3:
                    f = b - 4
                f = max(f, s)
                for p in range(s + 1, f + 1):
                    yield from self._a(rec, p)
                self._close(rec)
                new = DistinctivePair(rec.comp, cp.d, rec.comp_b, cp.d_prime, gap(rec.comp, cp.d))
            elif s < sb < b:
                rec.case = "2"
                f = max(a + 2, s - span)
                if s - span == a + 3:
                    f = a + 4
                f = min(f, s)
                for p in range(s - 1, f - 1, -1):
                    yield from self._a(rec, p)
                self._close(rec)
                new = DistinctivePair(cp.c, rec.comp, cp.c_prime, rec.comp_b, gap(cp.c, rec.comp))
            else:
                rec.case = "3"
                new = yield from self._case3(rec, cp, tp - j)
            L.check("claim4.1", new.distance <= cp.distance / 2, f"{new.distance} vs {cp.distance}")
            L.check("claim4.2", new.distance <= d0 / 2 ** j, f"{new.distance} vs d0={d0}, j={j}")
            L.check("claim4.3", j < L.log_n - 1, f"j={j}")
            L.check("claim4.4", rec.comp.size < prev_size, f"|A|={rec.comp.size} vs {prev_size}")
            sizes = [r.comp.size for r in recs]
            L.check("eq_alpha", all(x > y for x, y in zip(sizes, sizes[1:])), f"sizes {sizes}")
            self._round_budget_check()
            self._check_pair(new, "claim5")
            if not all(self._conditions(new)):
                raise _Stuck("Phase-2 pair is not distinctive")
            cp = new

    def _case3(self, rec: SeriesRecord, cp: DistinctivePair, target: int):
        L = self.ledger
        s = rec.a_moves[0]
        inside = lambda p: cp.c.hi + 1 < p < cp.d.lo - 1  # noqa: E731 - keeps distance >= 1 to C and D

        def alternating():
            for k in itertools.count(1):
                if not inside(s + k) and not inside(s - k):
                    return
                yield s + k
                yield s - k

        order = alternating()
        while True:
            comp = run_containing(self.red, s)
            dl, dr = gap(cp.c, comp), gap(comp, cp.d)
            hits = []
            if dl == 1 and dr == 1:
                hits.append(1)
            if comp.size == target and dl != 2 and dr != 2:
                hits.append(2)
            if target - 3 <= comp.size < target and dl == 3 and dr == 3:
                hits.append(3)
            if hits:
                if len(hits) > 1:
                    L.event("case3_tie", situations=hits, series=rec.j)
                rec.note = f"situation {hits[0]}"
                break
            p = next((p for p in order if inside(p)), None)
            if p is None:
                rec.note = "no room left"
                break
            yield from self._a(rec, p)
        self._close(rec)
        left = DistinctivePair(cp.c, rec.comp, cp.c_prime, rec.comp_b, gap(cp.c, rec.comp))
        right = DistinctivePair(rec.comp, cp.d, rec.comp_b, cp.d_prime, gap(rec.comp, cp.d))
        for cand in (left, right):
            if all(self._conditions(cand)):
                return cand
        L.check("claim5.case3", False, "neither new pair is distinctive")
        return left


class BreakerPath(SeriesBreaker):
    """A on odd P_n; ``ledger`` holds every series and every checked claim."""

    name = "breaker-path"
    family = "path"

    # -- the program -------------------------------------------------------

    def _program(self):
        L = self.ledger
        n, t = self.n, self.t
        recs = L.records
        s1 = (n + 1) // 2
        rec = SeriesRecord(1, "one", case="first")
        recs.append(rec)
        sb = yield from self._a(rec, s1)
        if sb > s1:
            self.mirrored = True
            L.mirrored = True
            self._refresh(self.state)
            rec.b_moves[-1] = sb = self._last_b()
        for p in range(s1 + 1, s1 + t - 1):
            yield from self._a(rec, p)
        self._close(rec)
        self._phase1_checks(1, last=False)
        pair = None
        j = 1
        while pair is None:
            j += 1
            if t - j <= 0:
                raise _Stuck("series length t-j exhausted in Phase 1")
            prev = recs[-1]
            s = phi_step(n, prev.f)
            rec = SeriesRecord(j, "one")
            recs.append(rec)
            sb = yield from self._a(rec, s)
            if sb < s:
                rule, f = self._rules(s, j)
                rec.rule = rule
                for p in range(s + 1, f + 1):
                    yield from self._a(rec, p)
                self._close(rec)
                if prev.f < sb < s:
                    rec.case = "1-a"
                    if f < n:
                        self._phase1_checks(j, last=False)
                        continue
                    L.check("subcase1a_end", False, "B kept isomorphism although A_j reached edge n")
                    pair = self._generic_pair()
                else:
                    rec.case = "1-b"
                    ok4, q = self._condition4(j - 1)
                    lo_wall = recs[q - 2].comp.hi if q >= 2 else 0
                    hi_wall = recs[q - 1].comp.lo
                    if not between(rec.comp_b, lo_wall, hi_wall):
                        pair = (j - 1, j)
                        rec.note = "A'_j outside the gap of q"
                    elif gap(rec.comp_b, recs[j - 2].comp_b) != gap(rec.comp, prev.comp):
                        pair = (j - 1, j)
                        rec.note = "d(A'_j, A'_{j-1}) differs"
                    elif not self._condition4(j)[0]:
                        pair = (j - 1, j - 2)
                        rec.note = "Condition 4 violated for m=j"
                    elif f == n:
                        L.check("subcase1b_end", False, "Condition 4 holds although f_j = n")
                        pair = self._generic_pair()
                    else:
                        self._phase1_checks(j, last=False)
                        continue
            else:
                rec.case = "2"
                fj = max(prev.f + 2, s - t + j + 1)
                if fj == prev.f + 3:
                    fj = prev.f + 4
                if fj > s:
                    # only possible when s = f_{j-1} + 3: stop at distance 1 instead of 2
                    fj = prev.f + 2
                    rec.note = "short gap: descended to distance 1"
                for p in range(s - 1, fj - 1, -1):
                    yield from self._a(rec, p)
                self._close(rec)
                pair = (j - 1, j)
            self._phase1_checks(j, last=True)
        l = len(recs)
        L.l = l
        L.t_prime = recs[-1].comp.size
        L.check("claim3.1", l <= math.ceil(L.log_n), f"l={l}")
        L.check("claim3.2", L.t_prime > L.log_n + 4, f"t'={L.t_prime}")
        L.phase = "two"
        cp = self._make_pair(pair)
        if not self._check_pair(cp, "claim2"):
            cp = self._make_pair(self._generic_pair())
        yield from self._phase2(cp)

    # -- Phase 1 conditions and Claim 1 ----------------------------------------

    def _condition4(self, m: int):
        """Condition 4 for ``m``: returns (holds, q)."""
        recs = self.ledger.records
        bm = recs[m - 1].comp_b
        q = None
        for k in range(1, m + 1):
            lo_wall = recs[k - 2].comp.hi if k >= 2 else 0
            if between(bm, lo_wall, recs[k - 1].comp.lo):
                q = k
                break
        if q is None:
            return False, m
        lo_wall = recs[q - 2].comp.hi if q >= 2 else 0
        hi_wall = recs[q - 1].comp.lo
        blues = [recs[p - 1].comp_b for p in range(q, m + 1)]
        if not all(between(b, lo_wall, hi_wall) for b in blues):
            return False, q
        los = [b.lo for b in blues]
        if not (all(x < y for x, y in zip(los, los[1:])) or all(x > y for x, y in zip(los, los[1:]))):
            return False, q
        for p in range(q + 1, m + 1):
            if gap(recs[p - 2].comp_b, recs[p - 1].comp_b) != gap(recs[p - 2].comp, recs[p - 1].comp):
                return False, q
        return True, q

    def _phase1_checks(self, j: int, last: bool):
        L = self.ledger
        n = self.n
        recs = L.records
        A = [r.comp for r in recs]
        rec = recs[j - 1]
        if not rec.conforming:
            L.skip("convention")
        # Claim 1
        if j >= 3:
            d1, d0 = gap(A[j - 1], A[j - 2]), gap(A[j - 2], A[j - 3])
            L.check("claim1.1", d1 < d0 / 2, f"d(A_{j},A_{j-1})={d1}, d(A_{j-1},A_{j-2})={d0}")
        if j >= 2:
            d1 = gap(A[j - 1], A[j - 2])
            L.check("claim1.2", d1 < n / 2 ** (j - 1), f"d={d1}, j={j}")
            L.check("claim1.4", A[j - 1].size < A[j - 2].size, f"|A_{j}|={A[j - 1].size}, |A_{j-1}|={A[j - 2].size}")
        L.check("claim1.3", j <= math.ceil(L.log_n), f"j={j}")
        L.check("claim1.5", A[j - 1].size > L.log_n + 4, f"|A_{j}|={A[j - 1].size}")
        sizes = [a.size for a in A]
        L.check("eq_alpha", all(x > y for x, y in zip(sizes, sizes[1:])), f"sizes {sizes}")
        self._round_budget_check()
        if last:
            return
        # Conditions 0-5 for m = j (Claim 1, item 6)
        m = j
        L.check("cond0", all(x > y for x, y in zip(sizes, sizes[1:])), f"sizes {sizes}")
        L.check("cond1", n - rec.f > 2, f"f_{m}={rec.f}")
        L.check("cond2", all(e <= rec.f for e in self.colored), "coloured edge right of f_m")
        asc = all(r.s == r.comp.lo and r.f == r.comp.hi for r in recs) and \
            all(x.comp.hi < y.comp.lo for x, y in zip(recs, recs[1:]))
        L.check("cond3", asc, "components not ascending with s_p, f_p as end edges")
        if all(r.conforming for r in recs):
            L.check("cond4", self._condition4(m)[0], f"m={m}")
        else:
            L.skip("cond4")
        L.check("cond5", all(n - (recs[p - 1].s - 1) > gap(A[p - 2], A[p - 1]) for p in range(2, m + 1)),
                "n-(s_p-1) <= d(A_{p-1},A_p)")


def breaker_path_strategy(n: int, **kw) -> BreakerPath:
    if n % 2 == 0:
        raise ParameterError("breaker_path_strategy needs odd n")
    return BreakerPath(**kw)
