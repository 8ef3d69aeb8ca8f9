"""A's strategy on odd cycles, built on the path breaker's series machinery.

Series 1 plays a red run ``A_1`` of length ``t - 1``; B must answer with a
blue run ``A'_1`` of the same length.  The two runs cut the cycle into two
gaps whose lengths have different parity (``n`` is odd).  The breaker then
reads the cycle as a line that starts at ``A'_1``, passes the other gap and
``A_1``, and ends with the gap it attacks, so that ``A'_1`` plays the role of
the path's left end and the cycle closes just after line position ``n``.

From there Phase 1 continues as on the path (``s_j = phi(f_{j-1})``,
ascending or descending series), but the search for a distinctive pair is
generic: after every series all pairs of red components are tested, and the
blue condition uses distances that only walk uncoloured edges of the real
cycle.  Phase 2 is shared with the path breaker.  None of the path proof's
claims are asserted here; the ledger only records events.
"""

from __future__ import annotations

from ..errors import ParameterError
from ..graphs import UNREACHABLE, component_distance
from .breaker_path import SeriesBreaker, _Stuck, compact_t, phi_step
from .series import DistinctivePair, SeriesRecord, colored_between

# exact play is cheap up to here; the series program needs room for A_1 and two gaps
CYCLE_OPTIMAL_MAX_N = 15


def cycle_t(n: int) -> int:
    """Series length for cycles: A_1 and A'_1 together take about half of C_n."""
    return compact_t(n // 2 | 1)


def cycle_case(l1: int) -> int:
    """Which case of the cycle strategy applies to the longer gap length ``l1``."""
    return 1 if l1 % 2 == 1 else 2


class BreakerCycle(SeriesBreaker):
    """A on odd C_n; ``ledger`` (non-strict) records series, pairs and events."""

    name = "breaker-cycle"
    family = "cycle"

    def __init__(self, t=None, strict: bool = False, optimal_max_n: int = CYCLE_OPTIMAL_MAX_N,
                 attack: str = "long"):
        super().__init__(t=t, strict=strict, optimal_max_n=optimal_max_n)
        if attack not in ("odd", "long"):
            raise ValueError(f"unknown attack rule {attack!r}")
        self.attack = attack

    def start(self, graph, side, seed=0, variant="sym"):
        if self._t is None:
            self._t_default = True
            self._t = cycle_t(graph.edge_count)
        super().start(graph, side, seed, variant)
        if getattr(self, "_t_default", False):
            self._t = None
            self.ledger.t = self.t
        self.offset, self.sign = 0, 1
        # the line is oriented around A'_1, never reflected as a whole
        self.ledger.regime = False

    # -- line <-> cycle -------------------------------------------------------

    def _to_edge(self, p: int) -> int:
        return (self.offset + self.sign * (p - 1)) % self.n

    def _from_edge(self, e: int) -> int:
        return (self.sign * (e - self.offset)) % self.n + 1

    def _reorient(self, offset: int, sign: int):
        recs = self.ledger.records
        moves = [([self._to_edge(p) for p in r.a_moves], [self._to_edge(p) for p in r.b_moves]) for r in recs]
        self.offset, self.sign = offset, sign
        self._refresh(self.state)
        for r, (a, b) in zip(recs, moves):
            r.a_moves = [self._from_edge(e) for e in a]
            r.b_moves = [self._from_edge(e) for e in b]
            if r.comp is not None:
                self._close(r)

    def _edges(self, iv) -> list:
        return [self._to_edge(p) for p in range(iv.lo, iv.hi + 1)]

    def _conditions(self, cp: DistinctivePair) -> tuple:
        c1 = cp.distance != 2
        c2 = not colored_between(self.colored, cp.c, cp.d)
        d = component_distance(self.graph, self._edges(cp.c_prime), self._edges(cp.d_prime),
                               mode="unchosen_only", occupied=self.state.red | self.state.blue)
        c3 = d is UNREACHABLE or d != cp.distance
        return c1, c2, c3

    def _close(self, rec: SeriesRecord):
        if 1 in self.blue and self.n in self.blue:
            raise _Stuck("a blue run wraps around the line's ends")
        super()._close(rec)

    # -- the program -----------------------------------------------------------

    def _program(self):
        L = self.ledger
        n, t = self.n, self.t
        recs = L.records
        rec = SeriesRecord(1, "one", case="first")
        recs.append(rec)
        sb = yield from self._a(rec, 1)
        if sb - 1 < n - sb:
            # grow A_1 away from B's first edge
            self._reorient(self._to_edge(1), -self.sign)
        for p in range(2, t):
            yield from self._a(rec, p)
        self._close(rec)
        red, blue = rec.comp, rec.comp_b
        inner = blue.lo - red.hi - 1  # gap from A_1 forwards to A'_1
        outer = n - blue.hi  # gap from A'_1 forwards back to A_1
        if self.attack == "odd":
            forward = inner % 2 == 1
        else:
            forward = inner > outer
        if forward:
            self._reorient(self._to_edge(blue.lo), self.sign)
        else:
            self._reorient(self._to_edge(blue.hi), -self.sign)
        l1 = inner if forward else outer
        l2 = outer if forward else inner
        L.event("orient", l1=l1, l2=l2)
        rec.case = f"cycle-{cycle_case(l1)}"
        front = recs[0].comp.hi
        pair = None
        j = 1
        if l1 % 2 == 0 and l1 > l2:
            # Case 2: open A_2 on I_1 at distance (l_2 - 1)/2 from A_1 so that
            # B's copy of it on I_1 pins the centre of I_2 for series 3
            j = 2
            a1 = recs[0].comp
            s = a1.hi + 1 + (l2 - 1) // 2
            rec = SeriesRecord(2, "one", case="cycle-2")
            recs.append(rec)
            sb = yield from self._a(rec, s)
            for p in range(s + 1, min(s + t - 3, n) + 1):
                yield from self._a(rec, p)
            self._close(rec)
            if sb == n - (l2 - 1) // 2:
                rec.note = "B copied s_2 from A'_1; switching to I_2"
                self._reorient(self._to_edge(t - 1), -self.sign)
                front = recs[0].comp.hi
            else:
                front = rec.comp.hi
                try:
                    pair = self._generic_pair()
                except _Stuck:
                    pass
        while pair is None:
            j += 1
            if t - j <= 0:
                raise _Stuck("series length t-j exhausted in Phase 1")
            s = phi_step(n, front)
            rec = SeriesRecord(j, "one")
            recs.append(rec)
            sb = yield from self._a(rec, s)
            if sb < s:
                rule, f = self._rules(s, j)
                rec.rule = rule
                rec.case = "1"
                for p in range(s + 1, f + 1):
                    yield from self._a(rec, p)
            else:
                rec.case = "2"
                fj = max(front + 2, s - t + j + 1)
                if fj == front + 3:
                    fj = front + 4
                if fj > s:
                    fj = front + 2
                for p in range(s - 1, fj - 1, -1):
                    yield from self._a(rec, p)
            self._close(rec)
            front = max(front, rec.comp.hi)
            try:
                pair = self._generic_pair()
            except _Stuck:
                if front >= n - 2:
                    raise
        L.l = len(recs)
        L.t_prime = recs[-1].comp.size
        L.phase = "two"
        cp = self._make_pair(pair)
        self._check_pair(cp, "claim2")
        yield from self._phase2(cp)


def breaker_cycle_strategy(n: int, **kw) -> BreakerCycle:
    if n % 2 == 0:
        raise ParameterError("breaker_cycle_strategy needs odd n")
    return BreakerCycle(**kw)
