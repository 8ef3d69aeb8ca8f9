"""The eleven acceptance criteria as executable checks.

Each ``criterion_k`` returns a :class:`CriterionResult` whose ``detail``
carries the measured numbers, so a red result explains itself.  Nothing is
weakened to make a check pass: where a criterion cannot hold as stated the
check stays red and ``detail`` says why.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .engine import play_sym
from .fo_logic import build_phi_k, evaluate
from .graphs import make_graph, subgraphs_isomorphic
from .oracles import all_graphs, complete_subset_classes, exhaustive_min_survival
from .solver import check_sym_ef_inequality, optimal_strategy, solve_ef, solve_sym
from .strategies import (AdversarialRandomA, BipartiteB, BreakerCycle, BreakerPath, GreedyCopyB, RandomStrategy,
                         mirror_strategy, translated_for, verify_breaker_complete)
from .strategies.bipartite import guaranteed_rounds

CORPUS = ([make_graph("path", n) for n in range(2, 10)] + [make_graph("cycle", n) for n in range(3, 10)]
          + [make_graph("complete", n) for n in range(3, 6)]
          + [make_graph("complete_bipartite", 1, 3), make_graph("complete_bipartite", 2, 3),
             make_graph("complete_bipartite", 3, 3)])
EF_VERTEX_BUDGET = 20  # (P_8, P_9) has 19 vertices
LOWER_PATH_NS = (9, 11, 15, 17, 33, 65, 129, 257, 513, 1001)
LOWER_CYCLE_NS = (9, 11, 15, 17, 33, 65, 129, 257, 513, 1001)
UPPER_NS = (3, 5, 7, 9, 11, 13, 15, 17, 21, 25, 31, 33, 63, 65, 101, 129, 201, 257, 501, 513, 1001, 2001)
RANDOM_SEEDS = 20
CATALOG_SEEDS = 3


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.name} ({self.elapsed:.1f}s) {self.detail.get('summary', '')}"


def _timed(number: int, name: str):
    def wrap(fn):
        def run(**kw) -> CriterionResult:
            t0 = time.perf_counter()
            passed, detail = fn(**kw)
            return CriterionResult(number, name, passed, detail, time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# ---------------------------------------------------------------------------


@_timed(1, "even paths and cycles: L = n/2, mirror achieves it")
def criterion_1():
    rows = []
    for fam, ns in (("path", range(2, 11, 2)), ("cycle", range(4, 9, 2))):
        for n in ns:
            g = make_graph(fam, n)
            value = solve_sym(g).value
            mirror = exhaustive_min_survival(g, lambda g=g: mirror_strategy(g))
            rows.append({"graph": g.name, "value": value, "mirror_min": mirror, "ok": value == mirror == n // 2})
    bad = [r["graph"] for r in rows if not r["ok"]]
    return not bad, {"rows": rows, "summary": f"{len(rows)} graphs, mismatches {bad}"}


@_timed(2, "maxmin = minmax on the corpus")
def criterion_2():
    rows = []
    for g in CORPUS:
        mm = solve_sym(g, order="minmax").value
        xm = solve_sym(g, order="maxmin", fresh=True).value
        rows.append({"graph": g.name, "minmax": mm, "maxmin": xm})
    bad = [r["graph"] for r in rows if r["minmax"] != r["maxmin"]]
    return not bad, {"rows": rows, "summary": f"{len(rows)} graphs, mismatches {bad}"}


@_timed(3, "EF bounds on (P_n, P_n+1) and (C_n, C_n+1)")
def criterion_3():
    rows = []
    for n in range(2, 9):
        v = solve_ef(make_graph("path", n), make_graph("path", n + 1), vertex_budget=EF_VERTEX_BUDGET).value
        lg = math.log2(n)
        rows.append({"pair": f"P{n},P{n + 1}", "value": v, "ok": lg - 2 < v < lg + 2})
    for n in range(3, 9):
        v = solve_ef(make_graph("cycle", n), make_graph("cycle", n + 1), vertex_budget=EF_VERTEX_BUDGET).value
        lg = math.log2(n)
        rows.append({"pair": f"C{n},C{n + 1}", "value": v, "ok": lg - 1 < v < lg + 1})
    bad = [r["pair"] for r in rows if not r["ok"]]
    values = " ".join(f"{r['pair']}={r['value']}" for r in rows)
    return not bad, {"rows": rows, "summary": f"{values}; violations {bad}"}


def _catalog_a():
    out = [("random-A", RandomStrategy, s) for s in range(CATALOG_SEEDS)]
    out += [("adversarial-random-A", AdversarialRandomA, s) for s in range(CATALOG_SEEDS)]
    return out


@_timed(4, "translated B beats the logarithmic lower bounds")
def criterion_4(path_ns=LOWER_PATH_NS, cycle_ns=LOWER_CYCLE_NS):
    rows = []
    for fam, ns, breaker in (("path", path_ns, BreakerPath), ("cycle", cycle_ns, BreakerCycle)):
        for n in ns:
            g = make_graph(fam, n)
            bound = 0.5 * math.log2(n - 1) - 1 if fam == "path" else 0.5 * math.log2(n) - 0.5
            opponents = [(breaker.name if hasattr(breaker, "name") else "breaker", breaker, 0)] + _catalog_a()
            for name, cls, seed in opponents:
                out, _ = play_sym(g, cls(), translated_for(g), seed=seed)
                rows.append({"graph": g.name, "a": name, "seed": seed, "rounds": out.survived_rounds,
                             "bound": round(bound, 4), "ok": out.survived_rounds > bound})
    bad = [(r["graph"], r["a"], r["seed"]) for r in rows if not r["ok"]]
    margin = min(r["rounds"] - r["bound"] for r in rows)
    return not bad, {"rows": rows, "summary": f"{len(rows)} games, least margin {margin:.2f}, failures {bad}"}


def _b_opponents(g, n):
    out = [("translated", lambda: translated_for(g), 0), ("greedy-copy", GreedyCopyB, 0)]
    out += [("random", RandomStrategy, s) for s in range(RANDOM_SEEDS)]
    if n <= 9:
        out.append(("optimal", lambda: optimal_strategy(g, "B"), 0))
    return out


@_timed(5, "breaker_path wins within 3.5 log^2 n + C log n, ledger holds")
def criterion_5(ns=UPPER_NS):
    rows = []
    for n in ns:
        g = make_graph("path", n)
        for name, make_b, seed in _b_opponents(g, n):
            a = BreakerPath(strict=False)
            out, _ = play_sym(g, a, make_b(), seed=seed)
            L = a.ledger
            total = out.survived_rounds + 1 if out.winner == "A" else out.survived_rounds
            lg = math.log2(n)
            rows.append({
                "n": n, "b": name, "seed": seed, "winner": out.winner, "rounds": total,
                "c": (total - 3.5 * lg * lg) / lg,
                "enforced": sorted({v["check"] for v in L.enforced_violations}),
                "recorded": sorted({v["check"] for v in L.violations if not v["enforced"]}),
                "fallback": L.fallback["reason"] if L.fallback else None,
                "optimal_route": any(e["kind"] == "optimal_fallback" for e in L.events),
            })
    lost = [(r["n"], r["b"], r["seed"]) for r in rows if r["winner"] != "A"]
    lost_n = sorted({r["n"] for r in rows if r["winner"] != "A"})
    enforced = [(r["n"], r["b"], r["enforced"]) for r in rows if r["enforced"]]
    recorded = sorted({c for r in rows for c in r["recorded"]})
    recorded_n = sorted({r["n"] for r in rows if r["recorded"]})
    c_won = [r["c"] for r in rows if r["winner"] == "A"]
    C = max(c_won) if c_won else math.inf
    # exact values explain losses at small n: A cannot win once L(Sym(P_n)) = floor(n/2)
    forced = {n: solve_sym(make_graph("path", n)).value for n in lost_n if n <= 15}
    passed = not lost and not enforced and not recorded and math.isfinite(C)
    summary = (f"{len(rows)} games; C = {C:.2f}; A lost {len(lost)} games at n in {lost_n} "
               f"(exact L there: {forced}, floor(n/2) = B survives everything); "
               f"enforced ledger violations {len(enforced)}; claims recorded as failing below the "
               f"n > 14t regime: {recorded} at n in {recorded_n}")
    return passed, {"rows": rows, "C": C, "lost": lost, "enforced": enforced, "recorded": recorded,
                    "recorded_n": recorded_n, "exact_small": forced, "summary": summary}


@_timed(6, "breaker_complete on K_6 and K_7; exact L(Sym(K_6))")
def criterion_6(full_k7: bool = False):
    k6 = verify_breaker_complete(6, reduce=True)
    k6_full = verify_breaker_complete(6, reduce=False)
    k7 = verify_breaker_complete(7, reduce=not full_k7)
    exact = solve_sym(make_graph("complete", 6)).value
    positions_ok = all(None not in r["positions"] for r in (k6, k6_full, k7))
    passed = k6["all_win"] and k6_full["all_win"] and k7["all_win"] and exact <= 6 and positions_ok
    summary = (f"K6 latest win at A-move {k6_full['latest_win']} ({k6_full['nodes']} B nodes, unreduced); "
               f"K7 latest {k7['latest_win']} ({k7['nodes']} nodes, reduce={k7['reduce']}); "
               f"exact L(Sym(K6)) = {exact} vs the claimed 5 -> {'<=' if exact <= 5 else '>'} 5; "
               f"star positions after round 3: {positions_ok}")
    detail = {"k6_latest": k6_full["latest_win"], "k7_latest": k7["latest_win"], "exact_k6": exact,
              "positions_ok": positions_ok, "summary": summary}
    return passed, detail


@_timed(7, "Phi_k correspondence on graphs with <= 5 vertices")
def criterion_7():
    phis = {k: build_phi_k(k) for k in (1, 2)}
    checked, bad = 0, []
    for g in all_graphs(5):
        value = None
        for k, phi in phis.items():
            if g.edge_count < 2 * k:
                continue
            if value is None:
                value = solve_sym(g, fresh=True).value
            checked += 1
            if evaluate(phi, g) != (value >= k):
                bad.append((g.vertex_count, g.edges, k, value))
    return not bad, {"checked": checked, "mismatches": bad, "summary": f"{checked} (graph, k) cases, mismatches {len(bad)}"}


@_timed(8, "logical-approach inequality on {P_3..P_7, C_3..C_7}")
def criterion_8():
    gs = [make_graph("path", n) for n in range(3, 8)] + [make_graph("cycle", n) for n in range(3, 8)]
    rows = []
    for g0 in gs:
        for g1 in gs:
            if g0 == g1:
                continue
            rows.append(check_sym_ef_inequality(g0, g1))
    bad = [(r["g0"], r["g1"]) for r in rows if not r["logical_holds"]]
    comb_bad = [(r["g0"], r["g1"]) for r in rows if r.get("combinatorial_holds") is False]
    return not bad, {"rows": rows, "summary": f"{len(rows)} ordered pairs, violations {bad}; "
                                              f"combinatorial variant violations {comb_bad}"}


@_timed(9, "bipartite B survives (max(m,l)-1)/2 rounds")
def criterion_9():
    rows = []
    g = make_graph("complete_bipartite", 3, 3)
    out, _ = play_sym(g, optimal_strategy(g, "A"), BipartiteB())
    rows.append({"graph": g.name, "a": "optimal", "rounds": out.survived_rounds, "bound": guaranteed_rounds(3, 3)})
    for m, l in ((3, 5), (5, 5)):
        g = make_graph("complete_bipartite", m, l)
        for name, cls, seed in _catalog_a():
            out, _ = play_sym(g, cls(), BipartiteB(), seed=seed)
            rows.append({"graph": g.name, "a": name, "seed": seed, "rounds": out.survived_rounds,
                         "bound": guaranteed_rounds(m, l)})
    bad = [r for r in rows if r["rounds"] < r["bound"]]
    return not bad, {"rows": rows, "summary": f"{len(rows)} games, failures {len(bad)}"}


@_timed(10, "Sym+ value <= Sym value on corpus graphs with <= 9 edges")
def criterion_10():
    rows = []
    for g in CORPUS:
        if g.edge_count > 9:
            continue
        rows.append({"graph": g.name, "sym": solve_sym(g).value, "sym_plus": solve_sym(g, variant="sym_plus").value})
    bad = [r["graph"] for r in rows if r["sym_plus"] > r["sym"]]
    strict = [r["graph"] for r in rows if r["sym_plus"] < r["sym"]]
    return not bad, {"rows": rows, "summary": f"{len(rows)} graphs, violations {bad}, strictly smaller on {strict}"}


@_timed(11, "subgraphs_isomorphic agrees with the brute-force oracle (<= 6 vertices)")
def criterion_11():
    import itertools

    calls, bad = 0, []
    # every edge set of K_6 against a representative of every class of the same size
    g, canon = complete_subset_classes(6)
    reps = {}
    for mask in range(len(canon)):
        reps.setdefault(int(canon[mask]), mask)
    by_size = {}
    for c, rep in reps.items():
        by_size.setdefault(bin(rep).count("1"), []).append((c, rep))
    to_set = lambda mask: {e for e in range(g.edge_count) if mask >> e & 1}  # noqa: E731
    for mask in range(len(canon)):
        s = to_set(mask)
        for c, rep in by_size[len(s)]:
            calls += 1
            if subgraphs_isomorphic(g, s, to_set(rep)) != (int(canon[mask]) == c):
                bad.append((mask, rep))
    # every pair of edge sets, literally, on each graph with <= 5 vertices and on tagged paths/cycles
    small = all_graphs(5) + [make_graph("path", n) for n in range(1, 6)] + [make_graph("cycle", n) for n in range(3, 7)]
    for h in small:
        sub_canon = {}
        subsets = [frozenset(c) for r in range(h.edge_count + 1) for c in itertools.combinations(range(h.edge_count), r)]
        lookup = {(u, v): i for i, (u, v) in enumerate(g.edges)}
        for s in subsets:
            sub_canon[s] = int(canon[sum(1 << lookup[tuple(sorted(h.edges[e]))] for e in s)])
        for s, t in itertools.product(subsets, repeat=2):
            if len(s) != len(t):
                continue
            calls += 1
            if subgraphs_isomorphic(h, s, t) != (sub_canon[s] == sub_canon[t]):
                bad.append((h.name, sorted(s), sorted(t)))
    return not bad, {"calls": calls, "mismatches": bad[:10], "summary": f"{calls} comparisons, mismatches {len(bad)}"}


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11)


def run_acceptance(only=None, report=print) -> list:
    results = []
    for crit in CRITERIA:
        number = int(crit.__name__.rsplit("_", 1)[1])
        if only and number not in only:
            continue
        res = crit()
        if report is not None:
            report(res.line())
        results.append(res)
    return results
