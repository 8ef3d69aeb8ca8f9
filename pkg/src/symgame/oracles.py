"""Brute-force reference implementations used by the tests and the acceptance suite.

Nothing here is clever on purpose: isomorphism is decided by trying every
vertex bijection, game values by walking every move sequence.
"""

from __future__ import annotations

import itertools

from .engine import SymState
from .graphs import Graph


def _vertex_list(g: Graph, edges) -> list:
    return sorted({v for e in edges for v in g.edges[e]})


def brute_force_isomorphic(g: Graph, e1, e2) -> bool:
    """Is there a bijection V(e1) -> V(e2) mapping the edge set e1 onto e2?"""
    e1, e2 = list(e1), list(e2)
    if len(e1) != len(e2):
        return False
    v1, v2 = _vertex_list(g, e1), _vertex_list(g, e2)
    if len(v1) != len(v2):
        return False
    target = {frozenset(g.edges[e]) for e in e2}
    pairs = [g.edges[e] for e in e1]
    for perm in itertools.permutations(v2):
        m = dict(zip(v1, perm))
        if all(frozenset((m[a], m[b])) in target for a, b in pairs):
            return True
    return False


def brute_force_canonical(g: Graph, edges) -> tuple:
    """Lexicographically least relabelling of the edge set over all vertex orders."""
    vs = _vertex_list(g, edges)
    pairs = [g.edges[e] for e in edges]
    best = None
    for perm in itertools.permutations(range(len(vs))):
        m = dict(zip(vs, perm))
        form = tuple(sorted(tuple(sorted((m[a], m[b]))) for a, b in pairs))
        if best is None or form < best:
            best = form
    return len(vs), best if best is not None else ()


def all_graphs(max_vertices: int, min_vertices: int = 1) -> list:
    """One graph per isomorphism class on ``min..max`` vertices (at most 7), from the networkx atlas."""
    from networkx.generators.atlas import graph_atlas_g

    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if min_vertices <= n <= max_vertices:
            out.append(Graph(n, tuple(sorted(tuple(sorted(e)) for e in h.edges()))))
    return out


def complete_subset_classes(n: int):
    """Canonical class of every edge subset of K_n, by brute force over all n! relabellings.

    Returns ``(graph, canon)`` where ``canon[mask]`` is the least image of
    ``mask`` under a vertex permutation; two edge sets span isomorphic
    graphs iff their entries agree.
    """
    import numpy as np

    pairs = list(itertools.combinations(range(n), 2))
    g = Graph(n, tuple(pairs))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        img = np.zeros_like(masks)
        for i, (a, b) in enumerate(pairs):
            j = index[tuple(sorted((perm[a], perm[b])))]
            img |= ((masks >> i) & 1) << j
        np.minimum(canon, img, out=canon)
    return g, canon


def exhaustive_min_survival(g: Graph, make_b, variant: str = "sym") -> int:
    """Fewest rounds a deterministic B strategy survives over every A move sequence.

    ``make_b()`` returns a fresh strategy; it is replayed from the start for
    every line so that stateful strategies are handled correctly.
    """
    best = [g.edge_count // 2]

    def replay(a_moves):
        b = make_b()
        b.start(g, "B", 0, variant)
        state = SymState(g, variant)
        for a in a_moves:
            state.play(a)
            reply = b.move(state)
            if not state.is_legal(reply):
                return state, False
            state.play(reply)
            if not state.check_round():
                return state, False
            state.round += 1
        return state, True

    def dfs(a_moves):
        state, ok = replay(a_moves)
        if not ok:
            best[0] = min(best[0], len(a_moves) - 1)
            return
        if state.round == g.edge_count // 2 or len(state.free_edges) < 2:
            return
        for a in state.free_edges:
            dfs(a_moves + [a])

    dfs([])
    return best[0]


def brute_force_value(g: Graph, max_rounds=None) -> int:
    """L(Sym(G)) by plain minimax over every move sequence, no memo and no symmetry."""
    limit = g.edge_count // 2 if max_rounds is None else max_rounds

    def survive(red, blue, r):
        # rounds B survives from here, A to move, r rounds played
        if r == limit:
            return r
        free = [e for e in range(g.edge_count) if e not in red and e not in blue]
        worst = limit
        for a in free:
            best = r
            for b in free:
                if b == a:
                    continue
                if brute_force_isomorphic(g, red | {a}, blue | {b}):
                    best = max(best, survive(red | {a}, blue | {b}, r + 1))
                    if best == worst:
                        break
            worst = min(worst, best)
            if worst == r:
                break
        return worst

    return survive(frozenset(), frozenset(), 0)
