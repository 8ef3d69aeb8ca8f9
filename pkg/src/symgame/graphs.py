"""Graphs, edge sets, line graphs, automorphisms and small-graph isomorphism.

Edges are numbered 0-based internally.  For paths and cycles the numbering
runs from one end edge to the other: on ``P_n`` edge ``i`` joins vertices
``i`` and ``i + 1``; on ``C_n`` edge ``i`` joins ``i`` and ``(i + 1) % n``.
Transcripts and the CLI show ``i + 1`` instead (see :func:`to_display`).
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from .errors import CapabilityError, ParameterError

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "other")

EdgeSet = frozenset  # frozenset[int] of 0-based edge indices


class _Unreachable:
    """Sentinel distance for components with no connecting unchosen path."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple
    family: Optional[str] = None
    params: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ParameterError("a graph needs at least one vertex")
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ParameterError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParameterError(f"duplicate edge {key}")
            seen.add(key)
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))
        if self.family is not None and self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def incident(self) -> tuple:
        inc = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict:
        out = {}
        for i, (u, v) in enumerate(self.edges):
            out[(u, v)] = i
            out[(v, u)] = i
        return out

    @property
    def is_linear(self) -> bool:
        return self.family in ("path", "cycle")

    @property
    def name(self) -> str:
        if self.family == "path":
            return f"P{self.params[0]}"
        if self.family == "cycle":
            return f"C{self.params[0]}"
        if self.family == "complete":
            return f"K{self.params[0]}"
        if self.family == "complete_bipartite":
            return f"K{self.params[0]},{self.params[1]}"
        return f"G(v={self.vertex_count},e={self.edge_count})"

    def edges_adjacent(self, e: int, f: int) -> bool:
        return bool(set(self.edges[e]) & set(self.edges[f]))

    def to_json(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "family": self.family,
        }

    def __repr__(self):
        return f"Graph({self.name})"


def make_graph(family: str, *params: int) -> Graph:
    """Build ``P_n``, ``C_n``, ``K_n`` or ``K_{m,l}`` with the standard numbering.

    Path and cycle parameters are edge counts; ``complete`` takes the order.
    """
    if family == "path":
        (n,) = params
        if n < 1:
            raise ParameterError("a path needs at least one edge")
        return Graph(n + 1, tuple((i, i + 1) for i in range(n)), "path", (n,))
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise ParameterError("a cycle needs at least three edges")
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), "cycle", (n,))
    if family == "complete":
        (n,) = params
        if n < 1:
            raise ParameterError("K_n needs n >= 1")
        return Graph(n, tuple(itertools.combinations(range(n), 2)), "complete", (n,))
    if family == "complete_bipartite":
        m, l = params
        if m < 1 or l < 1:
            raise ParameterError("K_{m,l} needs m, l >= 1")
        edges = tuple((i, m + j) for i in range(m) for j in range(l))
        return Graph(m + l, edges, "complete_bipartite", (m, l))
    raise ParameterError(f"unknown family {family!r}")


def graph_from_json(obj) -> Graph:
    """Read the ``{vertices, edges, family}`` literal; family tags are re-checked."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["vertices"])
    edges = tuple((int(u), int(v)) for u, v in obj["edges"])
    fam = obj.get("family")
    g = Graph(n, edges)
    if fam in ("path", "cycle", "complete", "complete_bipartite"):
        guess = _recognize(g, fam)
        if guess is not None:
            return guess
    return Graph(n, edges, "other" if fam else None)


def _recognize(g: Graph, fam: str) -> Optional[Graph]:
    norm = lambda es: {(min(u, v), max(u, v)) for u, v in es}
    if fam == "path":
        cand = make_graph("path", g.edge_count) if g.edge_count >= 1 else None
    elif fam == "cycle":
        cand = make_graph("cycle", g.edge_count) if g.edge_count >= 3 else None
    elif fam == "complete":
        cand = make_graph("complete", g.vertex_count)
    else:
        return None
    if cand is not None and cand.vertex_count == g.vertex_count and norm(cand.edges) == norm(g.edges):
        return cand
    return None


def parse_graph_spec(spec: str) -> Graph:
    """Parse ``P5``, ``C7``, ``K6``, ``K3,3`` or a JSON literal / JSON file path."""
    s = spec.strip()
    if s.startswith("{"):
        return graph_from_json(s)
    if s.endswith(".json"):
        with open(s) as fh:
            return graph_from_json(json.load(fh))
    head, body = s[0].upper(), s[1:].replace("_", "").strip("{}")
    try:
        if head == "P":
            return make_graph("path", int(body))
        if head == "C":
            return make_graph("cycle", int(body))
        if head == "K" and "," in body:
            m, l = body.split(",")
            return make_graph("complete_bipartite", int(m), int(l))
        if head == "K":
            return make_graph("complete", int(body))
    except ValueError as exc:
        raise ParameterError(f"cannot parse graph spec {spec!r}") from exc
    raise ParameterError(f"cannot parse graph spec {spec!r}")


def to_display(edge: int) -> int:
    return edge + 1


def from_display(number: int) -> int:
    return number - 1


def line_graph(g: Graph):
    """Return ``(L(g), correspondence)``; vertex ``i`` of ``L(g)`` is edge ``i`` of ``g``."""
    if g.edge_count == 0:
        raise ParameterError("line graph of an edgeless graph is empty")
    edges = []
    for v in range(g.vertex_count):
        for e, f in itertools.combinations(sorted(g.incident[v]), 2):
            edges.append((e, f))
    edges = sorted(set((min(e, f), max(e, f)) for e, f in edges))
    family, params = "other", ()
    m = g.edge_count
    if g.family == "path" and m >= 2:
        family, params = "path", (m - 1,)
    elif g.family == "cycle":
        family, params = "cycle", (m,)
    lg = Graph(m, tuple(edges), family, params)
    if family == "path":
        # recognizing the standard numbering keeps the fast routes usable
        lg = make_graph("path", m - 1)
    elif family == "cycle":
        lg = make_graph("cycle", m)
    return lg, {i: i for i in range(m)}


# ---------------------------------------------------------------------------
# components and distances


@dataclass(frozen=True)
class Component:
    """A connected component of an edge set."""

    edges: frozenset
    vertices: frozenset = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self):
        return len(self.edges)


def components(g: Graph, edges: Iterable[int]) -> list:
    """Split an edge set into connected components (ordered by smallest edge)."""
    edges = set(edges)
    out = []
    seen = set()
    for e in sorted(edges):
        if e in seen:
            continue
        comp = {e}
        verts = set(g.edges[e])
        queue = deque(g.edges[e])
        while queue:
            v = queue.popleft()
            for f in g.incident[v]:
                if f in edges and f not in comp:
                    comp.add(f)
                    for w in g.edges[f]:
                        if w not in verts:
                            verts.add(w)
                            queue.append(w)
        seen |= comp
        out.append(Component(frozenset(comp), frozenset(verts)))
    return out


def component_distance(g: Graph, a, b, mode: str = "standard", occupied: Iterable[int] = ()):
    """Distance between two vertex-disjoint components.

    ``standard`` is the graph distance between nearest vertices.
    ``unchosen_only`` only walks edges outside ``occupied`` and returns
    :data:`UNREACHABLE` when no such walk exists.
    """
    va = a.vertices if isinstance(a, Component) else _verts(g, a)
    vb = b.vertices if isinstance(b, Component) else _verts(g, b)
    if va & vb:
        raise ParameterError("components overlap")
    if mode not in ("standard", "unchosen_only"):
        raise ParameterError(f"unknown distance mode {mode!r}")
    blocked = set(occupied) if mode == "unchosen_only" else set()
    dist = {v: 0 for v in va}
    queue = deque(va)
    while queue:
        v = queue.popleft()
        if v in vb:
            return dist[v]
        for e in g.incident[v]:
            if e in blocked:
                continue
            x, y = g.edges[e]
            w = y if x == v else x
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return UNREACHABLE


def _verts(g: Graph, edges) -> frozenset:
    return frozenset(v for e in edges for v in g.edges[e])


# ---------------------------------------------------------------------------
# isomorphism of edge-induced subgraphs


def linear_runs(g: Graph, edges) -> list:
    """Maximal runs of consecutive edges on a path or cycle as ``(start, length)``.

    A full cycle is reported as ``(0, n)`` with length ``n``.
    """
    n = g.edge_count
    es = sorted(set(edges))
    if not es:
        return []
    if g.family == "cycle" and len(es) == n:
        return [(0, n)]
    runs = []
    start = prev = es[0]
    for e in es[1:]:
        if e == prev + 1:
            prev = e
            continue
        runs.append((start, prev - start + 1))
        start = prev = e
    runs.append((start, prev - start + 1))
    if g.family == "cycle" and len(runs) > 1 and runs[0][0] == 0 and runs[-1][0] + runs[-1][1] == n:
        last = runs.pop()
        first = runs.pop(0)
        runs.append((last[0], last[1] + first[1]))
    return runs


def _linear_signature(g: Graph, edges):
    runs = linear_runs(g, edges)
    full = g.family == "cycle" and len(set(edges)) == g.edge_count
    return full, sorted(length for _, length in runs)


def subgraphs_isomorphic(g: Graph, e1, e2) -> bool:
    """True iff the edge-induced subgraphs on ``e1`` and ``e2`` are isomorphic."""
    if len(e1) != len(e2):
        return False
    if not e1:
        return True
    if g.is_linear:
        return _linear_signature(g, e1) == _linear_signature(g, e2)
    return edge_graph_isomorphic([g.edges[e] for e in e1], [g.edges[e] for e in e2])


def _relabel(edge_pairs):
    verts = sorted({v for e in edge_pairs for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    adj = [set() for _ in verts]
    for u, v in edge_pairs:
        adj[idx[u]].add(idx[v])
        adj[idx[v]].add(idx[u])
    return adj


def _component_sizes(adj) -> list:
    seen = [False] * len(adj)
    sizes = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        seen[s] = True
        stack, nv, deg = [s], 0, 0
        while stack:
            v = stack.pop()
            nv += 1
            deg += len(adj[v])
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        sizes.append((nv, deg // 2))
    return sorted(sizes)


def edge_graph_isomorphic(edges1: Sequence, edges2: Sequence) -> bool:
    """Backtracking isomorphism test for two small graphs given as edge lists.

    Isolated vertices do not exist in this representation, so this is the
    edge-induced convention used by the game.
    """
    if len(edges1) != len(edges2):
        return False
    adj1, adj2 = _relabel(edges1), _relabel(edges2)
    if len(adj1) != len(adj2):
        return False
    deg1 = [len(a) for a in adj1]
    deg2 = [len(a) for a in adj2]
    if sorted(deg1) != sorted(deg2):
        return False
    if _component_sizes(adj1) != _component_sizes(adj2):
        return False
    # neighbour-degree profile is a cheap 1-step refinement
    prof1 = [(deg1[v], tuple(sorted(deg1[w] for w in adj1[v]))) for v in range(len(adj1))]
    prof2 = [(deg2[v], tuple(sorted(deg2[w] for w in adj2[v]))) for v in range(len(adj2))]
    if Counter(prof1) != Counter(prof2):
        return False
    order = _bfs_order(adj1, prof1)
    by_prof = {}
    for v, p in enumerate(prof2):
        by_prof.setdefault(p, []).append(v)
    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in by_prof[prof1[v]]:
            if w in used:
                continue
            ok = True
            for x in adj1[v]:
                if x in mapping and mapping[x] not in adj2[w]:
                    ok = False
                    break
            if not ok:
                continue
            # count of mapped neighbours must agree in both directions
            n1 = sum(1 for x in adj1[v] if x in mapping)
            n2 = sum(1 for y in adj2[w] if y in used)
            if n1 != n2:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def _bfs_order(adj, prof) -> list:
    order, seen = [], set()
    starts = sorted(range(len(adj)), key=lambda v: (-len(adj[v]), prof[v]))
    for s in starts:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v], key=lambda x: -len(adj[x])):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


# ---------------------------------------------------------------------------
# canonical forms (individualisation-refinement with twin pruning)


def _refine(adj, colors):
    n = len(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((c, colors[w]) for w, c in adj[v].items())))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return new
        colors, ncolors = new, len(ranks)


def _twin_reps(adj, cell):
    reps = []
    for v in cell:
        for r in reps:
            nv = {(x, c) for x, c in adj[v].items() if x != r}
            nr = {(x, c) for x, c in adj[r].items() if x != v}
            if nv == nr:
                break
        else:
            reps.append(v)
    return reps


def canonical_form(n: int, colored_edges: dict, vertex_colors: Optional[Sequence] = None):
    """Certificate of an edge-coloured graph on vertices ``0..n-1``.

    Two inputs get equal certificates iff some bijection of vertices maps
    one onto the other preserving vertex colours and edge colours.
    """
    adj = [dict() for _ in range(n)]
    for (u, v), c in colored_edges.items():
        adj[u][v] = c
        adj[v][u] = c
    init = list(vertex_colors) if vertex_colors is not None else [0] * n
    base_ranks = {c: i for i, c in enumerate(sorted(set(init), key=repr))}
    start = [base_ranks[c] for c in init]
    best = [None]

    def search(colors):
        colors = _refine(adj, colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            cert = (
                tuple(sorted(
                    (min(colors[u], colors[v]), max(colors[u], colors[v]), c)
                    for (u, v), c in colored_edges.items()
                )),
                tuple(start[v] for v in sorted(range(n), key=lambda x: colors[x])),
            )
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in _twin_reps(adj, cells[target]):
            nxt = [2 * c for c in colors]
            nxt[v] -= 1
            search(nxt)

    search(start)
    return best[0]


def edge_set_certificate(edge_pairs) -> tuple:
    """Isomorphism-class certificate of the graph spanned by ``edge_pairs``."""
    verts = sorted({v for e in edge_pairs for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    return (len(verts), canonical_form(len(verts), {(idx[u], idx[v]): 1 for u, v in edge_pairs}))


# ---------------------------------------------------------------------------
# automorphisms


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.vertex_count)):
        return False
    return all((perm[u], perm[v]) in g.edge_index for u, v in g.edges)


def edge_permutation(g: Graph, perm: Sequence[int]) -> tuple:
    """The induced edge map ``{u,v} -> {perm(u), perm(v)}``."""
    return tuple(g.edge_index[(perm[u], perm[v])] for u, v in g.edges)


def is_involution(perm: Sequence[int]) -> bool:
    return all(perm[perm[v]] == v for v in range(len(perm)))


def fixed_edges(g: Graph, perm: Sequence[int]) -> list:
    emap = edge_permutation(g, perm)
    return [e for e, f in enumerate(emap) if e == f]


def automorphisms(g: Graph, limit: int = 100_000) -> list:
    """All automorphisms of ``g`` as vertex tuples (identity first)."""
    n = g.vertex_count
    adj = g.adjacency
    deg = [len(a) for a in adj]
    order = _bfs_order([set(a) for a in adj], [(d,) for d in deg])
    out = []
    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if len(out) >= limit:
            raise CapabilityError(f"automorphism group of {g.name} exceeds {limit} elements")
        if i == n:
            out.append(tuple(mapping))
            return
        v = order[i]
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if any(mapping[x] != -1 and mapping[x] not in adj[w] for x in adj[v]):
                continue
            if sum(1 for x in adj[v] if mapping[x] != -1) != sum(1 for y in adj[w] if used[y]):
                continue
            mapping[v] = w
            used[w] = True
            extend(i + 1)
            mapping[v] = -1
            used[w] = False

    extend(0)
    out.sort(key=lambda p: p != tuple(range(n)))
    return out


def find_involutory_fixed_edge_free_automorphism(g: Graph, vertex_limit: int = 16):
    """Backtracking search for a self-inverse automorphism fixing no edge.

    Returns the vertex permutation as a tuple, or ``None`` if none exists.
    """
    n = g.vertex_count
    if n > vertex_limit:
        raise CapabilityError(f"{g.name} has {n} vertices; involution search limit is {vertex_limit}")
    if g.family == "path" and g.params[0] % 2 == 0:
        return tuple(n - 1 - v for v in range(n))
    adj = g.adjacency
    deg = [len(a) for a in adj]
    order = _bfs_order([set(a) for a in adj], [(d,) for d in deg])
    phi = [-1] * n

    def consistent(v):
        # every assigned neighbour pair must map onto an edge, and no edge may be fixed
        for x in adj[v]:
            if phi[x] == -1:
                continue
            if phi[x] not in adj[phi[v]]:
                return False
            if {phi[v], phi[x]} == {v, x}:
                return False
        return True

    def extend(i):
        while i < n and phi[order[i]] != -1:
            i += 1
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if deg[w] != deg[v] or (w != v and phi[w] != -1):
                continue
            phi[v] = w
            phi[w] = v
            if consistent(v) and (w == v or consistent(w)) and extend(i + 1):
                return True
            phi[v] = -1
            phi[w] = -1
        return False

    if extend(0):
        return tuple(phi)
    return None


# ---------------------------------------------------------------------------
# canonical keys for solver memoisation


class SymmetryTable:
    """Edge permutations of ``Aut(g)`` used to canonicalise (red, blue) pairs."""

    def __init__(self, g: Graph, exact_vertex_limit: int = 8):
        self.graph = g
        if g.vertex_count <= exact_vertex_limit:
            perms = automorphisms(g)
            self.edge_perms = [edge_permutation(g, p) for p in perms]
            self.exact = True
        else:
            self.edge_perms = [tuple(range(g.edge_count))]
            self.exact = False
        self._tables = None

    @property
    def order(self) -> int:
        return len(self.edge_perms)

    def _build(self):
        import numpy as np

        m = self.graph.edge_count
        chunks = (m + 7) // 8
        tab = np.zeros((chunks, len(self.edge_perms), 256), dtype=np.int64)
        for gi, ep in enumerate(self.edge_perms):
            for c in range(chunks):
                for byte in range(256):
                    img = 0
                    for bit in range(8):
                        e = 8 * c + bit
                        if e < m and byte >> bit & 1:
                            img |= 1 << ep[e]
                    tab[c, gi, byte] = img
        self._tables = tab

    def image_masks(self, mask: int):
        if self._tables is None:
            self._build()
        tab = self._tables
        acc = tab[0, :, mask & 255].copy()
        for c in range(1, tab.shape[0]):
            acc |= tab[c, :, (mask >> (8 * c)) & 255]
        return acc

    def key(self, red: int, blue: int) -> int:
        if len(self.edge_perms) == 1:
            return (red << self.graph.edge_count) | blue
        m = self.graph.edge_count
        return int(((self.image_masks(red) << m) | self.image_masks(blue)).min())


@lru_cache(maxsize=64)
def symmetry_table(g: Graph, exact_vertex_limit: int = 8) -> SymmetryTable:
    return SymmetryTable(g, exact_vertex_limit)


def to_mask(edges: Iterable[int]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def canonical_key(g: Graph, red, blue, exact_vertex_limit: int = 8):
    """Key equal for positions related by an automorphism of ``g``.

    The reduction is exact for graphs with at most ``exact_vertex_limit``
    vertices and the identity above that.
    """
    red, blue = set(red), set(blue)
    if red & blue:
        raise ParameterError("red and blue overlap")
    return symmetry_table(g, exact_vertex_limit).key(to_mask(red), to_mask(blue))


# ---------------------------------------------------------------------------
# isomorphism-preserving replies


def iso_preserving_replies(g: Graph, red, blue) -> list:
    """Uncolored edges ``b`` with ``blue + b`` isomorphic to ``red`` (sorted)."""
    red, blue = set(red), set(blue)
    if len(red) != len(blue) + 1:
        return []
    colored = red | blue
    if g.is_linear:
        return _linear_replies(g, red, blue, colored)
    return [
        e for e in range(g.edge_count)
        if e not in colored and subgraphs_isomorphic(g, red, blue | {e})
    ]


def _linear_replies(g: Graph, red, blue, colored) -> list:
    n = g.edge_count
    cyc = g.family == "cycle"
    target = Counter(length for _, length in linear_runs(g, red))
    runs = linear_runs(g, blue)
    have = Counter(length for _, length in runs)
    need = target.copy()
    need.subtract(have)
    need = {k: v for k, v in need.items() if v}
    run_len = {}
    for start, length in runs:
        for k in range(length):
            run_len[(start + k) % n] = length
    out = []
    for e in range(n):
        if e in colored:
            continue
        if cyc:
            lft = run_len.get((e - 1) % n, 0)
            rgt = run_len.get((e + 1) % n, 0)
        else:
            lft = run_len.get(e - 1, 0) if e > 0 else 0
            rgt = run_len.get(e + 1, 0) if e < n - 1 else 0
        delta = Counter({lft + rgt + 1: 1})
        if lft:
            delta[lft] -= 1
        if rgt:
            delta[rgt] -= 1
        delta = {k: v for k, v in delta.items() if v}
        if delta == need:
            out.append(e)
    return out
