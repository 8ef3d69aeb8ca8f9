"""First-order sentences over {E, =}: the formula Phi_k and a small model checker.

``build_phi_k(k)`` writes out the sentence with 4k quantifiers that holds on a
graph with at least 2k edges exactly when B survives k rounds of Sym(G).
The ISO_j disjunction is materialised literally, one disjunct per
edge-respecting permutation, so k is capped at 3 (48 disjuncts in ISO_3).

Evaluation is the plain recursive expansion of quantifiers over the vertex
set.  Formulas are compiled to nested closures first, which keeps the
Phi_k cross-checks on five-vertex graphs within seconds.

Text form: a parenthesised prefix syntax, e.g.
``(forall x (exists y (and (E x y) (not (= x y)))))``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Union

from .errors import CapabilityError, ParameterError
from .graphs import Graph

PHI_K_LIMIT = 3
DEFAULT_EVAL_BUDGET = 10**7


# ---------------------------------------------------------------------------
# formula tree


@dataclass(frozen=True)
class Edge:
    x: str
    y: str


@dataclass(frozen=True)
class Eq:
    x: str
    y: str


@dataclass(frozen=True)
class Not:
    f: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    a: "Formula"
    b: "Formula"


@dataclass(frozen=True)
class Iff:
    a: "Formula"
    b: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Edge, Eq, Not, And, Or, Implies, Iff, Forall, Exists]
_QUANTIFIERS = (Forall, Exists)


def conj(*parts) -> And:
    return And(tuple(parts))


def disj(*parts) -> Or:
    return Or(tuple(parts))


def _children(f) -> tuple:
    if isinstance(f, (Edge, Eq)):
        return ()
    if isinstance(f, Not):
        return (f.f,)
    if isinstance(f, (And, Or)):
        return f.parts
    if isinstance(f, (Implies, Iff)):
        return (f.a, f.b)
    if isinstance(f, _QUANTIFIERS):
        return (f.body,)
    raise ParameterError(f"not a formula: {f!r}")


def quantifier_count(f) -> int:
    """Total number of quantifier occurrences."""
    own = 1 if isinstance(f, _QUANTIFIERS) else 0
    return own + sum(quantifier_count(c) for c in _children(f))


def quantifier_depth(f) -> int:
    own = 1 if isinstance(f, _QUANTIFIERS) else 0
    return own + max((quantifier_depth(c) for c in _children(f)), default=0)


def free_variables(f) -> frozenset:
    if isinstance(f, (Edge, Eq)):
        return frozenset((f.x, f.y))
    if isinstance(f, _QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    out = frozenset()
    for c in _children(f):
        out |= free_variables(c)
    return out


def is_closed(f) -> bool:
    return not free_variables(f)


def size(f) -> int:
    return 1 + sum(size(c) for c in _children(f))


# ---------------------------------------------------------------------------
# Phi_k


def u(i: int, a: int) -> str:
    return f"u{i}_{a}"


def v(i: int, a: int) -> str:
    return f"v{i}_{a}"


def dist(x1: str, x2: str, y1: str, y2: str):
    """DIST: the pairs {x1, x2} and {y1, y2} differ."""
    return Not(disj(conj(Eq(x1, y1), Eq(x2, y2)), conj(Eq(x1, y2), Eq(x2, y1))))


def edge_respecting_permutations(j: int) -> list:
    """Maps (i, a) -> (m, a') sending each A-edge onto a B-edge, ``j! * 2^j`` of them."""
    out = []
    for perm in itertools.permutations(range(1, j + 1)):
        for flips in itertools.product((False, True), repeat=j):
            f = {}
            for i, (m, flip) in enumerate(zip(perm, flips), start=1):
                f[(i, 1)] = (m, 2 if flip else 1)
                f[(i, 2)] = (m, 1 if flip else 2)
            out.append(f)
    return out


def iso_j(j: int):
    index = [(i, a) for i in range(1, j + 1) for a in (1, 2)]
    disjuncts = []
    for f in edge_respecting_permutations(j):
        disjuncts.append(And(tuple(
            Iff(Eq(u(*p), u(*q)), Eq(v(*f[p]), v(*f[q])))
            for p in index for q in index
        )))
    return Or(tuple(disjuncts))


def a_j(j: int):
    return And((Edge(u(j, 1), u(j, 2)),)
               + tuple(dist(u(j, 1), u(j, 2), u(i, 1), u(i, 2)) for i in range(1, j))
               + tuple(dist(u(j, 1), u(j, 2), v(i, 1), v(i, 2)) for i in range(1, j)))


def b_j(j: int):
    return And((Edge(v(j, 1), v(j, 2)),)
               + tuple(dist(v(j, 1), v(j, 2), u(i, 1), u(i, 2)) for i in range(1, j + 1))
               + tuple(dist(v(j, 1), v(j, 2), v(i, 1), v(i, 2)) for i in range(1, j)))


def build_phi_k(k: int):
    """The sentence "B survives k rounds of Sym(G)" with 4k quantifiers."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    if k > PHI_K_LIMIT:
        raise CapabilityError(
            f"ISO_{k} needs {math.factorial(k) * 2 ** k} disjuncts of {(2 * k) ** 2} biconditionals; "
            f"build_phi_k is capped at k={PHI_K_LIMIT}")
    matrix = Implies(
        And(tuple(a_j(j) for j in range(1, k + 1))),
        And(tuple(b_j(j) for j in range(1, k + 1)) + tuple(iso_j(j) for j in range(1, k + 1))),
    )
    f = matrix
    for j in range(k, 0, -1):
        f = Forall(u(j, 1), Forall(u(j, 2), Exists(v(j, 1), Exists(v(j, 2), f))))
    return f


# ---------------------------------------------------------------------------
# evaluation


def _compile(f, slots: dict, adj):
    if isinstance(f, Edge):
        x, y = slots[f.x], slots[f.y]
        return lambda env: env[y] in adj[env[x]]
    if isinstance(f, Eq):
        x, y = slots[f.x], slots[f.y]
        return lambda env: env[x] == env[y]
    if isinstance(f, Not):
        g = _compile(f.f, slots, adj)
        return lambda env: not g(env)
    if isinstance(f, And):
        parts = [_compile(p, slots, adj) for p in f.parts]
        return lambda env: all(p(env) for p in parts)
    if isinstance(f, Or):
        parts = [_compile(p, slots, adj) for p in f.parts]
        return lambda env: any(p(env) for p in parts)
    if isinstance(f, Implies):
        a, b = _compile(f.a, slots, adj), _compile(f.b, slots, adj)
        return lambda env: (not a(env)) or b(env)
    if isinstance(f, Iff):
        a, b = _compile(f.a, slots, adj), _compile(f.b, slots, adj)
        return lambda env: a(env) == b(env)
    if isinstance(f, _QUANTIFIERS):
        inner = dict(slots)
        slot = inner[f.var] = len(slots)
        body = _compile(f.body, inner, adj)
        verts = range(len(adj))
        if isinstance(f, Forall):
            def forall(env):
                for x in verts:
                    env[slot] = x
                    if not body(env):
                        return False
                return True
            return forall

        def exists(env):
            for x in verts:
                env[slot] = x
                if body(env):
                    return True
            return False
        return exists
    raise ParameterError(f"not a formula: {f!r}")


def evaluate(f, g: Graph, budget: int = DEFAULT_EVAL_BUDGET) -> bool:
    """Truth value of the closed formula ``f`` on ``g``."""
    free = free_variables(f)
    if free:
        raise ParameterError(f"formula has free variables {sorted(free)}")
    q = quantifier_count(f)
    cost = g.vertex_count ** q
    if cost > budget:
        raise CapabilityError(f"|V|^q = {g.vertex_count}^{q} = {cost} exceeds the budget {budget}")
    return _compile(f, {}, g.adjacency)([0] * max(q, 1))


# ---------------------------------------------------------------------------
# text form


def serialize(f) -> str:
    if isinstance(f, Edge):
        return f"(E {f.x} {f.y})"
    if isinstance(f, Eq):
        return f"(= {f.x} {f.y})"
    if isinstance(f, Not):
        return f"(not {serialize(f.f)})"
    if isinstance(f, (And, Or)):
        op = "and" if isinstance(f, And) else "or"
        return "(" + " ".join([op] + [serialize(p) for p in f.parts]) + ")"
    if isinstance(f, Implies):
        return f"(-> {serialize(f.a)} {serialize(f.b)})"
    if isinstance(f, Iff):
        return f"(<-> {serialize(f.a)} {serialize(f.b)})"
    if isinstance(f, Forall):
        return f"(forall {f.var} {serialize(f.body)})"
    if isinstance(f, Exists):
        return f"(exists {f.var} {serialize(f.body)})"
    raise ParameterError(f"not a formula: {f!r}")


def _tokens(text: str) -> list:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse(text: str):
    """Inverse of :func:`serialize`."""
    toks = _tokens(text)
    if not toks:
        raise ParameterError("empty formula")
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(toks) or toks[pos] != tok:
            got = toks[pos] if pos < len(toks) else "end of input"
            raise ParameterError(f"expected {tok!r} at token {pos}, got {got!r}")
        pos += 1

    def name():
        nonlocal pos
        if pos >= len(toks) or toks[pos] in "()":
            raise ParameterError(f"expected a variable at token {pos}")
        pos += 1
        return toks[pos - 1]

    def node():
        nonlocal pos
        expect("(")
        if pos >= len(toks):
            raise ParameterError("unexpected end of input")
        op = toks[pos]
        pos += 1
        if op in ("E", "="):
            x, y = name(), name()
            out = Edge(x, y) if op == "E" else Eq(x, y)
        elif op == "not":
            out = Not(node())
        elif op in ("and", "or"):
            parts = []
            while pos < len(toks) and toks[pos] == "(":
                parts.append(node())
            out = And(tuple(parts)) if op == "and" else Or(tuple(parts))
        elif op in ("->", "<->"):
            a, b = node(), node()
            out = Implies(a, b) if op == "->" else Iff(a, b)
        elif op in ("forall", "exists"):
            var = name()
            body = node()
            out = Forall(var, body) if op == "forall" else Exists(var, body)
        else:
            raise ParameterError(f"unknown operator {op!r}")
        expect(")")
        return out

    f = node()
    if pos != len(toks):
        raise ParameterError(f"trailing tokens after position {pos}")
    return f


# ---------------------------------------------------------------------------
# random sentences for the EF spot-check


def random_sentence(rng: random.Random, quantifiers: int, depth: int = 3):
    """A random closed formula with exactly ``quantifiers`` quantifiers.

    Quantifiers sit at random places in a tree of connectives; atoms only
    use variables bound above them, so the result is always closed.
    """
    if quantifiers < 1:
        raise ParameterError("a closed formula over {E, =} needs a quantifier")

    def atom(bound):
        x, y = rng.choice(bound), rng.choice(bound)
        return Edge(x, y) if rng.random() < 0.6 else Eq(x, y)

    def build(bound, q, d):
        if q > 0 and (not bound or rng.random() < 0.5 or d <= 0):
            var = f"x{len(bound) + 1}"
            body = build(bound + [var], q - 1, d)
            return Forall(var, body) if rng.random() < 0.5 else Exists(var, body)
        if d <= 0 or (q == 0 and rng.random() < 0.4):
            return atom(bound)
        kind = rng.choice(("not", "and", "or", "->", "<->"))
        if kind == "not":
            return Not(build(bound, q, d - 1))
        qa = rng.randint(0, q)
        a, b = build(bound, qa, d - 1), build(bound, q - qa, d - 1)
        return {"and": conj, "or": disj}.get(kind, Implies if kind == "->" else Iff)(a, b)

    return build([], quantifiers, depth)


def sentence_pool(count: int, max_quantifiers: int, seed: int = 0, depth: int = 3) -> list:
    rng = random.Random(f"{seed}:sentences")
    return [random_sentence(rng, rng.randint(1, max_quantifiers), depth) for _ in range(count)]
