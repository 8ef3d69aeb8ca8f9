"""Exact values of Sym, Sym+ and EF on the small families, as a Markdown table.

    python scripts/small_values.py
"""

import math

from symgame.graphs import make_graph
from symgame.solver import solve_ef, solve_sym


def main():
    print("| graph | L(Sym) | L(Sym+) | floor(n/2) | D(G_n, G_n+1) | log2 n |")
    print("|---|---|---|---|---|---|")
    for fam, ns in (("path", range(2, 14)), ("cycle", range(3, 14))):
        for n in ns:
            g = make_graph(fam, n)
            sym = solve_sym(g).value
            plus = solve_sym(g, variant="sym_plus").value
            ef = solve_ef(g, make_graph(fam, n + 1), vertex_budget=20).value if n <= 8 else ""
            print(f"| {g.name} | {sym} | {plus} | {n // 2} | {ef} | {math.log2(n):.4f} |")


if __name__ == "__main__":
    main()
