#!/usr/bin/env python3
"""Tour of the single-graph counting invariants.

Walks through the a0/a1/a2 pair counts, triangle counts, and the number
of 3-homogeneous subsets on a few familiar graphs, then spot-checks the
identities tying them together on random graphs.
"""

import random
from math import comb

from recomp.graphs import Graph, complement, invariants

EXAMPLES = {
    "single edge on 4": Graph.from_edges(4, [(0, 1)]),
    "5-cycle": Graph.cycle(5),
    "K4": Graph.complete(4),
    "4-path": Graph.path(4),
    "Petersen-ish random 10": Graph.random(10, random.Random(7)),
}

print(f"{'graph':<24} {'e':>3} {'e_bar':>5} {'a0':>4} {'a1':>4} {'a2':>4} {'t':>3} {'h3':>3}")
for name, g in EXAMPLES.items():
    b = invariants(g)
    print(f"{name:<24} {b.e:>3} {b.e_bar:>5} {b.a0:>4} {b.a1:>4} {b.a2:>4} {b.t:>3} {b.h3:>3}")

print("\nIdentities on 200 random graphs (n = 4..12):")
rng = random.Random(0)
for _ in range(200):
    n = rng.randint(4, 12)
    g = Graph.random(n, rng)
    b = invariants(g)
    bc = invariants(complement(g))
    assert (b.a0, b.a1, b.a2, b.h3) == (bc.a0, bc.a1, bc.a2, bc.h3)
    assert b.a2 == b.e * b.e_bar
    assert b.a1 == sum(g.degree(x) * (n - 1 - g.degree(x)) for x in range(n))
    assert b.h3 == comb(n, 3) - b.a1 // 2
print("  complement-invariance, a2 = e*e_bar, a1 = sum d*d_bar, h3 = C(n,3) - a1/2: all hold")
