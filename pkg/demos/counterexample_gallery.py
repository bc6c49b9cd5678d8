#!/usr/bin/env python3
"""Gallery of the sharpness constructions.

Each pair is built, its claimed properties re-verified, and the exact
boundary it witnesses is demonstrated: which hypomorphy conditions hold,
and which conclusions still fail.
"""

from recomp.constructions import (
    clique_pair_counterexample,
    cycle_swap_pair,
    five_cycle_deletion_pairs,
    k7_counterexample,
    star_parity_pair,
    threshold_pair,
)
from recomp.graph6 import encode
from recomp.hypomorphy import (
    equal_up_to_complementation,
    equality_threshold,
    k_hypomorphic_utc,
    same_edge_counts_utc,
)
from recomp.isomorphism import isomorphic_up_to_complementation


def show(pair):
    print(f"  g       = {encode(pair.g)}")
    print(f"  g_prime = {encode(pair.g_prime)}")
    print(f"  verified: {', '.join(pair.claimed_properties)}")


print("Two cliques plus one cross edge (3-hypomorphic utc, not isomorphic utc):")
pair = clique_pair_counterexample(6)
show(pair)
print(f"  isomorphic utc? {isomorphic_up_to_complementation(pair.g, pair.g_prime).kind.value}")

print("\nSwapped cycles ((v-1)- and v-hypomorphic, unequal):")
pair = cycle_swap_pair(7)
show(pair)

print("\n5-cycle deletions (orders 4 and 3, hypomorphic utc at every size):")
for pair in five_cycle_deletion_pairs():
    show(pair)

print("\nThe k = 7 exception (equal edge counts utc on every 7-subset):")
pair = k7_counterexample(10)
show(pair)
for k in (6, 7, 8):
    print(f"  edge counts utc at k={k}: {same_edge_counts_utc(pair.g, pair.g_prime, k).holds}")

print("\nStar against empty/complete (parity matches utc, not isomorphic utc):")
show(star_parity_pair(3, 6))

print("\nClass-G based pairs hypomorphic utc above the threshold:")
for r in (2, 3, 4):
    pair = threshold_pair(5, r)
    v = pair.g.n
    theta = equality_threshold(v)
    show(pair)
    ks = list(range(theta + 1, v + 1))
    assert all(k_hypomorphic_utc(pair.g, pair.g_prime, k).holds for k in ks)
    assert not equal_up_to_complementation(pair.g, pair.g_prime)
    print(f"  v={v}: threshold={theta}, hypomorphic utc for k in {ks}, yet unequal utc")
