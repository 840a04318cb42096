"""
Betweenness restricted to short paths
=====================================

Betweenness counts shortest paths between all pairs.  Keeping only pairs
at distance at most k is much cheaper on large graphs; the comparison
curve shows how much of the top cohort survives the approximation.
"""

import time

import cccurve as cc
from cccurve.curve import ccco

g = cc.generate(cc.ModelSpec.parse("directed_cm:n=5000,alpha=3"), 7)

t = time.perf_counter()
full = cc.betweenness(g)
print(f"full betweenness: {time.perf_counter() - t:.2f}s")

for k in (2, 4, 6, 8):
    t = time.perf_counter()
    approx = cc.betweenness(g, k=k)
    elapsed = time.perf_counter() - t
    c = cc.ccc(approx, full, seed=7)
    print(f"k={k}: {elapsed:.2f}s  CCCo(0.05)={ccco(c, 0.05):.3f}  CCCo(0.01)={ccco(c, 0.01):.3f}")

# a random ranking shares about p of the top-p cohort
rnd = cc.ccc(cc.random_scores(g, 7), full, seed=7)
print(f"random: CCCo(0.05)={ccco(rnd, 0.05):.3f}")
