"""Measure per-query cost as the graph size grows.

The claim worth checking: random bits, stored cells, and wall time per
adjacency query all grow polylogarithmically in n.  This script runs a
fixed number of random queries at each size and tabulates the averages.
Doubling the exponent of n should roughly add a constant, not multiply.

Run: python3 demos/resource_scaling.py
"""

import math
import random
import time

from flygraph import BAGenerator

QUERIES = 2_000

print(f"{'n':>14} {'bits/query':>11} {'cells/query':>12} {'us/query':>9} {'log2(n)^2':>10}")

for exp in (4, 5, 6, 7, 8):
    n = 10**exp
    gen = BAGenerator(n, seed=exp)
    rng = random.Random(exp)

    t0 = time.perf_counter()
    for _ in range(QUERIES):
        j = rng.randint(1, n)
        if rng.random() < 0.5:
            gen.ba_parent(j)
        else:
            gen.next_neighbor(j)
    t1 = time.perf_counter()

    bits = gen.bits_consumed / QUERIES
    cells = gen.tree.stored_cells() / QUERIES
    us = (t1 - t0) * 1e6 / QUERIES
    log2n = math.log2(n)
    print(f"{n:>14,} {bits:>11.1f} {cells:>12.1f} {us:>9.1f} {log2n * log2n:>10.0f}")

print()
print("bits and cells track low powers of log2(n); time stays flat-ish.")
print("nothing here ever allocates anything proportional to n itself.")
