"""Poke at a billion-node preferential-attachment graph without building it.

The point of the lazy sampler is that a handful of adjacency queries on an
enormous instance cost microseconds and a few kilobytes, while still being
draws from the true whole-graph distribution.  This script asks for the
attachment targets of a few far-flung nodes, walks one node's neighbor
stream, and prints what the whole exercise cost.

Run: python3 demos/huge_graph_queries.py
"""

import time

from flygraph import BAGenerator, RRTGenerator

N = 1_000_000_000

gen = BAGenerator(N, seed=2024)

print(f"graph: preferential attachment, n = {N:,} (never materialized)")
print()

probes = [2, 1_000, 33_554_432, 999_999_999, 123_456_789]
t0 = time.perf_counter()
for j in probes:
    print(f"  attachment target of node {j:>11,} -> {gen.ba_parent(j):,}")
t1 = time.perf_counter()
print(f"  ({(t1 - t0) * 1e3:.2f} ms for {len(probes)} targets)")
print()

j = 123_456_789
print(f"neighbor stream of node {j:,}:")
shown = 0
while True:
    r = gen.next_neighbor(j)
    if r == N + 1:
        print("  <end of neighbors>")
        break
    kind = "attachment target" if shown == 0 else "later node that attached here"
    print(f"  {r:>13,}   ({kind})")
    shown += 1
    if shown > 12:
        print("  ... truncating, popular node")
        break

print()
print(f"random bits consumed : {gen.bits_consumed:,}")
print(f"state cells stored   : {gen.stored_cells():,}")
print()

# Same trick for a uniform random recursive tree.
rrt = RRTGenerator(N, seed=7)
chain = [N]
while chain[-1] != 1:
    chain.append(rrt.parent(chain[-1]))
    if len(chain) > 200:
        break
print(f"recursive tree: root path from node {N:,} has length {len(chain) - 1}")
print("path head:", " -> ".join(f"{x:,}" for x in chain[:6]), "...")
print(f"bits for the whole path: {rrt.bits_consumed:,}")
