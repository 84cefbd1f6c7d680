"""Check that lazy answers follow the same law as up-front sampling.

Three comparisons, strongest first:

1. Exact enumeration: the preferential-attachment model and the copying
   model induce identical distributions over whole graphs (small n, done
   with rational arithmetic, no sampling error).
2. Lazy vs. batch: drive the on-the-fly generator through a full sweep,
   reconstruct the graph it committed to, and compare the empirical law
   against the exact one.
3. Schedule independence: two very different query orders give outcome
   frequencies that agree with each other (two-sample chi-square).

Run: python3 demos/distribution_equivalence.py
"""

from flygraph import (
    BAGenerator,
    chi_square_gof,
    chi_square_two_sample,
    empirical_law,
    enumerate_exact,
    reconstruct_via_sweep,
    tv_distance,
)

# 1. Exact law equality, no randomness involved.
print("exact enumeration (rational arithmetic):")
for n in range(2, 7):
    ba = enumerate_exact("ba", n)
    z = enumerate_exact("z", n)
    same = ba == z
    print(f"  n={n}: {len(ba):>4} outcomes, preferential == copying: {same}")
    assert same

# 2. Lazy sweep vs. the exact law.
n = 5
trials = 40_000
exact = enumerate_exact("ba", n)

counts = {}
for seed in range(trials):
    outcome = reconstruct_via_sweep(BAGenerator(n, seed=seed), "ba", "sweep").outcome()
    counts[outcome] = counts.get(outcome, 0) + 1

tv = float(tv_distance(empirical_law(counts, trials), exact))
p = chi_square_gof(counts, exact, trials)
print()
print(f"lazy sweep vs exact law at n={n}, {trials:,} seeds:")
print(f"  outcomes seen  : {len(counts)} of {len(exact)}")
print(f"  total variation: {tv:.4f}")
print(f"  chi-square p   : {p:.3f}")

# 3. Two schedules, two-sample test.  The graph law must not depend on the
# order in which adjacency questions get asked.
other = {}
for seed in range(trials):
    sample = reconstruct_via_sweep(BAGenerator(n, seed=trials + seed), "ba", "roundrobin")
    other[sample.outcome()] = other.get(sample.outcome(), 0) + 1

p2 = chi_square_two_sample(counts, other)
print()
print(f"sweep vs roundrobin schedules, {trials:,} seeds each:")
print(f"  two-sample chi-square p: {p2:.3f}")
