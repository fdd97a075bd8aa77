"""
Collatz orbits across the family of arithmetics
================================================

The map halves (in the current arithmetic) when 2 divides the value, else
triples and adds one.  Even differences behave like the classical problem
and seem to always cycle; odd differences force divergence except at two
fixed points.
"""

from karith import (
    OrbitKind,
    fixed_points,
    goldbach_scan,
    orbit,
    orbit_length_scan,
)

# The 17-orbit under a few differences.
for k in (2, 6, 1, 17):
    outcome = orbit(17, k)
    head = " -> ".join(str(v) for v in outcome.trajectory[:10])
    print(f"k={k:3}: {head} ...")
    if outcome.kind == OrbitKind.CYCLE:
        print(f"       cycles: length {outcome.cycle_length} entered at "
              f"{outcome.cycle_entry}, {outcome.ns} steps recorded")
    else:
        print(f"       {outcome.kind.value}")
    print()

# The long hidden cycle at k = 1700 needs a larger magnitude bound.
big = orbit(17, 1700, magnitude_bound=5_000_000)
print(f"k=1700: {big.ns} steps, cycle length {big.cycle_length}, "
      f"entered at {big.cycle_entry}")

# Orbit lengths over all even differences up to 40 (the scan behind the
# orbit-length plot; emit CSV via: karith orbit --n 17 --scan 2..100:2
# --format csv).
print("\nk : steps")
for k, ns, kind in orbit_length_scan(17, list(range(2, 41, 2))):
    print(f"{k:3} {ns}")

# Odd differences have exactly one or two fixed points and nothing else.
for k in (3, 5, 7):
    print(f"\nfixed points at k={k}: {fixed_points(k)}")

# Sums of two primes: in the power-of-two arithmetics the property fails
# immediately; 14 is the least even target with no decomposition.
print("\nGoldbach counterexamples, k=1 up to 20:",
      goldbach_scan(1, 20).counterexamples)
print("Goldbach counterexamples, k=2 up to 10000:",
      goldbach_scan(2, 10_000).counterexamples)
