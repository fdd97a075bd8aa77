"""
Covering the integers with prime progressions
==============================================

Each prime p contributes the progression { product(n, p) : n in Z }, always
an arithmetic progression of difference p.  Unioning over all primes almost
covers the integers: only -1 and 1 escape for even differences, only 0 for
odd ones, which is what makes the prime sets provably infinite.
"""

from karith import (
    locate_power_of_two_cover,
    progression_window,
    residual_set,
)

# A single progression window: multiples of 3 shifted by 2, difference 1.
print("S(3, 2) at difference 1:",
      progression_window(3, 2, 1, range(-9, 10)))

# Residual of the window [-60, 60] under all prime progressions.
for k in (2, 4, 1, 3):
    report = residual_set(k, 60)
    print(f"k={k}: primes {report.primes_used[:8]}..., "
          f"residual {report.to_bracket_row()}")

# For odd differences the covering prime of h is the power of two just
# above the 2-part of h.
for h in (7, 40, -12):
    p, n = locate_power_of_two_cover(h, 1 if h != -12 else 3)
    print(f"h={h:4}: covered by the multiples of {p} (index {n})")

# Wider windows change nothing: the residual is pinned by parity alone.
print("\nresidual at window half-width 200:")
print("  k=6 :", residual_set(6, 200).residual)
print("  k=7 :", residual_set(7, 200).residual)
