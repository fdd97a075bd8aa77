"""
Divisors and primes under a changed product
=============================================

A positive d divides a when a splits into d progression terms.  For even
differences the divisors are the usual ones; for odd differences they are
the divisors of 2a minus the even divisors of a, which turns the powers of
two into the only primes.
"""

from karith import is_k_prime, k_divisors, k_primes_below, representations

# Divisors of 20 under difference 3, with the start value witnessing each.
report = k_divisors(20, 3)
print("divisors of 20 (difference 3):", report.divisors)
for d, start in report.witnesses:
    print(f"  20 as {d} terms starting from quotient {start}")

# Every representation spelled out: 12 as progression sums of difference 3.
print("\n12 as progression sums with difference 3:")
for rep in representations(12, 3):
    terms = " + ".join(f"({t})" if t < 0 else str(t) for t in rep.terms)
    print(f"  length {rep.length:2}: {terms}")

# Prime censuses flip with the parity of the difference.
print("\nprimes below 85, difference 2:", k_primes_below(85, 2))
print("primes below 85, difference 4:", k_primes_below(85, 4))
print("primes below 85, difference 1:", k_primes_below(85, 1))

# 17 stops being prime once the difference is odd; 16 starts being prime.
for p in (16, 17):
    print(f"\n{p}: prime at difference 2? {is_k_prime(p, 2)}   "
          f"at difference 1? {is_k_prime(p, 1)}")
