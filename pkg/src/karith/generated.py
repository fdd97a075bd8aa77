"""Arithmetics generated by arbitrary integer sequences.

The product of m by n in the arithmetic generated by (a_i) is

    (m - n + 1) * n + W(n),    W(n) = sum over i < n of (n - i) * a_i,

which reduces to the k-arithmetic when the sequence is constant.  Divisor
enumeration has no closed characterization here, so it scans term counts up
to a bound: 6a by default for arithmetic-progression generators (the only
family with an asserted bound), caller-supplied for everything else.
"""

from __future__ import annotations

from fractions import Fraction

from .core import DivisorReport, DomainError, NotDivisible
from .generators import Generator, supports_default_divisor_bound, weighted_sum


def seq_product(m: int, n: int, g: Generator) -> int:
    """Product of m by n in the arithmetic generated by g.

    Term counts below 1 are accepted only for generators with a polynomial
    closed form (constants, arithmetic progressions, polynomial sequences).
    """
    return (m - n + 1) * n + weighted_sum(g, n)


def seq_quotient(a: int, b: int, g: Generator) -> int | NotDivisible:
    """Start value c with seq_product(c, b, g) == a, or NotDivisible."""
    if b < 1:
        raise DomainError(f"quotient needs a positive term count, got {b}")
    num = a - g.prefix_sums().weighted(b)
    q, r = divmod(num, b)
    if r == 0:
        return q + b - 1
    return NotDivisible(Fraction(num, b) + (b - 1))


def default_search_bound(a: int, g: Generator) -> int:
    if not supports_default_divisor_bound(g):
        raise DomainError(
            f"no divisor bound is known for {g.spec()}; pass search_bound explicitly"
        )
    return 6 * a


def seq_divisors(a: int, g: Generator, search_bound: int | None = None) -> DivisorReport:
    """Divisors of a >= 1 found by scanning term counts 1..search_bound."""
    if a < 1:
        raise DomainError(f"divisor report needs a positive subject, got {a}")
    if search_bound is None:
        search_bound = default_search_bound(a, g)
    if search_bound < 1:
        raise DomainError(f"search bound must be positive, got {search_bound}")
    divisors = []
    witnesses = []
    for d in range(1, search_bound + 1):
        c = seq_quotient(a, d, g)
        if isinstance(c, int):
            divisors.append(d)
            witnesses.append((d, c))
    return DivisorReport(
        subject=a,
        divisors=tuple(divisors),
        witnesses=tuple(witnesses),
        search_bound=search_bound,
    )


def _divisor_count_capped(a: int, g: Generator, bound: int, cap: int) -> int:
    """Number of divisors of a up to the bound, stopping early past cap."""
    count = 0
    sums = g.prefix_sums()
    for d in range(1, bound + 1):
        if (a - sums.weighted(d)) % d == 0:
            count += 1
            if count > cap:
                break
    return count


def seq_is_prime(p: int, g: Generator, search_bound: int | None = None) -> bool:
    """True when p > 1 has exactly two divisors within the search bound."""
    if p <= 1:
        return False
    if search_bound is None:
        search_bound = default_search_bound(p, g)
    return _divisor_count_capped(p, g, search_bound, cap=2) == 2


def seq_primes_below(n: int, g: Generator, bound_factor: int | None = None) -> list[int]:
    """Ascending primes p with 1 < p < n in the generated arithmetic.

    Per-candidate scan bound is bound_factor * p; the factor defaults to 6
    for arithmetic-progression generators and must be given otherwise.
    """
    factor = _resolve_factor(g, bound_factor)
    return [p for p in range(2, n) if seq_is_prime(p, g, search_bound=factor * p)]


def exact_divisor_count_numbers(
    count: int, limit: int, g: Generator, bound_factor: int | None = None
) -> list[int]:
    """All 1 < n < limit with exactly ``count`` divisors in the arithmetic."""
    if count < 1:
        raise DomainError(f"divisor count must be positive, got {count}")
    if limit < 2:
        raise DomainError(f"limit must be at least 2, got {limit}")
    factor = _resolve_factor(g, bound_factor)
    out = []
    for n in range(2, limit):
        if _divisor_count_capped(n, g, factor * n, cap=count) == count:
            out.append(n)
    return out


def _resolve_factor(g: Generator, bound_factor: int | None) -> int:
    if bound_factor is not None:
        if bound_factor < 1:
            raise DomainError(f"bound factor must be positive, got {bound_factor}")
        return bound_factor
    if not supports_default_divisor_bound(g):
        raise DomainError(
            f"no divisor bound is known for {g.spec()}; pass bound_factor explicitly"
        )
    return 6


def squares_sequence(count: int, g: Generator) -> list[int]:
    """Self-products i*i for i = 1..count in the generated arithmetic."""
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    return [seq_product(i, i, g) for i in range(1, count + 1)]


def cubes_sequence(count: int, g: Generator) -> list[int]:
    """Triple self-products (i*i)*i for i = 1..count."""
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    return [seq_product(seq_product(i, i, g), i, g) for i in range(1, count + 1)]
