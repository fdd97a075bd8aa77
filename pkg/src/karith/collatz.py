"""Collatz-style orbits in the k-arithmetic, plus Goldbach-style scanners.

The map halves (in the k-arithmetic sense) whenever 2 divides the current
value in that arithmetic, and otherwise applies the k-product by 3 and adds
one.  For even k this is the usual Collatz shape; for odd k the parity of
divisibility flips and almost every orbit diverges.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .core import DomainError, k_product, k_quotient

DEFAULT_MAGNITUDE_BOUND = 500_000
DEFAULT_STEP_LIMIT = 1_000_000


class OrbitKind(Enum):
    CYCLE = "cycle"
    FIXED_POINT = "fixed_point"
    MAGNITUDE_EXCEEDED = "magnitude_exceeded"
    STEP_LIMIT = "step_limit"


@dataclass(frozen=True)
class OrbitOutcome:
    """Orbit prefix and how it terminated.

    A trajectory that repeats ends with the first repeated value included,
    so for cycles ns = len(trajectory) - 1 = pre_period + cycle_length, the
    step count convention used by all recorded orbit lengths here.
    """

    trajectory: tuple[int, ...]
    kind: OrbitKind
    pre_period: int | None = None
    cycle_length: int | None = None
    cycle_entry: int | None = None
    fixed_value: int | None = None
    bound: int | None = None
    steps: int | None = None

    @property
    def ns(self) -> int | None:
        if self.kind in (OrbitKind.CYCLE, OrbitKind.FIXED_POINT):
            return len(self.trajectory) - 1
        return None


class OddOrbitFate(Enum):
    DIVERGES = "diverges"
    FIXED_POINT = "fixed_point"


def two_divides(n: int, k: int) -> bool:
    """Whether 2 is a divisor of n in the k-arithmetic.

    Equivalent to n even for even k, n odd for odd k.
    """
    return isinstance(k_quotient(n, 2, k), int)


def collatz_step(n: int, k: int) -> int:
    """One application of the Collatz-style map in the k-arithmetic."""
    q = k_quotient(n, 2, k)
    if isinstance(q, int):
        return q
    return k_product(n, 3, k) + 1


def orbit(
    n: int,
    k: int,
    magnitude_bound: int = DEFAULT_MAGNITUDE_BOUND,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> OrbitOutcome:
    """Iterate the map from n until a repeat, a bound excess, or exhaustion.

    Values are recorded while their magnitude stays below the bound; the
    first repeated value is recorded too, closing the loop.  A loop of
    length one is reported as a fixed point rather than a cycle.
    """
    trajectory: list[int] = []
    seen: dict[int, int] = {}
    current = n
    applied = 0
    while True:
        if abs(current) >= magnitude_bound:
            return OrbitOutcome(
                trajectory=tuple(trajectory),
                kind=OrbitKind.MAGNITUDE_EXCEEDED,
                bound=magnitude_bound,
            )
        trajectory.append(current)
        if current in seen:
            first = seen[current]
            cycle_length = len(trajectory) - 1 - first
            if cycle_length == 1:
                return OrbitOutcome(
                    trajectory=tuple(trajectory),
                    kind=OrbitKind.FIXED_POINT,
                    pre_period=first,
                    cycle_length=1,
                    fixed_value=current,
                )
            return OrbitOutcome(
                trajectory=tuple(trajectory),
                kind=OrbitKind.CYCLE,
                pre_period=first,
                cycle_length=cycle_length,
                cycle_entry=current,
            )
        seen[current] = len(trajectory) - 1
        if applied >= step_limit:
            return OrbitOutcome(
                trajectory=tuple(trajectory),
                kind=OrbitKind.STEP_LIMIT,
                steps=applied,
            )
        current = collatz_step(current, k)
        applied += 1


def fixed_points(k: int) -> list[int]:
    """Fixed points of the map for odd k.

    2 - k is always fixed (halving branch).  (5 - 3k)/2 is fixed exactly
    when it is even, which happens for k = 3 mod 4; odd values take the
    halving branch instead and move away.
    """
    if k % 2 == 0:
        raise DomainError("fixed-point classification applies to odd k only")
    points = [2 - k]
    exceptional = (5 - 3 * k) // 2
    if exceptional % 2 == 0:
        points.append(exceptional)
    return sorted(set(points))


def odd_k_classification(n: int, k: int) -> OddOrbitFate:
    """Eventual fate of the n-orbit for odd k: fixed point or divergence.

    The orbit reaches a fixed point only from 2 - k itself, or along the
    doubling chain of halving preimages that lands exactly on the even
    fixed point (5 - 3k)/2 when that exists.  Every other start diverges.
    """
    if k % 2 == 0:
        raise DomainError("classification applies to odd k only")
    if n == 2 - k:
        return OddOrbitFate.FIXED_POINT
    exceptional = (5 - 3 * k) // 2
    if exceptional % 2 != 0:
        return OddOrbitFate.DIVERGES
    # Halving preimages of v satisfy m - (2 - k) = 2 * (v - (2 - k)), so the
    # chain into the even fixed point is (2 - k) + 2**j * (1 - k) / 2.
    offset = n - (2 - k)
    step = (1 - k) // 2
    if step == 0 or offset == 0:
        return OddOrbitFate.DIVERGES
    q, r = divmod(offset, step)
    if r != 0 or q < 1:
        return OddOrbitFate.DIVERGES
    return OddOrbitFate.FIXED_POINT if q & (q - 1) == 0 else OddOrbitFate.DIVERGES


def orbit_length_scan(
    n: int,
    k_values: list[int],
    magnitude_bound: int = DEFAULT_MAGNITUDE_BOUND,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> list[tuple[int, int | None, str]]:
    """Orbit summary rows (k, ns, kind) for plotting or CSV emission."""
    rows = []
    for k in k_values:
        outcome = orbit(n, k, magnitude_bound, step_limit)
        rows.append((k, outcome.ns, outcome.kind.value))
    return rows


@dataclass(frozen=True)
class GoldbachReport:
    """Even targets in [6, limit] that are (or are not) sums of two k-primes."""

    k: int
    limit: int
    counterexamples: tuple[int, ...]
    decompositions: dict[int, tuple[int, int]] | None = None

    @property
    def least_counterexample(self) -> int | None:
        return self.counterexamples[0] if self.counterexamples else None


def goldbach_scan(k: int, limit: int, record_witnesses: bool = False) -> GoldbachReport:
    """Search every even target 6..limit for a sum of two k-primes.

    Uses the closed characterization of k-primality (usual primes for even
    k, powers of two for odd k) for speed; the definitional route is
    exercised against it elsewhere.
    """
    if limit < 6:
        raise DomainError(f"targets start at 6, got limit {limit}")
    if k % 2 == 0:
        sieve = _prime_sieve(limit)
        candidates = [p for p in range(2, limit // 2 + 1) if sieve[p]]

        def is_prime(x: int) -> bool:
            return sieve[x]

    else:
        candidates = []
        p = 2
        while p <= limit // 2:
            candidates.append(p)
            p *= 2

        def is_prime(x: int) -> bool:
            return x >= 2 and x & (x - 1) == 0

    counterexamples = []
    decompositions: dict[int, tuple[int, int]] = {}
    for h in range(6, limit + 1, 2):
        found = None
        for p1 in candidates:
            if 2 * p1 > h:
                break
            if is_prime(h - p1):
                found = (p1, h - p1)
                break
        if found is None:
            counterexamples.append(h)
        elif record_witnesses:
            decompositions[h] = found
    return GoldbachReport(
        k=k,
        limit=limit,
        counterexamples=tuple(counterexamples),
        decompositions=decompositions if record_witnesses else None,
    )


def _prime_sieve(n: int) -> list[bool]:
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = [False] * len(sieve[p * p :: p])
    return sieve


def product_parity_set(k: int, a_values) -> set[int]:
    """The set of products a * 2 (arith k) over the given a values."""
    return {k_product(a, 2, k) for a in a_values}
