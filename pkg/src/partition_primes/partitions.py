"""Partition norm and supernorm, and checks of the partition/prime-gap identities.

The supernorm sends a partition with multiplicities m_1, m_2, ... to
2^m_1 3^m_2 5^m_3 ..., a bijection between partitions and positive integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import mpmath

from .sieve import PrimeTable, nth_prime, prime_pi

LOG3_OVER_LOG2 = math.log(3) / math.log(2)


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    @property
    def is_nonunitary(self) -> bool:
        return 1 not in self.parts

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def norm(lam: Partition) -> int:
    return math.prod(lam.parts)


def supernorm(lam: Partition, table: PrimeTable) -> int:
    if lam.parts and lam.parts[0] > len(table.primes):
        raise IndexError(f"need p_{lam.parts[0]}, table holds {len(table.primes)} primes")
    return math.prod(nth_prime(table, i) for i in lam.parts)


def partition_from_integer(m: int, table: PrimeTable) -> Partition:
    """Inverse supernorm: p_i^a in m becomes part i with multiplicity a."""
    m = int(m)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    parts = []
    rest = m
    for i, p in enumerate(table.primes, start=1):
        p = int(p)
        if p * p > rest:
            break
        while rest % p == 0:
            parts.append(i)
            rest //= p
    if rest > 1:
        if rest > table.limit:
            raise IndexError(f"prime factor of {m} beyond sieve limit {table.limit}")
        parts.append(prime_pi(table, rest))
    return Partition(tuple(parts))


def nonunitary_partitions_of_norm(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions with no part 1 and product ``n`` (multiplicative partitions)."""

    def descend(rest: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rest == 1:
            yield ()
            return
        for part in range(min(rest, bound), 1, -1):
            if rest % part == 0:
                for tail in descend(rest // part, part):
                    yield (part,) + tail

    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for parts in descend(n, n if max_part is None else max_part):
        yield Partition(parts)


def enumerate_short_nonunitary(n: int) -> list[Partition]:
    """Partitions of norm n, no part 1, with one or two parts."""
    n = int(n)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    out = [Partition((n,))]
    for small in range(2, math.isqrt(n) + 1):
        if n % small == 0:
            out.append(Partition((n // small, small)))
    return out


def gap_partitions(n: int, table: PrimeTable) -> set[Partition]:
    """Partitions whose supernorm lies in [p_n, p_{n+1})."""
    lo, hi = nth_prime(table, n), nth_prime(table, n + 1)
    return {partition_from_integer(m, table) for m in range(lo, hi)}


def verify_gap_equivalence(n: int, table: PrimeTable) -> bool:
    """True when the partitions mapping into [p_n, p_{n+1}) number p_{n+1} - p_n."""
    lo, hi = nth_prime(table, n), nth_prime(table, n + 1)
    found = gap_partitions(n, table)
    if any(not (lo <= supernorm(lam, table) < hi) for lam in found):
        return False
    return len(found) == hi - lo


def _at_most_log3_power(a: int, b: int) -> bool:
    """Decide a <= b**(log 3 / log 2), i.e. log 2 * log a <= log 3 * log b.

    Equality holds only for a = 3^k, b = 2^k (e.g. all-twos partitions), which
    is settled exactly; other near-ties are re-evaluated at 60 digits.
    """
    k = b.bit_length() - 1
    if b == 1 << k and a == 3**k:
        return True
    lhs = math.log(2) * math.log(a)
    rhs = math.log(3) * math.log(b)
    if abs(lhs - rhs) > 1e-9 * max(abs(lhs), abs(rhs), 1.0):
        return lhs <= rhs
    with mpmath.workdps(60):
        return mpmath.log(2) * mpmath.log(a) <= mpmath.log(3) * mpmath.log(b)


def check_norm_inequality(lam: Partition, table: PrimeTable) -> bool:
    """N < p_N <= supernorm <= N^(log 3/log 2) for non-unitary lam with N >= 5."""
    if not lam.is_nonunitary:
        raise ValueError(f"{lam} has a part equal to 1")
    n = norm(lam)
    if n < 5:
        raise ValueError(f"{lam} has norm {n} < 5")
    p_n = nth_prime(table, n)
    sup = supernorm(lam, table)
    if not (n < p_n <= sup):
        return False
    return _at_most_log3_power(sup, n)


def norm_inequality_counterexamples(norm_max: int, table: PrimeTable) -> list[Partition]:
    bad = []
    for n in range(5, int(norm_max) + 1):
        for lam in nonunitary_partitions_of_norm(n):
            if not check_norm_inequality(lam, table):
                bad.append(lam)
    return bad
