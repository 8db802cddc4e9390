"""Semiprime and k-almost-prime counting.

Prime factors are counted with multiplicity throughout (Omega(m) == 2 for a
semiprime), so 4 = 2*2 and 9 = 3*3 are semiprimes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sieve import PrimeTable, build_sieve, nth_prime, prime_pi


def big_omega_table(limit: int, primes: np.ndarray | None = None) -> np.ndarray:
    """Omega(m) for 0 <= m <= limit (entries 0 and 1 are 0)."""
    limit = int(limit)
    if primes is None:
        primes = build_sieve(max(limit, 2)).primes
    omega = np.zeros(limit + 1, dtype=np.int8)
    for p in primes:
        p = int(p)
        if p > limit:
            break
        q = p
        while q <= limit:
            omega[q::q] += 1
            q *= p
    return omega


@dataclass(frozen=True)
class SemiprimeCounter:
    limit: int
    pi2_prefix: np.ndarray  # pi2_prefix[x] == pi_2(x)

    def count(self, x: int) -> int:
        x = int(x)
        if x < 0:
            raise ValueError(f"x must be nonnegative, got {x}")
        if x > self.limit:
            raise IndexError(f"x={x} exceeds semiprime table limit {self.limit}")
        return int(self.pi2_prefix[x])


def build_semiprime_counter(limit: int, table: PrimeTable | None = None) -> SemiprimeCounter:
    limit = int(limit)
    if limit < 4:
        limit = 4
    primes = table.primes if table is not None and table.limit >= limit else None
    omega = big_omega_table(limit, primes)
    pi2 = np.cumsum(omega == 2, dtype=np.int32)
    pi2.setflags(write=False)
    return SemiprimeCounter(limit=limit, pi2_prefix=pi2)


def count_semiprimes(x: int, source: SemiprimeCounter | PrimeTable) -> int:
    """pi_2(x).

    With a :class:`SemiprimeCounter` this is a table lookup; with a
    :class:`PrimeTable` it uses sum_{p <= sqrt x} (pi(x/p) - pi(p) + 1).
    """
    x = int(x)
    if isinstance(source, SemiprimeCounter):
        return source.count(x)
    if x < 4:
        return 0
    if x // 2 > source.limit:
        raise IndexError(f"pi_2({x}) needs a sieve up to {x // 2}, have {source.limit}")
    total = 0
    for i, p in enumerate(source.primes, start=1):
        p = int(p)
        if p * p > x:
            break
        total += prime_pi(source, x // p) - i + 1
    return total


def count_k_almost(x: int, k: int) -> int:
    """pi_k(x) by brute-force factor counting; k == 1 counts primes."""
    x, k = int(x), int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if x < 2 ** k:
        return 0
    omega = big_omega_table(x)
    return int(np.count_nonzero(omega == k))


def landau_ratio(n: int, table: PrimeTable, counter: SemiprimeCounter) -> float:
    """pi_2(p_n) / (n log log n); tends to 1 slowly."""
    return counter.count(nth_prime(table, n)) / (n * math.log(math.log(n)))


def mertens_drift(n: int, table: PrimeTable, counter: SemiprimeCounter) -> float:
    """(pi_2(p_n) - n log log n) / n, which creeps toward the Meissel-Mertens constant."""
    return (counter.count(nth_prime(table, n)) - n * math.log(math.log(n))) / n
