"""Prime sieve with dense prime-counting lookup.

Primes are indexed from 1 (p_1 = 2) and the convention p_0 = 1 is honoured
by :func:`nth_prime`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: np.ndarray  # int64, strictly increasing
    pi_prefix: np.ndarray  # pi_prefix[x] == pi(x) for 0 <= x <= limit

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, x: int) -> bool:
        x = int(x)
        if x < 2 or x > self.limit:
            return False
        return bool(self.pi_prefix[x] - self.pi_prefix[x - 1])


def _is_prime_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    return mask


def build_sieve(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes up to and including ``limit``."""
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    mask = _is_prime_mask(limit)
    primes = np.flatnonzero(mask).astype(np.int64)
    # int32 is enough for pi(x) far beyond any limit that fits in memory
    pi_prefix = np.cumsum(mask, dtype=np.int32)
    primes.setflags(write=False)
    pi_prefix.setflags(write=False)
    return PrimeTable(limit=limit, primes=primes, pi_prefix=pi_prefix)


def prime_pi(table: PrimeTable, x: int) -> int:
    x = int(x)
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if x > table.limit:
        raise IndexError(f"x={x} exceeds sieve limit {table.limit}")
    return int(table.pi_prefix[x])


def nth_prime(table: PrimeTable, n: int) -> int:
    """Return p_n, with p_0 = 1."""
    n = int(n)
    if n < 0:
        raise ValueError(f"prime index must be nonnegative, got {n}")
    if n == 0:
        return 1
    if n > len(table.primes):
        raise IndexError(f"table holds {len(table.primes)} primes, asked for p_{n}")
    return int(table.primes[n - 1])


def sieve_for_index(n: int) -> PrimeTable:
    """Smallest convenient sieve that contains p_n (Rosser-Schoenfeld bound)."""
    n = max(int(n), 6)
    bound = n * (math.log(n) + math.log(math.log(n)))
    return build_sieve(int(bound) + 10)
