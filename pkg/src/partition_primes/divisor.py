"""Divisor counts and the prefix sums 2 * sum_{j<n} ceil(d(j)/2).

Two independent routes to the prefix sum are provided: a sieved table of
d(k) with cumulative sums, and the hyperbola method,

    2 * sum_{k=1}^{n-1} ceil(d(k)/2) = sum_{k=1}^{n-1} floor((n-1)/k) + isqrt(n-1),

which needs only O(sqrt(n)) integer operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def divisor_count(k: int) -> int:
    """Number of positive divisors of ``k`` by trial division."""
    k = int(k)
    if k < 1:
        raise ValueError(f"divisor_count needs k >= 1, got {k}")
    r = math.isqrt(k)
    count = 2 * sum(1 for i in range(1, r + 1) if k % i == 0)
    if r * r == k:
        count -= 1
    return count


@dataclass(frozen=True)
class DivisorTable:
    """d(k) for 1 <= k <= limit and the ceil-half prefix sums.

    ``d[0]`` is an unused 0. ``S[n]`` is 2 * sum_{j=1}^{n-1} ceil(d(j)/2)
    for 0 <= n <= limit + 1 (``S[0] = S[1] = 0``).
    """

    limit: int
    d: np.ndarray
    S: np.ndarray

    def extended(self, limit: int) -> DivisorTable:
        """A new table covering at least ``limit``; ``self`` is unchanged."""
        if limit <= self.limit:
            return self
        return build_divisor_table(limit)


def _divisor_counts(limit: int) -> np.ndarray:
    # every divisor pair (k, m/k) with k < sqrt(m) contributes 2, a square root 1
    d = np.zeros(limit + 1, dtype=np.int64)
    for k in range(1, math.isqrt(limit) + 1):
        d[k * k :: k] += 2
        d[k * k] -= 1
    return d


def build_divisor_table(limit: int) -> DivisorTable:
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"divisor table limit must be >= 2, got {limit}")
    d = _divisor_counts(limit)
    step = d + (d & 1)  # 2*ceil(d/2)
    S = np.zeros(limit + 2, dtype=np.int64)
    np.cumsum(step[1:], out=S[2:])
    d.setflags(write=False)
    S.setflags(write=False)
    return DivisorTable(limit=limit, d=d, S=S)


def divisor_summatory(x: int) -> int:
    """sum_{k=1}^{x} floor(x/k), i.e. sum_{k<=x} d(k), by the hyperbola method."""
    x = int(x)
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    s = math.isqrt(x)
    return 2 * sum(x // k for k in range(1, s + 1)) - s * s


def divisor_summatory_many(xs) -> np.ndarray:
    """Vectorised :func:`divisor_summatory` over an array of nonnegative ints."""
    xs = np.asarray(xs, dtype=np.int64)
    s = np.array([math.isqrt(int(v)) for v in xs], dtype=np.int64)
    total = np.zeros_like(xs)
    smax = int(s.max()) if len(s) else 0
    for k in range(1, smax + 1):
        live = s >= k
        total[live] += xs[live] // k
    return 2 * total - s * s


def ceil_half_divisor_prefix(n: int, table: DivisorTable | None = None) -> int:
    """2 * sum_{j=1}^{n-1} ceil(d(j)/2).

    Reads the prefix sum from ``table`` when it covers ``n``, otherwise
    falls back to the hyperbola identity.
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"prefix needs n >= 2, got {n}")
    if table is not None and n <= table.limit + 1:
        return int(table.S[n])
    return divisor_summatory(n - 1) + math.isqrt(n - 1)
