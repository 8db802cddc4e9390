"""Named property suites, each checking an identity exhaustively up to a bound."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .almost_prime import build_semiprime_counter
from .divisor import build_divisor_table, divisor_summatory_many
from .models import (
    PRINTED_CONSTANTS,
    FloorVariant,
    ModelContext,
    ModelParams,
    Variant,
    model_pi_many,
    model_sequence_up_to,
)
from .partitions import (
    check_norm_inequality,
    enumerate_short_nonunitary,
    nonunitary_partitions_of_norm,
    verify_gap_equivalence,
)
from .sieve import sieve_for_index


@dataclass
class SuiteResult:
    name: str
    bound: int
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (bound {self.bound}, {self.checked} checked)"
        if not self.passed:
            shown = ", ".join(str(c) for c in self.counterexamples[:10])
            more = len(self.counterexamples) - 10
            line += f": counterexamples {shown}" + (f" ... (+{more})" if more > 0 else "")
        return line


def divisor_identity(up_to: int = 100_000) -> SuiteResult:
    """Prefix sums of 2*ceil(d/2) against the hyperbola sum plus isqrt(n-1)."""
    res = SuiteResult("divisor-identity", up_to)
    table = build_divisor_table(up_to)
    ns = np.arange(2, up_to + 1, dtype=np.int64)
    roots = np.array([math.isqrt(int(n) - 1) for n in ns], dtype=np.int64)
    other = divisor_summatory_many(ns - 1) + roots
    bad = np.flatnonzero(table.S[2 : up_to + 1] != other)
    res.checked = len(ns)
    res.counterexamples = [int(ns[i]) for i in bad]
    return res


def short_partition_count(n_max: int = 10_000) -> SuiteResult:
    res = SuiteResult("short-partition-count", n_max)
    d = build_divisor_table(max(n_max, 2)).d
    for n in range(2, n_max + 1):
        found = enumerate_short_nonunitary(n)
        if len(found) != (int(d[n]) + 1) // 2 or len(set(found)) != len(found):
            res.counterexamples.append(n)
        res.checked += 1
    return res


def gap_equivalence(n_max: int = 100) -> SuiteResult:
    res = SuiteResult("gap-equivalence", n_max)
    table = sieve_for_index(n_max + 1)
    for n in range(1, n_max + 1):
        if not verify_gap_equivalence(n, table):
            res.counterexamples.append(n)
        res.checked += 1
    return res


def norm_inequality(norm_max: int = 300) -> SuiteResult:
    """Every non-unitary partition with 5 <= norm <= norm_max."""
    res = SuiteResult("norm-inequality", norm_max)
    table = sieve_for_index(max(norm_max, 10))
    for n in range(5, norm_max + 1):
        for lam in nonunitary_partitions_of_norm(n):
            res.checked += 1
            if not check_norm_inequality(lam, table):
                res.counterexamples.append(lam.parts)
    return res


def _omega_by_trial_division(m: int) -> int:
    count, p = 0, 2
    while p * p <= m:
        while m % p == 0:
            m //= p
            count += 1
        p += 1 if p == 2 else 2
    return count + (m > 1)


def semiprime_brute_force(up_to: int = 100_000) -> SuiteResult:
    res = SuiteResult("semiprime-brute-force", up_to)
    counter = build_semiprime_counter(up_to)
    running = 0
    for x in range(0, up_to + 1):
        if x >= 2 and _omega_by_trial_division(x) == 2:
            running += 1
        if counter.count(x) != running:
            res.counterexamples.append(x)
        res.checked += 1
    return res


def floor_star_invariance(up_to: int = 1_000_000) -> SuiteResult:
    """model_pi unchanged by the even floor; even-floor sequences odd after p_1."""
    res = SuiteResult("floor-star-invariance", up_to)
    checkpoints = [10**k for k in range(1, 8) if 10**k <= up_to] or [up_to]
    ctx = ModelContext()
    for base in (ModelParams(Variant.MODEL2STAR, constants=PRINTED_CONSTANTS),
                 ModelParams(Variant.MODEL3, r=6, t=0.11, constants=PRINTED_CONSTANTS)):
        star = ModelParams(base.variant, r=base.r, t=base.t, floor_variant=FloorVariant.EVEN_STAR,
                           constants=base.constants)
        a = model_pi_many(checkpoints, base, ctx)
        b = model_pi_many(checkpoints, star, ctx)
        for c, x, y in zip(checkpoints, a, b):
            res.checked += 1
            if x != y:
                res.counterexamples.append((base.variant.value, c, x, y))
        seq = model_sequence_up_to(max(checkpoints), star, ctx).values
        evens = np.flatnonzero(seq[1:] % 2 == 0)
        res.checked += len(seq) - 1
        res.counterexamples += [(base.variant.value, "even value", int(seq[i + 1])) for i in evens[:5]]
    return res


SUITES = {
    "divisor-identity": (divisor_identity, "up_to"),
    "short-partition-count": (short_partition_count, "n_max"),
    "gap-equivalence": (gap_equivalence, "n_max"),
    "norm-inequality": (norm_inequality, "norm_max"),
    "semiprime-brute-force": (semiprime_brute_force, "up_to"),
    "floor-star-invariance": (floor_star_invariance, "up_to"),
}


def run_suite(name: str, bound: int | None = None) -> SuiteResult:
    try:
        fn, _ = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn() if bound is None else fn(bound)

