"""Deterministic partition models of the prime sequence.

Every variant models the n-th prime as

    p_n = 1 + 2 * sum_{j=1}^{n-1} ceil(d(j)/2) + eps(n),   p_1 = 2, p_2 = 3,

and differs only in the correction term eps(n), which is passed through the
clamped floor (negative arguments give 0) or its even-rounded variant.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .almost_prime import SemiprimeCounter, build_semiprime_counter
from .divisor import DivisorTable, build_divisor_table
from .sieve import PrimeTable, build_sieve, sieve_for_index


@dataclass(frozen=True)
class Constants:
    gamma: float = 0.57721566490153286
    meissel_mertens: float = 0.26149721284764278


FULL_CONSTANTS = Constants()
# The four-digit values written out in the source text. The golden tables
# are reproduced with these; see README for the one cell that depends on it.
PRINTED_CONSTANTS = Constants(gamma=0.5772, meissel_mertens=0.2614)


class Variant(str, enum.Enum):
    MODEL1 = "m1"
    MODEL2 = "m2"
    MODEL2STAR = "m2star"
    MODEL2_1 = "m2.1"
    MODEL2STAR_R = "m2star-r"
    MODEL3_T = "m3t"
    MODEL3 = "m3"


class FloorVariant(str, enum.Enum):
    STANDARD = "standard"
    EVEN_STAR = "even-star"


class PrimeSource(str, enum.Enum):
    TRUE_PRIMES = "true"
    SELF_REFERENTIAL = "self"


@dataclass(frozen=True)
class ModelParams:
    variant: Variant = Variant.MODEL1
    r: float = 0.0
    t: float = 0.0
    floor_variant: FloorVariant = FloorVariant.STANDARD
    model2_prime_source: PrimeSource = PrimeSource.TRUE_PRIMES
    constants: Constants = FULL_CONSTANTS

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "floor_variant", FloorVariant(self.floor_variant))
        object.__setattr__(self, "model2_prime_source", PrimeSource(self.model2_prime_source))
        if not self.r >= 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if not 0 <= self.t <= 1:
            raise ValueError(f"t must lie in [0, 1], got {self.t}")


def model1() -> ModelParams:
    return ModelParams(Variant.MODEL1)


def model2(source: PrimeSource = PrimeSource.TRUE_PRIMES, **kw) -> ModelParams:
    return ModelParams(Variant.MODEL2, model2_prime_source=source, **kw)


def model2star(**kw) -> ModelParams:
    return ModelParams(Variant.MODEL2STAR, **kw)


def model3(r: float, t: float, **kw) -> ModelParams:
    return ModelParams(Variant.MODEL3, r=r, t=t, **kw)


# ---------------------------------------------------------------- floors

def modified_floor(x: float) -> int:
    """floor(x), except 0 for negative x."""
    return 0 if x < 0 else math.floor(x)


def floor_star(x: float) -> int:
    """modified_floor rounded down to an even integer."""
    f = modified_floor(x)
    return f - (f & 1)


def _apply_floor(raw: np.ndarray, variant: FloorVariant) -> np.ndarray:
    f = np.floor(raw).astype(np.int64)
    f[raw < 0] = 0
    if variant is FloorVariant.EVEN_STAR:
        f -= f & 1
    return f


# ---------------------------------------------------------------- context

@dataclass
class ModelContext:
    """Lookup tables shared by model evaluations.

    Tables are immutable; the context swaps in larger ones on demand.
    ``primes`` and ``semiprimes`` are only consulted by Model 2.
    """

    divisors: DivisorTable | None = None
    primes: PrimeTable | None = None
    semiprimes: SemiprimeCounter | None = None
    grow: bool = True
    high_precision_hits: int = field(default=0, compare=False)

    @classmethod
    def for_model2(cls, x: int) -> ModelContext:
        """Context sized for Model 2 up to value x, with 1.2x headroom."""
        bound = max(int(1.2 * x), 100)
        primes = build_sieve(bound)
        return cls(primes=primes, semiprimes=build_semiprime_counter(primes.limit, primes))

    def divisor_table(self, n_max: int) -> DivisorTable:
        if self.divisors is None or self.divisors.limit + 1 < n_max:
            if self.divisors is not None and not self.grow:
                raise IndexError(f"divisor table stops at {self.divisors.limit}")
            size = max(n_max, 2 * (self.divisors.limit if self.divisors else 0), 64)
            self.divisors = build_divisor_table(size)
        return self.divisors

    def prime_values(self, count: int) -> np.ndarray:
        """p_1 .. p_count from the sieve, growing it if allowed."""
        if self.primes is None:
            raise RuntimeError("Model 2 needs a PrimeTable in the context")
        if len(self.primes.primes) < count:
            if not self.grow:
                raise IndexError(f"sieve holds {len(self.primes.primes)} primes, need {count}")
            self.primes = sieve_for_index(2 * count)
        return self.primes.primes[:count]

    def semiprime_counts(self, values: np.ndarray) -> np.ndarray:
        if self.semiprimes is None:
            raise RuntimeError("Model 2 needs a SemiprimeCounter in the context")
        top = int(values.max()) if len(values) else 0
        if top > self.semiprimes.limit:
            if not self.grow:
                raise IndexError(f"semiprime table stops at {self.semiprimes.limit}")
            self.semiprimes = build_semiprime_counter(2 * top, self.primes)
        return self.semiprimes.pi2_prefix[values]


# ---------------------------------------------------------------- correction term

def _loglog(x):
    return np.log(np.log(x))


def _raw_correction(ns: np.ndarray, params: ModelParams, pi2: np.ndarray | None = None) -> np.ndarray:
    """Argument of the outer floor for indices ``ns`` (all >= 3), float64."""
    g, M = params.constants.gamma, params.constants.meissel_mertens
    m = ns.astype(np.float64) - 1.0
    r, t = params.r, params.t
    v = params.variant
    if v is Variant.MODEL1:
        return np.zeros_like(m)
    if v is Variant.MODEL2:
        return pi2.astype(np.float64) - 2 * g * m
    if v is Variant.MODEL2STAR:
        return m * (_loglog(m) - 2 * g)
    if v is Variant.MODEL2_1:
        return m * (_loglog(m) - 2 * g + M)
    if v is Variant.MODEL3_T:
        return m * (_loglog(m) - 2 * g + M * t)
    if v is Variant.MODEL2STAR_R:
        return (m + r) * _loglog(m + r) - 2 * g * m
    if v is Variant.MODEL3:
        return (m + r) * _loglog(m + r) - m * (2 * g - M * t)
    raise ValueError(f"unknown variant {v}")


def _raw_correction_mp(n: int, params: ModelParams, pi2: int | None = None):
    # repr() keeps the decimal value the user typed (0.11, not its binary neighbour)
    g = mpmath.mpf(repr(params.constants.gamma))
    M = mpmath.mpf(repr(params.constants.meissel_mertens))
    r, t = mpmath.mpf(repr(params.r)), mpmath.mpf(repr(params.t))
    m = mpmath.mpf(n - 1)
    ll = lambda x: mpmath.log(mpmath.log(x))  # noqa: E731
    v = params.variant
    if v is Variant.MODEL1:
        return mpmath.mpf(0)
    if v is Variant.MODEL2:
        return pi2 - 2 * g * m
    if v is Variant.MODEL2STAR:
        return m * (ll(m) - 2 * g)
    if v is Variant.MODEL2_1:
        return m * (ll(m) - 2 * g + M)
    if v is Variant.MODEL3_T:
        return m * (ll(m) - 2 * g + M * t)
    if v is Variant.MODEL2STAR_R:
        return (m + r) * ll(m + r) - 2 * g * m
    return (m + r) * ll(m + r) - m * (2 * g - M * t)


NEAR_INTEGER = 1e-9


def _correction(ns: np.ndarray, params: ModelParams, pi2: np.ndarray | None = None,
                ctx: ModelContext | None = None) -> np.ndarray:
    """Floored correction term, re-evaluating near-integer arguments at 40 digits."""
    raw = _raw_correction(ns, params, pi2)
    near = np.abs(raw - np.round(raw)) < NEAR_INTEGER * np.maximum(1.0, np.abs(raw))
    near &= raw > -1  # clamped to 0 anyway
    if params.variant is not Variant.MODEL1 and near.any():
        raw = raw.copy()
        with mpmath.workdps(40):
            for i in np.flatnonzero(near):
                exact = _raw_correction_mp(int(ns[i]), params, None if pi2 is None else int(pi2[i]))
                fl = int(mpmath.floor(exact))
                # nudge the float so the vectorised floor lands on the exact value
                raw[i] = fl + 0.5 if exact >= 0 else -1.0
        if ctx is not None:
            ctx.high_precision_hits += int(near.sum())
    return _apply_floor(raw, params.floor_variant)


def epsilon(n: int, params: ModelParams, context: ModelContext | None = None,
            previous_value: int | None = None) -> int:
    """Correction term eps(n) for n >= 3.

    Model 2 reads pi_2 at p_{n-1}: the true prime from the context sieve, or
    ``previous_value`` (the model's own p_{n-1}) in self-referential mode.
    """
    n = int(n)
    if n < 3:
        raise ValueError(f"eps(n) is defined here for n >= 3, got {n}")
    ns = np.array([n], dtype=np.int64)
    pi2 = None
    if params.variant is Variant.MODEL2:
        if context is None:
            raise RuntimeError("Model 2 needs a context with primes and semiprimes")
        if params.model2_prime_source is PrimeSource.TRUE_PRIMES:
            prev = context.prime_values(n - 1)[-1:]
        else:
            if previous_value is None:
                raise RuntimeError("self-referential Model 2 needs the model's p_{n-1}")
            prev = np.array([previous_value], dtype=np.int64)
        pi2 = context.semiprime_counts(prev)
    return int(_correction(ns, params, pi2, context)[0])


# ---------------------------------------------------------------- sequences

@dataclass(frozen=True)
class ModelSequence:
    params: ModelParams
    values: np.ndarray  # values[i] is the modeled p_{i+1}
    generated_up_to: int
    decreasing_steps: tuple[int, ...] = ()  # indices n with p_{n+1} < p_n

    def prime(self, n: int) -> int:
        """Modeled p_n (1-based)."""
        if not 1 <= n <= len(self.values):
            raise IndexError(f"sequence holds p_1..p_{len(self.values)}, asked for p_{n}")
        return int(self.values[n - 1])

    def __len__(self) -> int:
        return len(self.values)


def model_values(n_max: int, params: ModelParams, context: ModelContext | None = None) -> np.ndarray:
    """Modeled p_1 .. p_{n_max} as an int64 array."""
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    context = context if context is not None else ModelContext()
    if params.variant is Variant.MODEL2 and params.model2_prime_source is PrimeSource.SELF_REFERENTIAL:
        return _self_referential_values(n_max, params, context)
    S = context.divisor_table(n_max).S
    out = np.empty(n_max, dtype=np.int64)
    out[:2] = (2, 3)[:n_max]
    if n_max >= 3:
        ns = np.arange(3, n_max + 1, dtype=np.int64)
        pi2 = None
        if params.variant is Variant.MODEL2:
            pi2 = context.semiprime_counts(context.prime_values(n_max - 1)[ns - 2])
        out[2:] = 1 + S[3 : n_max + 1] + _correction(ns, params, pi2, context)
    return out


def _self_referential_values(n_max: int, params: ModelParams, context: ModelContext) -> np.ndarray:
    S = context.divisor_table(n_max).S
    out = np.empty(n_max, dtype=np.int64)
    out[:2] = (2, 3)[:n_max]
    for n in range(3, n_max + 1):
        prev = out[n - 2 : n - 1]
        pi2 = context.semiprime_counts(prev)
        eps = _correction(np.array([n], dtype=np.int64), params, pi2, context)[0]
        out[n - 1] = 1 + S[n] + eps
    return out


def model_prime(n: int, params: ModelParams, context: ModelContext | None = None) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return int(model_values(n, params, context)[-1])


def _index_guess(x: int) -> int:
    # model values grow like n log n
    return max(16, int(1.3 * x / max(math.log(x), 1.0)))


def model_sequence_up_to(x: int, params: ModelParams, context: ModelContext | None = None) -> ModelSequence:
    """Modeled primes p_1, p_2, ... stopping before the first value exceeding x."""
    x = int(x)
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    context = context if context is not None else ModelContext()
    if params.variant is Variant.MODEL2 and params.model2_prime_source is PrimeSource.SELF_REFERENTIAL:
        values = _self_referential_up_to(x, params, context)
    else:
        n_hi = _index_guess(x)
        while True:
            vals = model_values(n_hi, params, context)
            over = np.flatnonzero(vals > x)
            if over.size:
                values = vals[: over[0]]
                break
            n_hi *= 2
    steps = np.flatnonzero(np.diff(values) < 0) + 1
    values.setflags(write=False)
    return ModelSequence(params=params, values=values, generated_up_to=len(values),
                         decreasing_steps=tuple(int(i) for i in steps))


def _self_referential_up_to(x: int, params: ModelParams, context: ModelContext) -> np.ndarray:
    n_cap = _index_guess(x)
    S = context.divisor_table(n_cap).S
    vals = [2, 3]
    n = 3
    while True:
        if n > context.divisors.limit + 1:
            S = context.divisor_table(2 * n).S
        pi2 = context.semiprime_counts(np.array([vals[-1]], dtype=np.int64))
        eps = int(_correction(np.array([n], dtype=np.int64), params, pi2, context)[0])
        v = 1 + int(S[n]) + eps
        vals.append(v)
        if v > x:
            break
        n += 1
    arr = np.array(vals, dtype=np.int64)
    return arr[: int(np.flatnonzero(arr > x)[0])] if (arr > x).any() else arr


def model_pi(x: int, params: ModelParams, context: ModelContext | None = None) -> int:
    """Number of modeled primes <= x."""
    return len(model_sequence_up_to(x, params, context))


def model_pi_many(checkpoints, params: ModelParams, context: ModelContext | None = None) -> list[int]:
    """model_pi at several checkpoints from a single generated sequence."""
    checkpoints = [int(c) for c in checkpoints]
    seq = model_sequence_up_to(max(checkpoints), params, context)
    vals = np.sort(seq.values)
    return [int(np.searchsorted(vals, c, side="right")) for c in checkpoints]


def pnt_baseline(x: float) -> float:
    if x < 2:
        raise ValueError(f"x/log x baseline needs x >= 2, got {x}")
    return x / math.log(x)
