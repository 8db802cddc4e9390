import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from partition_primes.divisor import divisor_count
from partition_primes.models import (
    PRINTED_CONSTANTS,
    FloorVariant,
    ModelContext,
    ModelParams,
    PrimeSource,
    Variant,
    epsilon,
    floor_star,
    model_pi,
    model_pi_many,
    model_prime,
    model_sequence_up_to,
    model_values,
    modified_floor,
    pnt_baseline,
)

FIRST_TEN = [2, 3, 5, 7, 11, 13, 17, 19, 23, 27]


@pytest.mark.parametrize("x, expected", [(-0.5, 0), (2.7, 2), (3.0, 3), (-1e9, 0), (0.0, 0)])
def test_modified_floor(x, expected):
    assert modified_floor(x) == expected


@pytest.mark.parametrize("x, expected", [(7.3, 6), (6.9, 6), (-1.2, 0), (1.5, 0), (2.0, 2)])
def test_floor_star(x, expected):
    assert floor_star(x) == expected


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_floor_star_is_even_and_close(x):
    f = floor_star(x)
    assert f % 2 == 0 and 0 <= modified_floor(x) - f <= 1


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(Variant.MODEL3, r=-1)
    with pytest.raises(ValueError):
        ModelParams(Variant.MODEL3, t=1.5)
    assert ModelParams("m3", r=6, t=0.11).variant is Variant.MODEL3


def test_epsilon_examples():
    assert epsilon(3, ModelParams(Variant.MODEL2STAR)) == 0
    assert epsilon(3, ModelParams(Variant.MODEL1)) == 0
    for n in (3, 10, 500, 12345):
        assert epsilon(n, ModelParams(Variant.MODEL3)) == epsilon(n, ModelParams(Variant.MODEL2STAR))
        assert epsilon(n, ModelParams(Variant.MODEL3_T, t=1)) == epsilon(n, ModelParams(Variant.MODEL2_1))
    with pytest.raises(ValueError):
        epsilon(2, ModelParams(Variant.MODEL1))


def test_epsilon_model2_needs_context():
    with pytest.raises(RuntimeError):
        epsilon(5, ModelParams(Variant.MODEL2))
    with pytest.raises(RuntimeError):
        model_values(10, ModelParams(Variant.MODEL2), ModelContext())
    with pytest.raises(RuntimeError):
        epsilon(5, ModelParams(Variant.MODEL2, model2_prime_source=PrimeSource.SELF_REFERENTIAL),
                ModelContext.for_model2(100))


def test_epsilon_model2_by_hand(ctx_1e6):
    # n = 27: p_26 = 101, pi_2(101) = 34, 34 - 2*gamma*26 = 3.98...
    assert epsilon(27, ModelParams(Variant.MODEL2), ctx_1e6) == 3


def mp_correction(n, params):
    """Independent 50-digit evaluation of the floored correction term."""
    with mpmath.workdps(50):
        g = mpmath.mpf(repr(params.constants.gamma))
        M = mpmath.mpf(repr(params.constants.meissel_mertens))
        r, t = mpmath.mpf(repr(params.r)), mpmath.mpf(repr(params.t))
        m = mpmath.mpf(n - 1)
        ll = lambda x: mpmath.log(mpmath.log(x))  # noqa: E731
        raw = {
            Variant.MODEL2STAR: lambda: m * (ll(m) - 2 * g),
            Variant.MODEL2_1: lambda: m * (ll(m) - 2 * g + M),
            Variant.MODEL3_T: lambda: m * (ll(m) - 2 * g + M * t),
            Variant.MODEL2STAR_R: lambda: (m + r) * ll(m + r) - 2 * g * m,
            Variant.MODEL3: lambda: (m + r) * ll(m + r) - m * (2 * g - M * t),
        }[params.variant]()
        f = 0 if raw < 0 else int(mpmath.floor(raw))
    if params.floor_variant is FloorVariant.EVEN_STAR:
        f -= f & 1
    return f


@pytest.mark.parametrize("params", [
    ModelParams(Variant.MODEL2STAR),
    ModelParams(Variant.MODEL2_1),
    ModelParams(Variant.MODEL3_T, t=0.37),
    ModelParams(Variant.MODEL2STAR_R, r=20),
    ModelParams(Variant.MODEL3, r=6, t=0.11, constants=PRINTED_CONSTANTS),
    ModelParams(Variant.MODEL3, r=2.5, t=0.9, floor_variant=FloorVariant.EVEN_STAR),
])
def test_vectorised_correction_matches_high_precision(params):
    vals = model_values(3000, params)
    S = ModelContext().divisor_table(3000).S
    for n in range(3, 3001, 7):
        assert vals[n - 1] == 1 + S[n] + mp_correction(n, params)


@pytest.mark.parametrize("params", [
    ModelParams(Variant.MODEL1),
    ModelParams(Variant.MODEL2STAR),
    ModelParams(Variant.MODEL3),
])
def test_initial_sequence(params):
    assert model_sequence_up_to(30, params).values.tolist() == FIRST_TEN


def test_initial_sequence_model2(ctx_1e6):
    for source in PrimeSource:
        params = ModelParams(Variant.MODEL2, model2_prime_source=source)
        assert model_sequence_up_to(30, params, ctx_1e6).values.tolist() == FIRST_TEN


def test_model3_r6_sequence():
    params = ModelParams(Variant.MODEL3, r=6, t=0.11)
    assert model_sequence_up_to(23, params).values.tolist() == [2, 3, 8, 10, 14, 16, 21, 23]
    assert model_prime(3, params) == 8


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 3), (5, 11), (10, 27)])
def test_model1_prime(n, expected):
    assert model_prime(n, ModelParams(Variant.MODEL1)) == expected


def test_seed_values_for_every_variant(ctx_1e6):
    for v in Variant:
        params = ModelParams(v, r=20, t=1)
        assert model_values(2, params, ctx_1e6).tolist() == [2, 3]


def test_sequence_up_to_two():
    for v in (Variant.MODEL1, Variant.MODEL3):
        assert model_sequence_up_to(2, ModelParams(v, r=6, t=0.11)).values.tolist() == [2]


def test_telescoping_model1():
    vals = model_values(10_001, ModelParams(Variant.MODEL1))
    for n in range(2, 10_001):
        assert vals[n] - vals[n - 1] == 2 * math.ceil(divisor_count(n) / 2)


def test_reductions_small():
    ctx = ModelContext()
    base = model_values(20_000, ModelParams(Variant.MODEL2STAR), ctx)
    assert np.array_equal(model_values(20_000, ModelParams(Variant.MODEL3), ctx), base)
    assert np.array_equal(model_values(20_000, ModelParams(Variant.MODEL2STAR_R, r=0), ctx), base)
    assert np.array_equal(model_values(20_000, ModelParams(Variant.MODEL3_T, t=0), ctx), base)
    for r in (1, 6, 10):
        assert np.array_equal(model_values(20_000, ModelParams(Variant.MODEL3, r=r), ctx),
                              model_values(20_000, ModelParams(Variant.MODEL2STAR_R, r=r), ctx))


@pytest.mark.parametrize("params, x, expected", [
    (ModelParams(Variant.MODEL1), 1000, 184),
    (ModelParams(Variant.MODEL2), 10_000, 1212),
    (ModelParams(Variant.MODEL2STAR), 1_000_000, 78_740),
    (ModelParams(Variant.MODEL3, r=6, t=0.11), 100_000, 9592),
])
def test_model_pi_examples(ctx_1e6, params, x, expected):
    assert model_pi(x, params, ctx_1e6) == expected


def test_model_pi_many_agrees_with_single(ctx_1e6):
    params = ModelParams(Variant.MODEL3, r=1, t=0.5)
    xs = [10, 500, 20_000]
    assert model_pi_many(xs, params, ctx_1e6) == [model_pi(x, params, ctx_1e6) for x in xs]


def test_self_referential_matches_stepwise(ctx_1e6):
    params = ModelParams(Variant.MODEL2, model2_prime_source=PrimeSource.SELF_REFERENTIAL)
    vals = model_values(400, params, ctx_1e6)
    for n in range(3, 401):
        expected = 1 + int(ctx_1e6.divisor_table(400).S[n]) + epsilon(n, params, ctx_1e6, int(vals[n - 2]))
        assert vals[n - 1] == expected
    seq = model_sequence_up_to(int(vals[-1]), params, ctx_1e6)
    assert seq.values.tolist() == vals[: len(seq)].tolist()


def test_sequences_never_decrease(ctx_1e6):
    for params in (ModelParams(Variant.MODEL2), ModelParams(Variant.MODEL3, r=20, t=1),
                   ModelParams(Variant.MODEL2STAR)):
        assert model_sequence_up_to(100_000, params, ctx_1e6).decreasing_steps == ()


@pytest.mark.parametrize("x, printed", [(10, "4.34"), (1000, "144.76"), (1_000_000, "72382.41")])
def test_pnt_baseline(x, printed):
    assert math.floor(pnt_baseline(x) * 100) / 100 == pytest.approx(float(printed))


def test_pnt_baseline_rejects_small():
    with pytest.raises(ValueError):
        pnt_baseline(1)


def test_pnt_tracking():
    ratio = model_pi(10**6, ModelParams(Variant.MODEL1)) / pnt_baseline(10**6)
    assert 1.15 <= ratio <= 1.25


def test_context_grows_divisor_table():
    ctx = ModelContext()
    model_values(100, ModelParams(Variant.MODEL1), ctx)
    first = ctx.divisors
    model_values(10_000, ModelParams(Variant.MODEL1), ctx)
    assert ctx.divisors.limit >= 9_999 and first.limit < ctx.divisors.limit


def test_context_without_growth_raises():
    ctx = ModelContext(grow=False)
    model_values(100, ModelParams(Variant.MODEL1), ctx)
    with pytest.raises(IndexError):
        model_values(10**6, ModelParams(Variant.MODEL1), ctx)
