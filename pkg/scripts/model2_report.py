#!/usr/bin/env python3
"""Model 2 diagnostics: prime-source comparison, sign pattern against pi(n),
and the drift of pi_2(p_n) away from n log log n."""

from partition_primes.almost_prime import landau_ratio, mertens_drift
from partition_primes.calibrate import TABLE_CHECKPOINTS, conjecture_report, load_golden
from partition_primes.models import PRINTED_CONSTANTS, ModelContext, ModelParams, PrimeSource, Variant, model_pi_many


def main():
    ctx = ModelContext.for_model2(10**6)
    printed = [int(load_golden()[1][(n, "m2")]) for n in TABLE_CHECKPOINTS]
    print("printed Model 2 column:", printed)
    for source in PrimeSource:
        params = ModelParams(Variant.MODEL2, model2_prime_source=source, constants=PRINTED_CONSTANTS)
        got = model_pi_many(TABLE_CHECKPOINTS, params, ctx)
        print(f"  prime source {source.value:>4}: {got}  ({sum(a == b for a, b in zip(got, printed))}/6 match)")

    print("\nsign(model_pi - pi):")
    for row in conjecture_report(context=ctx):
        print(f"  n={row['n']:>8}  m2 {row['m2_sign']:+d}   m2* {row['m2star_sign']:+d}")

    print("\nn, pi_2(p_n)/(n log log n), (pi_2(p_n) - n log log n)/n")
    for n in (1000, 10_000, 70_000):
        print(f"  {n:>6}  {landau_ratio(n, ctx.primes, ctx.semiprimes):.4f}  {mertens_drift(n, ctx.primes, ctx.semiprimes):.4f}")


if __name__ == "__main__":
    main()
