"""Command-line entry point: ``partition-primes <command> ...``.

Exit status is 0 on success, 1 when a verification or table check fails and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import calibrate, verify
from .models import (
    FULL_CONSTANTS,
    PRINTED_CONSTANTS,
    FloorVariant,
    ModelContext,
    ModelParams,
    PrimeSource,
    Variant,
    model_pi,
    model_sequence_up_to,
)
from .sieve import build_sieve

CONSTANTS = {"printed": PRINTED_CONSTANTS, "full": FULL_CONSTANTS}
FORMATS = ("plain", "csv", "json")


def parse_values(text: str) -> list[float]:
    """'6', '0,1,6' or an inclusive range 'start:stop:step'."""
    out: list[float] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" in chunk:
            bits = chunk.split(":")
            if len(bits) != 3:
                raise ValueError(f"range must be start:stop:step, got {chunk!r}")
            start, stop, step = (float(b) for b in bits)
            if step <= 0 or stop < start:
                raise ValueError(f"empty range {chunk!r}")
            count = int(round((stop - start) / step)) + 1
            out += [round(start + i * step, 10) for i in range(count) if start + i * step <= stop + 1e-9]
        else:
            out.append(float(chunk))
    if not out:
        raise ValueError(f"no values in {text!r}")
    return out


def parse_ints(text: str) -> list[int]:
    vals = [int(v.strip()) for v in text.split(",") if v.strip()]
    if not vals:
        raise ValueError(f"no checkpoints in {text!r}")
    return vals


def _emit(records: list[dict], fmt: str, plain: str | None = None) -> None:
    if fmt == "plain" and plain is not None:
        sys.stdout.write(plain + "\n")
    else:
        sys.stdout.write(calibrate.format_records(records, fmt))


def cmd_primes(args) -> int:
    if args.limit < 0:
        raise ValueError(f"--limit must be nonnegative, got {args.limit}")
    primes = [int(p) for p in build_sieve(args.limit).primes] if args.limit >= 2 else []
    if args.count:
        _emit([{"limit": args.limit, "count": len(primes)}], args.format, str(len(primes)))
    else:
        _emit([{"n": i, "p": p} for i, p in enumerate(primes, 1)], args.format,
              " ".join(map(str, primes)))
    return 0


def _model_params(args) -> ModelParams:
    return ModelParams(
        Variant(args.variant), r=args.r, t=args.t,
        floor_variant=FloorVariant(args.floor),
        model2_prime_source=PrimeSource(args.prime_source),
        constants=CONSTANTS[args.constants],
    )


def cmd_model(args) -> int:
    params = _model_params(args)
    if args.up_to < 1:
        raise ValueError(f"--up-to must be >= 1, got {args.up_to}")
    ctx = ModelContext.for_model2(args.up_to) if params.variant is Variant.MODEL2 else ModelContext()
    if args.emit == "pi":
        count = model_pi(args.up_to, params, ctx)
        _emit([{"x": args.up_to, "model_pi": count}], args.format, str(count))
    else:
        seq = model_sequence_up_to(args.up_to, params, ctx)
        values = [int(v) for v in seq.values]
        _emit([{"n": i, "p": v} for i, v in enumerate(values, 1)], args.format,
              " ".join(map(str, values)))
        if seq.decreasing_steps:
            print(f"note: sequence decreases after n = {list(seq.decreasing_steps)}", file=sys.stderr)
    return 0


def cmd_table(args) -> int:
    table = calibrate.reproduce_table(args.id, constants=CONSTANTS[args.constants])
    _emit(table.records(), args.format)
    if args.no_check:
        return 0
    bad = table.mismatches()
    for n, label, got, printed in bad:
        print(f"mismatch: table {args.id} n={n} {label}: computed {got}, printed {printed}", file=sys.stderr)
    return 1 if bad else 0


def cmd_sweep(args) -> int:
    result = calibrate.sweep(
        parse_values(args.r), parse_values(args.t), parse_ints(args.checkpoints),
        loss=args.loss, variant=Variant(args.variant),
        constants=CONSTANTS[args.constants], jobs=args.jobs,
    )
    if args.best:
        r, t = calibrate.best_fit(result)
        loss = result.losses[result.grid.index((r, t))]
        _emit([{"r": r, "t": t, "loss": loss}], args.format, f"r={r:g} t={t:g} loss={loss:g}")
    else:
        _emit(result.records(), args.format)
    return 0


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    records = []
    for name in names:
        _, kind = verify.SUITES[name]
        bound = getattr(args, kind)
        res = verify.run_suite(name, bound)
        failed |= not res.passed
        records.append({"suite": name, "bound": res.bound, "checked": res.checked,
                        "passed": res.passed, "counterexamples": len(res.counterexamples)})
        if args.format == "plain":
            print(res.summary())
    if args.format != "plain":
        _emit(records, args.format)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partition-primes",
                                     description="Partition-theoretic models of the primes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="plain")

    def add_constants(p):
        p.add_argument("--constants", choices=sorted(CONSTANTS), default="printed",
                       help="gamma and Meissel-Mertens values (default: four-digit printed values)")

    p = sub.add_parser("primes", help="list primes or count them")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--count", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("model", help="modeled prime sequence or modeled pi(x)")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="m1")
    p.add_argument("-r", type=float, default=0.0)
    p.add_argument("-t", type=float, default=0.0)
    p.add_argument("--up-to", type=int, required=True)
    p.add_argument("--floor", choices=[f.value for f in FloorVariant], default="standard")
    p.add_argument("--prime-source", choices=[s.value for s in PrimeSource], default="true")
    p.add_argument("--emit", choices=("sequence", "pi"), default="sequence")
    add_constants(p)
    add_format(p)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("table", help="reproduce a published table and check it")
    p.add_argument("id", type=int, choices=(1, 2, 3))
    p.add_argument("--no-check", action="store_true")
    add_constants(p)
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", help="grid search over (r, t)")
    p.add_argument("--r", default="0:20:1")
    p.add_argument("--t", default="0:1:0.01")
    p.add_argument("--checkpoints", default="100,1000,10000,100000")
    p.add_argument("--loss", choices=calibrate.LOSSES, default="sum_abs")
    p.add_argument("--variant", choices=("m3", "m2star-r", "m3t"), default="m3")
    p.add_argument("--best", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    add_constants(p)
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--up-to", dest="up_to", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--norm-max", dest="norm_max", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
