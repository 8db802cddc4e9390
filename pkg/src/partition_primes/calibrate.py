"""Parameter sweeps for Model 3 and reproduction of the published pi(n) tables."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources

import numpy as np

from .models import (
    PRINTED_CONSTANTS,
    Constants,
    ModelContext,
    ModelParams,
    PrimeSource,
    Variant,
    model_pi_many,
    pnt_baseline,
)
from .sieve import build_sieve, prime_pi

TABLE_CHECKPOINTS = (10, 100, 1000, 10_000, 100_000, 1_000_000)
LOSSES = ("sum_abs", "max_abs", "final")


@dataclass(frozen=True)
class EstimateRow:
    x: int
    true_pi: int
    model_pi: int
    error: int
    baseline: float


@dataclass
class SweepResult:
    grid: list[tuple[float, float]]
    rows: list[list[EstimateRow]]
    losses: list[float]
    loss: str = "sum_abs"
    variant: Variant = Variant.MODEL3

    def records(self) -> list[dict]:
        out = []
        for (r, t), rows, loss in zip(self.grid, self.rows, self.losses):
            for row in rows:
                out.append({"r": r, "t": t, **asdict(row), "loss": loss})
        return out


def aggregate_loss(rows: list[EstimateRow], loss: str = "sum_abs") -> float:
    if loss == "sum_abs":
        return float(sum(abs(row.error) for row in rows))
    if loss == "max_abs":
        return float(max(abs(row.error) for row in rows))
    if loss == "final":
        return float(abs(max(rows, key=lambda row: row.x).error))
    raise ValueError(f"unknown loss {loss!r}; choose from {LOSSES}")


def ensure_primes(context: ModelContext, limit: int):
    if context.primes is None or context.primes.limit < limit:
        context.primes = build_sieve(max(limit, 2))
    return context.primes


def true_pi_many(checkpoints, context: ModelContext) -> list[int]:
    table = ensure_primes(context, max(checkpoints))
    return [prime_pi(table, c) for c in checkpoints]


def estimate_rows(params: ModelParams, checkpoints, context: ModelContext,
                  true_pi: list[int] | None = None) -> list[EstimateRow]:
    checkpoints = [int(c) for c in checkpoints]
    if true_pi is None:
        true_pi = true_pi_many(checkpoints, context)
    modeled = model_pi_many(checkpoints, params, context)
    return [
        EstimateRow(x=c, true_pi=tp, model_pi=mp, error=mp - tp,
                    baseline=pnt_baseline(c) if c >= 2 else math.nan)
        for c, tp, mp in zip(checkpoints, true_pi, modeled)
    ]


def evaluate_params(r: float, t: float, checkpoints, context: ModelContext | None = None,
                    variant: Variant = Variant.MODEL3,
                    constants: Constants = PRINTED_CONSTANTS) -> list[EstimateRow]:
    """Model 3 (or another r/t variant) against true pi at each checkpoint."""
    context = context if context is not None else ModelContext()
    params = ModelParams(variant, r=r, t=t, constants=constants)
    return estimate_rows(params, checkpoints, context)


def sweep(r_values, t_values, checkpoints, loss: str = "sum_abs",
          context: ModelContext | None = None, variant: Variant = Variant.MODEL3,
          constants: Constants = PRINTED_CONSTANTS, jobs: int = 1) -> SweepResult:
    """Cartesian grid over (r, t); results are ordered r-major, then t."""
    grid = [(float(r), float(t)) for r in r_values for t in t_values]
    if not grid:
        raise ValueError("empty parameter grid")
    if loss not in LOSSES:
        raise ValueError(f"unknown loss {loss!r}; choose from {LOSSES}")
    checkpoints = [int(c) for c in checkpoints]
    if not checkpoints:
        raise ValueError("no checkpoints")
    context = context if context is not None else ModelContext()
    true_pi = true_pi_many(checkpoints, context)
    # size the shared divisor table up front so workers only read it
    context.divisor_table(2 * max(16, int(1.3 * max(checkpoints) / math.log(max(max(checkpoints), 3)))))

    def run(point):
        params = ModelParams(variant, r=point[0], t=point[1], constants=constants)
        return estimate_rows(params, checkpoints, context, true_pi)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run, grid))
    else:
        rows = [run(p) for p in grid]
    return SweepResult(grid=grid, rows=rows, losses=[aggregate_loss(rs, loss) for rs in rows],
                       loss=loss, variant=variant)


def best_fit(result: SweepResult) -> tuple[float, float]:
    """Lowest-loss grid point; ties go to smaller r, then smaller t."""
    if not result.grid:
        raise ValueError("empty sweep")
    i = min(range(len(result.grid)), key=lambda k: (result.losses[k], *result.grid[k]))
    return result.grid[i]


# ---------------------------------------------------------------- golden tables

@dataclass(frozen=True)
class Column:
    label: str
    params: ModelParams


def table_columns(table_id: int, constants: Constants = PRINTED_CONSTANTS) -> list[Column]:
    c = constants
    if table_id == 1:
        return [
            Column("m1", ModelParams(Variant.MODEL1, constants=c)),
            Column("m2", ModelParams(Variant.MODEL2, model2_prime_source=PrimeSource.TRUE_PRIMES, constants=c)),
            Column("m2star", ModelParams(Variant.MODEL2STAR, constants=c)),
            Column("m3(r=6;t=0.11)", ModelParams(Variant.MODEL3, r=6, t=0.11, constants=c)),
        ]
    if table_id == 2:
        return [Column(f"t={t:g}", ModelParams(Variant.MODEL3_T, t=t, constants=c)) for t in (0, 0.1, 0.5, 1)]
    if table_id == 3:
        return [Column(f"r={r}", ModelParams(Variant.MODEL2STAR_R, r=r, constants=c)) for r in (0, 1, 6, 10, 20)]
    raise ValueError(f"no table {table_id}; tables are 1, 2, 3")


def load_golden() -> dict[int, dict[tuple[int, str], str]]:
    """Printed cells keyed by table id, then (n, column label); values kept as text."""
    text = resources.files("partition_primes").joinpath("data/golden_tables.csv").read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    out: dict[int, dict[tuple[int, str], str]] = {}
    for rec in csv.DictReader(lines):
        out.setdefault(int(rec["table"]), {})[(int(rec["n"]), rec["column"])] = rec["value"]
    return out


def baseline_matches(value: float, printed: str) -> bool:
    """The tables print x/log x truncated, e.g. 1085.7362 as '1085.73...'."""
    decimals = len(printed.partition(".")[2])
    scale = 10**decimals
    return math.floor(value * scale) == round(float(printed) * scale)


@dataclass
class ReproducedTable:
    table_id: int
    checkpoints: tuple[int, ...]
    labels: list[str]
    cells: dict[tuple[int, str], float | int]
    expected: dict[tuple[int, str], str] = field(default_factory=dict)

    def mismatches(self) -> list[tuple[int, str, float | int, str]]:
        bad = []
        for (n, label), printed in sorted(self.expected.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            got = self.cells.get((n, label))
            if label == "baseline":
                ok = got is not None and baseline_matches(got, printed)
            else:
                ok = got == int(printed)
            if not ok:
                bad.append((n, label, got, printed))
        return bad

    def records(self) -> list[dict]:
        out = []
        for n in self.checkpoints:
            rec = {"n": n, "true_pi": self.cells[(n, "true_pi")], "baseline": round(self.cells[(n, "baseline")], 6)}
            rec.update({label: self.cells[(n, label)] for label in self.labels})
            out.append(rec)
        return out


def reproduce_table(table_id: int, context: ModelContext | None = None,
                    checkpoints=TABLE_CHECKPOINTS,
                    constants: Constants = PRINTED_CONSTANTS) -> ReproducedTable:
    columns = table_columns(table_id, constants)
    checkpoints = tuple(int(c) for c in checkpoints)
    top = max(checkpoints)
    if context is None:
        context = ModelContext.for_model2(top) if table_id == 1 else ModelContext()
    if table_id == 1 and (context.primes is None or context.semiprimes is None):
        raise RuntimeError("table 1 needs primes and semiprime counts in the context")
    cells: dict[tuple[int, str], float | int] = {}
    for c, tp in zip(checkpoints, true_pi_many(checkpoints, context)):
        cells[(c, "true_pi")] = tp
        cells[(c, "baseline")] = pnt_baseline(c)
    for col in columns:
        for c, v in zip(checkpoints, model_pi_many(checkpoints, col.params, context)):
            cells[(c, col.label)] = v
    expected = {k: v for k, v in load_golden().get(table_id, {}).items() if k[0] in checkpoints}
    return ReproducedTable(table_id, checkpoints, [col.label for col in columns], cells, expected)


def conjecture_report(checkpoints=TABLE_CHECKPOINTS, context: ModelContext | None = None,
                      constants: Constants = PRINTED_CONSTANTS) -> list[dict]:
    """Sign of model_pi - pi for Models 2 and 2* per checkpoint; reported, not asserted."""
    checkpoints = [int(c) for c in checkpoints]
    context = context if context is not None else ModelContext.for_model2(max(checkpoints))
    true_pi = true_pi_many(checkpoints, context)
    m2 = model_pi_many(checkpoints, ModelParams(Variant.MODEL2, constants=constants), context)
    m2s = model_pi_many(checkpoints, ModelParams(Variant.MODEL2STAR, constants=constants), context)
    return [
        {"n": c, "true_pi": tp, "m2": a, "m2star": b,
         "m2_sign": int(np.sign(a - tp)), "m2star_sign": int(np.sign(b - tp))}
        for c, tp, a, b in zip(checkpoints, true_pi, m2, m2s)
    ]


# ---------------------------------------------------------------- output

def format_records(records: list[dict], fmt: str = "csv") -> str:
    """Render rows of identically keyed dicts as csv, json or aligned plain text."""
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if not records:
        return ""
    keys = list(records[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue()
    if fmt == "plain":
        rows = [keys] + [[_plain(rec[k]) for k in keys] for rec in records]
        widths = [max(len(row[i]) for row in rows) for i in range(len(keys))]
        return "".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n" for row in rows)
    raise ValueError(f"unknown format {fmt!r}")


def _plain(v) -> str:
    if isinstance(v, float):
        # truncated, as in the printed tables
        return f"{v:g}" if v.is_integer() else f"{math.floor(v * 100) / 100:.2f}"
    return str(v)
