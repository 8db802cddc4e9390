#!/usr/bin/env python3
"""Recompute the three pi(n) tables and list every cell that differs from print.

Usage: python scripts/reproduce_tables.py [--constants printed|full] [--format plain|csv|json]
"""

import argparse
import sys
import time

from partition_primes.calibrate import format_records, reproduce_table
from partition_primes.cli import CONSTANTS
from partition_primes.models import ModelContext


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--constants", choices=sorted(CONSTANTS), default="printed")
    ap.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    args = ap.parse_args()

    ctx = ModelContext.for_model2(10**6)
    total_bad = 0
    for table_id in (1, 2, 3):
        t0 = time.perf_counter()
        table = reproduce_table(table_id, ctx, constants=CONSTANTS[args.constants])
        print(f"# table {table_id} ({time.perf_counter() - t0:.2f}s)")
        sys.stdout.write(format_records(table.records(), args.format))
        for n, label, got, printed in table.mismatches():
            print(f"#   n={n} {label}: computed {got}, printed {printed}")
            total_bad += 1
    print(f"# {total_bad} mismatched cells")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
