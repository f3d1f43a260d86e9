#!/usr/bin/env python3
"""Run the worked-example catalog and print a per-check table."""

import argparse
import sys
import time

from convexotonic import example_catalog


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--samples", type=int, default=25)
    args = parser.parse_args()

    start = time.perf_counter()
    report = example_catalog(seed=args.seed, samples=args.samples)
    elapsed = time.perf_counter() - start

    width = max(len(c.name) for c in report.checks)
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        print(f"{check.name:<{width}}  {status}  residual={check.residual:.3e}")
    for warning in report.warnings:
        print(f"warning: {warning}")
    print(f"{len(report.checks)} checks in {elapsed:.2f}s; passed={report.passed}")
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())
