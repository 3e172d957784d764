#!/usr/bin/env python3
"""Scan the below-diagonal sign pattern of the combination matrix.

The pattern (zero / negative / positive by (i - j) mod 4) is verified
up to m = 9; everything beyond is exploratory. This script pushes the
scan further and reports what it finds, asserting nothing.
"""
from __future__ import annotations

import argparse

from zetacomb.zetadiff import scan_sign_pattern


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=40, dest="max_m")
    args = parser.parse_args()

    finding = scan_sign_pattern(args.max_m)
    print(
        f"scanned m <= {finding.max_m}: {finding.checked} below-diagonal entries,"
        f" {len(finding.violations)} violations"
    )
    for v in finding.violations:
        print(f"  ({v.i}, {v.j}) = {v.value}, expected {v.expected.value}")
    if not finding.violations:
        print("the conjectured pattern survives this range")


if __name__ == "__main__":
    main()
