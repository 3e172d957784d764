#!/usr/bin/env python3
"""Print eta(-m) for 0 <= m <= MAX, cross-checked by three routes.

Each value is computed from the zeta relation, from the weighted
coefficient-row sum, and from the alternating Stirling sum; the run
aborts loudly if the routes ever disagree.
"""
from __future__ import annotations

import argparse

from zetacomb.etacheck import eta_cross_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=30, dest="max_m")
    args = parser.parse_args()

    for triple in eta_cross_check(args.max_m):
        label = f"eta({-triple.m})"
        print(f"{label:>9} = {triple.via_zeta}")


if __name__ == "__main__":
    main()
