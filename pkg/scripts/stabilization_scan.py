#!/usr/bin/env python3
"""Brute-force scan of the finite-to-limit stabilization degree.

For each z-power k and matrix size n, measures through which q-degree the
z^k coefficient of det M(n) agrees with the limit series coefficient, and
compares it with the n - 2k bound frozen into the test suite.  This is the
experiment that certified the bound in the first place; rerun it when
extending the tested ranges.
"""

import argparse

from qlehmer.series import stabilization_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=20)
    parser.add_argument("--max-k", type=int, default=4)
    args = parser.parse_args()

    print(f"{'k':>3} {'n':>3} {'agree_deg':>9} {'n-2k':>5} {'exact?':>6}")
    all_exact = True
    for k in range(1, args.max_k + 1):
        for n in range(2 * k, args.max_n + 1):
            d = stabilization_check(n, k)
            exact = d == n - 2 * k
            all_exact = all_exact and exact
            print(f"{k:>3} {n:>3} {d:>9} {n - 2 * k:>5} {'yes' if exact else 'NO':>6}")
    print()
    print("agreement degree == n - 2k everywhere:", "yes" if all_exact else "NO")


if __name__ == "__main__":
    main()
