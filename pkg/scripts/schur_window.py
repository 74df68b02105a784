#!/usr/bin/env python3
"""Window study for a kernel system: verdicts and countermodels as N grows.

For each window 1..N the script lists how many solutions exist, whether every
r-coloring is forced to contain one monochromatically, and the least
countermodel otherwise.  Defaults to the Schur equation x + y = z.

Usage: python scripts/schur_window.py [--max-n 8] [--colors 2] [--matrix FILE]
"""

import argparse

from prdual import QMatrix, kernel_solutions, kernel_supports, read_qmat, window_pr


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--colors", type=int, default=2)
    parser.add_argument("--matrix", help=".qmat file (default: Schur x+y=z)")
    args = parser.parse_args()

    a = read_qmat(args.matrix) if args.matrix else QMatrix.from_rows([[1, 1, -1]], cols=3)
    print(f"matrix rows={a.rows} cols={a.cols}, colors={args.colors}")
    print(f"{'N':>3}  {'solutions':>9}  {'forced':>6}  countermodel")
    for n in range(1, args.max_n + 1):
        count = len(kernel_solutions(a, n))
        witness = window_pr(n, kernel_supports(a, n), args.colors)
        if witness.verdict:
            print(f"{n:>3}  {count:>9}  {'yes':>6}")
        else:
            classes: dict[int, list[int]] = {}
            for value, color in sorted(witness.bad_coloring.items()):
                classes.setdefault(color, []).append(value)
            parts = " | ".join(",".join(map(str, classes[c])) for c in sorted(classes))
            print(f"{n:>3}  {count:>9}  {'no':>6}  {{{parts}}}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
