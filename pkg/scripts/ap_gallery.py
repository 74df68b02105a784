#!/usr/bin/env python3
"""Print the arithmetic-progression family gallery and verify its identities.

For a step d and a truncation, shows the progression matrix A, its dependency
matrix B, the compressed projector C, and (for d >= 2) the integer companion,
then checks the change-of-variables identity and the rational-witness failure
on random inputs.

Usage: python scripts/ap_gallery.py [--d 2] [--rows 5] [--samples 20]
"""

import argparse
import random
from fractions import Fraction

from prdual import (
    ApFamily,
    QVector,
    ap_integer_c,
    ap_matrix,
    ap_projector_pair,
    format_qmat,
    mat_vec,
    solve_linear,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--rows", type=int, default=5)
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    a = ap_matrix(ApFamily(d=args.d, truncation=args.rows))
    print("A (progressions):")
    print(format_qmat(a))
    b, c = ap_projector_pair(args.d, args.rows)
    print("B (row dependencies, BA = O):")
    print(format_qmat(b))
    print("C (compressed kernel projector):")
    print(format_qmat(c))

    target = mat_vec(c, QVector([1, 2]))
    witness = solve_linear(a, target)
    print(f"C(1,2) = {target};  A x = C(1,2) forces x = {witness}")

    rng = random.Random(args.seed)
    if args.d >= 2:
        ci = ap_integer_c(args.d, args.rows)
        print("C_int (integer companion):")
        print(format_qmat(ci))
        checked = 0
        for _ in range(args.samples):
            aa = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
            bb = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
            lhs = mat_vec(a, QVector([aa, bb]))
            rhs = mat_vec(ci, QVector([2 * aa + bb, aa + bb]))
            assert lhs == rhs, (aa, bb)
            checked += 1
        print(f"identity A(a,b) = C_int(2a+b, a+b): {checked}/{args.samples} random pairs exact")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
