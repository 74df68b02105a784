#!/usr/bin/env python3
"""End-to-end block-lift demo: image matrix -> kernel-regular block -> recovery.

Builds the lifted block matrix for an image-side system over a subgroup of Q,
prints both columns-condition certificates, then samples exact kernel
elements and recovers preimages from them.

Usage: python scripts/deuber_demo.py [--matrix FILE] [--spec Z] [--samples 5]
"""

import argparse
import random
from fractions import Fraction

from prdual import (
    QMatrix,
    QVector,
    format_qmat,
    imgcontained_build,
    imgcontained_recover,
    kernel_basis,
    mat_vec,
    parse_semigroup,
    read_qmat,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--matrix", help=".qmat file (default: Schur image form)")
    parser.add_argument("--spec", default="Z", help="subgroup literal, e.g. Z, 2Z, 2/3Z")
    parser.add_argument("--samples", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    a = read_qmat(args.matrix) if args.matrix else QMatrix.from_rows([[1, 0], [0, 1], [1, 1]], cols=2)
    spec = parse_semigroup(args.spec)
    block, meta = imgcontained_build(a, spec)
    print(f"spec {spec}: scale d={meta.scale}, rank l={meta.l}, corner constant c={block.c}")
    print("block matrix D:")
    print(format_qmat(block.D))
    print(f"source certificate partition:  {list(block.source_certificate.partition)}")
    print(f"lifted certificate partition:  {list(block.lifted_certificate.partition)}")

    u = block.u
    b_prime = QMatrix.from_rows(
        [[block.D.entry(i, j) for j in range(u)] for i in range(block.j)], cols=u
    )
    basis = kernel_basis(b_prime)
    rng = random.Random(args.seed)
    produced = 0
    while produced < args.samples:
        x = QVector([0] * u)
        for vec in basis:
            x = x + vec.scale(Fraction(rng.randint(-6, 6)))
        if any(e == 0 for e in x):
            continue
        r1 = [Fraction(rng.randint(1, 9)) for _ in range(u)]
        r2 = [r1[i] + x[i] / block.c for i in range(u)]
        if any(e == 0 for e in r2):
            continue
        s = QVector(list(x.entries) + r1 + r2)
        y = imgcontained_recover(block, s, meta)
        x_orig = meta.unpermute_image(QVector(s.entries[:u]))
        assert mat_vec(a, y) == x_orig
        print(f"s = {s}\n  -> y = {y},  A y = {x_orig}")
        produced += 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
