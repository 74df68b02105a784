"""Acceptance suite: one test per exit criterion, every check bit-exact.

Each test prints a single ``ACCEPTANCE n PASS`` line on success (run with
``pytest -s`` to see them); a failing assertion marks the criterion FAIL.
Random instances are drawn from fixed seeds so the suite is reproducible.
"""

import random
import time
from fractions import Fraction

from prdual import (
    ApFamily,
    INTEGERS,
    MpcParams,
    QMatrix,
    QVector,
    SignPattern,
    ap_integer_c,
    ap_matrix,
    ap_projector_pair,
    check_notg,
    columns_condition,
    compress_projector,
    det,
    deuber_block,
    d_z,
    image_to_kernel,
    imgcontained_build,
    imgcontained_recover,
    kernel_basis,
    kernel_projector,
    kernel_supports,
    mat_mul,
    mat_vec,
    mpc_matrix,
    rank,
    row_dependency,
    sign_adapter,
    solve_linear,
    verify_cc_certificate,
    window_pr,
)
from conftest import random_dependent_matrix, random_matrix, random_vector

SCHUR_KERNEL = QMatrix.from_rows([[1, 1, -1]], cols=3)
SCHUR_IMAGE = QMatrix.from_rows([[1, 0], [0, 1], [1, 1]], cols=2)
AP4 = QMatrix.from_rows([[1, 0], [1, 1], [1, 2], [1, 3]], cols=2)
VDW_INCREMENT = QMatrix.from_rows(
    [[1, -2, 1, 0, 0], [0, 1, -2, 1, 0], [1, -1, 0, 0, 1]], cols=5
)


def _report(n: int, ok: bool, desc: str):
    print(f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {n} failed: {desc}"


def test_criterion_1_projector_identities():
    rng = random.Random(12345)
    start = time.perf_counter()
    ok = True
    for _ in range(200):
        b = random_matrix(rng, max_dim=6, max_num=5, max_den=3)
        c = kernel_projector(b).C
        ok &= mat_mul(b, c).is_zero()
        ok &= mat_mul(c, c) == c
        for _ in range(50):
            x = random_vector(rng, b.cols)
            ok &= mat_vec(b, x).is_zero() == (mat_vec(c, x) == x)
        if not ok:
            break
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0
    _report(1, ok, f"200 random B: BC=O, C^2=C, Bx=0 <=> Cx=x ({elapsed:.2f}s)")


def test_criterion_2_dependency_identities():
    rng = random.Random(54321)
    start = time.perf_counter()
    ok = True
    for _ in range(200):
        a = random_dependent_matrix(rng, max_dim=6)
        dep = row_dependency(a)
        ok &= mat_mul(dep.B, a).is_zero()
        ok &= rank(dep.B) == a.rows - rank(a)
        for w in kernel_basis(dep.B):
            ok &= solve_linear(a, w) is not None
        if not ok:
            break
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0
    _report(2, ok, f"200 random dependent A: BA=O, rank(B)=u-rank(A), K(B) solvable ({elapsed:.2f}s)")


def test_criterion_3_schur_pair_regression():
    forward = image_to_kernel(SCHUR_IMAGE) == SCHUR_KERNEL
    backward = compress_projector(kernel_projector(SCHUR_KERNEL)) == SCHUR_IMAGE
    _report(3, forward and backward, "Schur image <-> kernel matrices reproduce bit-exactly")


def test_criterion_4_columns_condition():
    ok = True
    start = time.perf_counter()
    cert = columns_condition(SCHUR_KERNEL)
    ok &= cert is not None and verify_cc_certificate(SCHUR_KERNEL, cert)
    ok &= time.perf_counter() - start < 1.0
    start = time.perf_counter()
    ok &= columns_condition(QMatrix.from_rows([[1, 1, 1]], cols=3)) is None
    ok &= time.perf_counter() - start < 1.0
    start = time.perf_counter()
    cert_vdw = columns_condition(VDW_INCREMENT)
    ok &= cert_vdw is not None and verify_cc_certificate(VDW_INCREMENT, cert_vdw)
    ok &= time.perf_counter() - start < 1.0
    _report(4, ok, "certificates: Schur found, (1 1 1) absent, progression+increment found")


def test_criterion_5_deuber_lift():
    cert = columns_condition(SCHUR_KERNEL)
    ok = cert is not None
    for c in (1, 2, 3):
        block = deuber_block(SCHUR_KERNEL, c, cert)
        ok &= block.D.rows == 4 and block.D.cols == 9
        ok &= verify_cc_certificate(block.D, block.lifted_certificate)
    _report(5, ok, "lifted certificates verify on the 4x9 block matrix for c in {1,2,3}")


def test_criterion_6_imgcontained_roundtrip():
    rng = random.Random(777)
    ok = True
    for a in (SCHUR_IMAGE, AP4):
        block, meta = imgcontained_build(a, INTEGERS)
        u = block.u
        b_prime = QMatrix.from_rows(
            [[block.D.entry(i, j) for j in range(u)] for i in range(block.j)], cols=u
        )
        basis = kernel_basis(b_prime)
        produced = 0
        while produced < 20:
            x = QVector([0] * u)
            for vec in basis:
                x = x + vec.scale(Fraction(rng.randint(-9, 9), rng.randint(1, 2)))
            if any(e == 0 for e in x):
                continue
            r1 = [Fraction(rng.randint(1, 9)) for _ in range(u)]
            r2 = [r1[i] + x[i] / block.c for i in range(u)]
            if any(e == 0 for e in r2):
                continue
            s = QVector(list(x.entries) + r1 + r2)
            ok &= mat_vec(block.D, s).is_zero()
            y = imgcontained_recover(block, s, meta)
            ok &= mat_vec(a, y) == meta.unpermute_image(QVector(s.entries[:u]))
            produced += 1
    _report(6, ok, "40 kernel elements of the block matrix recover exact preimages")


def test_criterion_7_sign_adapter():
    rng = random.Random(424242)
    ok = True
    for _ in range(100):
        v = rng.randint(1, 5)
        signs = [rng.choice([-1, 0, 1]) for _ in range(v)]
        if all(s == 0 for s in signs):
            signs[rng.randrange(v)] = 1
        u = rng.randint(1, 4)
        a = QMatrix(u, v, [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                           for _ in range(u * v)])
        e, c = sign_adapter(a, SignPattern(signs))
        ok &= det(e) in (Fraction(1), Fraction(-1))
        for k in range(v):
            col = solve_linear(e, QVector.unit(v, k))
            ok &= col is not None and all(x.denominator == 1 for x in col)
        ok &= mat_mul(c, e) == a
        for _ in range(100):
            x = QVector([s * Fraction(rng.randint(1, 9), rng.randint(1, 3)) for s in signs])
            ok &= all(val > 0 for val in mat_vec(e, x))
        if not ok:
            break
    _report(7, ok, "100 random sign patterns: det(E)=+-1, integer inverse, CE=A, Ex>0")


def test_criterion_8_progression_gallery():
    ok = True
    for rows in (5, 7, 10):
        b, c = ap_projector_pair(2, rows)
        expected_b = QMatrix.from_rows(
            [[-(l + 1), l + 2] + [0] * l + [-1] + [0] * (rows - 3 - l) for l in range(rows - 2)],
            cols=rows,
        )
        expected_c = QMatrix.from_rows(
            [[1, 0], [0, 1]] + [[-(l - 1), l] for l in range(2, rows)], cols=2
        )
        ok &= b == expected_b and c == expected_c
    b5, c5 = ap_projector_pair(2, 5)
    a5 = ap_matrix(ApFamily(d=2, truncation=5))
    witness = solve_linear(a5, mat_vec(c5, QVector([1, 2])))
    ok &= witness == QVector([1, Fraction(1, 2)])
    rng = random.Random(64)
    a64 = ap_matrix(ApFamily(d=2, truncation=64))
    c64 = ap_integer_c(2, 64)
    for _ in range(50):
        aa = Fraction(rng.randint(-50, 50), rng.randint(1, 6))
        bb = Fraction(rng.randint(-50, 50), rng.randint(1, 6))
        ok &= mat_vec(a64, QVector([aa, bb])) == mat_vec(c64, QVector([2 * aa + bb, aa + bb]))
    _report(8, ok, "step-2 gallery matrices, rational witness (1,1/2), 64-row identity")


def test_criterion_9_oracle_ground_truth():
    start = time.perf_counter()
    sup5 = kernel_supports(SCHUR_KERNEL, 5)
    sup4 = kernel_supports(SCHUR_KERNEL, 4)
    w5 = window_pr(5, sup5, 2)
    w4 = window_pr(4, sup4, 2)
    ok = w5.verdict is True
    ok &= w4.verdict is False and w4.bad_coloring == {1: 0, 2: 1, 3: 1, 4: 0}
    ok &= window_pr(5, sup5, 2, parallel=True) == w5
    ok &= window_pr(4, sup4, 2, parallel=True) == w4
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    _report(9, ok, f"Schur windows: N=5 forced, N=4 countermodel {{1,4|2,3}}, parallel=serial ({elapsed:.2f}s)")


def test_criterion_10_mpc_counts():
    ok = True
    for m in range(1, 5):
        for p in range(1, 4):
            for c in range(1, p + 1):
                built = mpc_matrix(MpcParams(m, p, c))
                ok &= built.rows == ((2 * p + 1) ** m - 1) // (2 * p)
    ok &= mpc_matrix(MpcParams(2, 1, 1)) == QMatrix.from_rows(
        [[1, -1], [1, 0], [1, 1], [0, 1]], cols=2
    )
    _report(10, ok, "row counts match ((2p+1)^m - 1)/(2p); (2,1,1) rows exact")


def test_criterion_11_notg_verifier():
    even = check_notg(d_z(2))
    ok = even.confirmed and even.witness == QVector([1, 1])
    ok &= even.witness_membership == (False, False)
    ints = check_notg(INTEGERS)
    ok &= ints.confirmed and ints.witness == QVector([Fraction(1, 2), 1])
    ok &= ints.witness_membership[0] is False
    _report(11, ok, "obstruction witnesses (1,1) over 2Z and (1/2,1) over Z confirmed")
