"""Kernel-side transfer of image regularity: block lifts and sign adapters.

Given a matrix A (dependent rows, image weakly regular over a subgroup S of
Q), ``imgcontained_build`` manufactures a kernel-regular block matrix

    D = [ B'  O    O  ]
        [ I   cI  -cI ]

from the row-dependency matrix B' of A and the corner determinant c, together
with a columns-condition certificate lifted from B'.  Any entirely nonzero
kernel member s of D then encodes an image of A among its entries:
``imgcontained_recover`` inverts the corner by determinant ratios (Cramer)
and returns y with A y equal to the leading block of s.

``sign_adapter`` solves the orthogonal positivity problem: given the sign
pattern a of a preimage family, it builds a unimodular E (integer inverse)
such that E x is strictly positive whenever sgn(x_i) = a_i, and the
compensated matrix C = A E^{-1} satisfies C E = A exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadCertificateError,
    DependencyError,
    DimensionError,
    KernelError,
    ScaleError,
    ZeroPatternError,
)
from .exactmat import (
    QMatrix,
    QVector,
    det,
    greedy_independent_rows,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    rat,
    rat_str,
    rref,
    solve_linear,
)
from .duality import row_dependency
from .oracle import SemigroupSpec
from .rado import ColumnsCertificate, columns_condition, verify_cc_certificate


@dataclass(frozen=True)
class DeuberBlock:
    """The lifted kernel-regular block matrix with its two certificates."""

    D: QMatrix
    c: Fraction
    source_certificate: ColumnsCertificate
    lifted_certificate: ColumnsCertificate

    @property
    def u(self) -> int:
        return self.D.cols // 3

    @property
    def j(self) -> int:
        return self.D.rows - self.u

    def to_json(self) -> dict:
        return {
            "D": matrix_to_json(self.D),
            "c": rat_str(self.c),
            "u": self.u,
            "j": self.j,
            "source_certificate": self.source_certificate.to_json(),
            "lifted_certificate": self.lifted_certificate.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "DeuberBlock":
        return DeuberBlock(
            D=matrix_from_json(obj["D"]),
            c=rat(obj["c"]),
            source_certificate=ColumnsCertificate.from_json(obj["source_certificate"]),
            lifted_certificate=ColumnsCertificate.from_json(obj["lifted_certificate"]),
        )


@dataclass(frozen=True)
class TransferMeta:
    """Bookkeeping for the build: scaling, permutations, corner shape.

    ``row_order``/``col_order`` list original indices in pipeline order (the
    first ``l`` of each form the invertible corner).  ``scaled`` is the
    permuted integer-scaled matrix the block was actually built from.
    """

    scale: int
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    l: int
    c: Fraction
    scaled: QMatrix

    def unpermute_image(self, x_leading: QVector) -> QVector:
        """Map the leading block of a kernel element back to original row order."""
        if x_leading.dim != len(self.row_order):
            raise DimensionError(f"expected dim {len(self.row_order)}, got {x_leading.dim}")
        out = [Fraction(0)] * len(self.row_order)
        for pos, orig in enumerate(self.row_order):
            out[orig] = x_leading[pos]
        return QVector(out)

    def to_json(self) -> dict:
        return {
            "scale": self.scale,
            "row_order": list(self.row_order),
            "col_order": list(self.col_order),
            "l": self.l,
            "c": rat_str(self.c),
            "scaled": matrix_to_json(self.scaled),
        }


@dataclass(frozen=True)
class SignPattern:
    """Entry signs (-1, 0, +1) of a preimage family; never identically zero."""

    signs: tuple[int, ...]

    def __init__(self, signs):
        values = tuple(int(s) for s in signs)
        if any(s not in (-1, 0, 1) for s in values):
            raise ZeroPatternError(f"sign entries must be -1, 0, or 1: {values}")
        if not values or all(s == 0 for s in values):
            raise ZeroPatternError("sign pattern is identically zero")
        object.__setattr__(self, "signs", values)

    def __len__(self) -> int:
        return len(self.signs)


def deuber_block(b_prime: QMatrix, c: Fraction | int, cert: ColumnsCertificate) -> DeuberBlock:
    """Assemble [[B', O, O], [I, cI, -cI]] and lift B's certificate onto it.

    The lifted partition opens with all 2u paired c/-c columns (they cancel,
    so the new first block sums to zero) and then replays the blocks of the
    source certificate; witnesses are re-solved against the block columns.
    The result is verified before being returned.
    """
    c = rat(c)
    if c == 0:
        raise ScaleError("block scalar c must be nonzero")
    if not verify_cc_certificate(b_prime, cert):
        raise BadCertificateError("source certificate fails on the given matrix")
    j, u = b_prime.rows, b_prime.cols
    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for i in range(j):
        rows.append([b_prime.entry(i, t) for t in range(u)] + [zero] * (2 * u))
    for i in range(u):
        row = [zero] * (3 * u)
        row[i] = Fraction(1)
        row[u + i] = c
        row[2 * u + i] = -c
        rows.append(row)
    d = QMatrix.from_rows(rows, cols=3 * u)

    lifted_partition = [tuple(range(u, 3 * u))] + [tuple(block) for block in cert.partition]
    lifted = _certify_partition(d, lifted_partition)
    if lifted is None or not verify_cc_certificate(d, lifted):
        raise AssertionError("lifted certificate failed verification")  # unreachable by construction
    return DeuberBlock(D=d, c=c, source_certificate=cert, lifted_certificate=lifted)


def _certify_partition(a: QMatrix, partition: list[tuple[int, ...]]) -> ColumnsCertificate | None:
    """Solve the witness systems for a known-good ordered partition."""
    cols = [a.col(jj) for jj in range(a.cols)]
    first_sum = [sum((cols[i][k] for i in partition[0]), Fraction(0)) for k in range(a.rows)]
    if any(x != 0 for x in first_sum):
        return None
    witnesses = []
    for t in range(1, len(partition)):
        earlier = sorted(i for block in partition[:t] for i in block)
        stacked = QMatrix.from_rows([[cols[i][k] for i in earlier] for k in range(a.rows)],
                                    cols=len(earlier))
        target = QVector([sum((cols[i][k] for i in partition[t]), Fraction(0)) for k in range(a.rows)])
        coeffs = solve_linear(stacked, target)
        if coeffs is None:
            return None
        witnesses.append(tuple(coeffs.entries))
    return ColumnsCertificate(tuple(tuple(b) for b in partition), tuple(witnesses))


def _minimal_scale(a: QMatrix, s: SemigroupSpec) -> int:
    """Least positive d with every entry of d*a in (S intersect Z).

    Only subgroup specs are accepted: for those, S intersect Z is m*Z with
    m the least positive integer of S, so the minimal d is a closed-form lcm.
    """
    if not s.is_group():
        raise ScaleError(f"{s} is not a subgroup of Q; entries of a scaled matrix "
                         "cannot all land in it (zero entries alone rule it out)")
    if s.kind == "Q":
        return math.lcm(*(e.denominator for e in a.entries)) if a.entries else 1
    m = s.min_positive_integer()
    d = 1
    for e in a.entries:
        if e == 0:
            continue
        # need d*e in mZ:  d * num/den = m*k  =>  (m*den)/gcd(num, m*den) divides d
        need = (m * e.denominator) // math.gcd(e.numerator, m * e.denominator)
        d = math.lcm(d, need)
    return d


def imgcontained_build(a: QMatrix, s: SemigroupSpec) -> tuple[DeuberBlock, TransferMeta]:
    """Build the kernel-regular block matrix whose kernels contain images of A.

    Pipeline: scale A into S intersect Z; permute rows/columns (greedy pivot
    order) so the top-left rank x rank corner is invertible; c is the absolute
    corner determinant; B' collects the dependencies of the remaining rows;
    the columns-condition certificate of B' is found and lifted onto the
    block matrix.
    """
    rows = a.row_list()
    kept = greedy_independent_rows(rows)
    if len(kept) == a.rows:
        raise DependencyError("rows are linearly independent; the block lift needs dependent rows")
    scale = _minimal_scale(a, s)
    scaled = a.scale(scale)

    l = len(kept)
    row_order = list(kept) + [i for i in range(a.rows) if i not in set(kept)]
    top = QMatrix.from_rows([[scaled.entry(i, jj) for jj in range(a.cols)] for i in kept], cols=a.cols)
    _, pivots, _ = rref(top)
    col_order = list(pivots) + [jj for jj in range(a.cols) if jj not in set(pivots)]
    permuted = QMatrix.from_rows(
        [[scaled.entry(i, jj) for jj in col_order] for i in row_order], cols=a.cols
    )

    dep = row_dependency(permuted)
    assert dep.L == tuple(range(l))
    cert = columns_condition(dep.B)
    if cert is None:
        raise BadCertificateError(
            "row-dependency matrix fails the columns condition; "
            "the input is not weakly image partition regular"
        )

    corner = QMatrix.from_rows([[permuted.entry(i, jj) for jj in range(l)] for i in range(l)], cols=l)
    c = abs(det(corner))
    assert c != 0  # corner columns are the pivot columns of independent rows
    assert s.membership(c)  # determinant of a matrix over mZ is divisible by m

    block = deuber_block(dep.B, c, cert)
    meta = TransferMeta(scale=scale, row_order=tuple(row_order), col_order=tuple(col_order),
                        l=l, c=c, scaled=permuted)
    return block, meta


def _cramer_solve(a: QMatrix, b: QVector) -> QVector:
    """Solve an invertible square system by determinant ratios."""
    d = det(a)
    out = []
    for jj in range(a.cols):
        replaced = QMatrix.from_rows(
            [[b[i] if k == jj else a.entry(i, k) for k in range(a.cols)] for i in range(a.rows)],
            cols=a.cols,
        )
        out.append(det(replaced) / d)
    return QVector(out)


def imgcontained_recover(block: DeuberBlock, s_vec: QVector, meta: TransferMeta) -> QVector:
    """Extract a preimage from a kernel element of the block matrix.

    Split s = (x, r).  The identity rows force x_i = c (r_{u+i} - r_i); the
    corner system A* w = z' (z = x / c) is solved by Cramer's rule, w is
    scaled back by c and the build scale, padded with zeros, and both
    permutations are undone.  The result y satisfies A y = x in the original
    indexing, with x recoverable via ``meta.unpermute_image``.
    """
    u = block.u
    if s_vec.dim != 3 * u:
        raise DimensionError(f"kernel element must have dim {3 * u}, got {s_vec.dim}")
    if not mat_vec(block.D, s_vec).is_zero():
        raise KernelError("vector is not in the kernel of the block matrix")
    c = block.c
    z = QVector([s_vec[2 * u + i] - s_vec[u + i] for i in range(u)])
    l = meta.l
    corner = QMatrix.from_rows(
        [[meta.scaled.entry(i, jj) for jj in range(l)] for i in range(l)], cols=l
    )
    w = _cramer_solve(corner, QVector(z.entries[:l]))
    v = meta.scaled.cols
    y_permuted = [c * meta.scale * w[i] if i < l else Fraction(0) for i in range(v)]
    y = [Fraction(0)] * v
    for pos, orig in enumerate(meta.col_order):
        y[orig] = y_permuted[pos]
    return QVector(y)


def sign_adapter(a: QMatrix, pattern: SignPattern) -> tuple[QMatrix, QMatrix]:
    """Unimodular positivity adapter (E, C) for a sign pattern of preimages.

    C E = A exactly, det(E) is +-1, the inverse of E has entries in
    {-1, 0, 1}, and E x is strictly positive for every x whose entry signs
    match the pattern.  Internally the columns are rotated so a nonzero sign
    leads; the rotation is folded back into E, so callers never see it.
    """
    if len(pattern) != a.cols:
        raise DimensionError(f"pattern length {len(pattern)} != {a.cols} columns")
    signs = pattern.signs
    lead = next(i for i, s in enumerate(signs) if s != 0)
    order = [lead] + [i for i in range(len(signs)) if i != lead]
    pos = {orig: k for k, orig in enumerate(order)}
    a0 = Fraction(signs[lead])
    perm_signs = [signs[i] for i in order]

    v = len(signs)
    e_p = [[Fraction(0)] * v for _ in range(v)]
    e_p_inv = [[Fraction(0)] * v for _ in range(v)]
    e_p[0][0] = a0
    e_p_inv[0][0] = a0  # a0 is +-1, its own inverse
    for jj in range(1, v):
        diag = Fraction(1 if perm_signs[jj] >= 0 else -1)
        e_p[jj][0] = a0
        e_p[jj][jj] = diag
        e_p_inv[jj][0] = -diag  # x_j = diag * (y_j - y_0), and a0^2 = 1
        e_p_inv[jj][jj] = diag

    a_p = QMatrix.from_rows(
        [[a.entry(i, order[k]) for k in range(v)] for i in range(a.rows)], cols=v
    )
    c = a_p @ QMatrix.from_rows(e_p_inv, cols=v)
    # fold the column rotation into E: column j of E is column pos[j] of E_p
    e = QMatrix.from_rows(
        [[e_p[i][pos[jj]] for jj in range(v)] for i in range(v)], cols=v
    )
    assert abs(det(e)) == 1
    return e, c
