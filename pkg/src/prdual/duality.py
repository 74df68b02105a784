"""Dualizing constructions between kernel-side and image-side systems.

Two directions, both exact:

* ``kernel_projector`` turns a matrix B into the idempotent projector C with
  B C = O, C^2 = C, and  B x = 0  <=>  C x = x.  The range of C is exactly
  the kernel of B, so monochromatic kernel members of B and monochromatic
  images of C coincide.

* ``row_dependency`` / ``image_to_kernel`` turn a matrix A with dependent
  rows into the dependency-recording matrix B with B A = O and kernel(B) =
  range(A): each redundant row r_i is rewritten as a combination of the kept
  independent rows, with a -1 marking r_i itself.

``interleave`` handles the orthogonal trick of widening A to (A | -A)
column-interleaved, which converts arbitrary-sign preimages into strictly
constrained ones without changing the image set.

All choice points (which rows count as independent, which kernel basis) are
resolved by the greedy smallest-index rules from ``exactmat``, so every
construction here is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, IndependentRowsError, ShiftError
from .exactmat import (
    QMatrix,
    QVector,
    greedy_independent_rows,
    kernel_basis,
    matrix_from_json,
    matrix_to_json,
    solve_linear,
)


@dataclass(frozen=True)
class ProjectorResult:
    """Projector C onto the kernel of some B, with its supporting data.

    ``T`` lists the coordinate positions whose restriction-to-kernel
    functionals were kept as a basis; columns of C outside T are zero, and
    ``D_compact`` is C with those zero columns dropped (v x |T|).
    """

    C: QMatrix
    T: tuple[int, ...]
    D_compact: QMatrix

    def to_json(self) -> dict:
        return {"T": list(self.T), "C": matrix_to_json(self.C), "D": matrix_to_json(self.D_compact)}

    @staticmethod
    def from_json(obj: dict) -> "ProjectorResult":
        return ProjectorResult(
            C=matrix_from_json(obj["C"]),
            T=tuple(int(t) for t in obj["T"]),
            D_compact=matrix_from_json(obj["D"]),
        )


@dataclass(frozen=True)
class DependencyResult:
    """Row-dependency matrix B for some A: rows L kept, rows J rewritten."""

    L: tuple[int, ...]
    J: tuple[int, ...]
    B: QMatrix

    def to_json(self) -> dict:
        return {"L": list(self.L), "J": list(self.J), "B": matrix_to_json(self.B)}

    @staticmethod
    def from_json(obj: dict) -> "DependencyResult":
        return DependencyResult(
            L=tuple(int(t) for t in obj["L"]),
            J=tuple(int(t) for t in obj["J"]),
            B=matrix_from_json(obj["B"]),
        )


def interleave(a: QMatrix) -> QMatrix:
    """Widen A (u x v) to the u x 2v matrix with columns +a_j, -a_j alternating."""
    out = []
    for i in range(a.rows):
        for j in range(a.cols):
            e = a.entry(i, j)
            out.append(e)
            out.append(-e)
    # entries above are emitted row-major already: (i, 2j) then (i, 2j+1)
    return QMatrix(a.rows, 2 * a.cols, out)


def interleave_pull(y: QVector) -> QVector:
    """Collapse a 2v-dim vector to v dims via x_j = y_{2j} - y_{2j+1}.

    For every A: interleave(A) @ y == A @ interleave_pull(y).
    """
    if y.dim % 2 != 0:
        raise DimensionError(f"interleave_pull needs even dimension, got {y.dim}")
    return QVector(y[2 * j] - y[2 * j + 1] for j in range(y.dim // 2))


def interleave_push(x: QVector, shifts: QVector) -> QVector:
    """Lift x to the 2v-dim vector (s_0 + x_0, s_0, s_1 + x_1, s_1, ...).

    Round-trips with interleave_pull and preserves images under the
    interleaved matrix.  Each shift s_j and each sum x_j + s_j must be
    nonzero; the caller chooses shifts inside its semigroup.
    """
    if x.dim != shifts.dim:
        raise DimensionError(f"vector dims {x.dim} != {shifts.dim}")
    out = []
    for j in range(x.dim):
        if shifts[j] == 0:
            raise ShiftError(f"shift {j} is zero")
        if x[j] + shifts[j] == 0:
            raise ShiftError(f"shift {j} cancels coordinate {j}")
        out.append(shifts[j] + x[j])
        out.append(shifts[j])
    return QVector(out)


def kernel_projector(b: QMatrix) -> ProjectorResult:
    """Idempotent projector whose range is the kernel of ``b``.

    Construction: write the canonical kernel basis as the columns of a
    v x k matrix N.  Row i of N represents the functional x -> x_i on the
    kernel.  T is the greedy maximal independent set of those rows; each row
    is expressed over the T-rows, and those coefficients fill the T-columns
    of C (all other columns stay zero).  A trivial kernel yields C = O, T
    empty.

    Exact guarantees: b @ C = O, C @ C = C, range(C) = kernel(b), and
    C x = x exactly when b x = 0.
    """
    v = b.cols
    basis = kernel_basis(b)
    if not basis:
        return ProjectorResult(C=QMatrix.zero(v, v), T=(), D_compact=QMatrix(v, 0, []))
    n_rows = [QVector([vec[i] for vec in basis]) for i in range(v)]
    t_set = greedy_independent_rows(n_rows)
    t_rows = [n_rows[t] for t in t_set]
    coeff_rows = [_express_over(n_rows[i], t_rows) for i in range(v)]
    d_compact = QMatrix.from_rows([list(r.entries) for r in coeff_rows], cols=len(t_set))
    c_entries = []
    t_pos = {t: k for k, t in enumerate(t_set)}
    for i in range(v):
        for j in range(v):
            c_entries.append(d_compact.entry(i, t_pos[j]) if j in t_pos else Fraction(0))
    return ProjectorResult(C=QMatrix(v, v, c_entries), T=tuple(t_set), D_compact=d_compact)


def _express_over(target: QVector, basis_rows: list[QVector]) -> QVector:
    """Coefficients writing ``target`` as a combination of independent rows."""
    stacked = QMatrix.from_rows([list(r.entries) for r in basis_rows], cols=target.dim).transpose()
    coeffs = solve_linear(stacked, target)
    assert coeffs is not None  # target lies in the span by maximality of the basis
    return coeffs


def row_dependency(a: QMatrix) -> DependencyResult:
    """Record how the redundant rows of ``a`` depend on the kept ones.

    L is the greedy maximal independent row set, J its complement (must be
    nonempty).  Row i of B (one per member of J) carries the combination
    coefficients over L and a -1 in column i, so B a = O exactly and the
    kernel of B equals the range of a.
    """
    rows = a.row_list()
    kept = greedy_independent_rows(rows)
    j_set = [i for i in range(a.rows) if i not in set(kept)]
    if not j_set:
        raise IndependentRowsError("rows are linearly independent; no dependency matrix exists")
    kept_rows = [rows[t] for t in kept]
    b_rows = []
    for i in j_set:
        coeffs = _express_over(rows[i], kept_rows)
        row = [Fraction(0)] * a.rows
        for pos, t in enumerate(kept):
            row[t] = coeffs[pos]
        row[i] = Fraction(-1)
        b_rows.append(row)
    b = QMatrix.from_rows(b_rows, cols=a.rows)
    return DependencyResult(L=tuple(kept), J=tuple(j_set), B=b)


def image_to_kernel(a: QMatrix) -> QMatrix:
    """Kernel-side matrix B with kernel(B) = range(A).

    Independent rows degenerate to the u x u zero matrix (every vector is in
    its kernel, matching the full range); otherwise this is the
    row-dependency matrix.
    """
    rows = a.row_list()
    if len(greedy_independent_rows(rows)) == a.rows:
        return QMatrix.zero(a.rows, a.rows)
    return row_dependency(a).B


def ipr_projector(a: QMatrix) -> QMatrix:
    """Idempotent u x u matrix with the same column space as ``a``.

    Identity when the rows of ``a`` are independent; otherwise the kernel
    projector of the row-dependency matrix (whose kernel is range(a)).
    """
    rows = a.row_list()
    if len(greedy_independent_rows(rows)) == a.rows:
        return QMatrix.identity(a.rows)
    return kernel_projector(row_dependency(a).B).C


def compress_projector(p: ProjectorResult) -> QMatrix:
    """Drop the structurally zero columns of the projector: the v x |T| table."""
    return p.D_compact
