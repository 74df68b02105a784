"""Exact rational vectors and matrices.

Everything downstream (projector constructions, certificate checks, block
lifts) is decided by bit-exact identities, so the scalar type is
``fractions.Fraction``: arbitrary precision, always reduced, positive
denominator.  Matrices are dense, immutable, and small (a few hundred rows at
most), which keeps equality structural and results hashable.

Canonical choices are fixed once here so the whole toolkit is deterministic:
row reduction always pivots on the smallest usable row, solved systems set
free variables to zero, and kernel bases are the reduced-echelon
free-variable basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, IndependenceError, QMatFormatError

Rational = Fraction

RationalLike = Fraction | int | str


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or ``p/q`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int; reject to avoid silent 0/1
        raise QMatFormatError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise QMatFormatError(f"zero denominator in rational literal: {value!r}") from None
        except ValueError:
            raise QMatFormatError(f"not a rational literal: {value!r}") from None
    raise QMatFormatError(f"not a rational literal: {value!r}")


def rat_str(value: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q`` (the .qmat entry syntax)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class QVector:
    """Immutable finite vector of exact rationals."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[RationalLike]):
        object.__setattr__(self, "entries", tuple(rat(e) for e in entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "QVector") -> "QVector":
        if self.dim != other.dim:
            raise DimensionError(f"vector dims {self.dim} != {other.dim}")
        return QVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "QVector") -> "QVector":
        if self.dim != other.dim:
            raise DimensionError(f"vector dims {self.dim} != {other.dim}")
        return QVector(a - b for a, b in zip(self.entries, other.entries))

    def scale(self, c: RationalLike) -> "QVector":
        c = rat(c)
        return QVector(c * a for a in self.entries)

    def dot(self, other: "QVector") -> Fraction:
        if self.dim != other.dim:
            raise DimensionError(f"vector dims {self.dim} != {other.dim}")
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    @staticmethod
    def zero(dim: int) -> "QVector":
        return QVector([0] * dim)

    @staticmethod
    def unit(dim: int, i: int) -> "QVector":
        return QVector([1 if j == i else 0 for j in range(dim)])

    def __str__(self) -> str:
        return "(" + " ".join(rat_str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class QMatrix:
    """Dense u x v matrix of exact rationals, row-major, 0-indexed."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        data = tuple(rat(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "QMatrix":
        """Build from a list of row lists; ``cols`` disambiguates zero-row matrices."""
        u = len(rows)
        if u == 0:
            return QMatrix(0, 0 if cols is None else cols, [])
        v = len(rows[0])
        if cols is not None and cols != v:
            raise DimensionError(f"declared {cols} columns, rows have {v}")
        flat: list[RationalLike] = []
        for r in rows:
            if len(r) != v:
                raise DimensionError("ragged rows")
            flat.extend(r)
        return QMatrix(u, v, flat)

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "QMatrix":
        return QMatrix(rows, cols, [0] * (rows * cols))

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> QVector:
        return QVector(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j: int) -> QVector:
        return QVector(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[QVector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, (self.entry(i, j) for j in range(self.cols) for i in range(self.rows)))

    def scale(self, c: RationalLike) -> "QMatrix":
        c = rat(c)
        return QMatrix(self.rows, self.cols, (c * e for e in self.entries))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(rat_str(self.entry(i, j)) for j in range(self.cols)) for i in range(self.rows))


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Exact matrix product; raises DimensionError on shape mismatch."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out: list[Fraction] = []
    for i in range(a.rows):
        arow = a.entries[i * a.cols : (i + 1) * a.cols]
        for j in range(b.cols):
            acc = Fraction(0)
            for k in range(a.cols):
                aik = arow[k]
                if aik:
                    acc += aik * b.entries[k * b.cols + j]
            out.append(acc)
    return QMatrix(a.rows, b.cols, out)


def mat_vec(a: QMatrix, x: QVector) -> QVector:
    """Exact matrix-vector product."""
    if a.cols != x.dim:
        raise DimensionError(f"cannot apply {a.rows}x{a.cols} to dim-{x.dim} vector")
    return QVector(
        sum((a.entries[i * a.cols + k] * x.entries[k] for k in range(a.cols)), Fraction(0))
        for i in range(a.rows)
    )


def rref(a: QMatrix) -> tuple[QMatrix, tuple[int, ...], int]:
    """Reduced row echelon form over Q.

    Returns ``(R, pivots, rank)`` with pivot column indices ascending.  Pivot
    selection is the smallest row index with a nonzero entry, so the result is
    canonical for a given input.
    """
    m = [list(a.entries[i * a.cols : (i + 1) * a.cols]) for i in range(a.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        pivot_row = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    flat = [x for row in m for x in row]
    return QMatrix(a.rows, a.cols, flat), tuple(pivots), len(pivots)


def rank(a: QMatrix) -> int:
    return rref(a)[2]


def kernel_basis(a: QMatrix) -> list[QVector]:
    """Canonical basis of the null space.

    One vector per free column f of the reduced echelon form: entry f is 1,
    other free entries 0, pivot entries read off the echelon rows.  The
    vectors are independent and their count is ``cols - rank``.
    """
    r, pivots, _ = rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(a.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for k, p in enumerate(pivots):
            v[p] = -r.entry(k, f)
        basis.append(QVector(v))
    return basis


def solve_linear(a: QMatrix, b: QVector) -> QVector | None:
    """One exact solution of ``a x = b``, or None if inconsistent.

    Canonical: echelon-reduce the augmented system and set free variables
    to zero.
    """
    if a.rows != b.dim:
        raise DimensionError(f"system is {a.rows}x{a.cols}, rhs has dim {b.dim}")
    aug = QMatrix(a.rows, a.cols + 1, tuple(
        a.entry(i, j) if j < a.cols else b[i] for i in range(a.rows) for j in range(a.cols + 1)
    ))
    r, pivots, _ = rref(aug)
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for k, p in enumerate(pivots):
        x[p] = r.entry(k, a.cols)
    return QVector(x)


def solve_row_constraints(rows: Sequence[QVector], targets: QVector) -> QVector:
    """Exact x with ``rows[i] . x == targets[i]`` for all i.

    The rows must be linearly independent (IndependenceError otherwise),
    which makes the stacked system consistent for every right-hand side.
    """
    if len(rows) != targets.dim:
        raise DimensionError(f"{len(rows)} constraint rows but {targets.dim} targets")
    if not rows:
        return QVector([])
    v = rows[0].dim
    stacked = QMatrix.from_rows([list(r.entries) for r in rows], cols=v)
    if rank(stacked) != len(rows):
        raise IndependenceError("constraint rows are linearly dependent")
    x = solve_linear(stacked, targets)
    assert x is not None  # independent rows make any target reachable
    return x


def det(a: QMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are first cleared to integers; the integer Bareiss sweep keeps all
    intermediates integral, and the row scalings divide back out at the end.
    """
    if not a.is_square():
        raise DimensionError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return Fraction(1)
    m: list[list[int]] = []
    scale = Fraction(1)
    for i in range(n):
        row = [a.entry(i, j) for j in range(n)]
        mult = math.lcm(*(x.denominator for x in row))
        scale *= mult
        m.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def greedy_independent_rows(rows: Sequence[QVector]) -> list[int]:
    """Smallest-index maximal independent subset of the given rows.

    Scans in index order, keeping a row iff it is outside the span of the
    rows kept so far (incremental elimination).  This is the canonical choice
    function behind every "pick a maximal independent set" step.
    """
    kept: list[int] = []
    reduced: list[tuple[int, list[Fraction]]] = []  # (pivot position, eliminated row)
    for idx, r in enumerate(rows):
        work = list(r.entries)
        for pos, base in reduced:
            if work[pos] != 0:
                f = work[pos]
                work = [x - f * y for x, y in zip(work, base)]
        lead = next((j for j, x in enumerate(work) if x != 0), None)
        if lead is None:
            continue
        inv = 1 / work[lead]
        reduced.append((lead, [inv * x for x in work]))
        kept.append(idx)
    return kept


# --- .qmat text format ------------------------------------------------------
#
# First line "u v"; then u lines of v whitespace-separated rationals written
# "p/q" or "p".  Zero denominators are rejected.


def parse_qmat(text: str) -> QMatrix:
    lines = text.splitlines()
    idx = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if idx is None:
        raise QMatFormatError("empty .qmat document")
    header = lines[idx].split()
    if len(header) != 2:
        raise QMatFormatError(f"header must be 'u v', got {lines[idx]!r}")
    try:
        u, v = int(header[0]), int(header[1])
    except ValueError:
        raise QMatFormatError(f"header must be two integers, got {lines[idx]!r}") from None
    if u < 0 or v < 0:
        raise QMatFormatError(f"negative shape {u}x{v}")
    body = lines[idx + 1 :]
    if v > 0:
        body = [ln for ln in body if ln.strip()]
    if len(body) < u:
        raise QMatFormatError(f"expected {u} rows, found {len(body)}")
    flat: list[Fraction] = []
    for i in range(u):
        tokens = body[i].split()
        if len(tokens) != v:
            raise QMatFormatError(f"row {i} has {len(tokens)} entries, expected {v}")
        flat.extend(rat(t) for t in tokens)
    return QMatrix(u, v, flat)


def format_qmat(a: QMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    for i in range(a.rows):
        lines.append(" ".join(rat_str(a.entry(i, j)) for j in range(a.cols)))
    return "\n".join(lines) + "\n"


def read_qmat(path) -> QMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_qmat(fh.read())


def write_qmat(path, a: QMatrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_qmat(a))


# --- JSON encoding (shared by certificates, reports, the CLI) ---------------


def matrix_to_json(a: QMatrix) -> dict:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[rat_str(a.entry(i, j)) for j in range(a.cols)] for i in range(a.rows)],
    }


def matrix_from_json(obj: dict) -> QMatrix:
    try:
        u, v = int(obj["rows"]), int(obj["cols"])
        rows = obj["entries"]
    except (KeyError, TypeError, ValueError):
        raise QMatFormatError(f"malformed matrix document: {obj!r}") from None
    if len(rows) != u or any(len(r) != v for r in rows):
        raise QMatFormatError("matrix entry grid does not match declared shape")
    return QMatrix(u, v, (rat(x) for row in rows for x in row))


def vector_to_json(x: QVector) -> list[str]:
    return [rat_str(e) for e in x.entries]


def vector_from_json(obj: list) -> QVector:
    return QVector(rat(e) for e in obj)
