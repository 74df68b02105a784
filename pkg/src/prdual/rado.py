"""Columns-condition certificates and (m,p,c) matrix generation.

A finite matrix admits a monochromatic kernel member under every finite
coloring of N (equivalently Z, or Q) exactly when its columns satisfy the
columns condition: an ordered partition of the column indices whose first
block sums to zero, with each later block sum lying in the rational span of
all earlier columns.  ``columns_condition`` searches for such a partition and
returns it with explicit spanning witnesses; ``verify_cc_certificate``
re-checks a certificate from scratch, sharing no state with the search.

The search is exhaustive over ordered set partitions (hence the column cap)
and fully deterministic: candidate blocks are tried in lexicographic order
and the first success is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import SizeError, SpecError
from .exactmat import (
    QMatrix,
    QVector,
    rat,
    rat_str,
    solve_linear,
)

MAX_COLUMNS = 12

KERNEL_PR_DOMAINS = ("N", "Z", "Q")


@dataclass(frozen=True)
class ColumnsCertificate:
    """Ordered column partition witnessing the columns condition.

    ``partition[0]`` sums to the zero column.  For each t >= 1,
    ``witnesses[t-1]`` holds coefficients aligned with the ascending list of
    indices in earlier blocks, reproducing the block-t column sum exactly.
    """

    partition: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "partition": [list(block) for block in self.partition],
            "witnesses": [[rat_str(c) for c in w] for w in self.witnesses],
        }

    @staticmethod
    def from_json(obj: dict) -> "ColumnsCertificate":
        return ColumnsCertificate(
            partition=tuple(tuple(int(i) for i in block) for block in obj["partition"]),
            witnesses=tuple(tuple(rat(c) for c in w) for w in obj["witnesses"]),
        )


@dataclass(frozen=True)
class MpcParams:
    """Shape parameters for a Deuber row-family matrix."""

    m: int
    p: int
    c: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.c < 1:
            raise SpecError(f"(m,p,c) parameters must be positive, got {self}")
        if self.c > self.p:
            raise SpecError(f"c={self.c} exceeds the entry bound p={self.p}")


def _column_sum(cols: list[QVector], block) -> QVector:
    acc = [Fraction(0)] * cols[0].dim if cols else []
    for i in block:
        for k, x in enumerate(cols[i]):
            acc[k] += x
    return QVector(acc)


def _nonempty_subsets(indices: tuple[int, ...]):
    """All nonempty subsets of an ascending index tuple, lexicographically."""
    subs = []
    for size in range(1, len(indices) + 1):
        subs.extend(combinations(indices, size))
    subs.sort()
    return subs


def columns_condition(a: QMatrix, domain: str = "N") -> ColumnsCertificate | None:
    """First (lexicographic) columns-condition certificate, or None.

    ``domain`` is the semigroup the kernel-regularity verdict is asked over;
    the criterion is one and the same for N, Z, and Q, so the tag only gates
    the allowed values.
    """
    if domain not in KERNEL_PR_DOMAINS:
        raise SpecError(f"kernel regularity domain must be one of {KERNEL_PR_DOMAINS}, got {domain!r}")
    if a.cols > MAX_COLUMNS:
        raise SizeError(f"columns-condition search capped at {MAX_COLUMNS} columns, got {a.cols}")
    cols = [a.col(j) for j in range(a.cols)]
    if a.cols == 0:
        return None

    def extend(used_blocks: list[tuple[int, ...]], witnesses: list[tuple[Fraction, ...]],
               remaining: tuple[int, ...]) -> ColumnsCertificate | None:
        if not remaining:
            return ColumnsCertificate(tuple(used_blocks), tuple(witnesses))
        earlier = sorted(i for block in used_blocks for i in block)
        earlier_matrix = QMatrix.from_rows(
            [[cols[i][k] for i in earlier] for k in range(a.rows)], cols=len(earlier)
        )
        for block in _nonempty_subsets(remaining):
            target = _column_sum(cols, block)
            coeffs = solve_linear(earlier_matrix, target)
            if coeffs is None:
                continue
            rest = tuple(i for i in remaining if i not in set(block))
            found = extend(used_blocks + [block], witnesses + [tuple(coeffs.entries)], rest)
            if found is not None:
                return found
        return None

    all_indices = tuple(range(a.cols))
    for first in _nonempty_subsets(all_indices):
        if not _column_sum(cols, first).is_zero():
            continue
        rest = tuple(i for i in all_indices if i not in set(first))
        found = extend([first], [], rest)
        if found is not None:
            return found
    return None


def verify_cc_certificate(a: QMatrix, cert: ColumnsCertificate) -> bool:
    """Re-check both certificate clauses directly against the columns of ``a``.

    Purely a predicate: malformed partitions or index sets yield False rather
    than raising.
    """
    try:
        blocks = cert.partition
        if not blocks:
            return False
        seen: set[int] = set()
        for block in blocks:
            if not block:
                return False
            for i in block:
                if not (0 <= i < a.cols) or i in seen:
                    return False
                seen.add(i)
        if seen != set(range(a.cols)):
            return False
        if len(cert.witnesses) != len(blocks) - 1:
            return False
        cols = [a.col(j) for j in range(a.cols)]
        if not _column_sum(cols, blocks[0]).is_zero():
            return False
        for t in range(1, len(blocks)):
            earlier = sorted(i for block in blocks[:t] for i in block)
            coeffs = cert.witnesses[t - 1]
            if len(coeffs) != len(earlier):
                return False
            combo = [Fraction(0)] * a.rows
            for c, i in zip(coeffs, earlier):
                for k in range(a.rows):
                    combo[k] += c * cols[i][k]
            if QVector(combo) != _column_sum(cols, blocks[t]):
                return False
        return True
    except (TypeError, ValueError, IndexError):
        return False


def mpc_matrix(params: MpcParams) -> QMatrix:
    """All rows over {-p..p} whose first nonzero entry equals c.

    Rows are ordered by (position of first nonzero, then the remaining
    entries ascending); the count is ((2p+1)^m - 1) / (2p).
    """
    m, p, c = params.m, params.p, params.c
    rows: list[list[int]] = []
    for lead in range(m):
        for tail in product(range(-p, p + 1), repeat=m - lead - 1):
            rows.append([0] * lead + [c] + list(tail))
    return QMatrix.from_rows(rows, cols=m)


def mpc_row_count(params: MpcParams) -> int:
    """Closed-form row count of the (m,p,c) matrix."""
    m, p = params.m, params.p
    return ((2 * p + 1) ** m - 1) // (2 * p)
