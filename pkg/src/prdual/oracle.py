"""Finite-window ground truth for partition-regularity claims.

Nothing here is clever: solutions are enumerated by backtracking over small
integer (or bounded-denominator rational) windows, and "every coloring" is
decided by exhausting colorings of {1..N} with support-based pruning.  That
independence is the point — the window verdicts are used to cross-examine
the certificate machinery, so they must not share its code paths.

``SemigroupSpec`` gives a decidable stand-in for the additive subsemigroups
of Q that parametrize the constructions: membership, the generated group,
and the least positive integer element are all computed exactly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, SizeError, SpecError
from .exactmat import QMatrix, QVector, rat, rat_str, RationalLike

MAX_COLORING_SPACE = 2**16  # covers r=2 up to N=16 and r=3 up to N=10
MAX_KERNEL_VARS = 6
MAX_IMAGE_VARS = 4
MAX_WINDOW = 30


# --- semigroup descriptions --------------------------------------------------


@dataclass(frozen=True)
class SemigroupSpec:
    """A decidable additive subsemigroup of Q.

    ``kind`` is one of ``"Q"``, ``"Q+"``, ``"Z"``, ``"N"``, ``"dZ"``,
    ``"dN"``, ``"gen"``.  ``scale`` is the step of dZ/dN; ``generators`` are
    the positive generators of a finitely generated semigroup (sums with
    nonnegative, not-all-zero coefficients).  Use :func:`group_of` for the
    subgroup a spec generates.
    """

    kind: str
    scale: Fraction | None = None
    generators: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind in ("dZ", "dN"):
            if self.scale is None or self.scale <= 0:
                raise SpecError(f"{self.kind} needs a positive step, got {self.scale}")
        elif self.kind == "gen":
            if not self.generators:
                raise SpecError("generated semigroup needs at least one generator")
            if any(g <= 0 for g in self.generators):
                raise SpecError(f"generators must be positive, got {self.generators}")
        elif self.kind not in ("Q", "Q+", "Z", "N"):
            raise SpecError(f"unknown semigroup kind {self.kind!r}")

    def membership(self, x: RationalLike) -> bool:
        x = rat(x)
        if self.kind == "Q":
            return True
        if self.kind == "Q+":
            return x > 0
        if self.kind == "Z":
            return x.denominator == 1
        if self.kind == "N":
            return x.denominator == 1 and x >= 1
        if self.kind == "dZ":
            return (x / self.scale).denominator == 1
        if self.kind == "dN":
            q = x / self.scale
            return q.denominator == 1 and q >= 1
        return self._generated_membership(x)

    __contains__ = membership

    def _generated_membership(self, x: Fraction) -> bool:
        if x <= 0:
            return False
        lcm = math.lcm(*(g.denominator for g in self.generators))
        coins = sorted({int(g * lcm) for g in self.generators})
        target = x * lcm
        if target.denominator != 1:
            return False
        t = int(target)
        reachable = [False] * (t + 1)
        reachable[0] = True
        for n in range(1, t + 1):
            reachable[n] = any(n >= c and reachable[n - c] for c in coins)
        return reachable[t]

    def is_group(self) -> bool:
        return self.kind in ("Q", "Z", "dZ")

    def min_positive_integer(self) -> int:
        """Least element of (this semigroup) intersect N."""
        if self.kind in ("Q", "Q+", "Z", "N"):
            return 1
        if self.kind in ("dZ", "dN"):
            return self.scale.numerator  # least k*scale in N takes k = denominator
        bound = min(g.numerator for g in self.generators)  # denom * g = numerator is in S
        for n in range(1, bound + 1):
            if self.membership(n):
                return n
        return bound

    def __str__(self) -> str:
        if self.kind in ("Q", "Q+", "Z", "N"):
            return self.kind
        if self.kind in ("dZ", "dN"):
            return f"{rat_str(self.scale)}{self.kind[-1]}"
        return "gen(" + ",".join(rat_str(g) for g in self.generators) + ")"


Q_ALL = SemigroupSpec("Q")
Q_POSITIVE = SemigroupSpec("Q+")
INTEGERS = SemigroupSpec("Z")
NATURALS = SemigroupSpec("N")


def d_z(step: RationalLike) -> SemigroupSpec:
    step = rat(step)
    return INTEGERS if step == 1 else SemigroupSpec("dZ", scale=step)


def d_n(step: RationalLike) -> SemigroupSpec:
    step = rat(step)
    return NATURALS if step == 1 else SemigroupSpec("dN", scale=step)


def generated(*gens: RationalLike) -> SemigroupSpec:
    return SemigroupSpec("gen", generators=tuple(rat(g) for g in gens))


def group_of(spec: SemigroupSpec) -> SemigroupSpec:
    """The subgroup of Q generated by a semigroup spec.

    Every finitely described spec here generates a cyclic group g*Z (or all
    of Q for the Q kinds), so the result is again a plain spec.
    """
    if spec.kind in ("Q", "Q+"):
        return Q_ALL
    if spec.kind in ("Z", "N"):
        return INTEGERS
    if spec.kind in ("dZ", "dN"):
        return d_z(spec.scale)
    g = spec.generators[0]
    for h in spec.generators[1:]:
        g = Fraction(math.gcd(g.numerator * h.denominator, h.numerator * g.denominator),
                     g.denominator * h.denominator)
    return d_z(g)


def parse_semigroup(text: str) -> SemigroupSpec:
    """Parse a semigroup literal: Q, Q+, Z, N, 2Z, 3/2N, gen(2,3), group(gen(2,3))."""
    text = text.strip()
    if text == "Q":
        return Q_ALL
    if text == "Q+":
        return Q_POSITIVE
    if text == "Z":
        return INTEGERS
    if text == "N":
        return NATURALS
    if text.startswith("group(") and text.endswith(")"):
        return group_of(parse_semigroup(text[len("group(") : -1]))
    if text.startswith("gen(") and text.endswith(")"):
        gens = [rat(tok.strip()) for tok in text[len("gen(") : -1].split(",") if tok.strip()]
        return generated(*gens)
    if text.endswith("Z") or text.endswith("N"):
        step = rat(text[:-1])
        if step <= 0:
            raise SpecError(f"semigroup step must be positive: {text!r}")
        return d_z(step) if text.endswith("Z") else d_n(step)
    raise SpecError(f"cannot parse semigroup literal {text!r}")


def membership(spec: SemigroupSpec, x: RationalLike) -> bool:
    return spec.membership(x)


# --- witnesses ----------------------------------------------------------------


@dataclass(frozen=True)
class PRWitness:
    """Outcome of a finite-window regularity question.

    ``verdict`` True means every queried coloring admits a monochromatic
    support; ``bad_coloring`` (value -> color) is the lexicographically least
    countermodel when the verdict is False.
    """

    verdict: bool
    mono_solution: QVector | None = None
    bad_coloring: Mapping[int, int] | None = None

    def to_json(self) -> dict:
        coloring = None
        if self.bad_coloring is not None:
            coloring = [self.bad_coloring[k] for k in sorted(self.bad_coloring)]
        return {
            "verdict": self.verdict,
            "mono_solution": None if self.mono_solution is None else [rat_str(e) for e in self.mono_solution],
            "bad_coloring": coloring,
        }


# --- exhaustive solution listings --------------------------------------------


def kernel_solutions(a: QMatrix, window: int, *, max_vars: int = MAX_KERNEL_VARS,
                     max_window: int = MAX_WINDOW) -> list[QVector]:
    """All x in {1..window}^v with a x = 0, in lexicographic order.

    Backtracking: a row is checked as soon as its last referenced variable is
    assigned, which prunes the bulk of the grid for structured systems.
    """
    if a.cols > max_vars:
        raise SizeError(f"kernel window search capped at {max_vars} variables, got {a.cols}")
    if window > max_window:
        raise SizeError(f"kernel window search capped at window {max_window}, got {window}")
    rows_by_depth: list[list[int]] = [[] for _ in range(a.cols)]
    for i in range(a.rows):
        support = [j for j in range(a.cols) if a.entry(i, j) != 0]
        if support:  # identically-zero rows are always satisfied
            rows_by_depth[max(support)].append(i)

    solutions: list[QVector] = []
    x: list[Fraction] = [Fraction(0)] * a.cols

    def descend(depth: int):
        if depth == a.cols:
            solutions.append(QVector(x))
            return
        for val in range(1, window + 1):
            x[depth] = Fraction(val)
            if all(
                sum((a.entry(i, j) * x[j] for j in range(a.cols)), Fraction(0)) == 0
                for i in rows_by_depth[depth]
            ):
                descend(depth + 1)
        x[depth] = Fraction(0)

    descend(0)
    return solutions


def _image_grid(window: int, denom_cap: int) -> list[Fraction]:
    values = {
        Fraction(p, q)
        for q in range(1, denom_cap + 1)
        for p in range(-window * denom_cap, window * denom_cap + 1)
    }
    values.discard(Fraction(0))  # image witnesses need nonzero coordinates
    return sorted(values)


def image_solutions(a: QMatrix, window: int, denom_cap: int = 1, *,
                    max_vars: int = MAX_IMAGE_VARS,
                    max_window: int = MAX_WINDOW) -> list[tuple[QVector, QVector]]:
    """All grid vectors x (nonzero entries, denominators <= denom_cap) whose
    image lands entirely in {1..window}, paired with that image.

    Pairs come back in lexicographic x order.  Partial assignments are pruned
    by interval bounds on each row's reachable values.
    """
    if a.cols > max_vars:
        raise SizeError(f"image window search capped at {max_vars} variables, got {a.cols}")
    if window > max_window:
        raise SizeError(f"image window search capped at window {max_window}, got {window}")
    if denom_cap < 1:
        raise SizeError(f"denominator cap must be >= 1, got {denom_cap}")
    grid = _image_grid(window, denom_cap)
    if not grid:
        return []
    lo, hi = grid[0], grid[-1]
    # For row i and depth d: extreme values the unassigned tail can add.
    tail_lo = [[Fraction(0)] * (a.cols + 1) for _ in range(a.rows)]
    tail_hi = [[Fraction(0)] * (a.cols + 1) for _ in range(a.rows)]
    for i in range(a.rows):
        for d in range(a.cols - 1, -1, -1):
            coeff = a.entry(i, d)
            options = (coeff * lo, coeff * hi)
            tail_lo[i][d] = tail_lo[i][d + 1] + min(options)
            tail_hi[i][d] = tail_hi[i][d + 1] + max(options)

    results: list[tuple[QVector, QVector]] = []
    x: list[Fraction] = [Fraction(0)] * a.cols
    partial: list[Fraction] = [Fraction(0)] * a.rows

    def feasible(depth: int) -> bool:
        for i in range(a.rows):
            low = partial[i] + tail_lo[i][depth]
            high = partial[i] + tail_hi[i][depth]
            if high < 1 or low > window:
                return False
        return True

    def descend(depth: int):
        if depth == a.cols:
            image = QVector(partial)
            if all(e.denominator == 1 and 1 <= e <= window for e in image):
                results.append((QVector(x), image))
            return
        for val in grid:
            x[depth] = val
            for i in range(a.rows):
                partial[i] += a.entry(i, depth) * val
            if feasible(depth + 1):
                descend(depth + 1)
            for i in range(a.rows):
                partial[i] -= a.entry(i, depth) * val
        x[depth] = Fraction(0)

    descend(0)
    return results


# --- coloring search ----------------------------------------------------------


def _normalize_supports(n: int, supports: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    out = []
    for s in supports:
        fs = frozenset(int(v) for v in s)
        if any(not (1 <= v <= n) for v in fs):
            raise DimensionError(f"support {sorted(fs)} falls outside the window 1..{n}")
        out.append(fs)
    return out


def _search_countermodel(n: int, supports: list[frozenset[int]], colors: int,
                         prefix: tuple[int, ...]) -> list[int] | None:
    """Lexicographically least extension of ``prefix`` that avoids every
    support being monochromatic, or None."""
    if any(not s for s in supports):
        return None  # an empty support is monochromatic under any coloring
    by_depth: list[list[frozenset[int]]] = [[] for _ in range(n + 1)]
    for s in supports:
        by_depth[max(s)].append(s)
    coloring = [0] * (n + 1)  # 1-indexed

    def mono_at(k: int) -> bool:
        for s in by_depth[k]:
            c = coloring[next(iter(s))]
            if all(coloring[v] == c for v in s):
                return True
        return False

    def descend(k: int) -> bool:
        if k > n:
            return True
        for c in range(colors):
            coloring[k] = c
            if not mono_at(k) and descend(k + 1):
                return True
        return False

    for k in range(1, len(prefix) + 1):
        coloring[k] = prefix[k - 1]
        if mono_at(k):
            return None
    if descend(len(prefix) + 1):
        return coloring[1:]
    return None


def window_pr(n: int, supports: Sequence[Iterable[int]], colors: int, *,
              parallel: bool = False) -> PRWitness:
    """Does every ``colors``-coloring of {1..n} leave some support monochromatic?

    Verdict False comes with the lexicographically least countermodel
    coloring.  ``parallel`` splits the coloring space on the first window
    value and searches the parts concurrently; the merge takes the
    lexicographic minimum, so the answer is identical to the serial run.
    """
    if n < 1:
        raise SizeError(f"window must contain at least 1, got {n}")
    if colors < 1:
        raise SizeError(f"need at least one color, got {colors}")
    if colors**n > MAX_COLORING_SPACE:
        raise SizeError(f"coloring space {colors}^{n} exceeds the exhaustive cap")
    norm = _normalize_supports(n, supports)
    if parallel and n > 1:
        with ThreadPoolExecutor(max_workers=min(colors, 8)) as pool:
            parts = list(pool.map(
                lambda c: _search_countermodel(n, norm, colors, (c,)), range(colors)
            ))
        countermodels = [p for p in parts if p is not None]
        best = min(countermodels) if countermodels else None
    else:
        best = _search_countermodel(n, norm, colors, ())
    if best is None:
        return PRWitness(verdict=True)
    return PRWitness(verdict=False, bad_coloring={k + 1: best[k] for k in range(n)})


def find_monochromatic(a: QMatrix, coloring: Mapping[int, int], mode: str = "kernel", *,
                       denom_cap: int = 1, max_vars: int | None = None,
                       max_window: int = MAX_WINDOW) -> QVector | None:
    """Least solution vector whose colored entries are monochromatic.

    ``coloring`` must assign a color to every value in {1..N}; kernel mode
    colors the solution entries themselves, image mode colors the image
    entries and returns the preimage x.
    """
    if not coloring:
        raise DimensionError("coloring is empty")
    n = max(coloring)
    if set(coloring) != set(range(1, n + 1)):
        raise DimensionError("coloring must cover exactly {1..N}")
    if mode == "kernel":
        for x in kernel_solutions(a, n, max_vars=max_vars or MAX_KERNEL_VARS, max_window=max_window):
            if len({coloring[int(e)] for e in x}) == 1:
                return x
        return None
    if mode == "image":
        for x, image in image_solutions(a, n, denom_cap, max_vars=max_vars or MAX_IMAGE_VARS,
                                        max_window=max_window):
            if len({coloring[int(e)] for e in image}) == 1:
                return x
        return None
    raise SpecError(f"mode must be 'kernel' or 'image', got {mode!r}")


def kernel_supports(a: QMatrix, window: int, **caps) -> list[frozenset[int]]:
    """Entry sets of all window kernel solutions (window_pr input, kernel mode)."""
    return [frozenset(int(e) for e in x) for x in kernel_solutions(a, window, **caps)]


def image_supports(a: QMatrix, window: int, denom_cap: int = 1, **caps) -> list[frozenset[int]]:
    """Entry sets of all window images (window_pr input, image mode)."""
    return [frozenset(int(e) for e in img) for _, img in image_solutions(a, window, denom_cap, **caps)]
