"""Built-in matrix families: arithmetic-progression systems and the 3x2
counterexample construction for proper subsemigroups.

The infinite families are exposed as (generator, truncation) pairs.  Every
identity checked here is row-local, so validating a finite truncation is
faithful evidence for the displayed infinite matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .duality import compress_projector, image_to_kernel, kernel_projector
from .errors import SpecError
from .exactmat import (
    QMatrix,
    QVector,
    mat_vec,
    matrix_to_json,
    rat,
    solve_linear,
    vector_to_json,
)
from .oracle import SemigroupSpec


@dataclass(frozen=True)
class ApFamily:
    """Rows (1, l*d) for l < truncation: images are arithmetic progressions."""

    d: int
    truncation: int

    def __post_init__(self):
        if self.d < 1:
            raise SpecError(f"progression step must be positive, got {self.d}")
        if self.truncation < 1:
            raise SpecError(f"truncation must be at least 1, got {self.truncation}")


def ap_matrix(family: ApFamily) -> QMatrix:
    """The truncation x 2 progression matrix with rows (1, l*d)."""
    return QMatrix.from_rows([[1, l * family.d] for l in range(family.truncation)], cols=2)


def ap_integer_c(d: int, truncation: int) -> QMatrix:
    """Integer-coefficient companion with rows (1 - l*d, -1 + 2*l*d).

    Satisfies A (a, b) = C (2a + b, a + b) for all rationals a, b, which maps
    integer-preimage progressions onto positive-preimage images of C.
    """
    if d < 2:
        raise SpecError(f"integer companion needs step >= 2, got {d}")
    if truncation < 1:
        raise SpecError(f"truncation must be at least 1, got {truncation}")
    return QMatrix.from_rows(
        [[1 - l * d, -1 + 2 * l * d] for l in range(truncation)], cols=2
    )


def ap_projector_pair(d: int, truncation: int) -> tuple[QMatrix, QMatrix]:
    """Dependency matrix B and compressed projector C for the progression family.

    B records r_{l+2} = -(l+1) r_0 + (l+2) r_1 with a -1 diagonal tail; C is
    the two-column compression of the kernel projector of B.  Rational
    preimages are unavoidable on the C side: solving A x = C (1, 2) forces
    x = (1, 1/2).
    """
    if truncation < 3:
        raise SpecError(f"projector pair needs at least 3 rows, got {truncation}")
    a = ap_matrix(ApFamily(d=d, truncation=truncation))
    b = image_to_kernel(a)
    c = compress_projector(kernel_projector(b))
    return b, c


@dataclass(frozen=True)
class NotGReport:
    """Verified obstruction data for a proper subsemigroup/subgroup.

    The 3x2 matrix is image regular over the semigroup, yet the unique
    preimage of the scaled-down target escapes it, so no kernel-side matrix
    can carve out exactly its relevant images.
    """

    branch: str
    d: int
    matrix: QMatrix
    seed: QVector
    image: QVector
    scaled_target: QVector
    witness: QVector
    witness_membership: tuple[bool, ...]
    confirmed: bool

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "d": self.d,
            "matrix": matrix_to_json(self.matrix),
            "seed": vector_to_json(self.seed),
            "image": vector_to_json(self.image),
            "scaled_target": vector_to_json(self.scaled_target),
            "witness": vector_to_json(self.witness),
            "witness_membership": list(self.witness_membership),
            "confirmed": self.confirmed,
        }


def check_notg(spec: SemigroupSpec) -> NotGReport:
    """Mechanize the duality obstruction for a proper subsemigroup of Q+ or
    proper subgroup of Q.

    Branch one (1 not in S): A = [[d,0],[0,d],[d,d]] with d the least positive
    integer of S; the image of (d, d) scales down by 1/d to a target whose
    unique preimage is (1, 1), outside S.  Branch two (1 in S): pick least d
    with 1/d outside S and A = [[0,1],[d,1],[d,2]]; the scaled target (1,2,3)
    forces the preimage (1/d, 1).  All steps are re-verified exactly.
    """
    if spec.kind in ("Q", "Q+"):
        raise SpecError(f"{spec} is not a proper subsemigroup of Q+ or proper subgroup of Q")
    if spec.membership(1):
        d = _least_missing_reciprocal(spec)
        branch = "one_in_s"
        a = QMatrix.from_rows([[0, 1], [d, 1], [d, 2]], cols=2)
        seed = QVector([1, d])
        scaled_target = QVector([1, 2, 3])
    else:
        d = spec.min_positive_integer()
        branch = "one_not_in_s"
        a = QMatrix.from_rows([[d, 0], [0, d], [d, d]], cols=2)
        seed = QVector([d, d])
        scaled_target = QVector([d, d, 2 * d])

    image = mat_vec(a, seed)
    # the image must be the d-fold dilate of the scaled target
    scaling_consistent = image == scaled_target.scale(d)
    witness = solve_linear(a, scaled_target)
    assert witness is not None  # the target was built as a scaled image
    back_check = mat_vec(a, witness) == scaled_target
    witness_membership = tuple(spec.membership(e) for e in witness)
    confirmed = scaling_consistent and back_check and not all(witness_membership)
    return NotGReport(
        branch=branch,
        d=d,
        matrix=a,
        seed=seed,
        image=image,
        scaled_target=scaled_target,
        witness=witness,
        witness_membership=witness_membership,
        confirmed=confirmed,
    )


def _least_missing_reciprocal(spec: SemigroupSpec, limit: int = 10**6) -> int:
    for d in range(1, limit + 1):
        if not spec.membership(Fraction(1, d)):
            return d
    raise SpecError(f"no missing reciprocal found in 1..{limit}; is {spec} proper?")


@dataclass(frozen=True)
class KclInstance:
    """Certified witness data for the two-column recovery relations.

    ``c`` is a truncated omega x 2 matrix; the claimed identities are
    k = d*x0*x1*(m - n) with k nonzero, and for every row l:
    k*c[l,0] = p*d*x1*(l - n)  and  k*c[l,1] = p*d*x0*(m - l).
    """

    d: int
    p: int
    x0: Fraction
    x1: Fraction
    m: int
    n: int
    k: Fraction
    c: QMatrix

    def __init__(self, d, p, x0, x1, m, n, k, c: QMatrix):
        x0, x1, k = rat(x0), rat(x1), rat(k)
        if d < 1 or p < 1:
            raise SpecError(f"d and p must be positive, got d={d}, p={p}")
        if x0 == 0 or x1 == 0:
            raise SpecError("x0 and x1 must be nonzero")
        if m == n:
            raise SpecError("m and n must be distinct (k would vanish)")
        if m < 0 or n < 0:
            raise SpecError("m and n must be naturals")
        if k == 0:
            raise SpecError("k must be nonzero")
        if c.cols != 2:
            raise SpecError(f"truncated matrix must have 2 columns, got {c.cols}")
        for name, value in (("d", d), ("p", p), ("x0", x0), ("x1", x1),
                            ("m", m), ("n", n), ("k", k), ("c", c)):
            object.__setattr__(self, name, value)


def verify_kcl(inst: KclInstance) -> bool:
    """Check the recovery relations on every row of the truncated matrix."""
    if inst.k != inst.d * inst.x0 * inst.x1 * (inst.m - inst.n):
        return False
    pd = Fraction(inst.p * inst.d)
    for l in range(inst.c.rows):
        if inst.k * inst.c.entry(l, 0) != pd * inst.x1 * (l - inst.n):
            return False
        if inst.k * inst.c.entry(l, 1) != pd * inst.x0 * (inst.m - l):
            return False
    return True
