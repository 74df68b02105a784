"""prdual: exact-arithmetic toolkit for kernel/image partition regularity.

Construct the dual of a system (kernel projector of B, dependency matrix of
A), decide the columns condition with verifiable certificates, lift systems
into kernel-regular block matrices, and cross-check everything against
brute-force finite-window coloring oracles.
"""

from .errors import (
    BadCertificateError,
    DependencyError,
    DimensionError,
    IndependenceError,
    IndependentRowsError,
    KernelError,
    QMatFormatError,
    ScaleError,
    ShiftError,
    SizeError,
    SpecError,
    ToolkitError,
    ZeroPatternError,
)
from .exactmat import (
    QMatrix,
    QVector,
    Rational,
    det,
    format_qmat,
    kernel_basis,
    mat_mul,
    mat_vec,
    parse_qmat,
    rank,
    rat,
    rat_str,
    read_qmat,
    rref,
    solve_linear,
    solve_row_constraints,
    write_qmat,
)
from .duality import (
    DependencyResult,
    ProjectorResult,
    compress_projector,
    image_to_kernel,
    interleave,
    interleave_pull,
    interleave_push,
    ipr_projector,
    kernel_projector,
    row_dependency,
)
from .rado import (
    ColumnsCertificate,
    MpcParams,
    columns_condition,
    mpc_matrix,
    mpc_row_count,
    verify_cc_certificate,
)
from .oracle import (
    INTEGERS,
    NATURALS,
    PRWitness,
    Q_ALL,
    Q_POSITIVE,
    SemigroupSpec,
    d_n,
    d_z,
    find_monochromatic,
    generated,
    group_of,
    image_solutions,
    image_supports,
    kernel_solutions,
    kernel_supports,
    membership,
    parse_semigroup,
    window_pr,
)
from .transfer import (
    DeuberBlock,
    SignPattern,
    TransferMeta,
    deuber_block,
    imgcontained_build,
    imgcontained_recover,
    sign_adapter,
)
from .families import (
    ApFamily,
    KclInstance,
    NotGReport,
    ap_integer_c,
    ap_matrix,
    ap_projector_pair,
    check_notg,
    verify_kcl,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
