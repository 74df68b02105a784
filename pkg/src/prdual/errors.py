"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(ToolkitError):
    """Operands have incompatible shapes."""


class QMatFormatError(ToolkitError):
    """A .qmat document or rational literal is malformed."""


class IndependenceError(ToolkitError):
    """Row constraints were expected to be linearly independent but are not."""


class IndependentRowsError(ToolkitError):
    """A row-dependency extraction was requested on a matrix with independent rows."""


class ShiftError(ToolkitError):
    """A shift vector violates the nonzero requirements of the interleave lift."""


class BadCertificateError(ToolkitError):
    """A columns-condition certificate failed verification."""


class DependencyError(ToolkitError):
    """The block-lift pipeline needs rationally dependent rows."""


class ScaleError(ToolkitError):
    """No integer scaling places the matrix entries inside the target semigroup."""


class KernelError(ToolkitError):
    """A supplied vector is not in the kernel it was claimed to be in."""


class ZeroPatternError(ToolkitError):
    """A sign pattern is identically zero."""


class SizeError(ToolkitError):
    """An exhaustive search was requested beyond its configured caps."""


class SpecError(ToolkitError):
    """A semigroup description is outside the scope of the requested operation."""
