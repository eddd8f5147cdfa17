"""Exception types shared across the package."""


class GdecompError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GdecompError):
    """Malformed matrix/operator text: bad rational, bad shape, bad JSON."""


class AsymmetricInputError(GdecompError):
    """Matrix input is not square or not symmetric."""


class NegativeEntryError(GdecompError):
    """Matrix input has a negative entry."""


class InvalidIndexSetError(GdecompError):
    """Index set outside {1, ..., m}, or empty where a nonempty set is required."""


class InvalidPartitionError(GdecompError):
    """Placement sets do not partition {1, ..., m} with the right block sizes."""


class OrderMismatchError(GdecompError):
    """Operands have different orders."""


class LengthMismatchError(GdecompError):
    """Vectors have different lengths."""


class NotMemberError(GdecompError):
    """A required polytope membership precondition failed.

    `certificate` (when set) is an IndexSet whose principal sum exceeds its
    cardinality; `reason` distinguishes a total-sum mismatch for the
    saturated polytope, where no violating subset exists.
    """

    def __init__(self, message, certificate=None, reason=None):
        super().__init__(message)
        self.certificate = certificate
        self.reason = reason


class NotExtremeError(GdecompError):
    """Operation requires an extreme point and the input is not one."""


class IsExtremeError(GdecompError):
    """Operation requires a non-extreme point and the input is extreme."""


class CapExceededError(GdecompError):
    """Order exceeds the cap of an exhaustive (2^m-subset) operation."""


class NotOnGridError(GdecompError):
    """Matrix entries are not on the {0, 1/2, 1} grid required here."""


class NotStochasticError(GdecompError):
    """Quadratic operator fails the stochasticity check required here."""


class DiagonalOverflowError(GdecompError):
    """A diagonal entry exceeds 1, so no flow network can be built."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class InternalInvariantViolation(GdecompError):
    """A state the underlying theory rules out was observed; this is a bug
    in the library or a broken precondition that slipped past validation."""
