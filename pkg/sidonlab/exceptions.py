"""Base Exception Classes"""


class SidonLabException(Exception):
    """Base exception for sidonlab errors"""
    exit_code = 2


class ConfigurationError(SidonLabException):
    """Configuration-related errors"""
    exit_code = 2


# Input and domain validation


class ValidationError(SidonLabException):
    """Validation errors"""
    exit_code = 2


class SetLiteralError(ValidationError):
    """A set literal or witness line could not be parsed"""


class DimMismatch(ValidationError):
    """Operands live in different ambient dimensions"""


class DimensionTooLarge(ValidationError):
    """Dimension outside the supported range of an operation"""


class LongRunRefused(ValidationError):
    """Enumeration would be a multi-day run and was not explicitly allowed"""


class UnsupportedK(ValidationError):
    """Only 2-, 3- and 4-sums are supported"""


class UnsupportedDim(ValidationError):
    """Operation is only defined for a specific dimension"""


class UnknownClass(ValidationError):
    """Unknown weight class tag"""


class OutOfDomain(ValidationError):
    """Argument outside the domain of a bound or classifier"""


class MissingSmax(ValidationError):
    """smax table does not cover a required dimension"""


class NotAMember(ValidationError):
    """Vector expected in the set is missing"""


class ZeroInSet(ValidationError):
    """The zero vector cannot be a check-matrix column"""


class DuplicateColumns(ValidationError):
    """A column appears twice in a check matrix"""


class TooFewColumns(ValidationError):
    """Associated codes need at least t+1 columns"""


class ColumnNotPresent(ValidationError):
    """Column to drop is not in the set"""


class RowNotSet(ValidationError):
    """Column to drop has a zero in the row to drop"""


# Preconditions of the combinatorial operations


class PreconditionError(SidonLabException):
    """Operation precondition does not hold for the given set"""
    exit_code = 2


class NonInvertibleMap(PreconditionError):
    """Linear part of a map is singular"""


class NotSidon(PreconditionError):
    """Set is not Sidon"""


class NotSumFreeSidon(PreconditionError):
    """Set is not sum-free Sidon"""


class ZeroNotMember(PreconditionError):
    """Zero vector is not in the set"""


class InsufficientSpan(PreconditionError):
    """Set does not (affinely) span the ambient space"""


class TooSmall(PreconditionError):
    """Set has too few elements"""


class BasisNotContained(PreconditionError):
    """Set does not contain {0, e_1, ..., e_t}"""


class WeightTooSmall(PreconditionError):
    """Element weight below 2"""


class NotFullRank(PreconditionError):
    """Associated matrix is not a parity check matrix"""


class CollapseToZeroOrDuplicate(PreconditionError):
    """Punctured columns contain zero or a repeated column"""


# Search and internal consistency


class SearchError(SidonLabException):
    """Search exhausted its budget"""
    exit_code = 2


class CapExceeded(SearchError):
    """Covering radius exceeds the BFS cap"""


class ProofChainBroken(SidonLabException):
    """Exact replay of the nonexistence proof did not close"""
    exit_code = 1
