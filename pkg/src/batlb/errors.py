"""Exception types raised across the package."""


class BatlbError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateVariableError(BatlbError):
    """A constraint names the same variable twice."""


class InstanceSyntaxError(BatlbError):
    """Malformed line or header in the instance text format."""


class VariableRangeError(BatlbError):
    """A variable index lies outside [1, n]."""


class DuplicateConstraintError(BatlbError):
    """Two identical canonical constraints in one instance."""


class CountMismatchError(BatlbError):
    """Declared constraint count differs from the number of lines read."""


class TooSmallError(BatlbError):
    """Generator parameter below the smallest meaningful value."""


class TooManyError(BatlbError):
    """More constraints requested than distinct canonical ones exist."""


class TooLargeError(BatlbError):
    """Input exceeds the configured enumeration or solver limit."""


class NegativeParameterError(BatlbError):
    """The above-bound parameter must be a non-negative integer."""


class NotIrreducibleError(BatlbError):
    """Operation requires an instance with no complete triple."""


class CaseWeightMismatchError(BatlbError):
    """A computed pair-case expectation differs from its pinned value."""
