"""Exception types raised across the package."""


class QLithoError(Exception):
    """Base class for all package errors."""


class EmptyState(QLithoError, ValueError):
    """A state would have no nonzero amplitude left."""


class CapExceeded(QLithoError, ValueError):
    """A photon-number pair exceeds ``MAX_TOTAL``."""


class ParseError(QLithoError, ValueError):
    """A state file does not match the JSON schema."""


class DuplicateTerm(ParseError):
    """A state file lists the same (nc, nd) pair twice."""


class CutoffTooSmall(QLithoError, ValueError):
    """State support lies outside the dense truncated basis."""


class BadGrid(QLithoError, ValueError):
    """A phase grid is not uniform or not a power of two."""


class NonPositiveInput(QLithoError, ValueError):
    """A physical quantity that must be strictly positive is not."""


class ConsistencyError(QLithoError, ArithmeticError):
    """An internal numerical invariant was violated."""
