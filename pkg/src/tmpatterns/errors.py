"""Exception hierarchy shared by every module of the package."""


class TMError(Exception):
    """Base class for all errors raised by tmpatterns."""


class EmptyWordError(TMError, ValueError):
    pass


class AlphabetMismatchError(TMError, ValueError):
    pass


class OutOfRangeError(TMError, ValueError):
    pass


class NotASegmentError(TMError, ValueError):
    pass


class InternalConsistencyError(TMError, RuntimeError):
    """A structural property of the Thue-Morse word was observed to fail.

    Raised instead of silently filtering, since it can only mean a bug in
    the implementation (or a counterexample to a known theorem).
    """
