"""Exception types raised by the library."""


class GHTreeError(Exception):
    """Base class for every error raised by ghtree."""


class InvalidCutError(GHTreeError, ValueError):
    """A vertex set is empty, the whole vertex set, or names unknown vertices."""


class InvalidPartitionError(GHTreeError, ValueError):
    """Parts handed to a contraction or isolating-cut routine overlap."""


class InvalidQueryError(GHTreeError, ValueError):
    """A flow or tree query names an unknown vertex or repeats s == t."""


class InvalidInputError(GHTreeError, ValueError):
    """Malformed graph, hypergraph, terminal set or parameters."""


class CapacityOverflowError(GHTreeError, OverflowError):
    """A contracted weight no longer fits the 64-bit capacity type."""


class OracleRefusedError(GHTreeError):
    """The instance is larger than the configured oracle cap."""


class RandomizedFailureError(GHTreeError):
    """A randomized subroutine produced an inconsistent answer.

    The seed is kept so the failing run can be replayed.
    """

    def __init__(self, message, seed=None):
        if seed is not None:
            message = f"{message} (seed={seed})"
        super().__init__(message)
        self.seed = seed
