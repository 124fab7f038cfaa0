"""Exception hierarchy shared by all verification modules."""


class LiouvilleLabError(Exception):
    """Base class for all package-specific errors."""


class ArgumentError(LiouvilleLabError, ValueError):
    """A caller-supplied argument violates a documented precondition."""


class HullDomainError(LiouvilleLabError):
    """A sampled weight or symbol was queried outside its sampled hull."""


class QuadratureError(LiouvilleLabError):
    """An adaptive quadrature failed to reach the requested tolerance."""


class DivergentWeightError(LiouvilleLabError):
    """An operation requiring summable log-growth met a divergent weight."""


class KernelPreconditionError(LiouvilleLabError):
    """A Liouville-type check was invoked on a non-kernel function."""


class HypothesisViolationError(LiouvilleLabError):
    """The input configuration falls outside the verified theorem's scope."""


class UnsupportedCombinationError(LiouvilleLabError):
    """The requested operand combination has no exact evaluation path."""


class ConstructionError(LiouvilleLabError):
    """A counterexample ingredient violates its structural invariants."""
