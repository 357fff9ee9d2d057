"""Exception hierarchy shared by all modules."""


class HeisChainError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(HeisChainError, ValueError):
    """An argument is outside its allowed range."""


class ResourceError(HeisChainError, MemoryError):
    """The requested system size exceeds a memory cap."""


class ConvergenceError(HeisChainError, RuntimeError):
    """The iterative eigensolver ran out of iterations.

    The last residual norm is kept on ``residual``.
    """

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual norm {residual:.3e})")
        self.residual = residual


class StateError(HeisChainError, RuntimeError):
    """Required eigenvectors were not computed."""


class ConsistencyError(HeisChainError, RuntimeError):
    """A symmetry-enforced structure was violated numerically."""


class ValidationError(HeisChainError, ValueError):
    """A density matrix is not physical."""
