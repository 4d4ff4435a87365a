"""Exception hierarchy for sector_verify."""


class SectorVerifyError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(SectorVerifyError, ValueError):
    """Operands are not square or their shapes do not agree."""


class RangeError(SectorVerifyError, ValueError):
    """A scalar parameter lies outside its admissible range."""


class NumericalError(SectorVerifyError, ArithmeticError):
    """An eigen/singular value solver failed or returned non-finite output."""


class SingularMatrixError(NumericalError):
    """Inversion requested for a (numerically) singular or ill-conditioned matrix."""


class SpectrumOnCutError(NumericalError):
    """Some eigenvalue lies on, or too close to, the branch cut (-inf, 0]."""


class IllConditionedEigenbasisError(NumericalError):
    """The eigenvector matrix is too ill-conditioned for a diagonalization-based
    functional calculus."""


class NotHermitianError(SectorVerifyError, ValueError):
    """Input expected Hermitian is not, even within tolerance."""


class NotSectorialError(SectorVerifyError, ValueError):
    """The sector angle is undefined because Re(A) is not positive definite."""


class GenerationFailedError(SectorVerifyError, RuntimeError):
    """A random instance generator exhausted its rejection budget."""


class HypothesisViolation(SectorVerifyError):
    """An instance handed to a claim evaluator does not satisfy the claim's
    hypotheses. This indicates a generator bug, not a counterexample."""
