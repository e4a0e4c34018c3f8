"""Exception types shared across the package."""


class VirialAnsatzError(Exception):
    """Base class for all package-specific errors."""


class NotSymmetric(VirialAnsatzError):
    """Potential is not symmetric about its declared minimum."""


class NotConvex(VirialAnsatzError):
    """Potential has an interval of negative curvature."""


class DegeneratePotential(VirialAnsatzError):
    """Potential is identically zero (all coefficients vanish)."""


class AlreadyShifted(VirialAnsatzError):
    """translate() applied to a spec that already carries a shift."""


class NoConvergence(VirialAnsatzError):
    """An iterative numerical procedure exhausted its budget."""


class NonFiniteIntegrand(VirialAnsatzError):
    """Integrand returned NaN or infinity."""


class DomainError(VirialAnsatzError):
    """Argument outside the mathematical domain of a special function."""


class IllConditioned(VirialAnsatzError):
    """Orthogonalization residual too small to normalize reliably."""


class OrderOutOfRange(VirialAnsatzError):
    """Requested polynomial or level order exceeds what was built."""


class DomainTooSmall(VirialAnsatzError):
    """Solver box too small: top eigenfunction leaks into the outer region."""


class EigensolveFailure(VirialAnsatzError):
    """The underlying eigenvalue routine failed."""
