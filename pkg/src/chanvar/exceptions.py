"""Exception types raised by validation gates throughout the package."""


class NotHermitianError(ValueError):
    """A matrix required to be Hermitian failed the tolerance gate."""


class NotPositiveError(ValueError):
    """A matrix required to be positive semidefinite has a negative eigenvalue."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NotUnitaryError(ValueError):
    """A matrix required to be unitary failed the tolerance gate."""


class NotTracePreservingError(ValueError):
    """A Kraus collection does not satisfy the completeness relation."""


class NotUnitalError(ValueError):
    """An operation requiring a unital channel received a non-unital one."""
