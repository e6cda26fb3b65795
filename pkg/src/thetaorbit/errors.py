"""Exception types shared across the package."""


class ThetaOrbitError(Exception):
    """Base class for all package errors."""


class IncompatibleOrder(ThetaOrbitError):
    """Raised when lifting a cyclotomic number to an order not divisible by its own."""


class NotDivisible(ThetaOrbitError):
    """Raised when a series quotient does not exist as a Fourier-Jacobi series.

    Carries the q-order at which the per-row Laurent division left a remainder.
    """

    def __init__(self, q_order):
        super().__init__(f"series division leaves a remainder at q-order {q_order}")
        self.q_order = q_order


class InsufficientPrecision(ThetaOrbitError):
    """Requested comparison or coefficient beyond the guaranteed precision."""


class BadParameter(ThetaOrbitError):
    """Parameters violate a documented precondition."""


class EmptySeries(ThetaOrbitError):
    """Operation requires a nonzero series."""


class Inconsistent(ThetaOrbitError):
    """Linear decomposition has no exact solution (a failed identity, not a bug)."""


class Underdetermined(ThetaOrbitError):
    """Precision too low to separate basis elements in a decomposition."""


class UnknownIdentity(ThetaOrbitError):
    """Identity id not present in the registry."""
