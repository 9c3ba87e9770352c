"""Exception types shared across the package.

The CLI maps these onto its exit codes: InputError and subclasses -> 2,
NotSmoothError -> 3, BadPrimeError -> 4, InternalInvariantError (and any
unexpected exception) -> 5.
"""


class JacobianHodgeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(JacobianHodgeError):
    """Malformed or inconsistent user input."""


class PolynomialSyntaxError(InputError):
    """Polynomial text does not match the input grammar."""


class InhomogeneityError(InputError):
    """Polynomial text mixes terms of two different degrees."""

    def __init__(self, degree_a: int, degree_b: int):
        self.degree_a = degree_a
        self.degree_b = degree_b
        super().__init__(
            f"polynomial is not homogeneous: found terms of degree "
            f"{degree_a} and {degree_b}"
        )


class UnknownVariableError(InputError):
    """A term uses a variable index outside the declared variable range."""


class DegreeMismatchError(InputError):
    """A polynomial has the wrong degree for the requested operation."""


class DimensionMismatchError(InputError):
    """Vector or matrix shapes are incompatible."""


class NotSmoothError(JacobianHodgeError):
    """The hypersurface is singular; Hodge-level operations refuse to run."""


class BadPrimeError(JacobianHodgeError):
    """The chosen prime is unusable (not prime, too small, or rank-dropping)."""


class InternalInvariantError(JacobianHodgeError):
    """A structural identity the implementation guarantees failed to hold."""
