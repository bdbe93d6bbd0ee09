"""Shared error types."""


class KnError(Exception):
    """Base class for all package-specific errors."""


class NotInAlgebra(KnError):
    """A density has poles outside the puncture set, so it has no expansion."""


class ClosureViolation(KnError):
    """A selected sub-lattice is not closed under the product; carries a witness."""

    def __init__(self, left, right, result):
        self.left, self.right, self.result = left, right, result
        super().__init__(f"product {left} * {right} = {result} leaves the sublattice")


class WindowExceeded(KnError):
    """A computation needs symbols outside the finite window; enlarge it."""


class NotLARep(KnError):
    """A Jordan representation fails the even-commuting condition."""


class UnknownFamily(KnError):
    """A basis key does not belong to the algebra's declared families."""


class ZeroSeed(KnError):
    """The simplicity witness generator needs a nonzero seed."""


class Unsupported(KnError):
    """The operation is outside the implemented (and proved) parameter range."""
