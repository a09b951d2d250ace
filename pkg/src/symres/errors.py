"""Exception hierarchy shared by every module of the package."""


class SymresError(Exception):
    """Base class for all errors raised by symres."""


class InputError(SymresError, ValueError):
    """The caller supplied data that violates an operation's precondition."""


class NotDivisible(SymresError, ArithmeticError):
    """An exact division was requested but no quotient exists in the ring."""


class DivisionByZero(SymresError, ZeroDivisionError):
    """Division by the zero element of a ring."""


class NotReal(InputError):
    """A sign was requested for an element outside the real subring."""


class BothZero(InputError):
    """Both members of a polynomial pair are zero."""


class ZeroDivisor(SymresError, ZeroDivisionError):
    """Symmetric division by the zero polynomial."""


class DegreeOrder(InputError):
    """The divisor has larger degree than the dividend."""


class IndexOutOfRange(SymresError, IndexError):
    """A subresultant index outside -1..d was requested."""


class IrregularBase(InputError):
    """A polynomial expected to be regular (nonzero constant and top terms) is not."""


class IrregularSeed(InputError):
    """The pair handed to the fast algorithm does not start with a regular polynomial."""


class ZeroEdgeCoefficient(InputError):
    """A polynomial needed with nonzero constant and leading terms has a zero one."""


class NoSplitting(InputError):
    """No admissible splitting of the diagonal entry exists in the working ring."""


class BranchMismatch(InputError):
    """Generators were handed to an assembly formula of the other branch."""


class ExactnessViolation(SymresError, ArithmeticError):
    """A division that the theory guarantees to be exact left a remainder.

    This never happens on correct code; it is the tripwire for transcription
    bugs in the recurrence and is never silently downgraded to a fraction.
    """

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = dict(context or {})


class Singular(SymresError, ArithmeticError):
    """The Toeplitz matrix is not invertible; ``witness`` holds the vanishing value."""

    def __init__(self, message: str, witness=0):
        super().__init__(message)
        self.witness = witness


class InternalInconsistency(SymresError, RuntimeError):
    """A state that the theory rules out was reached."""
