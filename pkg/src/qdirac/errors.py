"""Exception types shared across the package."""


class QDiracError(Exception):
    """Base class for all package errors."""


class PoleError(QDiracError, ZeroDivisionError):
    """Numeric specialization hit a vanishing denominator."""


class IndexOutOfRange(QDiracError, IndexError):
    """Variable or generator index outside 1..n."""


class DimensionMismatch(QDiracError, ValueError):
    """Operands live in ambient spaces of different dimension."""


class DeformationMismatch(QDiracError, ValueError):
    """Clifford operands carry different deformation signs."""


class NotHomogeneous(QDiracError, ValueError):
    """A homogeneous polynomial was required."""


class DegreeMismatch(QDiracError, ValueError):
    """Degrees of paired polynomials disagree."""


class NotHarmonic(QDiracError, ValueError):
    """Input to a harmonic recursion step is not in the Laplacian kernel."""


class DegenerateBracket(QDiracError, ZeroDivisionError):
    """The q-bracket in a recursion denominator vanishes identically."""


class DegreeShiftMismatch(QDiracError, ValueError):
    """Operator summands or compared operators shift degree differently."""


class SingularSystem(QDiracError, ValueError):
    """An exact linear system expected to be uniquely solvable is not."""


class UnknownRelationName(QDiracError, KeyError):
    """Requested relation is not in the built-in suite."""


class ExprSyntaxError(QDiracError, ValueError):
    """Parse failure, carrying position and the expected token set."""

    def __init__(self, message, line, column, expected=()):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
        self.expected = tuple(expected)


class LoweringError(QDiracError, TypeError):
    """Expression tree does not lower to a single well-typed value."""
