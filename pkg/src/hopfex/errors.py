"""Exception hierarchy for hopfex.

Every error raised on a mathematical or input problem derives from
HopfexError, so callers (and the CLI) can tell our failures apart from
genuine bugs.  Input/parse problems derive from StructureFileError and
map to CLI exit code 2; everything else maps to exit code 1.
"""


class HopfexError(Exception):
    """Base class for all hopfex errors."""


class FieldError(HopfexError):
    """Problems with field specifications or scalar arithmetic."""


class DivisionByZero(FieldError):
    pass


class FieldMismatch(FieldError):
    """Two scalars from different fields met in one operation."""


class NoSuchRoot(FieldError):
    """The field does not contain a primitive root of unity of the order asked for."""


class ReducibleModulus(FieldError):
    """An extension modulus failed its irreducibility check."""


class LinAlgError(HopfexError):
    pass


class NoSolution(LinAlgError):
    """A linear system asked to be solved exactly has no solution."""


class ShapeMismatch(LinAlgError):
    pass


class CoalgebraError(HopfexError):
    pass


class AxiomViolation(CoalgebraError):
    """A coalgebra/bialgebra/Hopf axiom failed an exact check."""


class NonSplitField(CoalgebraError):
    """A simple component of the dual algebra is not a full matrix algebra
    over the base field; analysis needs a field extension supplied by the caller."""


class UnknownSimple(CoalgebraError):
    """A simple-subcoalgebra index is out of range."""


class IncompatibleBase(CoalgebraError):
    """Amalgam inputs do not share the stated base coalgebra."""


class HopfError(HopfexError):
    pass


class IncompatibleExtension(HopfError):
    """Scalar extension target does not contain the current field."""


class NotCosemisimple(HopfError):
    pass


class WitnessNotFound(HopfError):
    """An existence theorem promised a witness the search could not produce."""


class MatrixFormError(HopfexError):
    pass


class NotMultiplicative(MatrixFormError):
    pass


class DiagonalOrderViolated(MatrixFormError):
    """A diagonal block of a block-triangular matrix does not have the stated order."""


class NotInBicomponent(MatrixFormError):
    """Element is not in the bicomponent required by a decomposition."""


class NotDegreeOne(MatrixFormError):
    """Element is outside the first coradical filtration level."""


class ExtensionError(HopfexError):
    pass


class NotInComponent(ExtensionError):
    """Element is not in the graded bicomponent positive part asked for."""


class StructureFileError(HopfexError):
    """Base class for structure-file input problems (CLI exit code 2)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScalarParseError(StructureFileError):
    pass


class IndexOutOfRange(StructureFileError):
    pass


class DuplicateEntry(StructureFileError):
    pass
