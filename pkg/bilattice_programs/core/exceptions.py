from typing import Optional, Sequence, Any


class BilatticeProgramsError(Exception):
    """Base exception for bilattice_programs."""
    pass


class BilatticeError(BilatticeProgramsError):
    """Raised when a value does not belong to the bilattice it is used with."""
    pass


class UnsupportedOperationError(BilatticeError):
    """Raised when negation or conflation is not available on a bilattice."""
    pass


class ConfigurationError(BilatticeProgramsError):
    """Raised when there is a configuration issue."""
    pass


class ProgramSyntaxError(BilatticeProgramsError):
    """Raised when program or hypothesis text cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class FunctionSymbolError(ProgramSyntaxError):
    """Raised when a term uses a function symbol."""
    pass


class GroundingError(BilatticeProgramsError):
    """Raised when a program cannot be instantiated over its constants."""
    pass


class InterpretationError(BilatticeProgramsError):
    """Raised when interpretations or formulas do not fit together."""
    pass


class FragmentError(BilatticeProgramsError):
    """Raised when a program lies outside the Datalog with negation fragment."""
    pass


class ConvergenceError(BilatticeProgramsError):
    """Raised when a fixpoint iteration hits its cap."""

    def __init__(self, message: str, stages: Sequence[Any] = ()):
        self.stages = list(stages)
        super().__init__(message)


class ConsistencyError(BilatticeProgramsError):
    """Raised when a partial interpretation holds both A and not A."""
    pass


class InputError(BilatticeProgramsError):
    """Raised when an input file cannot be read."""
    pass
