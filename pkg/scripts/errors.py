"""
Error hierarchy for the algebra engine.

Every failure raised by the engine derives from AlgebraError, so callers
(the CLI in particular) can map errors to exit codes and JSON reports with
a single except clause.
"""

from typing import Any, Dict, Optional

from observability import get_run_id


class AlgebraError(Exception):
    """
    Base engine error.

    All custom exceptions should inherit from this class.
    """

    code = "ALGEBRA_ERROR"
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize engine error.

        Args:
            message: Human-readable error message
            details: Optional additional error details
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert error to dictionary for JSON reports.

        Returns:
            Dictionary with error information
        """
        return {
            "success": False,
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
                "run_id": get_run_id() or "none",
            }
        }


class DimensionMismatchError(AlgebraError):
    """Operands live on different n (or different carriers)."""
    code = "DIMENSION_MISMATCH"

    def __init__(self, left: int, right: int, what: str = "n"):
        super().__init__(
            f"Mismatched {what}: {left} != {right}",
            details={"left": left, "right": right, "what": what}
        )


class IndexRangeError(AlgebraError):
    """Generator index outside its admissible range."""
    code = "INDEX_OUT_OF_RANGE"


class InvalidPartitionError(AlgebraError):
    """Blocks do not form a set partition."""
    code = "INVALID_PARTITION"


class InvalidPermutationError(AlgebraError):
    """Image list is not a bijection."""
    code = "INVALID_PERMUTATION"


class BoundExceededError(AlgebraError):
    """Requested size exceeds a configured enumeration bound."""
    code = "BOUND_EXCEEDED"

    def __init__(self, what: str, value: int, bound: int):
        super().__init__(
            f"{what} = {value} exceeds configured bound {bound}",
            details={"what": what, "value": value, "bound": bound}
        )


class ClosureCapError(AlgebraError):
    """Closure enumeration produced more elements than allowed."""
    code = "CLOSURE_CAP_EXCEEDED"


class IterationCapError(AlgebraError):
    """Ideal closure did not reach a fixed point within the iteration cap."""
    code = "ITERATION_CAP_EXCEEDED"


class ScalarDivisionError(AlgebraError):
    """Division by the zero scalar."""
    code = "DIVISION_BY_ZERO"


class VanishingDenominatorError(AlgebraError):
    """A denominator evaluates to zero at the chosen specialization."""
    code = "VANISHING_DENOMINATOR"


class ResampleExhaustedError(AlgebraError):
    """All resampling attempts for a specialization failed."""
    code = "RESAMPLE_EXHAUSTED"


class NonUniformDiagramError(AlgebraError):
    """Diagram has a block with unequal top and bottom counts."""
    code = "NON_UNIFORM_DIAGRAM"


class ParseError(AlgebraError):
    """Malformed text form of a scalar, partition, permutation or word."""
    code = "PARSE_ERROR"
    exit_code = 2


class LongRunRefusedError(AlgebraError):
    """A long computation was requested without --allow-long."""
    code = "LONG_RUN_REFUSED"
    exit_code = 2
