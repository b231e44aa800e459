"""Error handling for GroupRank."""

# Import built-in modules
from enum import Enum, auto
from typing import Any, Dict, List, Optional


class ErrorCode(Enum):
    """Error codes for GroupRank."""

    # General errors
    UNKNOWN_ERROR = auto()
    VALIDATION_ERROR = auto()
    CONFIGURATION_ERROR = auto()

    # File system errors
    FILE_NOT_FOUND = auto()

    # Input errors
    PARSING_ERROR = auto()
    UNSUPPORTED_EXPRESSION = auto()
    INADMISSIBLE_TRIPLE = auto()

    # Oracle errors
    BUDGET_EXCEEDED = auto()
    NOT_PRIME = auto()

    VERIFICATION_FAILED = auto()


class GroupRankError(Exception):
    """Base exception class for GroupRank."""

    def __init__(self, message: str, code: ErrorCode = ErrorCode.UNKNOWN_ERROR):
        """Initialize GroupRankError.

        Args:
            message: Error message
            code: Error code
        """
        self.message = message
        self.code = code
        super().__init__(self.message)

    def __str__(self) -> str:
        """Return string representation of error.

        Returns:
            str: Error message with code
        """
        return f"{self.code.name}: {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """Return the JSON error document for this error."""
        return {"code": self.code.name, "message": self.message}


class ParseError(GroupRankError):
    """Syntax error in a presentation or expression, with its location."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        """Initialize ParseError.

        Args:
            message: What went wrong.
            text: The full input that was being parsed.
            position: 0-based character offset of the offending token.
        """
        self.text = text
        self.position = position
        self.line = text.count("\n", 0, position) + 1
        self.column = position - (text.rfind("\n", 0, position) + 1) + 1
        super().__init__(
            f"{message} at line {self.line}, column {self.column}",
            ErrorCode.PARSING_ERROR,
        )

    def to_dict(self) -> Dict[str, Any]:
        document = super().to_dict()
        document.update(position=self.position, line=self.line, column=self.column)
        return document


class UnsupportedExpressionError(GroupRankError):
    """Expression lies outside the class the co-rank calculus covers."""

    def __init__(self, message: str):
        super().__init__(message, ErrorCode.UNSUPPORTED_EXPRESSION)


class InadmissibleTripleError(GroupRankError):
    """No group realizes the requested (corank, betti, rank) triple."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__(
            "inadmissible triple: " + "; ".join(self.violations),
            ErrorCode.INADMISSIBLE_TRIPLE,
        )

    def to_dict(self) -> Dict[str, Any]:
        document = super().to_dict()
        document["violations"] = list(self.violations)
        return document


class BudgetExceededError(GroupRankError):
    """Homomorphism enumeration would exceed the configured budget."""

    def __init__(self, prime: int, generators: int, budget: int):
        self.prime = prime
        self.generators = generators
        self.budget = budget
        super().__init__(
            f"{prime}^{generators} assignments exceed the enumeration budget of {budget}",
            ErrorCode.BUDGET_EXCEEDED,
        )

    def to_dict(self) -> Dict[str, Any]:
        document = super().to_dict()
        document.update(prime=self.prime, generators=self.generators, budget=self.budget)
        return document


class VerificationError(GroupRankError):
    """Two independent computations of the same invariant disagree."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.details = details or {}
        super().__init__(message, ErrorCode.VERIFICATION_FAILED)
