"""Exception types shared across the package."""


class RexconfError(Exception):
    """Base class for all package-specific errors."""


class RegexSyntaxError(RexconfError, ValueError):
    """Raised when a regular expression fails to parse.

    ``pos`` is the 0-based offset of the offending character (or end of
    input) and ``expected`` describes what the parser was looking for.
    """

    def __init__(self, message: str, pos: int, expected: str):
        super().__init__(f"{message} at position {pos} (expected {expected})")
        self.pos = pos
        self.expected = expected


class LetterOutsideAlphabet(RexconfError, ValueError):
    """Raised when a letter is not part of the (effective) alphabet."""

    def __init__(self, letter: str, context: str = ""):
        suffix = f" in {context}" if context else ""
        super().__init__(f"letter {letter!r} outside alphabet{suffix}")
        self.letter = letter


class AlphabetMismatch(RexconfError, ValueError):
    """Raised when automata over different alphabets are combined."""


class FormulaSyntaxError(RexconfError, ValueError):
    """Raised when a constraint formula fails to parse."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class InvalidProblem(RexconfError, ValueError):
    """Raised when a problem description is malformed."""


class InfeasibleProblem(RexconfError):
    """Raised by build when the constraint set has no solution at all."""

    def __init__(self):
        super().__init__("No feasible solutions")


class InvalidAppend(RexconfError):
    """Raised when an append would make the configuration unsatisfiable."""

    def __init__(self):
        super().__init__("invalid append")


class VariableCompleted(RexconfError):
    """Raised when a completed variable is mutated again."""


class CompletionDisabled(RexconfError):
    """Raised by complete() on a problem without end-of-line support."""


class NothingToUndo(RexconfError):
    """Raised by undo() when the session has no recorded steps."""


class UnknownVariable(RexconfError, KeyError):
    """Raised when a variable name is not part of the problem."""

    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class StateBudgetExceeded(RexconfError):
    """Raised when the monolithic product automaton grows past its budget."""


class BudgetExceeded(RexconfError):
    """Raised when brute-force solution enumeration grows past its budget."""
