"""Interactive configuration over regular string constraints.

Variables hold strings over a finite alphabet; constraints are boolean
combinations of regular-expression memberships.  A compiled problem
answers, after every appended letter, exactly which further letters and
completions keep all constraints satisfiable.
"""

from .alphabet import EOL, Alphabet
from .dfa import Dfa, compile_dfa, dfa_language_equivalent, minimize_dfa
from .dfa_regex import EMPTY_LANGUAGE, dfa_to_regex
from .engine import Session, build
from .errors import (
    AlphabetMismatch,
    BudgetExceeded,
    CompletionDisabled,
    FormulaSyntaxError,
    InfeasibleProblem,
    InvalidAppend,
    InvalidProblem,
    LetterOutsideAlphabet,
    NothingToUndo,
    RegexSyntaxError,
    RexconfError,
    StateBudgetExceeded,
    UnknownVariable,
    VariableCompleted,
)
from .formulas import parse_formula
from .mdfa import AcceptanceValue, Mdfa, construct_mdfa, minimize_mdfa
from .problem import Problem, load_problem, make_problem, problem_from_json
from .reach import compute_reachable_acceptance_values
from .rx import parse_regex, render_regex

__version__ = "0.1.0"

__all__ = [
    "EOL",
    "EMPTY_LANGUAGE",
    "AcceptanceValue",
    "Alphabet",
    "AlphabetMismatch",
    "BudgetExceeded",
    "CompletionDisabled",
    "Dfa",
    "FormulaSyntaxError",
    "InfeasibleProblem",
    "InvalidAppend",
    "InvalidProblem",
    "LetterOutsideAlphabet",
    "Mdfa",
    "NothingToUndo",
    "Problem",
    "RegexSyntaxError",
    "RexconfError",
    "Session",
    "StateBudgetExceeded",
    "UnknownVariable",
    "VariableCompleted",
    "build",
    "compile_dfa",
    "compute_reachable_acceptance_values",
    "construct_mdfa",
    "dfa_language_equivalent",
    "dfa_to_regex",
    "load_problem",
    "make_problem",
    "minimize_dfa",
    "minimize_mdfa",
    "parse_formula",
    "parse_regex",
    "problem_from_json",
    "render_regex",
]
