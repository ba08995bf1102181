"""Problem descriptions.

A problem is a finite alphabet, an ordered list of string variables and a
list of constraint formulas over match atoms.  The atom table derived here
fixes the boolean-variable layout used everywhere else: atoms are numbered
per variable in first-occurrence order (scanning the constraints top to
bottom, left to right, duplicates collapsing onto one atom), and ordinals
are block-contiguous — variable i's atoms occupy the ordinals directly
after variable i-1's.

Problem files are JSON:

    {"alphabet": ["a", "b"], "eol": false,
     "variables": ["x1", "x2"],
     "constraints": ["match(x1,\"ab\") || match(x2,\"a\")"]}
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .alphabet import Alphabet
from .bdd import BooleanVar
from .dfa import Dfa, compile_dfa
from .errors import InvalidProblem, UnknownVariable
from .formulas import Formula, formula_atoms, parse_formula
from .rx import RegexAst, parse_regex


@dataclass(frozen=True)
class Problem:
    variables: tuple[str, ...]
    alphabet: Alphabet
    constraints: tuple[str, ...]
    formulas: tuple[Formula, ...] = field(compare=False)
    atoms: tuple[tuple[str, ...], ...] = field(compare=False)  # patterns per variable
    atom_asts: tuple[tuple[RegexAst, ...], ...] = field(compare=False, repr=False)

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def k(self, i: int) -> int:
        return len(self.atoms[i])

    def base_ordinal(self, i: int) -> int:
        return sum(len(self.atoms[j]) for j in range(i))

    @property
    def n_bool_vars(self) -> int:
        return sum(len(a) for a in self.atoms)

    def boolean_vars(self) -> list[BooleanVar]:
        out = []
        ordinal = 0
        for i, patterns in enumerate(self.atoms):
            for j in range(len(patterns)):
                out.append(BooleanVar(i, j, ordinal))
                ordinal += 1
        return out

    def atom_ordinals(self) -> dict[tuple[str, str], int]:
        """(variable name, pattern) -> boolean variable ordinal."""
        out = {}
        ordinal = 0
        for i, patterns in enumerate(self.atoms):
            for pattern in patterns:
                out[(self.variables[i], pattern)] = ordinal
                ordinal += 1
        return out

    def compile_atoms(self, i: int) -> list[Dfa]:
        return [compile_dfa(ast, self.alphabet) for ast in self.atom_asts[i]]

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet.letters),
            "eol": self.alphabet.eol,
            "variables": list(self.variables),
            "constraints": list(self.constraints),
        }

    def stable_hash(self) -> str:
        text = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def make_problem(variables, alphabet: Alphabet, constraints) -> Problem:
    variables = tuple(variables)
    constraints = tuple(constraints)
    if not variables:
        raise InvalidProblem("a problem needs at least one variable")
    if len(set(variables)) != len(variables):
        raise InvalidProblem("duplicate variable names")
    formulas = tuple(parse_formula(text) for text in constraints)

    names = set(variables)
    per_var: list[list[str]] = [[] for _ in variables]
    seen: set[tuple[str, str]] = set()
    for f in formulas:
        for atom in formula_atoms(f):
            if atom.var not in names:
                raise InvalidProblem(f"constraint mentions unknown variable {atom.var!r}")
            key = (atom.var, atom.pattern)
            if key not in seen:
                seen.add(key)
                per_var[variables.index(atom.var)].append(atom.pattern)
    atom_asts = tuple(
        tuple(parse_regex(pattern, alphabet) for pattern in patterns)
        for patterns in per_var
    )
    return Problem(
        variables=variables,
        alphabet=alphabet,
        constraints=constraints,
        formulas=formulas,
        atoms=tuple(tuple(p) for p in per_var),
        atom_asts=atom_asts,
    )


def problem_from_json(data) -> Problem:
    if not isinstance(data, dict):
        raise InvalidProblem("problem must be a JSON object")
    for key in ("alphabet", "variables", "constraints"):
        if key not in data:
            raise InvalidProblem(f"missing field {key!r}")
    letters = data["alphabet"]
    if not isinstance(letters, list) or not all(isinstance(x, str) for x in letters):
        raise InvalidProblem("alphabet must be a list of strings")
    eol = data.get("eol", False)
    if not isinstance(eol, bool):
        raise InvalidProblem("eol must be a boolean")
    variables = data["variables"]
    if not isinstance(variables, list) or not all(isinstance(x, str) for x in variables):
        raise InvalidProblem("variables must be a list of strings")
    constraints = data["constraints"]
    if not isinstance(constraints, list) or not all(isinstance(x, str) for x in constraints):
        raise InvalidProblem("constraints must be a list of strings")
    alphabet = Alphabet(tuple(letters), eol)
    return make_problem(variables, alphabet, constraints)


def load_problem(path: str) -> Problem:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InvalidProblem(f"not valid JSON: {exc}") from exc
    return problem_from_json(data)
