"""Constraint formulas over regular-membership atoms.

Concrete syntax (whitespace between tokens is insignificant):

    f := f "||" f  |  f "&&" f  |  "!" f  |  f "->" f  |  f "<->" f
       | "(" f ")" |  match(IDENT, STRING)

Precedence, tightest first: ``!``, ``&&``, ``||``, ``->`` (right
associative), ``<->``.  STRING is double-quoted; ``\\"`` denotes a literal
quote and every other backslash sequence is kept verbatim, so regex escapes
are written exactly as the regex grammar expects them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormulaSyntaxError


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class FMatch(Formula):
    var: str
    pattern: str


@dataclass(frozen=True)
class FNot(Formula):
    inner: Formula


@dataclass(frozen=True)
class FAnd(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class FOr(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class FImp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class FIff(Formula):
    left: Formula
    right: Formula


_TOKEN = re.compile(r"\s*(<->|->|\|\||&&|!|\(|\)|,|[A-Za-z_][A-Za-z_0-9]*|\")")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.token: str | None = None
        self.token_pos = 0
        self.advance()

    def advance(self) -> None:
        if self.pos >= len(self.text):
            self.token = None
            self.token_pos = self.pos
            return
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            stripped = self.text[self.pos:].lstrip()
            at = len(self.text) - len(stripped)
            if not stripped:
                self.token = None
                self.token_pos = at
                return
            raise FormulaSyntaxError(f"unexpected character {stripped[0]!r}", at)
        self.token_pos = m.start(1)
        tok = m.group(1)
        if tok == '"':
            chars = []
            i = m.end(1)
            while i < len(self.text) and self.text[i] != '"':
                if self.text[i] == "\\" and i + 1 < len(self.text):
                    nxt = self.text[i + 1]
                    if nxt == '"':
                        chars.append('"')
                    else:
                        chars.append(self.text[i])
                        chars.append(nxt)
                    i += 2
                else:
                    chars.append(self.text[i])
                    i += 1
            if i >= len(self.text):
                raise FormulaSyntaxError("unterminated string literal", m.start(1))
            self.token = ("STRING", "".join(chars))
            self.pos = i + 1
        else:
            self.token = tok
            self.pos = m.end(1)


class _FormulaParser:
    def __init__(self, text: str):
        self.lx = _Lexer(text)

    def error(self, expected: str) -> FormulaSyntaxError:
        tok = self.lx.token
        got = "end of input" if tok is None else repr(tok if isinstance(tok, str) else tok[1])
        return FormulaSyntaxError(f"expected {expected}, got {got}", self.lx.token_pos)

    def eat(self, expected: str) -> None:
        if self.lx.token != expected:
            raise self.error(repr(expected))
        self.lx.advance()

    def parse(self) -> Formula:
        node = self.iff()
        if self.lx.token is not None:
            raise self.error("end of input")
        return node

    def iff(self) -> Formula:
        node = self.imp()
        while self.lx.token == "<->":
            self.lx.advance()
            node = FIff(node, self.imp())
        return node

    def imp(self) -> Formula:
        node = self.disj()
        if self.lx.token == "->":
            self.lx.advance()
            return FImp(node, self.imp())
        return node

    def disj(self) -> Formula:
        node = self.conj()
        while self.lx.token == "||":
            self.lx.advance()
            node = FOr(node, self.conj())
        return node

    def conj(self) -> Formula:
        node = self.unary()
        while self.lx.token == "&&":
            self.lx.advance()
            node = FAnd(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.lx.token == "!":
            self.lx.advance()
            return FNot(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.lx.token
        if tok == "(":
            self.lx.advance()
            node = self.iff()
            self.eat(")")
            return node
        if tok == "match":
            self.lx.advance()
            self.eat("(")
            name = self.lx.token
            if not isinstance(name, str) or not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise self.error("a variable name")
            self.lx.advance()
            self.eat(",")
            stok = self.lx.token
            if not isinstance(stok, tuple):
                raise self.error("a quoted pattern")
            self.lx.advance()
            self.eat(")")
            return FMatch(name, stok[1])
        raise self.error("a formula")


def parse_formula(text: str) -> Formula:
    return _FormulaParser(text).parse()


def formula_atoms(f: Formula):
    """Match atoms in syntactic (left-to-right) order, duplicates included."""
    if isinstance(f, FMatch):
        yield f
    elif isinstance(f, FNot):
        yield from formula_atoms(f.inner)
    elif isinstance(f, (FAnd, FOr, FImp, FIff)):
        yield from formula_atoms(f.left)
        yield from formula_atoms(f.right)
    else:
        raise TypeError(f"not a formula node: {f!r}")


def eval_formula(f: Formula, atom_truth) -> bool:
    """Evaluate with ``atom_truth[(var, pattern)]`` giving each atom's value."""
    if isinstance(f, FMatch):
        return atom_truth[(f.var, f.pattern)]
    if isinstance(f, FNot):
        return not eval_formula(f.inner, atom_truth)
    if isinstance(f, FAnd):
        return eval_formula(f.left, atom_truth) and eval_formula(f.right, atom_truth)
    if isinstance(f, FOr):
        return eval_formula(f.left, atom_truth) or eval_formula(f.right, atom_truth)
    if isinstance(f, FImp):
        return (not eval_formula(f.left, atom_truth)) or eval_formula(f.right, atom_truth)
    if isinstance(f, FIff):
        return eval_formula(f.left, atom_truth) == eval_formula(f.right, atom_truth)
    raise TypeError(f"not a formula node: {f!r}")
