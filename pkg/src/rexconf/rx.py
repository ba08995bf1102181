"""Regular expression syntax: AST, parser and renderer.

Grammar (whitespace is significant — a space is a letter if declared):

    regex  := alt
    alt    := concat ('|' concat)*
    concat := rep+
    rep    := atom '*'*
    atom   := LETTER | '.' | '$' | '(' alt? ')' | '[' LETTER+ ']' | '\\' META
    META   := '|' | '*' | '(' | ')' | '[' | ']' | '.' | '\\' | '$'

Binding strength increases concatenation < alternation < star.  ``()`` is
the empty-string literal, ``.`` matches any declared letter (never the
end-of-line sentinel), ``$`` is the end-of-line letter itself and is only
available on alphabets with end-of-line enabled.  ``[abc]`` is sugar for
``(a|b|c)``; classes never contain the end-of-line sentinel.  A backslash
escapes a metacharacter so it can be used as an ordinary letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import EOL, Alphabet
from .errors import LetterOutsideAlphabet, RegexSyntaxError

META_CHARS = "|*()[].\\$"


class RegexAst:
    """Base class for regex syntax nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Letter(RegexAst):
    ch: str


@dataclass(frozen=True)
class Dot(RegexAst):
    pass


@dataclass(frozen=True)
class Epsilon(RegexAst):
    pass


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Alt(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Star(RegexAst):
    inner: RegexAst


@dataclass(frozen=True)
class Class(RegexAst):
    letters: tuple[str, ...]


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.declared = frozenset(alphabet.letters)
        self.pos = 0

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def error(self, expected: str) -> RegexSyntaxError:
        got = self.peek()
        what = f"unexpected {got!r}" if got is not None else "unexpected end of input"
        return RegexSyntaxError(what, self.pos, expected)

    def check_letter(self, ch: str) -> str:
        # Only declared letters qualify; the end-of-line sentinel is written
        # as an unescaped '$' and handled separately.
        if ch not in self.declared:
            raise LetterOutsideAlphabet(ch, "regular expression")
        return ch

    def parse(self) -> RegexAst:
        node = self.alt()
        if self.pos != len(self.text):
            raise self.error("end of input")
        return node

    def alt(self) -> RegexAst:
        branches = [self.concat()]
        while self.peek() == "|":
            self.take()
            branches.append(self.concat())
        node = branches[-1]
        for branch in reversed(branches[:-1]):
            node = Alt(branch, node)
        return node

    def concat(self) -> RegexAst:
        node = self.rep()
        while self._at_atom():
            node = Concat(node, self.rep())
        return node

    def rep(self) -> RegexAst:
        node = self.atom()
        while self.peek() == "*":
            self.take()
            node = Star(node)
        return node

    def _at_atom(self) -> bool:
        ch = self.peek()
        return ch is not None and ch not in "|*)]"

    def atom(self) -> RegexAst:
        ch = self.peek()
        if ch is None or ch in "|*)]":
            raise self.error("an atom")
        if ch == "(":
            self.take()
            if self.peek() == ")":
                self.take()
                return Epsilon()
            node = self.alt()
            if self.peek() != ")":
                raise self.error("')'")
            self.take()
            return node
        if ch == "[":
            self.take()
            letters = []
            while self.peek() not in (None, "]"):
                letters.append(self.class_letter())
            if self.peek() != "]":
                raise self.error("']'")
            if not letters:
                raise self.error("a letter")
            self.take()
            return Class(tuple(dict.fromkeys(letters)))
        if ch == "\\":
            self.take()
            nxt = self.peek()
            if nxt is None or nxt not in META_CHARS:
                raise self.error("an escapable metacharacter")
            self.take()
            return Letter(self.check_letter(nxt))
        if ch == ".":
            self.take()
            return Dot()
        if ch == "$":
            self.take()
            if not self.alphabet.eol:
                raise LetterOutsideAlphabet(EOL, "regular expression (end-of-line disabled)")
            return Letter(EOL)
        self.take()
        return Letter(self.check_letter(ch))

    def class_letter(self) -> str:
        # Inside [...] every character except ']' and '\\' is a plain letter;
        # the end-of-line sentinel is never part of a class.
        ch = self.take()
        if ch == "\\":
            nxt = self.peek()
            if nxt is None or nxt not in META_CHARS:
                raise self.error("an escapable metacharacter")
            ch = self.take()
        return self.check_letter(ch)


def parse_regex(text: str, alphabet: Alphabet) -> RegexAst:
    """Parse ``text`` into a syntax tree, validating letters against ``alphabet``."""
    return _Parser(text, alphabet).parse()


def _render_letter(ch: str) -> str:
    if ch == EOL:
        return "$"
    if ch in META_CHARS:
        return "\\" + ch
    return ch


_PREC_ALT = 0
_PREC_CONCAT = 1
_PREC_ATOM = 2


def _render(node: RegexAst, prec: int) -> str:
    if isinstance(node, Epsilon):
        return "()"
    if isinstance(node, Letter):
        return _render_letter(node.ch)
    if isinstance(node, Dot):
        return "."
    if isinstance(node, Class):
        if all(ch not in META_CHARS and ch != EOL for ch in node.letters):
            return "[" + "".join(node.letters) + "]"
        inner = "|".join(_render_letter(ch) for ch in node.letters)
        return "(" + inner + ")"
    if isinstance(node, Star):
        return _render(node.inner, _PREC_ATOM) + "*"
    if isinstance(node, Concat):
        text = _render(node.left, _PREC_CONCAT) + _render(node.right, _PREC_CONCAT)
        return "(" + text + ")" if prec > _PREC_CONCAT else text
    if isinstance(node, Alt):
        text = _render(node.left, _PREC_CONCAT) + "|" + _render(node.right, _PREC_ALT)
        return "(" + text + ")" if prec > _PREC_ALT else text
    raise TypeError(f"not a regex node: {node!r}")


def render_regex(node: RegexAst) -> str:
    """Render a syntax tree back to the grammar above (parse-stable)."""
    return _render(node, _PREC_ALT)
