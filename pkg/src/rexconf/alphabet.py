"""Finite ordered alphabets.

An alphabet is the ordered set of letters a string variable may use.  The
declared order is significant: it fixes the lexicographic order used for
suggestion ranking and the iteration order of every deterministic algorithm
in the package.

When ``eol`` is enabled the effective alphabet additionally contains the
reserved end-of-line sentinel (rendered ``$``) as its last letter.  The
sentinel marks a value as finished: it is appended by ``complete`` only,
never matched by ``.`` or by character classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidProblem, LetterOutsideAlphabet

EOL = "$"


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]
    eol: bool = False
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.letters:
            raise InvalidProblem("alphabet must not be empty")
        seen = set()
        for ch in self.letters:
            if len(ch) != 1:
                raise InvalidProblem(f"alphabet letters must be single characters, got {ch!r}")
            if ch == EOL:
                raise InvalidProblem(f"the letter {EOL!r} is reserved for end-of-line")
            if ch in seen:
                raise InvalidProblem(f"duplicate letter {ch!r} in alphabet")
            seen.add(ch)
        effective = self.letters + (EOL,) if self.eol else self.letters
        object.__setattr__(self, "_index", {ch: i for i, ch in enumerate(effective)})

    @property
    def effective(self) -> tuple[str, ...]:
        """All letters words may contain, end-of-line sentinel included."""
        return self.letters + (EOL,) if self.eol else self.letters

    @property
    def n_effective(self) -> int:
        return len(self.letters) + 1 if self.eol else len(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise LetterOutsideAlphabet(letter) from None

    def __contains__(self, letter: str) -> bool:
        return letter in self._index

    def word_indices(self, word: str) -> list[int]:
        """Translate a word into letter indices, validating every letter."""
        return [self.index(ch) for ch in word]
