"""
Three-strand braids modulo the full twist.

``A`` corresponds to ``s1`` and ``B`` to ``s2^-1``; braid words are read top
to bottom, so translating a move word also reverses it.  Two braids are
equal in B3/<(s1 s2)^3> exactly when their images in PSL(2, Z) agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

from .errors import ParseError
from .psl2z import GenWord, word_to_matrix

_TOKEN_RE = re.compile(r"^s([12])(?:\^([+-]?\d+))?$")


def _merge(syllables):
    out = []
    for gen, k in syllables:
        if gen not in (1, 2):
            raise ValueError(f"B3 has generators s1, s2 only, not s{gen}")
        if out and out[-1][0] == gen:
            k += out.pop()[1]
        if k:
            out.append((gen, k))
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """Run-merged syllables ``(generator, exponent)`` with generator 1 or 2."""

    syllables: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _merge(self.syllables))

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """``"s1 s2^-1 s1^3"``; an empty string or ``"1"`` is the trivial braid."""
        tokens = text.replace("σ", "s").split()
        if tokens == ["1"]:
            return cls()
        syl = []
        for i, tok in enumerate(tokens, 1):
            m = _TOKEN_RE.match(tok)
            if m is None:
                raise ParseError("expected s1 or s2 with optional ^k", i, tok)
            k = int(m.group(2)) if m.group(2) is not None else 1
            if k == 0:
                raise ParseError("zero exponent", i, tok)
            syl.append((int(m.group(1)), k))
        return cls(tuple(syl))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.syllables + other.syllables)

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(f"s{g}" if k == 1 else f"s{g}^{k}" for g, k in self.syllables)


def to_braid(w: GenWord) -> BraidWord:
    return BraidWord(tuple(
        (1, k) if letter == "A" else (2, -k) for letter, k in reversed(w.syllables)
    ))


def from_braid(b: BraidWord) -> GenWord:
    return GenWord(tuple(
        ("A", k) if gen == 1 else ("B", -k) for gen, k in reversed(b.syllables)
    ))


def braid_equivalent(b1: BraidWord, b2: BraidWord) -> bool:
    return word_to_matrix(from_braid(b1)) == word_to_matrix(from_braid(b2))
