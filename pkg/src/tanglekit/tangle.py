"""
Rational tangles as move words acting on a base tangle.

A :class:`TangleExpr` reads like the usual notation ``X3+ X2- X1+ G=``: the
rightmost move is applied first.  Equivalence of tangles is decided only
through the fraction invariant; no diagram is ever rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .psl2z import GenWord, act_projective, word_to_matrix
from .qext import ZERO, ProjRat, cf_to_word, odd_cf


class Base(Enum):
    HORIZONTAL = "G="   # Γ^= (also Γ_0): fraction 0
    VERTICAL = "G||"    # Γ^||: fraction infinity

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class XMove:
    """Twist ``X_i^±`` of a pair of adjacent endpoints."""

    index: int
    sign: int

    def __post_init__(self):
        if self.index not in (1, 2, 3, 4):
            raise ValueError(f"twist index must be 1..4, not {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, not {self.sign}")

    def __str__(self):
        return f"X{self.index}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Twist:
    """A power of one of the generating moves A or B."""

    letter: str
    exponent: int

    def __post_init__(self):
        if self.letter not in ("A", "B"):
            raise ValueError(f"unknown move {self.letter!r}")
        if self.exponent == 0:
            raise ValueError("zero exponent")

    def __str__(self):
        return self.letter if self.exponent == 1 else f"{self.letter}^{self.exponent}"


@dataclass(frozen=True)
class Rotation:
    """The half-turn R about the diagonal through endpoints 1 and 3."""

    def __str__(self):
        return "R"


R = Rotation()

Move = Union[XMove, Twist, Rotation]

# X1, X3 act like A and X2, X4 like B on isotopy classes
_X_LETTER = {1: "A", 3: "A", 2: "B", 4: "B"}
_R_WORD = (("A", 1), ("B", -1), ("A", 1))
_VERTICAL_WORD = (("B", -1), ("A", 1))


@dataclass(frozen=True)
class TangleExpr:
    base: Base = Base.HORIZONTAL
    moves: Tuple[Move, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", Base(self.base))
        object.__setattr__(self, "moves", tuple(self.moves))

    @classmethod
    def from_word(cls, word: GenWord, base=Base.HORIZONTAL) -> "TangleExpr":
        return cls(base, tuple(Twist(x, k) for x, k in word.syllables))

    def prepend(self, *moves: Move) -> "TangleExpr":
        """Apply ``moves`` after the existing ones (they go on the left)."""
        return TangleExpr(self.base, tuple(moves) + self.moves)

    def word(self) -> GenWord:
        return reduce_moves(self)

    def __str__(self):
        return " ".join([str(m) for m in self.moves] + [str(self.base)])


@dataclass(frozen=True)
class TangleClass:
    """An isotopy class, identified by its fraction."""

    fraction: ProjRat


def _move_syllables(m):
    if isinstance(m, XMove):
        return ((_X_LETTER[m.index], m.sign),)
    if isinstance(m, Twist):
        return ((m.letter, m.exponent),)
    if isinstance(m, Rotation):
        return _R_WORD
    raise TypeError(f"not a tangle move: {m!r}")


def reduce_moves(t: TangleExpr) -> GenWord:
    """Word ``w`` in A, B such that ``t`` is isotopic to ``w`` applied to Γ^=."""
    syl = []
    for m in t.moves:
        syl.extend(_move_syllables(m))
    if t.base is Base.VERTICAL:
        syl.extend(_VERTICAL_WORD)
    return GenWord(tuple(syl))


def fraction_of(t: TangleExpr) -> ProjRat:
    return act_projective(word_to_matrix(reduce_moves(t)), ZERO)


def tangle_class(t: TangleExpr) -> TangleClass:
    return TangleClass(fraction_of(t))


def equivalent(t1: TangleExpr, t2: TangleExpr) -> bool:
    return fraction_of(t1) == fraction_of(t2)


def alternating_form(v: ProjRat) -> TangleExpr:
    """
    The canonical alternating tangle with fraction ``v``.

    Finite fractions give the odd continued fraction word on Γ^=, so every
    twist has the sign of ``v``; infinity gives the bare Γ^||.
    """
    if v.is_infinite:
        return TangleExpr(Base.VERTICAL)
    return TangleExpr.from_word(cf_to_word(odd_cf(v)))


def canonical(t: TangleExpr) -> TangleExpr:
    return alternating_form(fraction_of(t))


def stabilizer_contains(w: GenWord, t: TangleExpr) -> bool:
    """True when the move ``w`` maps the class of ``t`` to itself."""
    v = fraction_of(t)
    return act_projective(word_to_matrix(w), v) == v
