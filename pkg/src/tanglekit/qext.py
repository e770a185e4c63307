"""
Projective rationals and odd continued fractions.

A :class:`ProjRat` is a point ``(p:q)`` of the rational projective line.
Finite points are stored with ``q > 0``; infinity is the single point
``(1:0)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

from .errors import BothZero, InfinityHasNoCF, InvalidContinuedFraction, ParseError
from .psl2z import GenWord, act_projective, word_to_matrix


@dataclass(frozen=True)
class ProjRat:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise BothZero("(0, 0) is not a projective rational")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.q == 0:
            raise InfinityHasNoCF("infinity is not a rational number")
        return Fraction(self.p, self.q)

    @classmethod
    def from_fraction(cls, x) -> "ProjRat":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> "ProjRat":
        """Accept ``"7/3"``, ``"-2"``, ``"inf"`` or ``"1/0"``."""
        s = text.strip().replace("−", "-")
        if s.lower() in ("inf", "infinity", "∞"):
            return INF
        m = re.fullmatch(r"([+-]?\d+)(?:/([+-]?\d+))?", s)
        if m is None:
            raise ParseError(f"not a fraction: {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        try:
            return cls(p, q)
        except BothZero as exc:
            raise ParseError(str(exc)) from exc

    def sign(self) -> int:
        """-1, 0 or 1 for finite points; 0 is also returned for infinity."""
        if self.q == 0:
            return 0
        return (self.p > 0) - (self.p < 0)

    def __str__(self):
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


ZERO = ProjRat(0, 1)
INF = ProjRat(1, 0)


def make_projrat(p: int, q: int) -> ProjRat:
    return ProjRat(p, q)


def _check_odd(elements):
    n = len(elements)
    if n % 2 == 0:
        raise InvalidContinuedFraction(f"length {n} is not odd")
    if n == 1:
        return
    tail = elements[1:]
    if all(x > 0 for x in tail):
        sign = 1
    elif all(x < 0 for x in tail):
        sign = -1
    else:
        raise InvalidContinuedFraction(f"mixed or zero signs in {list(elements)}")
    if elements[0] * sign < 0:
        raise InvalidContinuedFraction(f"leading element of {list(elements)} has the wrong sign")


@dataclass(frozen=True)
class OddCF:
    """Sign-homogeneous continued fraction of odd length; the first entry may be 0."""

    elements: Tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        _check_odd(els)
        object.__setattr__(self, "elements", els)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.elements) + "]"


def _regular_cf(p, q):
    # p, q > 0
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def odd_cf(v: ProjRat) -> OddCF:
    if v.is_infinite:
        raise InfinityHasNoCF("infinity has no continued fraction")
    if v.p == 0:
        return OddCF((0,))
    sign = 1 if v.p > 0 else -1
    els = _regular_cf(abs(v.p), v.q)
    if len(els) % 2 == 0:
        # last element is >= 2 here, so the shortened one stays positive
        els[-1] -= 1
        els.append(1)
    return OddCF(tuple(sign * x for x in els))


def cf_to_word(cf: OddCF) -> GenWord:
    return GenWord(tuple(("A" if i % 2 == 0 else "B", a) for i, a in enumerate(cf.elements)))


def cf_eval(cf: Union[OddCF, Sequence[int]]) -> ProjRat:
    """
    Exact value of a continued fraction ``a1 + 1/(a2 + 1/(... + 1/an))``.

    An :class:`OddCF` is evaluated as the image of 0 under its alternating
    word.  A plain sequence may also have even length: the word
    ``A^a1 B^a2 ... B^an`` then fixes 0, so it is applied to infinity
    instead.
    """
    if isinstance(cf, OddCF):
        return act_projective(word_to_matrix(cf_to_word(cf)), ZERO)
    els = tuple(int(x) for x in cf)
    if not els:
        raise InvalidContinuedFraction("empty continued fraction")
    word = GenWord(tuple(("A" if i % 2 == 0 else "B", a) for i, a in enumerate(els)))
    start = ZERO if len(els) % 2 else INF
    return act_projective(word_to_matrix(word), start)
