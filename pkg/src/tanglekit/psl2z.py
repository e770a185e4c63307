"""
Exact arithmetic in PSL(2, Z).

Elements are 2x2 integer matrices of determinant 1 taken up to sign.  The
group is generated by

    A = (1 1; 0 1)      B = (1 0; 1 1)

and ``S = A B^-1 A = (0 1; -1 0)`` is the involution exchanging 0 and
infinity.  Words in A and B are kept run-length encoded in :class:`GenWord`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import InternalError, ParseError

LETTERS = ("A", "B")


def _canon(a, b, c, d):
    # first nonzero entry positive
    for x in (a, b, c, d):
        if x:
            if x < 0:
                return -a, -b, -c, -d
            break
    return a, b, c, d


@dataclass(frozen=True)
class Psl2Elem:
    """
    An element of PSL(2, Z), stored as its canonical representative.

    The constructor normalizes the sign, so ``Psl2Elem(-1, 0, 0, -1) == E``.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * d - b * c != 1:
            raise ValueError(f"determinant of ({a} {b}; {c} {d}) is not 1")
        a, b, c, d = _canon(a, b, c, d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other):
        return compose(self, other)

    def __neg__(self):
        return self

    def __str__(self):
        return f"({self.a} {self.b}; {self.c} {self.d})"


E = Psl2Elem(1, 0, 0, 1)
A = Psl2Elem(1, 1, 0, 1)
B = Psl2Elem(1, 0, 1, 1)
S = Psl2Elem(0, 1, -1, 0)


def compose(m: Psl2Elem, n: Psl2Elem) -> Psl2Elem:
    return Psl2Elem(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def inverse(m: Psl2Elem) -> Psl2Elem:
    return Psl2Elem(m.d, -m.b, -m.c, m.a)


def generator_power(letter: str, k: int) -> Psl2Elem:
    if letter == "A":
        return Psl2Elem(1, k, 0, 1)
    if letter == "B":
        return Psl2Elem(1, 0, k, 1)
    raise ValueError(f"unknown generator {letter!r}")


def is_b_power(m: Psl2Elem) -> bool:
    return m.a == 1 and m.b == 0 and m.d == 1


# ---------------------------------------------------------------- words

_SYLLABLE_RE = re.compile(r"^([AB])(?:\^([+-]?\d+))?$")


def _merge(syllables):
    out = []
    for letter, k in syllables:
        if letter not in LETTERS:
            raise ValueError(f"unknown generator {letter!r}")
        k = int(k)
        if out and out[-1][0] == letter:
            k += out.pop()[1]
        if k:
            out.append((letter, k))
    return tuple(out)


@dataclass(frozen=True)
class GenWord:
    """
    A word in A, B as a tuple of ``(letter, exponent)`` syllables.

    Construction merges adjacent runs of the same letter and drops zero
    exponents; no other relation is applied.  The empty word is the
    identity.
    """

    syllables: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _merge(self.syllables))

    @classmethod
    def from_letters(cls, letters: Iterable[str]) -> "GenWord":
        """Build from single letters such as ``"A"``, ``"b"`` (lower case = inverse)."""
        syl = []
        for ch in letters:
            if ch in LETTERS:
                syl.append((ch, 1))
            elif ch.upper() in LETTERS:
                syl.append((ch.upper(), -1))
            else:
                raise ValueError(f"unknown letter {ch!r}")
        return cls(tuple(syl))

    @classmethod
    def parse(cls, text: str) -> "GenWord":
        """Parse ``"A^2 B^-1 A"``; ``"E"`` or the empty string is the identity."""
        syl = []
        tokens = text.split()
        if tokens == ["E"]:
            return cls()
        for i, tok in enumerate(tokens, 1):
            m = _SYLLABLE_RE.match(tok)
            if m is None:
                raise ParseError("expected A or B with optional ^k", i, tok)
            k = int(m.group(2)) if m.group(2) is not None else 1
            if k == 0:
                raise ParseError("zero exponent", i, tok)
            syl.append((m.group(1), k))
        return cls(tuple(syl))

    def __mul__(self, other: "GenWord") -> "GenWord":
        return GenWord(self.syllables + other.syllables)

    def __len__(self):
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    @property
    def letter_length(self) -> int:
        return sum(abs(k) for _, k in self.syllables)

    def inverse(self) -> "GenWord":
        return GenWord(tuple((x, -k) for x, k in reversed(self.syllables)))

    def is_positive(self) -> bool:
        return all(k > 0 for _, k in self.syllables)

    def is_negative(self) -> bool:
        return all(k < 0 for _, k in self.syllables)

    def is_sign_homogeneous(self) -> bool:
        return self.is_positive() or self.is_negative()

    def __str__(self):
        if not self.syllables:
            return "E"
        return " ".join(x if k == 1 else f"{x}^{k}" for x, k in self.syllables)


def word_to_matrix(w: GenWord) -> Psl2Elem:
    # raw tuple arithmetic; canonicalized once at the end
    a, b, c, d = 1, 0, 0, 1
    for letter, k in w.syllables:
        if letter == "A":
            # (a b; c d)(1 k; 0 1)
            b, d = a * k + b, c * k + d
        else:
            # (a b; c d)(1 0; k 1)
            a, c = a + b * k, c + d * k
    return Psl2Elem(a, b, c, d)


def act_projective(m: Psl2Elem, v):
    """Apply ``m`` to the projective rational ``v`` (a :class:`~tanglekit.qext.ProjRat`)."""
    from .qext import ProjRat

    return ProjRat(m.a * v.p + m.b * v.q, m.c * v.p + m.d * v.q)


# ---------------------------------------------------------- normal forms


@dataclass(frozen=True)
class VtForm:
    """``V T`` with ``V`` in {"E", "S"} and ``T`` a sign-homogeneous word."""

    v: str
    t: GenWord

    def __post_init__(self):
        if self.v not in ("E", "S"):
            raise ValueError(f"v must be 'E' or 'S', not {self.v!r}")
        if not self.t.is_sign_homogeneous():
            raise ValueError(f"t is not sign-homogeneous: {self.t}")

    def matrix(self) -> Psl2Elem:
        tm = word_to_matrix(self.t)
        return compose(S, tm) if self.v == "S" else tm

    def __str__(self):
        if self.v == "E":
            return str(self.t)
        return "S" if not self.t else f"S {self.t}"


def _positive_word(a, b, c, d):
    """Factor a nonnegative determinant-1 matrix into positive powers of A and B."""
    syl = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a >= c and b >= d:
            # left A^k subtracts k * row2 from row1
            k = b // d if c == 0 else min(a // c, b // d)
            a, b = a - k * c, b - k * d
            syl.append(("A", k))
        elif c >= a and d >= b:
            k = c // a if b == 0 else min(c // a, d // b)
            c, d = c - k * a, d - k * b
            syl.append(("B", k))
        else:
            raise InternalError(f"rows of ({a} {b}; {c} {d}) are not comparable")
        if k <= 0 or min(a, b, c, d) < 0:
            raise InternalError("peeling left the nonnegative monoid")
    return GenWord(tuple(syl))


def _sign_homogeneous_word(m: Psl2Elem):
    a, b, c, d = m.entries
    if min(a, b, c, d) >= 0:
        return _positive_word(a, b, c, d)
    if a >= 0 and b <= 0 and c <= 0 and d >= 0:
        # the inverse (d -b; -c a) is nonnegative
        return _positive_word(d, -b, -c, a).inverse()
    return None


def vt_normal_form(m: Psl2Elem) -> VtForm:
    t = _sign_homogeneous_word(m)
    if t is not None:
        return VtForm("E", t)
    t = _sign_homogeneous_word(compose(S, m))
    if t is not None:
        return VtForm("S", t)
    raise InternalError(f"no VT decomposition found for {m}")


def matrix_to_word(m: Psl2Elem) -> GenWord:
    """
    Canonical word for ``m`` of the shape ``W B^k``.

    ``W`` is the alternating word of the odd continued fraction of the
    second column ``b/d`` (or ``B^-1 A`` when ``d == 0``); the first column
    only determines the trailing B-power.
    """
    from .qext import ProjRat, cf_to_word, odd_cf

    col = ProjRat(m.b, m.d)
    if col.q == 0:
        head = GenWord((("B", -1), ("A", 1)))
    else:
        head = cf_to_word(odd_cf(col))
    rest = compose(inverse(word_to_matrix(head)), m)
    if not is_b_power(rest):
        raise InternalError(f"{m} is not {head} times a power of B")
    return head * GenWord((("B", rest.c),))
