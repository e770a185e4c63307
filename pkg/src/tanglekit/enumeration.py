"""
Brute-force census of short words in A, B and their inverses.

Every word up to a given letter length is evaluated twice: once as a
matrix product, once by pushing the rational 0 through the Möbius maps
``z -> z + 1`` and ``z -> z / (z + 1)`` (and their inverses) with
``fractions.Fraction``.  The census then checks that the two agree with the
classification of rational tangles:

* words with the same matrix send 0 to the same fraction;
* words sending 0 to the same fraction have matrices in one right coset
  of the subgroup generated by B, and vice versa;
* the VT normal form and the canonical word reproduce every matrix reached.

Words are spelled with ``a`` for A^-1 and ``b`` for B^-1.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .errors import LimitTooLarge, TanglekitError
from .psl2z import (
    GenWord,
    Psl2Elem,
    _canon,
    is_b_power,
    matrix_to_word,
    vt_normal_form,
    word_to_matrix,
    compose,
    inverse,
)

DEFAULT_BUDGET = 4 ** 12

LETTERS = "AaBb"
_EXPONENT = {"A": 1, "a": -1, "B": 1, "b": -1}


def _check_budget(max_len, budget):
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    budget = DEFAULT_BUDGET if budget is None else budget
    if 4 ** max_len > budget:
        raise LimitTooLarge(f"4^{max_len} words exceeds the budget of {budget}")


def enumerate_words(max_len: int, budget: Optional[int] = None) -> Iterator[GenWord]:
    """Yield every letter sequence of length <= ``max_len``, shortest first, then lexicographically in A, a, B, b."""
    _check_budget(max_len, budget)
    for n in range(max_len + 1):
        for letters in itertools.product(LETTERS, repeat=n):
            yield GenWord.from_letters(letters)


def enumerate_spellings(max_len: int, budget: Optional[int] = None) -> Iterator[str]:
    """Same order as :func:`enumerate_words`, as raw strings over ``AaBb``."""
    _check_budget(max_len, budget)
    for n in range(max_len + 1):
        for letters in itertools.product(LETTERS, repeat=n):
            yield "".join(letters)


@dataclass
class CensusReport:
    max_len: int
    word_count: int = 0
    matrix_classes: int = 0
    fraction_classes: int = 0
    violations: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = [list(v) for v in self.violations]
        return d


def tau(letter: str, z: Optional[Fraction]) -> Optional[Fraction]:
    """Image of ``z`` (``None`` for infinity) under one letter's Möbius map."""
    alpha = _EXPONENT[letter]
    if letter in "Aa":
        return None if z is None else z + alpha
    # 1 / (alpha + 1/z)
    if z is None:
        return Fraction(1, alpha)
    if z == 0:
        return z
    w = alpha + 1 / z
    return None if w == 0 else 1 / w


def _letter_matrix(ch):
    k = _EXPONENT[ch]
    return (1, k, 0, 1) if ch in "Aa" else (1, 0, k, 1)


def _coset_key(a, b, c, d):
    # normalize (a b; c d) B^k so that the first column is as small as possible
    if d < 0 or (d == 0 and b < 0):
        a, b, c, d = -a, -b, -c, -d
    if d:
        k = -(c // d)
    else:
        k = -a * b
    return (a + k * b, b, c + k * d, d)


def _spell(raw):
    return raw or "E"


def _check_round_trips(elem, raw, report):
    try:
        vt = vt_normal_form(elem)
        if vt.matrix() != elem:
            report.violations.append((_spell(raw), str(vt), "VT normal form does not reproduce the matrix"))
    except (TanglekitError, ValueError) as exc:
        report.violations.append((_spell(raw), "", f"VT normal form failed: {exc}"))
    try:
        w = matrix_to_word(elem)
        if word_to_matrix(w) != elem:
            report.violations.append((_spell(raw), str(w), "canonical word does not reproduce the matrix"))
    except (TanglekitError, ValueError) as exc:
        report.violations.append((_spell(raw), "", f"canonical word failed: {exc}"))


def run_census(max_len: int, budget: Optional[int] = None) -> CensusReport:
    _check_budget(max_len, budget)
    report = CensusReport(max_len)
    by_matrix = {}     # canonical matrix -> (fraction, spelling)
    by_fraction = {}   # fraction -> (canonical matrix, spelling)
    by_coset = {}      # coset key -> (fraction, spelling)

    # words are grown on the left so both the matrix and the image of 0 update in O(1)
    stack = [("", (1, 0, 0, 1), Fraction(0))]
    while stack:
        raw, (a, b, c, d), z = stack.pop()
        report.word_count += 1
        key = _canon(a, b, c, d)

        seen = by_matrix.get(key)
        if seen is not None:
            if seen[0] != z:
                report.violations.append((_spell(seen[1]), _spell(raw), "same matrix, different fraction"))
        else:
            by_matrix[key] = (z, raw)
            elem = Psl2Elem(*key)

            rep = by_fraction.get(z)
            if rep is None:
                by_fraction[z] = (elem, raw)
            elif not is_b_power(compose(inverse(rep[0]), elem)):
                report.violations.append((_spell(rep[1]), _spell(raw), "same fraction, matrices not in one B-coset"))

            ck = _coset_key(*key)
            other = by_coset.get(ck)
            if other is None:
                by_coset[ck] = (z, raw)
            elif other[0] != z:
                report.violations.append((_spell(other[1]), _spell(raw), "same B-coset, different fraction"))

            _check_round_trips(elem, raw, report)

        if len(raw) < max_len:
            for ch in reversed(LETTERS):
                p, q, r, s = _letter_matrix(ch)
                stack.append((
                    ch + raw,
                    (p * a + q * c, p * b + q * d, r * a + s * c, r * b + s * d),
                    tau(ch, z),
                ))

    report.matrix_classes = len(by_matrix)
    report.fraction_classes = len(by_fraction)
    return report
