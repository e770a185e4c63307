"""Exit criteria for the package.

Each test prints one ``PASS``/``FAIL`` line (collected again in the
terminal summary).  All arithmetic is exact, so every comparison is
equality; the only tolerances are the stated runtime budgets.
"""

import random
import statistics
import time
from contextlib import contextmanager
from fractions import Fraction
from math import gcd
from pathlib import Path

from tanglekit.braid import BraidWord, braid_equivalent, from_braid, to_braid
from tanglekit.cli import Command, run
from tanglekit.enumeration import run_census
from tanglekit.psl2z import E, S, GenWord, Psl2Elem, compose, word_to_matrix
from tanglekit.qext import INF, OddCF, ProjRat, cf_eval, cf_to_word, odd_cf
from tanglekit.tangle import (
    R,
    Base,
    TangleExpr,
    Twist,
    XMove,
    alternating_form,
    equivalent,
    fraction_of,
    reduce_moves,
)

from oracles import word_matrix
from test_cli import cli

SEED = 20261018
FIG2_MIDDLE = "X3+ X2+ X4- X4- X3+ X1+ G="
FIG2_RIGHT = "X3+ X2- X3+ X1+ G="
GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(log, tag, name):
    try:
        yield
    except BaseException:
        line = f"{tag} FAIL {name}"
        log.append(line)
        print(line)
        raise
    line = f"{tag} PASS {name}"
    log.append(line)
    print(line)


def timed(fn, repeat=7):
    """Median wall time of ``fn`` in seconds, and its last result."""
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def random_expr(rng):
    moves = []
    for _ in range(rng.randint(0, 10)):
        kind = rng.randrange(3)
        if kind == 0:
            moves.append(XMove(rng.randint(1, 4), rng.choice((1, -1))))
        elif kind == 1:
            moves.append(Twist(rng.choice("AB"), rng.choice((-3, -2, -1, 1, 2, 3))))
        else:
            moves.append(R)
    return TangleExpr(rng.choice((Base.HORIZONTAL, Base.VERTICAL)), tuple(moves))


def random_word(rng):
    return GenWord(tuple((rng.choice("AB"), rng.choice((-3, -2, -1, 1, 2, 3))) for _ in range(rng.randint(0, 12))))


def test_ac1_relations(acceptance_log):
    with criterion(acceptance_log, "AC1", "(AB^-1)^3 = S^2 = E, B^-1AB^-1 = AB^-1A = S, < 1 ms"):
        def check():
            ab = word_to_matrix(GenWord.parse("A B^-1"))
            return (
                compose(ab, compose(ab, ab)),
                compose(S, S),
                word_to_matrix(GenWord.parse("B^-1 A B^-1")),
                word_to_matrix(GenWord.parse("A B^-1 A")),
            )

        elapsed, (cube, s2, bab, aba) = timed(check)
        assert cube == E
        assert s2 == E
        assert bab == aba == S == Psl2Elem(0, 1, -1, 0)
        # list-arithmetic oracle, up to sign
        m = word_matrix("AbAbAb")
        assert m in ([[1, 0], [0, 1]], [[-1, 0], [0, -1]])
        assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


def test_ac2_figure_pair(acceptance_log):
    with criterion(acceptance_log, "AC2", "isotopic standard representations: equiv true, both fraction -1, < 1 ms"):
        def check():
            return run(Command("equiv", (FIG2_MIDDLE, FIG2_RIGHT))), [
                run(Command("fraction", (e,)))[1] for e in (FIG2_MIDDLE, FIG2_RIGHT)
            ]

        elapsed, ((status, out), fracs) = timed(check)
        assert (status, out) == (0, "true")
        # oracle: A B^-1 A^2 multiplied out is +-(0 1; -1 -1), second column gives -1
        m = word_matrix("AbAA")
        assert Fraction(m[0][1], m[1][1]) == -1
        assert fracs == ["-1/1", "-1/1"]
        assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


def test_ac3_continued_fraction_example(acceptance_log):
    with criterion(acceptance_log, "AC3", "odd_cf(7/3) = [2,2,1] -> A^2B^2A -> 7/3; [2,3] = 7/3"):
        v = ProjRat(7, 3)
        cf = odd_cf(v)
        assert cf == OddCF((2, 2, 1))
        w = cf_to_word(cf)
        assert w == GenWord.parse("A^2 B^2 A")
        assert fraction_of(TangleExpr.from_word(w)) == v
        assert cf_eval([2, 3]) == v


def test_ac4_census(acceptance_log):
    with criterion(acceptance_log, "AC4", "census max_len 8: zero violations, < 60 s"):
        t0 = time.perf_counter()
        report = run_census(8)
        elapsed = time.perf_counter() - t0
        assert report.word_count == sum(4 ** i for i in range(9))
        assert report.violations == []
        assert report.fraction_classes <= report.matrix_classes
        assert elapsed < 60, f"{elapsed:.1f} s"


def test_ac5_synthesis_sweep(acceptance_log):
    with criterion(acceptance_log, "AC5", "alternating_form round trip for |p|,|q| <= 50 with sign law, < 5 s"):
        t0 = time.perf_counter()
        n = 0
        for q in range(1, 51):
            for p in range(-50, 51):
                if gcd(p, q) != 1:
                    continue
                v = ProjRat(p, q)
                t = alternating_form(v)
                assert fraction_of(t) == v
                signs = {k > 0 for _, k in reduce_moves(t)}
                if p > 0:
                    assert signs == {True}
                elif p < 0:
                    assert signs == {False}
                else:
                    assert signs == set()
                n += 1
        assert alternating_form(INF) == TangleExpr(Base.VERTICAL)
        elapsed = time.perf_counter() - t0
        assert n > 3000
        assert elapsed < 5, f"{elapsed:.2f} s"


def test_ac6_rotation(acceptance_log):
    with criterion(acceptance_log, "AC6", "R R t ~ t and R acts as (p:q) -> (q:-p) on 1000 random expressions"):
        rng = random.Random(SEED)
        for _ in range(1000):
            t = random_expr(rng)
            assert equivalent(t.prepend(R, R), t)
            v = fraction_of(t)
            assert fraction_of(t.prepend(R)) == ProjRat(v.q, -v.p)


def test_ac7_braids(acceptance_log):
    with criterion(acceptance_log, "AC7", "braid round trip x1000, full twist trivial, s1s2s1 = s2s1s2"):
        rng = random.Random(SEED + 7)
        for _ in range(1000):
            w = random_word(rng)
            assert from_braid(to_braid(w)) == w
        assert braid_equivalent(BraidWord.parse("s1 s2 s1 s2 s1 s2"), BraidWord())
        assert braid_equivalent(BraidWord.parse("s1 s2 s1"), BraidWord.parse("s2 s1 s2"))


def test_ac8_cli_goldens(acceptance_log, tmp_path):
    with criterion(acceptance_log, "AC8", "CLI golden text output; svg for 0, -1, 7/3 byte-stable"):
        r = cli("fraction", "A^2 B^2 A G=")
        assert (r.returncode, r.stdout) == (0, "7/3\n")
        r = cli("equiv", FIG2_MIDDLE, FIG2_RIGHT)
        assert (r.returncode, r.stdout) == (0, "true\n")
        r = cli("synth", "0/1")
        assert (r.returncode, r.stdout) == (0, "G=\n")
        for name, arg in (("zero", "0"), ("minus_one", "-1"), ("seven_thirds", "7/3")):
            outs = []
            for i in range(2):
                path = tmp_path / f"{name}-{i}.svg"
                r = cli("svg", arg, "-o", str(path))
                assert r.returncode == 0, r.stderr
                outs.append(path.read_bytes())
            assert outs[0] == outs[1] == (GOLDEN / f"{name}.svg").read_bytes()
