"""
Command line front end.

Tangle expressions are whitespace-separated tokens written like the usual
notation, rightmost move applied first::

    X3+ X2+ X4- X4- X3+ X1+ G=
    A^2 B^2 A G=
    R G||

Move tokens are ``X1+`` .. ``X4-``, ``A``, ``B`` (optionally ``^k``) and
``R``.  The last token may be the base ``G=`` or ``G||``; without it the
base is ``G=``.

Exit status: 0 on success (and for ``equiv`` when the tangles agree), 1 when
``equiv`` finds them different, 2 on parse or usage errors, 3 when the
census finds a violation, 4 when a file cannot be written.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .braid import BraidWord, from_braid, to_braid
from .enumeration import DEFAULT_BUDGET, run_census
from .errors import LimitTooLarge, ParseError
from .qext import ProjRat
from .svg import emit_svg
from .tangle import (
    Base,
    R,
    TangleExpr,
    Twist,
    XMove,
    alternating_form,
    canonical,
    equivalent,
    fraction_of,
    reduce_moves,
)

VERBS = ("fraction", "equiv", "canon", "synth", "braid", "unbraid", "census", "svg")
BUDGET_ENV = "TANGLEKIT_BUDGET"

_X_RE = re.compile(r"^X([1-4])([+-])$")
_POWER_RE = re.compile(r"^([AB])(?:\^(.*))?$")
_FRACTION_RE = re.compile(r"^([+-]?\d+(/[+-]?\d+)?|inf)$")
_BASES = {"G=": Base.HORIZONTAL, "G||": Base.VERTICAL}


def parse_tangle(text: str) -> TangleExpr:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty tangle expression")
    base = Base.HORIZONTAL
    moves = []
    for i, tok in enumerate(tokens, 1):
        if tok in _BASES:
            if i != len(tokens):
                raise ParseError("base tangle must be the last token", i, tok)
            base = _BASES[tok]
            continue
        if tok == "R":
            moves.append(R)
            continue
        m = _X_RE.match(tok)
        if m:
            moves.append(XMove(int(m.group(1)), 1 if m.group(2) == "+" else -1))
            continue
        m = _POWER_RE.match(tok)
        if m:
            k = 1
            if m.group(2) is not None:
                if not re.fullmatch(r"[+-]?\d+", m.group(2)):
                    raise ParseError("exponent must be an integer", i, tok)
                k = int(m.group(2))
            if k == 0:
                raise ParseError("zero exponent", i, tok)
            moves.append(Twist(m.group(1), k))
            continue
        raise ParseError("unknown token", i, tok)
    return TangleExpr(base, tuple(moves))


def print_tangle(t: TangleExpr) -> str:
    return str(t)


@dataclass
class Command:
    verb: str
    arguments: Tuple[str, ...] = ()
    output_mode: str = "text"
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verb not in VERBS:
            raise ValueError(f"unknown verb {self.verb!r}")
        if self.output_mode not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output_mode!r}")


def _projrat_json(v):
    return {"p": v.p, "q": v.q}


def _census_text(report):
    lines = [
        f"max_len: {report.max_len}",
        f"word_count: {report.word_count}",
        f"matrix_classes: {report.matrix_classes}",
        f"fraction_classes: {report.fraction_classes}",
        f"violations: {len(report.violations)}",
    ]
    lines += [f"  {w1} / {w2}: {why}" for w1, w2, why in report.violations]
    return "\n".join(lines)


def _one(cmd):
    if len(cmd.arguments) != 1:
        raise ParseError(f"{cmd.verb} takes exactly one expression")
    return cmd.arguments[0]


def _dispatch(cmd):
    """Return ``(status, input, text_result, json_result)``."""
    verb = cmd.verb
    if verb == "fraction":
        src = _one(cmd)
        v = fraction_of(parse_tangle(src))
        return 0, src, str(v), _projrat_json(v)
    if verb == "equiv":
        if len(cmd.arguments) != 2:
            raise ParseError("equiv takes exactly two expressions")
        t1, t2 = (parse_tangle(s) for s in cmd.arguments)
        same = equivalent(t1, t2)
        return (0 if same else 1), list(cmd.arguments), "true" if same else "false", same
    if verb == "canon":
        src = _one(cmd)
        out = str(canonical(parse_tangle(src)))
        return 0, src, out, out
    if verb == "synth":
        src = _one(cmd)
        out = str(alternating_form(ProjRat.parse(src)))
        return 0, src, out, out
    if verb == "braid":
        src = _one(cmd)
        out = str(to_braid(reduce_moves(parse_tangle(src))))
        return 0, src, out, out
    if verb == "unbraid":
        src = " ".join(cmd.arguments)
        out = str(from_braid(BraidWord.parse(src)))
        return 0, src, out, out
    if verb == "census":
        max_len = int(cmd.options.get("max_len", 6))
        report = run_census(max_len, cmd.options.get("budget"))
        return (0 if report.ok else 3), max_len, _census_text(report), report.to_dict()
    if verb == "svg":
        src = _one(cmd)
        path = cmd.options.get("output")
        if not path:
            raise ParseError("svg needs an output file (-o FILE)")
        if _FRACTION_RE.match(src.strip()):
            t = alternating_form(ProjRat.parse(src))
        else:
            t = parse_tangle(src)
        emit_svg(t, path)
        boxes = len(canonical(t).moves)
        return 0, src, f"wrote {path} (twist boxes: {boxes})", {"path": str(path), "boxes": boxes}
    raise ValueError(verb)


def run(cmd: Command) -> Tuple[int, str]:
    """Execute ``cmd``; returns the exit status and the text to print on stdout."""
    status, src, text, result = _dispatch(cmd)
    if cmd.output_mode == "json":
        return status, json.dumps({"verb": cmd.verb, "input": src, "result": result})
    return status, text


def _budget_from_env():
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Rational tangles, the modular group and B3 modulo the full twist.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("fraction", parents=[common], help="fraction of a tangle (p/q or inf)")
    p.add_argument("expr", nargs="+")
    p = sub.add_parser("equiv", parents=[common], help="decide isotopy of two tangles")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p = sub.add_parser("canon", parents=[common], help="canonical alternating form of a tangle")
    p.add_argument("expr", nargs="+")
    p = sub.add_parser("synth", parents=[common], help="alternating tangle with the given fraction")
    p.add_argument("fraction")
    p = sub.add_parser("braid", parents=[common], help="translate a tangle move word to a braid")
    p.add_argument("expr", nargs="+")
    p = sub.add_parser("unbraid", parents=[common], help="translate a braid to a move word")
    p.add_argument("word", nargs="*")
    p = sub.add_parser("census", parents=[common], help="exhaustive check of all short words")
    p.add_argument("--max-len", type=int, default=6)
    p = sub.add_parser("svg", parents=[common], help="write a schematic SVG")
    p.add_argument("expr", nargs="+", help="tangle expression, or a fraction p/q / inf")
    p.add_argument("-o", "--output", required=True)
    return parser


def command_from_args(ns) -> Command:
    verb = ns.verb
    options = {}
    if verb == "equiv":
        args = (ns.expr1, ns.expr2)
    elif verb == "synth":
        args = (ns.fraction,)
    elif verb == "unbraid":
        args = tuple(ns.word)
    elif verb == "census":
        args = ()
        options["max_len"] = ns.max_len
    else:
        args = (" ".join(ns.expr),)
    if verb == "svg":
        options["output"] = ns.output
    return Command(verb, args, "json" if ns.json else "text", options)


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cmd = command_from_args(ns)
        if cmd.verb == "census":
            cmd.options["budget"] = _budget_from_env()
        status, out = run(cmd)
    except (ParseError, LimitTooLarge, ValueError) as exc:
        print(f"tanglekit {ns.verb}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tanglekit {ns.verb}: {exc}", file=sys.stderr)
        return 4
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
