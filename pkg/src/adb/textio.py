"""Line-oriented text formats for delay automata and NFAs.

Automaton files carry fixed-order sections::

    alphabet <sym> ...
    locations <name> ...          (``states`` for NFA files)
    start <name>
    accept <name> ...             (possibly empty)
    trans <src> <dst> out <sym> <delay>   |   trans <src> <dst> eps
    trans <src> <dst> tick                |   trans <src> <dst> on <sym>

Blank lines are skipped and a line whose first token starts the line with
``#`` is a comment (``#`` elsewhere is an ordinary symbol character).
Printing is deterministic and ``parse(print(a))`` is structurally equal to
``a``.
"""

from __future__ import annotations

from typing import List, Tuple

from .automaton import Adb, validate_adb
from .errors import AdbError, ParseError
from .regular import Nfa, validate_nfa
from .words import EPS, TICK, Out, label_key


def _sections(text: str) -> List[Tuple[int, List[str]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    return rows


def _header(rows, index, keyword, required=True):
    if index >= len(rows):
        raise ParseError("missing %r section" % keyword)
    lineno, tokens = rows[index]
    if tokens[0] != keyword:
        if required:
            raise ParseError("expected %r section" % keyword, lineno)
        return None
    return tokens[1:]


def parse_adb(text: str) -> Adb:
    rows = _sections(text)
    alphabet = _header(rows, 0, "alphabet")
    locations = _header(rows, 1, "locations")
    start = _header(rows, 2, "start")
    accepting = _header(rows, 3, "accept")
    if len(start) != 1:
        raise ParseError("start section needs exactly one location", rows[2][0])

    transitions = []
    for lineno, tokens in rows[4:]:
        if tokens[0] != "trans":
            raise ParseError("expected trans line, got %r" % tokens[0], lineno)
        if len(tokens) >= 4 and tokens[3] == "out":
            if len(tokens) != 6:
                raise ParseError("out transition needs symbol and delay", lineno)
            try:
                delay = int(tokens[5])
            except ValueError:
                raise ParseError("bad delay %r" % tokens[5], lineno) from None
            if delay < 0:
                raise ParseError("negative delay", lineno)
            try:
                label = Out(tokens[4], delay)
            except AdbError as exc:
                raise ParseError(str(exc), lineno) from None
        elif len(tokens) == 4 and tokens[3] == "eps":
            label = EPS
        elif len(tokens) == 4 and tokens[3] == "tick":
            label = TICK
        else:
            raise ParseError("malformed transition", lineno)
        transitions.append((tokens[1], label, tokens[2]))

    try:
        return validate_adb(locations, alphabet, start[0], accepting, transitions)
    except AdbError as exc:
        raise ParseError(str(exc)) from None


def print_adb(adb: Adb) -> str:
    lines = [
        "alphabet " + " ".join(sorted(adb.alphabet)),
        "locations " + " ".join(sorted(adb.locations)),
        "start " + adb.start,
        ("accept " + " ".join(sorted(adb.accepting))).rstrip(),
    ]
    for src, lab, dst in sorted(
        adb.transitions, key=lambda t: (t[0], label_key(t[1]), t[2])
    ):
        if isinstance(lab, Out):
            lines.append("trans %s %s out %s %d" % (src, dst, lab.symbol, lab.delay))
        elif lab is EPS:
            lines.append("trans %s %s eps" % (src, dst))
        else:
            lines.append("trans %s %s tick" % (src, dst))
    return "\n".join(lines) + "\n"


def parse_nfa(text: str) -> Nfa:
    rows = _sections(text)
    alphabet = _header(rows, 0, "alphabet")
    states = _header(rows, 1, "states")
    start = _header(rows, 2, "start")
    accepting = _header(rows, 3, "accept")
    if len(start) != 1:
        raise ParseError("start section needs exactly one state", rows[2][0])

    transitions = []
    for lineno, tokens in rows[4:]:
        if tokens[0] != "trans":
            raise ParseError("expected trans line, got %r" % tokens[0], lineno)
        if len(tokens) == 5 and tokens[3] == "on":
            transitions.append((tokens[1], tokens[4], tokens[2]))
        elif len(tokens) == 4 and tokens[3] == "eps":
            transitions.append((tokens[1], None, tokens[2]))
        else:
            raise ParseError("malformed transition", lineno)

    try:
        return validate_nfa(states, alphabet, start[0], accepting, transitions)
    except AdbError as exc:
        raise ParseError(str(exc)) from None


def print_nfa(nfa: Nfa) -> str:
    lines = [
        "alphabet " + " ".join(sorted(nfa.alphabet)),
        "states " + " ".join(sorted(nfa.states)),
        "start " + nfa.start,
        ("accept " + " ".join(sorted(nfa.accepting))).rstrip(),
    ]
    for src, letter, dst in sorted(
        nfa.transitions, key=lambda t: (t[0], t[1] is None, t[1] or "", t[2])
    ):
        if letter is None:
            lines.append("trans %s %s eps" % (src, dst))
        else:
            lines.append("trans %s %s on %s" % (src, dst, letter))
    return "\n".join(lines) + "\n"


def parse_automaton(text: str):
    """Parse either file format, dispatching on the second section header."""
    rows = _sections(text)
    for _, tokens in rows:
        if tokens[0] == "locations":
            return parse_adb(text)
        if tokens[0] == "states":
            return parse_nfa(text)
    raise ParseError("neither a locations nor a states section found")
