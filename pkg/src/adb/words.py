"""Timed and untimed word algebra, transition labels, and the output-word
evaluation that turns a label sequence into a timed word.

Conventions used throughout the package:

* a symbol is a plain ``str`` drawn from a restricted character set
  (``tick`` and ``eps`` are reserved and never valid symbols);
* a timed word is a tuple of ``(symbol, timestamp)`` pairs with
  non-decreasing timestamps;
* an untimed word is a tuple of symbols;
* a transition label is :class:`Out`, :data:`EPS` or :data:`TICK`.

Text forms: timed words are whitespace-separated ``sym@t`` tokens, untimed
words whitespace-separated symbols, and label sequences ``sym/d`` / ``tick``
/ ``eps`` tokens.  The empty string denotes the empty word everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from .errors import DecreasingTimestamp, InvalidSymbol, ParseError

TimedLetter = Tuple[str, int]
TimedWord = Tuple[TimedLetter, ...]
UntimedWord = Tuple[str, ...]

RESERVED = frozenset({"tick", "eps"})
_SYMBOL_RE = re.compile(r"[A-Za-z0-9_#\-]+\Z")


def check_symbol(name: str) -> str:
    """Validate a symbol name, returning it unchanged."""
    if not isinstance(name, str) or not _SYMBOL_RE.match(name):
        raise InvalidSymbol(name)
    if name in RESERVED:
        raise InvalidSymbol(name)
    return name


@dataclass(frozen=True)
class Out:
    """Output label: emit ``symbol`` after ``delay`` time units."""

    symbol: str
    delay: int

    def __post_init__(self):
        check_symbol(self.symbol)
        if self.delay < 0:
            raise ValueError("delay must be nonnegative")

    def __repr__(self):
        return "Out(%s/%d)" % (self.symbol, self.delay)


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


EPS = _Marker("EPS")
TICK = _Marker("TICK")

Label = Union[Out, _Marker]
LabelSequence = Tuple[Label, ...]


def label_key(label: Label):
    """Deterministic sort key over labels (outputs, then eps, then tick)."""
    if isinstance(label, Out):
        return (0, label.symbol, label.delay)
    if label is EPS:
        return (1, "", 0)
    return (2, "", 0)


def untime(w: Sequence[TimedLetter]) -> UntimedWord:
    """Project a timed word onto its symbol sequence."""
    return tuple(sym for sym, _ in w)


def shift(w: Sequence[TimedLetter], delta: int) -> TimedWord:
    """Advance every timestamp of ``w`` by ``delta`` time units."""
    if delta < 0:
        raise ValueError("shift must be nonnegative")
    return tuple((sym, t + delta) for sym, t in w)


def kappa(u: Sequence[str], t: int) -> TimedWord:
    """Stamp every symbol of the untimed word ``u`` with time ``t``."""
    if t < 0:
        raise ValueError("timestamp must be nonnegative")
    return tuple((sym, t) for sym in u)


def rep(w: Sequence, i: int) -> tuple:
    """``w`` repeated ``i`` times (the empty sequence for ``i == 0``)."""
    if i < 0:
        raise ValueError("repetition count must be nonnegative")
    return tuple(w) * i


def oword(labels: Iterable[Label]) -> TimedWord:
    """Evaluate a transition-label sequence to its timed output word.

    A running clock starts at 0; eps labels are skipped, each tick advances
    the clock, and an output label stamps its symbol with clock + delay.
    The stamped letters are then stable-sorted by timestamp, so letters that
    surface at the same time keep their generation order.
    """
    stamped = []
    now = 0
    for label in labels:
        if label is EPS:
            continue
        if label is TICK:
            now += 1
        else:
            stamped.append((label.symbol, now + label.delay))
    stamped.sort(key=lambda letter: letter[1])  # list.sort is stable
    return tuple(stamped)


def validate_timed_word(letters: Sequence[TimedLetter]) -> TimedWord:
    """Check letter validity and non-decreasing timestamps."""
    prev = 0
    for i, (sym, t) in enumerate(letters):
        check_symbol(sym)
        if t < 0:
            raise DecreasingTimestamp(i)
        if t < prev:
            raise DecreasingTimestamp(i)
        prev = t
    return tuple(letters)


# ---------------------------------------------------------------------------
# text forms


def parse_timed_word(text: str) -> TimedWord:
    letters = []
    for token in text.split():
        sym, sep, stamp = token.partition("@")
        if not sep or not stamp:
            raise ParseError("expected sym@t token, got %r" % token)
        try:
            t = int(stamp)
        except ValueError:
            raise ParseError("bad timestamp in %r" % token) from None
        if t < 0:
            raise ParseError("negative timestamp in %r" % token)
        try:
            check_symbol(sym)
        except InvalidSymbol:
            raise ParseError("bad symbol in %r" % token) from None
        letters.append((sym, t))
    try:
        return validate_timed_word(letters)
    except DecreasingTimestamp as exc:
        raise ParseError("timestamps decrease at letter %d" % exc.index) from None


def format_timed_word(w: Sequence[TimedLetter]) -> str:
    return " ".join("%s@%d" % (sym, t) for sym, t in w)


def parse_untimed_word(text: str) -> UntimedWord:
    symbols = []
    for token in text.split():
        try:
            check_symbol(token)
        except InvalidSymbol:
            raise ParseError("bad symbol %r" % token) from None
        symbols.append(token)
    return tuple(symbols)


def format_untimed_word(u: Sequence[str]) -> str:
    return " ".join(u)


def parse_labels(text: str) -> LabelSequence:
    labels = []
    for token in text.split():
        if token == "tick":
            labels.append(TICK)
        elif token == "eps":
            labels.append(EPS)
        else:
            sym, sep, delay = token.partition("/")
            if not sep or not delay:
                raise ParseError("expected sym/d, tick or eps, got %r" % token)
            try:
                d = int(delay)
            except ValueError:
                raise ParseError("bad delay in %r" % token) from None
            if d < 0:
                raise ParseError("negative delay in %r" % token)
            try:
                labels.append(Out(sym, d))
            except InvalidSymbol:
                raise ParseError("bad symbol in %r" % token) from None
    return tuple(labels)


def format_label(label: Label) -> str:
    if label is EPS:
        return "eps"
    if label is TICK:
        return "tick"
    return "%s/%d" % (label.symbol, label.delay)


def format_labels(labels: Iterable[Label]) -> str:
    return " ".join(format_label(label) for label in labels)
