"""The delay-block automaton data model: structural validation, runs,
acceptance, output semantics, and the stamped-alphabet regular view."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Tuple

from . import regular
from .errors import (
    DuplicateLocation,
    InvalidStep,
    InvalidSymbol,
    MissingStart,
    ReservedSymbol,
    UnknownLocation,
)
from .words import (
    EPS,
    RESERVED,
    TICK,
    Label,
    Out,
    TimedWord,
    check_symbol,
    label_key,
    oword,
)

# Location names are free-form whitespace-delimited tokens; `$` is used by
# the language constructions to mint fresh names.
_LOCATION_RE = re.compile(r"\S+\Z")

Transition = Tuple[str, Label, str]


def check_location(name: str) -> str:
    if not isinstance(name, str) or not _LOCATION_RE.match(name):
        raise UnknownLocation(name)
    return name


@dataclass(frozen=True)
class Adb:
    """An automaton with per-transition output delays.

    Instances are immutable; build them through :func:`validate_adb` (or the
    text-format parser) so the structural invariants hold.
    """

    locations: FrozenSet[str]
    alphabet: FrozenSet[str]
    start: str
    accepting: FrozenSet[str]
    transitions: FrozenSet[Transition]

    @cached_property
    def sorted_transitions(self) -> Tuple[Transition, ...]:
        return tuple(
            sorted(self.transitions, key=lambda t: (t[0], label_key(t[1]), t[2]))
        )

    @cached_property
    def max_delay(self) -> int:
        """Largest delay on any output transition (0 when there is none)."""
        return max(
            (lab.delay for _, lab, _ in self.transitions if isinstance(lab, Out)),
            default=0,
        )

    @cached_property
    def _edges_by_src(self):
        index = {loc: [] for loc in self.locations}
        for src, lab, dst in self.sorted_transitions:
            index[src].append((lab, dst))
        return {src: tuple(edges) for src, edges in index.items()}

    def edges_from(self, loc: str) -> Tuple[Tuple[Label, str], ...]:
        if loc not in self.locations:
            raise UnknownLocation(loc)
        return self._edges_by_src[loc]

    def successors(self, loc: str, label: Label) -> FrozenSet[str]:
        """Target set of transitions from ``loc`` carrying exactly ``label``."""
        return frozenset(dst for lab, dst in self.edges_from(loc) if lab == label)


def validate_adb(
    locations: Iterable[str],
    alphabet: Iterable[str],
    start: str,
    accepting: Iterable[str],
    transitions: Iterable[Transition],
) -> Adb:
    """Check every structural invariant and return the immutable automaton.

    ``locations`` may contain duplicates only by mistake; they are rejected
    rather than collapsed so that text-format typos surface early.
    """
    loc_list = [check_location(loc) for loc in locations]
    seen = set()
    for loc in loc_list:
        if loc in seen:
            raise DuplicateLocation(loc)
        seen.add(loc)
    loc_set = frozenset(loc_list)

    alpha = set()
    for sym in alphabet:
        if sym in RESERVED:
            raise ReservedSymbol(sym)
        alpha.add(check_symbol(sym))

    if not start:
        raise MissingStart()
    if start not in loc_set:
        raise UnknownLocation(start)
    acc = frozenset(accepting)
    for loc in acc - loc_set:
        raise UnknownLocation(loc)

    trans = set()
    for src, lab, dst in transitions:
        if src not in loc_set:
            raise UnknownLocation(src)
        if dst not in loc_set:
            raise UnknownLocation(dst)
        if isinstance(lab, Out):
            if lab.symbol not in alpha:
                raise InvalidSymbol(lab.symbol)
        elif lab is not EPS and lab is not TICK:
            raise InvalidStep(len(trans))
        trans.add((src, lab, dst))

    return Adb(loc_set, frozenset(alpha), start, acc, frozenset(trans))


@dataclass(frozen=True)
class Run:
    """A path ``l0 --a0--> l1 --a1--> ... ln`` through an automaton."""

    start: str
    steps: Tuple[Tuple[Label, str], ...] = ()

    def __len__(self):
        return len(self.steps)

    @property
    def end(self) -> str:
        return self.steps[-1][1] if self.steps else self.start

    def labels(self) -> Tuple[Label, ...]:
        return tuple(lab for lab, _ in self.steps)

    def locations(self) -> Tuple[str, ...]:
        return (self.start,) + tuple(loc for _, loc in self.steps)


def check_run(adb: Adb, run: Run) -> None:
    """Raise ``InvalidStep`` unless every step of ``run`` is a transition."""
    here = run.start
    if here not in adb.locations:
        raise UnknownLocation(here)
    for i, (lab, nxt) in enumerate(run.steps):
        if (here, lab, nxt) not in adb.transitions:
            raise InvalidStep(i)
        here = nxt


def is_accepting_run(adb: Adb, run: Run) -> bool:
    """True iff ``run`` is step-valid, starts at the start location, and ends
    in an accepting location."""
    check_run(adb, run)
    return run.start == adb.start and run.end in adb.accepting


def run_output(adb: Adb, run: Run) -> TimedWord:
    """The timed word generated by a step-valid run."""
    check_run(adb, run)
    return oword(run.labels())


def reg_view(adb: Adb) -> "regular.Nfa":
    """Reinterpret the automaton as an NFA over delay-stamped letters.

    Output transitions become letters ``(symbol, delay)``, ticks become the
    letter ``"tick"``, and eps transitions stay epsilon.  Timed-language
    equality ``lan(A) = oword(rlan(A))`` holds by construction.
    """
    m = adb.max_delay
    letters = {(sym, t) for sym in adb.alphabet for t in range(m + 1)}
    letters.add("tick")
    transitions = set()
    for src, lab, dst in adb.transitions:
        if isinstance(lab, Out):
            transitions.add((src, (lab.symbol, lab.delay), dst))
        elif lab is TICK:
            transitions.add((src, "tick", dst))
        else:
            transitions.add((src, None, dst))
    return regular.Nfa(
        states=adb.locations,
        alphabet=frozenset(letters),
        start=adb.start,
        accepting=adb.accepting,
        transitions=frozenset(transitions),
    )
