"""Decision procedures: emptiness, timed and untimed membership,
intersection-with-regular emptiness, and regular model checking with
verified counterexamples."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from .automaton import Adb, Run
from .errors import (
    BoundExceeded,
    IncompatibleAlphabet,
    InternalVerificationFailure,
    UnknownSymbol,
)
from .product import ProductExplorer, search_accepting, state_cap
from .regular import (
    Nfa,
    complement,
    determinize,
    dfa_as_nfa,
    eliminate_eps,
    nfa_member,
    single_word_nfa,
)
from .words import (
    EPS,
    TICK,
    Out,
    TimedWord,
    UntimedWord,
    oword,
    untime,
    validate_timed_word,
)


def shortest_accepting_run(adb: Adb) -> Optional[Run]:
    """A shortest path from the start to an accepting location, as a run
    (``None`` when no accepting location is reachable).  BFS over the sorted
    transition relation makes the witness reproducible."""
    parent = {adb.start: None}
    queue = deque([adb.start])
    goal = adb.start if adb.start in adb.accepting else None
    while goal is None and queue:
        loc = queue.popleft()
        for label, dst in adb.edges_from(loc):
            if dst in parent:
                continue
            parent[dst] = (loc, label)
            queue.append(dst)
            if dst in adb.accepting:
                goal = dst
                break
    if goal is None:
        return None
    steps = []
    loc = goal
    while parent[loc] is not None:
        prev, label = parent[loc]
        steps.append((label, loc))
        loc = prev
    steps.reverse()
    return Run(adb.start, tuple(steps))


def is_empty(adb: Adb) -> bool:
    """True iff the automaton generates no timed word at all."""
    return shortest_accepting_run(adb) is None


# ---------------------------------------------------------------------------
# timed membership


_SINK = "sink"
_TICKSINK = object()  # post-accept location flushing pending outputs


class _WordCursors:
    """Position bookkeeping for the single-path word automaton.

    A cursor is ``("seg", k)`` (about to read the time-k segment),
    ``("after", j)`` (just read letter j, mid-segment), or the sink (all
    letters read and past the final timestamp).  Reading the last letter
    overall lands directly on the sink.
    """

    def __init__(self, w: TimedWord):
        self.w = w
        self.t_end = w[-1][1]
        self.seg_first = {}
        for j, (_, t) in enumerate(w):
            self.seg_first.setdefault(t, j)

    def initial(self, count: int) -> Tuple:
        return tuple(
            ("seg", j) if j <= self.t_end else _SINK for j in range(count)
        )

    def _wrap(self, j: int):
        return _SINK if j == len(self.w) - 1 else ("after", j)

    def next_letter(self, cursor) -> Optional[int]:
        """Index of the next letter this cursor may read, if any."""
        if cursor == _SINK:
            return None
        kind, v = cursor
        if kind == "seg":
            return self.seg_first.get(v)
        j = v + 1
        if j < len(self.w) and self.w[j][1] == self.w[v][1]:
            return j
        return None

    def consume(self, cursor, j: int):
        return self._wrap(j)

    def at_boundary(self, cursor) -> bool:
        """True when the cursor's segment is fully consumed (a tick may
        legally pass it)."""
        if cursor == _SINK:
            return True
        kind, v = cursor
        if kind == "seg":
            return v not in self.seg_first  # empty segment
        return self.next_letter(cursor) is None

    def advance(self, cursor):
        """Start-of-next-segment cursor appended on a tick."""
        if cursor == _SINK:
            return _SINK
        kind, v = cursor
        k = v if kind == "seg" else self.w[v][1]
        return ("seg", k + 1) if k + 1 <= self.t_end else _SINK


def _eps_tick_acceptance(adb: Adb) -> bool:
    """Reachability to an accepting location using eps/tick labels only
    (exactly the runs generating the empty timed word)."""
    seen = {adb.start}
    queue = deque(seen)
    while queue:
        loc = queue.popleft()
        if loc in adb.accepting:
            return True
        for label, dst in adb.edges_from(loc):
            if label is not EPS and label is not TICK:
                continue
            if dst not in seen:
                seen.add(dst)
                queue.append(dst)
    return False


def member_timed(adb: Adb, w: TimedWord, cap=None) -> bool:
    """Timed-word membership by on-the-fly reachability over tuples of one
    automaton location and max-delay+1 word cursors, one per pending output
    time slot.

    An output with delay d must read the next unconsumed letter of the slot-d
    segment; a tick requires the current slot to be fully consumed, shifts
    the cursors, and appends the next segment's start cursor.  After the
    automaton reaches an accepting location, residual ticks may flush any
    still-pending segments through a dedicated sink."""
    if cap is None:
        cap = state_cap()
    w = validate_timed_word(w)
    for sym, _ in w:
        if sym not in adb.alphabet:
            raise UnknownSymbol(sym)
    if not w:
        return _eps_tick_acceptance(adb)

    cursors = _WordCursors(w)
    m = adb.max_delay
    start = (adb.start, cursors.initial(m + 1))
    seen = {start}
    queue = deque([start])

    def accepting(loc, cur):
        if loc is not _TICKSINK and loc not in adb.accepting:
            return False
        return all(c == _SINK for c in cur)

    while queue:
        loc, cur = queue.popleft()
        if accepting(loc, cur):
            return True
        nexts = []
        if loc is _TICKSINK:
            if cursors.at_boundary(cur[0]):
                shifted = cur[1:] + (cursors.advance(cur[-1]),)
                nexts.append((_TICKSINK, shifted))
        else:
            for label, dst in adb.edges_from(loc):
                if isinstance(label, Out):
                    j = cursors.next_letter(cur[label.delay])
                    if j is None or w[j][0] != label.symbol:
                        continue
                    advanced = cursors.consume(cur[label.delay], j)
                    nexts.append(
                        (dst, cur[: label.delay] + (advanced,)
                         + cur[label.delay + 1:])
                    )
                elif label is EPS:
                    nexts.append((dst, cur))
                else:
                    if cursors.at_boundary(cur[0]):
                        nexts.append((dst, cur[1:] + (cursors.advance(cur[-1]),)))
            if loc in adb.accepting and cursors.at_boundary(cur[0]):
                nexts.append((_TICKSINK, cur[1:] + (cursors.advance(cur[-1]),)))
        for state in nexts:
            if state not in seen:
                seen.add(state)
                if len(seen) > cap:
                    raise BoundExceeded(cap)
                queue.append(state)
    return False


# ---------------------------------------------------------------------------
# intersection emptiness, untimed membership, model checking


@dataclass(frozen=True)
class IntersectionWitness:
    """A word in the intersection plus the automaton run generating it."""

    word: UntimedWord
    run: Run
    states_explored: int


def intersect_regular_empty(
    adb: Adb, spec: Nfa, cap=None
) -> Optional[IntersectionWitness]:
    """``None`` when the automaton's untimed language is disjoint from the
    spec NFA's language; otherwise a witness word from a shortest accepting
    product path."""
    explorer = ProductExplorer(adb, spec)
    path, count = search_accepting(explorer, cap)
    if path is None:
        return None
    labels = tuple(label for label, _ in path)
    run = Run(adb.start, tuple((label, ps.loc) for label, ps in path))
    return IntersectionWitness(untime(oword(labels)), run, count)


def member_untimed(adb: Adb, u: UntimedWord) -> bool:
    """Untimed membership via intersection with a single-word NFA."""
    for sym in u:
        if sym not in adb.alphabet:
            raise UnknownSymbol(sym)
    return intersect_regular_empty(adb, single_word_nfa(u, adb.alphabet)) is not None


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: Optional[UntimedWord] = None
    witness_run: Optional[Run] = None


def model_check(adb: Adb, spec: Nfa, cap=None) -> Verdict:
    """Decide containment of the automaton's untimed language in the spec
    NFA's language: determinize and complement the spec, then check
    emptiness of the intersection.  Counterexamples are re-verified against
    both sides before being returned."""
    if adb.alphabet - spec.alphabet:
        raise IncompatibleAlphabet(
            "spec alphabet is missing %s" % sorted(adb.alphabet - spec.alphabet)
        )
    negated = dfa_as_nfa(complement(determinize(eliminate_eps(spec))))
    witness = intersect_regular_empty(adb, negated, cap)
    if witness is None:
        return Verdict(holds=True)
    u = witness.word
    if not member_untimed(adb, u) or nfa_member(spec, u):
        raise InternalVerificationFailure(
            "counterexample %r failed verification" % (u,)
        )
    return Verdict(holds=False, counterexample=u, witness_run=witness.run)
