"""Guess-tuple product of a delay automaton with an epsilon-free NFA.

A product state tracks the automaton location, the spec NFA's position for
the current time slot and for each of the next M future slots (M being the
automaton's largest delay), and M guessed slot-start positions.  An output
with delay t advances the slot-t spec position; a tick is enabled only when
the current slot has reached its guessed boundary, shifts every component
one slot down, and appends a fresh agreeing (position, guess) pair.  The
untimed language of the product is the intersection of the automaton's
untimed language with the NFA's language.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Tuple

from .automaton import Adb
from .errors import BoundExceeded, IncompatibleAlphabet
from .regular import Nfa, eliminate_eps
from .words import EPS, Label, Out

DEFAULT_STATE_CAP = 10**6


def state_cap() -> int:
    return int(os.environ.get("ADB_MAX_STATES", DEFAULT_STATE_CAP))


@dataclass(frozen=True)
class ProductState:
    loc: str
    slots: Tuple  # M+1 spec positions, current slot first
    guesses: Tuple  # M guessed slot-start positions


class ProductExplorer:
    """Lazy successor generation over the product's reachable states.

    Guess tuples are enumerated on demand (at the initial fan and at each
    tick), never materialized up front.
    """

    def __init__(self, adb: Adb, spec: Nfa):
        if adb.alphabet - spec.alphabet:
            raise IncompatibleAlphabet(
                "spec alphabet is missing %s"
                % sorted(adb.alphabet - spec.alphabet)
            )
        self.adb = adb
        self.spec = eliminate_eps(spec)
        self.delay_bound = adb.max_delay
        self.spec_states = tuple(sorted(self.spec.states, key=repr))

    def initial_states(self) -> Iterator[ProductState]:
        """The epsilon fan out of the fresh initial state: one product state
        per guess tuple, with each future slot starting at its guess."""
        m = self.delay_bound
        for guesses in itertools.product(self.spec_states, repeat=m):
            yield ProductState(self.adb.start, (self.spec.start,) + guesses, guesses)

    def successors(self, ps: ProductState) -> Iterator[Tuple[Label, ProductState]]:
        m = self.delay_bound
        for label, dst in self.adb.edges_from(ps.loc):
            if isinstance(label, Out):
                slot = ps.slots[label.delay]
                for nxt in sorted(self.spec.step(slot, label.symbol), key=repr):
                    slots = (
                        ps.slots[: label.delay] + (nxt,) + ps.slots[label.delay + 1 :]
                    )
                    yield label, ProductState(dst, slots, ps.guesses)
            elif label is EPS:
                yield label, ProductState(dst, ps.slots, ps.guesses)
            else:  # tick
                if m == 0:
                    yield label, ProductState(dst, ps.slots, ps.guesses)
                elif ps.slots[0] == ps.guesses[0]:
                    for fresh in self.spec_states:
                        yield label, ProductState(
                            dst,
                            ps.slots[1:] + (fresh,),
                            ps.guesses[1:] + (fresh,),
                        )

    def is_accepting(self, ps: ProductState) -> bool:
        if ps.loc not in self.adb.accepting:
            return False
        if ps.slots[-1] not in self.spec.accepting:
            return False
        return all(ps.slots[j] == ps.guesses[j] for j in range(self.delay_bound))


def search_accepting(explorer: ProductExplorer, cap=None):
    """BFS for an accepting product state.

    Returns ``(path, visited_count)`` where ``path`` is a shortest accepting
    path as a tuple of ``(label, state)`` steps out of some initial-fan state
    (``None`` when the product is empty).  The implicit epsilon edge from the
    fresh initial state is not part of the path; that state still counts
    toward ``visited_count``.
    """
    if cap is None:
        cap = state_cap()
    parent = {}
    frontier = []
    count = 1  # the fresh initial state
    for ps in explorer.initial_states():
        if ps not in parent:
            parent[ps] = None
            frontier.append(ps)
            count += 1
            if count > cap:
                raise BoundExceeded(cap)

    goal = None
    for ps in frontier:
        if explorer.is_accepting(ps):
            goal = ps
            break
    index = 0
    while goal is None and index < len(frontier):
        ps = frontier[index]
        index += 1
        for label, nxt in explorer.successors(ps):
            if nxt in parent:
                continue
            parent[nxt] = (ps, label)
            frontier.append(nxt)
            count += 1
            if count > cap:
                raise BoundExceeded(cap)
            if explorer.is_accepting(nxt):
                goal = nxt
                break

    if goal is None:
        return None, count
    path = []
    ps = goal
    while parent[ps] is not None:
        prev, label = parent[ps]
        path.append((label, ps))
        ps = prev
    path.reverse()
    return tuple(path), count
