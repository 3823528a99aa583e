"""Language operations over possibly different alphabets.

Binary operations take their operands as they are declared: each DFA
carries only its own letters. Product goes through an epsilon-NFA in
which missing letters simply have no transitions, while boolean
operations complete both operands over the union alphabet with a sink
before forming the direct product, so complement always means complement
with respect to the union universe. Every result is minimized, trimmed to
the alphabet of the result language, and reported with its quotient
complexity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .automata import (
    Dfa,
    Nfa,
    Transformation,
    complete_over,
    determinize,
    is_isomorphic,
    make_alphabet,
    minimize,
    reverse_nfa,
    trim_alphabet,
    union_alphabets,
)


class BooleanOp(Enum):
    """The ten proper binary boolean operations.

    The value is the truth table as (TT, TF, FT, FF): whether a word
    belongs to the result given membership in the left and right operand.
    Complemented operands are complemented with respect to the union
    universe, which the direct-product construction provides for free.
    """

    UNION = (True, True, True, False)
    INTER = (True, False, False, False)
    SYMDIFF = (False, True, True, False)
    XNOR = (True, False, False, True)
    DIFF = (False, True, False, False)
    REVDIFF = (False, False, True, False)
    IMPL = (True, False, True, True)
    CONVERSE_IMPL = (True, True, False, True)
    NOR = (False, False, False, True)
    NAND = (False, True, True, True)

    def holds(self, in_lhs: bool, in_rhs: bool) -> bool:
        tt, tf, ft, ff = self.value
        if in_lhs:
            return tt if in_rhs else tf
        return ft if in_rhs else ff


@dataclass(frozen=True)
class OpResult:
    """A minimal trimmed result DFA together with its quotient complexity."""

    dfa: Dfa
    kappa: int
    combined_alphabet: tuple[str, ...]


def _finish(d: Dfa, combined: tuple[str, ...]) -> OpResult:
    trimmed = trim_alphabet(d)
    return OpResult(dfa=trimmed, kappa=trimmed.state_count, combined_alphabet=combined)


def product(lhs: Dfa, rhs: Dfa) -> OpResult:
    """Concatenation of the two languages over the union of their alphabets.

    Epsilon-NFA construction: an epsilon edge from each final state of the
    left operand to the right operand's initial state, with the left
    finals made non-final. Each operand contributes transitions only for
    its own letters.
    """
    lhs = minimize(lhs)
    rhs = minimize(rhs)
    combined = union_alphabets(lhs.alphabet, rhs.alphabet)
    offset = lhs.state_count
    transitions: set[tuple[int, str | None, int]] = set()
    for letter, t in zip(lhs.alphabet, lhs.delta):
        for p, q in enumerate(t.images):
            transitions.add((p, letter, q))
    for letter, t in zip(rhs.alphabet, rhs.delta):
        for p, q in enumerate(t.images):
            transitions.add((offset + p, letter, offset + q))
    for f in lhs.finals:
        transitions.add((f, None, offset + rhs.initial))
    nfa = Nfa(
        state_count=lhs.state_count + rhs.state_count,
        alphabet=combined,
        transitions=frozenset(transitions),
        initials=frozenset({lhs.initial}),
        finals=frozenset(offset + f for f in rhs.finals),
    )
    return _finish(determinize(nfa), combined)


def _direct_product(lhs: Dfa, rhs: Dfa, op: BooleanOp) -> Dfa:
    """Reachable direct product of two DFAs over one shared alphabet."""
    assert lhs.alphabet == rhs.alphabet
    start = (lhs.initial, rhs.initial)
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in lhs.alphabet]
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        for k, (t1, t2) in enumerate(zip(lhs.delta, rhs.delta)):
            nxt = (t1.images[p], t2.images[q])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            rows[k].append(index[nxt])
    finals = frozenset(
        i
        for i, (p, q) in enumerate(order)
        if op.holds(p in lhs.finals, q in rhs.finals)
    )
    return Dfa(
        state_count=len(order),
        alphabet=lhs.alphabet,
        delta=tuple(Transformation(tuple(row)) for row in rows),
        initial=0,
        finals=finals,
    )


def boolean(op: BooleanOp, lhs: Dfa, rhs: Dfa) -> OpResult:
    """Any of the ten proper boolean operations over the union alphabet."""
    combined = union_alphabets(lhs.alphabet, rhs.alphabet)
    lc = complete_over(minimize(lhs), combined)
    rc = complete_over(minimize(rhs), combined)
    return _finish(_direct_product(lc, rc, op), combined)


def complement(d: Dfa, universe: tuple[str, ...] | str) -> OpResult:
    """Complement with respect to the given universe alphabet."""
    universe = make_alphabet(universe)
    completed = complete_over(minimize(d), universe)
    flipped = Dfa(
        state_count=completed.state_count,
        alphabet=completed.alphabet,
        delta=completed.delta,
        initial=completed.initial,
        finals=frozenset(range(completed.state_count)) - completed.finals,
    )
    return _finish(flipped, universe)


def star(d: Dfa) -> OpResult:
    """Kleene star via the usual epsilon-NFA construction.

    A fresh initial-final state feeds the old initial state by epsilon and
    each old final state loops back the same way. If the language already
    contains the empty word the fresh state simply merges away during
    minimization.
    """
    d = minimize(d)
    fresh = d.state_count
    transitions: set[tuple[int, str | None, int]] = set()
    for letter, t in zip(d.alphabet, d.delta):
        for p, q in enumerate(t.images):
            transitions.add((p, letter, q))
    transitions.add((fresh, None, d.initial))
    for f in d.finals:
        transitions.add((f, None, d.initial))
    nfa = Nfa(
        state_count=d.state_count + 1,
        alphabet=d.alphabet,
        transitions=frozenset(transitions),
        initials=frozenset({fresh}),
        finals=frozenset(d.finals) | {fresh},
    )
    return _finish(determinize(nfa), d.alphabet)


def reverse(d: Dfa) -> OpResult:
    """Reversal: flip every transition, swap initial and final roles."""
    return _finish(determinize(reverse_nfa(d)), d.alphabet)


def universal_dfa(alphabet: tuple[str, ...] | str) -> Dfa:
    """One-state DFA accepting every word over the alphabet."""
    alphabet = make_alphabet(alphabet)
    return Dfa(
        state_count=1,
        alphabet=alphabet,
        delta=tuple(Transformation.identity(1) for _ in alphabet),
        initial=0,
        finals=frozenset({0}),
    )


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """True iff the two languages are equal as word sets.

    Both automata are completed over the union of their alphabets and the
    reachable direct product is searched for a pair on which exactly one
    side accepts; no such pair means equality.
    """
    combined = union_alphabets(d1.alphabet, d2.alphabet)
    c1 = complete_over(d1, combined)
    c2 = complete_over(d2, combined)
    prod = _direct_product(c1, c2, BooleanOp.SYMDIFF)
    return not prod.finals


def _is_ideal(d: Dfa, prepend: bool, append: bool) -> bool:
    trimmed = trim_alphabet(d)
    if not trimmed.finals:
        return False  # ideals are non-empty by definition
    sigma = trimmed.alphabet
    if not sigma:
        return False  # the language {epsilon} cannot absorb anything
    grown = trimmed
    universe = universal_dfa(sigma)
    if prepend:
        grown = product(universe, grown).dfa
    if append:
        grown = product(grown, universe).dfa
    return is_isomorphic(grown, trimmed)


def is_right_ideal(d: Dfa) -> bool:
    """True iff L is non-empty and absorbs its alphabet on the right."""
    return _is_ideal(d, prepend=False, append=True)


def is_left_ideal(d: Dfa) -> bool:
    """True iff L is non-empty and absorbs its alphabet on the left."""
    return _is_ideal(d, prepend=True, append=False)


def is_two_sided_ideal(d: Dfa) -> bool:
    """True iff L is non-empty and absorbs its alphabet on both sides."""
    return _is_ideal(d, prepend=True, append=True)
