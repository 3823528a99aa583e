"""Atoms: non-empty intersections of complemented and uncomplemented quotients.

For a minimal n-state DFA, every subset S of states names a candidate
atom: the words whose quotient-membership profile is exactly S (the word
lies in the quotient of each state in S and outside every other
quotient). Words are partitioned by their profile, so distinct atoms are
disjoint and the non-empty profiles count the quotients of the reversed
language.
"""

from __future__ import annotations

from collections import deque
from math import comb
from typing import Iterable

from .automata import MAX_SUBSET_STATES, CapacityError, Dfa, Transformation, minimize
from .witnesses import WitnessClass


class EmptyAtomError(ValueError):
    """Raised when a complexity is requested for a profile with no words."""


def _pair_automaton(d: Dfa, s: frozenset[int]) -> Dfa:
    """DFA over (X, Y) pairs tracking the images of S and of its complement.

    A pair with overlapping halves can never separate again, so all such
    pairs collapse into one dead state up front. Accepting pairs are those
    with X inside the finals and Y disjoint from them.
    """
    every = frozenset(range(d.state_count))
    start = (s, every - s)
    dead = "dead"
    index: dict[object, int] = {start: 0}
    order: list[object] = [start]
    rows: list[list[int]] = [[] for _ in d.alphabet]
    queue: deque[object] = deque([start])
    while queue:
        state = queue.popleft()
        for k, t in enumerate(d.delta):
            if state == dead:
                nxt: object = dead
            else:
                x, y = state
                nx = frozenset(t.images[q] for q in x)
                ny = frozenset(t.images[q] for q in y)
                nxt = dead if nx & ny else (nx, ny)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            rows[k].append(index[nxt])
    finals = frozenset(
        i
        for i, state in enumerate(order)
        if state != dead and state[0] <= d.finals and not (state[1] & d.finals)
    )
    return Dfa(
        state_count=len(order),
        alphabet=d.alphabet,
        delta=tuple(Transformation(tuple(row)) for row in rows),
        initial=0,
        finals=finals,
    )


def atom_dfa(d: Dfa, s: Iterable[int]) -> Dfa:
    """Minimal DFA of the atom named by S, over the input's full alphabet.

    The input must be minimal over its language's alphabet. The result is
    minimized but deliberately not alphabet-trimmed any further: atoms are
    read as languages over the same alphabet as the input. An atom with no
    words comes back as the one-state dead DFA.
    """
    return minimize(_pair_automaton(d, frozenset(s)))


def atom_exists(d: Dfa, s: Iterable[int]) -> bool:
    """True iff some word has exactly the profile S."""
    pairs = _pair_automaton(d, frozenset(s))
    return bool(pairs.finals)  # every state of the pair automaton is reachable


def atoms(d: Dfa) -> list[frozenset[int]]:
    """All profiles S whose atom is non-empty, in bitmask order.

    The profile of a word w is {q : the quotient of q contains w}, and
    reading w backwards from the final states of a minimal DFA computes
    exactly that set. The realized profiles are therefore the subsets
    reachable by preimage steps from the final-state set, which keeps the
    enumeration proportional to the number of atoms rather than to 2^n.
    """
    start = frozenset(d.finals)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for t in d.delta:
            nxt = frozenset(p for p, q in enumerate(t.images) if q in current)
            if nxt not in seen:
                if len(seen) >= MAX_SUBSET_STATES:
                    raise CapacityError(
                        f"atom enumeration exceeded {MAX_SUBSET_STATES} profiles"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda s: sum(1 << q for q in s))


def atom_complexity(d: Dfa, s: Iterable[int]) -> int:
    """Quotient complexity of the atom named by S.

    Raising on an empty atom keeps "no such atom" distinct from the
    one-state complexity of an actual language.
    """
    a = atom_dfa(d, s)
    if not a.finals:
        raise EmptyAtomError(f"no word has profile {sorted(frozenset(s))!r}")
    return a.state_count


def _double_sum(n: int, size: int, inner) -> int:
    return 1 + sum(
        inner(x, y) for x in range(1, size + 1) for y in range(1, n - size + 1)
    )


def atom_formula(witness_class: WitnessClass, n: int, s: Iterable[int]) -> int:
    """Closed-form atom complexity for the witness of the given class.

    Defined exactly for the profiles the closed forms cover; other
    profiles (whose atoms the witnesses do not realize) raise ValueError.
    """
    if n < witness_class.min_n:
        raise ValueError(f"{witness_class.value} witness needs n >= {witness_class.min_n}")
    s = frozenset(s)
    full = frozenset(range(n))
    size = len(s)
    if witness_class is WitnessClass.REGULAR:
        if s == full or not s:
            return (1 << n) - 1
        return _double_sum(n, size, lambda x, y: comb(n, x) * comb(n - x, y))
    if witness_class is WitnessClass.RIGHT_IDEAL:
        if s == full:
            return 1 << (n - 1)
        if not s:
            raise ValueError("the empty profile is not an atom of a right ideal")
        return _double_sum(n, size, lambda x, y: comb(n - 1, x - 1) * comb(n - x, y))
    if witness_class is WitnessClass.LEFT_IDEAL:
        if s == full:
            return n
        if not s:
            return 1 << (n - 1)
        return _double_sum(n, size, lambda x, y: comb(n - 1, x) * comb(n - 1 - x, y))
    if witness_class is WitnessClass.TWO_SIDED_IDEAL:
        if s == full:
            return n
        if s == full - {1}:
            return (1 << (n - 2)) + n - 1
        if not s:
            raise ValueError("the empty profile is not an atom of a two-sided ideal")
        return _double_sum(
            n, size, lambda x, y: comb(n - 2, x - 1) * comb(n - x - 1, y - 1)
        )
    raise ValueError(f"unknown witness class {witness_class!r}")
