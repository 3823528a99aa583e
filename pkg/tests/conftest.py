"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from statecomplexity import Dfa, Nfa, Transformation, make_alphabet


def fig_ends_in_b() -> Dfa:
    """Two-state minimal DFA for the words over {a,b} ending in b."""
    return Dfa(
        state_count=2,
        alphabet=("a", "b"),
        delta=(Transformation((0, 0)), Transformation((1, 1))),
        initial=0,
        finals=frozenset({1}),
    )


def fig_ends_in_c() -> Dfa:
    """Two-state minimal DFA for the words over {a,c} ending in c."""
    return Dfa(
        state_count=2,
        alphabet=("a", "c"),
        delta=(Transformation((0, 0)), Transformation((1, 1))),
        initial=0,
        finals=frozenset({1}),
    )


def random_dfa(rng: random.Random, max_states: int = 8, letters: str = "abcd") -> Dfa:
    """Uniformly random complete DFA; not necessarily minimal."""
    n = rng.randint(1, max_states)
    k = rng.randint(1, len(letters))
    alphabet = make_alphabet(sorted(rng.sample(letters, k)))
    delta = tuple(
        Transformation(tuple(rng.randrange(n) for _ in range(n))) for _ in alphabet
    )
    final_count = rng.randint(0, n)
    finals = frozenset(rng.sample(range(n), final_count))
    return Dfa(n, alphabet, delta, rng.randrange(n), finals)


def random_word(rng: random.Random, alphabet: tuple[str, ...], max_len: int = 12) -> str:
    if not alphabet:
        return ""
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def word_in(d: Dfa, word: str) -> bool:
    """Language membership that treats foreign letters as rejection.

    A word using a letter outside the DFA's alphabet cannot be in its
    language, so this is membership in L(d) as a set of words over any
    larger universe.
    """
    table = {a: t.images for a, t in zip(d.alphabet, d.delta)}
    q = d.initial
    for letter in word:
        if letter not in table:
            return False
        q = table[letter][q]
    return q in d.finals


def nfa_accepts(n: Nfa, word: str) -> bool:
    """Direct NFA simulation; an oracle independent of determinize."""
    eps: dict[int, set[int]] = {}
    step: dict[tuple[int, str], set[int]] = {}
    for p, label, q in n.transitions:
        if label is None:
            eps.setdefault(p, set()).add(q)
        else:
            step.setdefault((p, label), set()).add(q)

    def closure(states: set[int]) -> set[int]:
        out = set(states)
        stack = list(states)
        while stack:
            p = stack.pop()
            for q in eps.get(p, ()):
                if q not in out:
                    out.add(q)
                    stack.append(q)
        return out

    current = closure(set(n.initials))
    for letter in word:
        nxt: set[int] = set()
        for p in current:
            nxt |= step.get((p, letter), set())
        current = closure(nxt)
    return bool(current & n.finals)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
