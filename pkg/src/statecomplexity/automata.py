"""Complete DFAs, NFAs, and the quotient-complexity measurement.

Every DFA here is complete by construction: each letter acts on the state
set as a total transformation. States are the integers 0..n-1, the initial
state is a single index, and alphabets are ordered tuples of single
lowercase letters. All values are immutable; every function returns fresh
objects and never mutates its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Optional

EPSILON = None  # transition label for the empty word in an Nfa

# Hard cap on subset-construction growth; desk-scale sweeps stay far below.
MAX_SUBSET_STATES = 1 << 20


class CapacityError(RuntimeError):
    """A construction exceeded its configured state or element budget."""


def make_alphabet(letters: Iterable[str]) -> tuple[str, ...]:
    """Validate and freeze an ordered alphabet of distinct letters a-z."""
    seq = tuple(letters)
    for a in seq:
        if len(a) != 1 or not ("a" <= a <= "z"):
            raise ValueError(f"alphabet symbol {a!r} is not a single letter a-z")
    if len(set(seq)) != len(seq):
        raise ValueError(f"alphabet {seq!r} contains duplicate symbols")
    return seq


def union_alphabets(first: Iterable[str], second: Iterable[str]) -> tuple[str, ...]:
    """Union of two alphabets, sorted lexicographically."""
    return make_alphabet(sorted(set(first) | set(second)))


@dataclass(frozen=True)
class Transformation:
    """A total self-map of {0,...,n-1}; entry i is the image of state i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        for q, img in enumerate(self.images):
            if not 0 <= img < n:
                raise ValueError(f"image of state {q} is {img}, outside 0..{n - 1}")

    @property
    def size(self) -> int:
        return len(self.images)

    def apply(self, q: int) -> int:
        return self.images[q]

    @staticmethod
    def identity(n: int) -> "Transformation":
        return Transformation(tuple(range(n)))

    @staticmethod
    def cycle(n: int, points: Iterable[int]) -> "Transformation":
        """Cyclic permutation of the listed states; all others are fixed."""
        pts = list(points)
        images = list(range(n))
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
        return Transformation(tuple(images))

    @staticmethod
    def point_map(n: int, source: int, target: int) -> "Transformation":
        """Send one state to another; all other states are fixed."""
        images = list(range(n))
        images[source] = target
        return Transformation(tuple(images))

    @staticmethod
    def constant(n: int, target: int, domain: Optional[Iterable[int]] = None) -> "Transformation":
        """Send every state of `domain` (default: all states) to `target`."""
        images = list(range(n))
        for q in range(n) if domain is None else domain:
            images[q] = target
        return Transformation(tuple(images))


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Composition in diagrammatic order: q goes to t(s(q))."""
    if s.size != t.size:
        raise ValueError(f"cannot compose transformations of sizes {s.size} and {t.size}")
    return Transformation(tuple(t.images[img] for img in s.images))


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton over an ordered alphabet.

    `delta` holds one Transformation per alphabet letter, in alphabet
    order, so completeness is structural rather than checked per word.
    """

    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[Transformation, ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        if self.state_count <= 0:
            raise ValueError("a complete DFA needs at least one state")
        make_alphabet(self.alphabet)
        if len(self.delta) != len(self.alphabet):
            raise ValueError("need exactly one transformation per alphabet letter")
        for letter, t in zip(self.alphabet, self.delta):
            if t.size != self.state_count:
                raise ValueError(
                    f"transformation for {letter!r} has size {t.size}, expected {self.state_count}"
                )
        if not 0 <= self.initial < self.state_count:
            raise ValueError(f"initial state {self.initial} out of range")
        if not set(self.finals) <= set(range(self.state_count)):
            raise ValueError("final states out of range")

    def transformation(self, letter: str) -> Transformation:
        try:
            return self.delta[self.alphabet.index(letter)]
        except ValueError:
            raise ValueError(f"letter {letter!r} not in alphabet {self.alphabet!r}") from None

    def step(self, q: int, letter: str) -> int:
        return self.transformation(letter).images[q]

    def run(self, q: int, word: str) -> int:
        table = {a: t.images for a, t in zip(self.alphabet, self.delta)}
        for letter in word:
            if letter not in table:
                raise ValueError(f"word letter {letter!r} not in alphabet {self.alphabet!r}")
            q = table[letter][q]
        return q


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton; label EPSILON marks empty-word moves."""

    state_count: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, Optional[str], int]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self) -> None:
        make_alphabet(self.alphabet)
        for p, label, q in self.transitions:
            if not (0 <= p < self.state_count and 0 <= q < self.state_count):
                raise ValueError(f"transition ({p}, {label!r}, {q}) references a missing state")
            if label is not EPSILON and label not in self.alphabet:
                raise ValueError(f"transition label {label!r} not in alphabet")
        if not set(self.initials) <= set(range(self.state_count)):
            raise ValueError("initial states out of range")
        if not set(self.finals) <= set(range(self.state_count)):
            raise ValueError("final states out of range")


def accepts(d: Dfa, word: str) -> bool:
    """True iff the DFA ends in a final state; foreign letters are an error."""
    return d.run(d.initial, word) in d.finals


def determinize(n: Nfa) -> Dfa:
    """Accessible subset construction with epsilon closure.

    States of the result are the reachable closed subsets in BFS order
    (letters taken in alphabet order), so the numbering is canonical. The
    empty subset, if reachable, is an ordinary sink state. A subset is
    final iff it intersects the NFA's final states.
    """
    eps_adj: dict[int, list[int]] = {}
    letter_adj: dict[tuple[int, str], list[int]] = {}
    for p, label, q in n.transitions:
        if label is EPSILON:
            eps_adj.setdefault(p, []).append(q)
        else:
            letter_adj.setdefault((p, label), []).append(q)

    def closure(states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for q in eps_adj.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    start = closure(n.initials)
    index: dict[frozenset[int], int] = {start: 0}
    order: list[frozenset[int]] = [start]
    rows: list[list[int]] = [[] for _ in n.alphabet]
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for k, letter in enumerate(n.alphabet):
            targets: set[int] = set()
            for p in subset:
                targets.update(letter_adj.get((p, letter), ()))
            nxt = closure(targets)
            if nxt not in index:
                if len(index) >= MAX_SUBSET_STATES:
                    raise CapacityError(
                        f"subset construction exceeded {MAX_SUBSET_STATES} states"
                    )
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            rows[k].append(index[nxt])
    # Rows were filled in BFS order, one entry per popped subset.
    finals = frozenset(i for i, subset in enumerate(order) if subset & n.finals)
    return Dfa(
        state_count=len(order),
        alphabet=n.alphabet,
        delta=tuple(Transformation(tuple(row)) for row in rows),
        initial=0,
        finals=finals,
    )


def _reachable(d: Dfa) -> list[int]:
    """Reachable states in BFS order from the initial state."""
    seen = {d.initial}
    order = [d.initial]
    queue = deque(order)
    while queue:
        p = queue.popleft()
        for t in d.delta:
            q = t.images[p]
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return order


def _canonical_renumber(d: Dfa) -> Dfa:
    """Renumber states in BFS order from the initial state, dropping unreachable ones."""
    order = _reachable(d)
    number = {q: i for i, q in enumerate(order)}
    rows = [tuple(number[t.images[q]] for q in order) for t in d.delta]
    return Dfa(
        state_count=len(order),
        alphabet=d.alphabet,
        delta=tuple(Transformation(row) for row in rows),
        initial=0,
        finals=frozenset(number[q] for q in d.finals if q in number),
    )


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA for the same language over the same alphabet.

    Partition refinement in the Moore style: states start split by
    finality and are repeatedly re-bucketed on the classes of their
    successors until stable. The quotient automaton is then renumbered in
    BFS order, so two equal languages over equal alphabets yield identical
    (not merely isomorphic) results.
    """
    order = _reachable(d)
    cls = {q: 1 if q in d.finals else 0 for q in order}
    while True:
        buckets: dict[tuple, int] = {}
        nxt = {}
        for q in order:
            sig = (cls[q],) + tuple(cls[t.images[q]] for t in d.delta)
            if sig not in buckets:
                buckets[sig] = len(buckets)
            nxt[q] = buckets[sig]
        if len(buckets) == len(set(cls[q] for q in order)):
            break
        cls = nxt
    # Renumber classes contiguously in BFS-first-seen order.
    remap: dict[int, int] = {}
    for q in order:
        remap.setdefault(cls[q], len(remap))
    cls = {q: remap[cls[q]] for q in order}
    class_count = len(remap)
    rep: dict[int, int] = {}
    for q in order:
        rep.setdefault(cls[q], q)
    rows = []
    for t in d.delta:
        rows.append(tuple(cls[t.images[rep[c]]] for c in range(class_count)))
    quotient = Dfa(
        state_count=class_count,
        alphabet=d.alphabet,
        delta=tuple(Transformation(row) for row in rows),
        initial=cls[d.initial],
        finals=frozenset(cls[q] for q in order if q in d.finals),
    )
    return _canonical_renumber(quotient)


def reverse_nfa(d: Dfa) -> Nfa:
    """NFA for the reversed language: flipped transitions, swapped roles."""
    transitions = set()
    for letter, t in zip(d.alphabet, d.delta):
        for p, q in enumerate(t.images):
            transitions.add((q, letter, p))
    return Nfa(
        state_count=d.state_count,
        alphabet=d.alphabet,
        transitions=frozenset(transitions),
        initials=frozenset(d.finals),
        finals=frozenset({d.initial}),
    )


def brzozowski_minimize(d: Dfa) -> Dfa:
    """Minimization by double reversal; used as an oracle against minimize."""
    return determinize(reverse_nfa(determinize(reverse_nfa(d))))


def is_isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Structural equality up to renaming of states.

    Alphabets must be equal as ordered sequences. The bijection is built
    by parallel BFS from the initial states; unreachable states (absent
    when both inputs are minimal) are compared only by count.
    """
    if d1.alphabet != d2.alphabet or d1.state_count != d2.state_count:
        return False
    if (d1.initial in d1.finals) != (d2.initial in d2.finals):
        return False
    pairing = {d1.initial: d2.initial}
    queue = deque([(d1.initial, d2.initial)])
    while queue:
        p, q = queue.popleft()
        for t1, t2 in zip(d1.delta, d2.delta):
            p2, q2 = t1.images[p], t2.images[q]
            if p2 in pairing:
                if pairing[p2] != q2:
                    return False
                continue
            if q2 in pairing.values():
                return False
            if (p2 in d1.finals) != (q2 in d2.finals):
                return False
            pairing[p2] = q2
            queue.append((p2, q2))
    return True


def _useful_states(d: Dfa) -> set[int]:
    """States from which some final state is reachable."""
    back: dict[int, set[int]] = {q: set() for q in range(d.state_count)}
    for t in d.delta:
        for p, q in enumerate(t.images):
            back[q].add(p)
    useful = set(d.finals)
    queue = deque(useful)
    while queue:
        q = queue.popleft()
        for p in back[q]:
            if p not in useful:
                useful.add(p)
                queue.append(p)
    return useful


def language_alphabet(d: Dfa) -> tuple[str, ...]:
    """Letters that occur in at least one accepted word, in alphabet order."""
    reachable = set(_reachable(d))
    useful = _useful_states(d)
    kept = []
    for letter, t in zip(d.alphabet, d.delta):
        if any(t.images[p] in useful for p in reachable):
            kept.append(letter)
    return tuple(kept)


def restrict_alphabet(d: Dfa, letters: Iterable[str]) -> Dfa:
    """Drop the transition rows of every letter not in `letters`."""
    keep = tuple(a for a in d.alphabet if a in set(letters))
    rows = tuple(d.delta[d.alphabet.index(a)] for a in keep)
    return replace(d, alphabet=keep, delta=rows)


def trim_alphabet(d: Dfa) -> Dfa:
    """Restrict to the language's own alphabet, then minimize.

    The empty language and {epsilon} both trim to a single state over the
    empty alphabet, so the quotient complexity of either is 1.
    """
    return minimize(restrict_alphabet(d, language_alphabet(d)))


def quotient_complexity(d: Dfa) -> int:
    """Number of quotients of L(d) by words over the language's alphabet."""
    return trim_alphabet(d).state_count


def quotient_complexity_of_state(d: Dfa, q: int) -> int:
    """Quotient complexity of the language of state q."""
    if not 0 <= q < d.state_count:
        raise ValueError(f"state {q} out of range")
    return quotient_complexity(replace(d, initial=q))


def complete_over(d: Dfa, alphabet: Iterable[str], force_sink: bool = False) -> Dfa:
    """Extend the DFA to a larger alphabet by adding one non-final sink.

    Letters the DFA already has keep their transformations; every missing
    letter sends every state to the sink, and the sink is fixed by all of
    the target alphabet. No sink is added when no letter is missing
    (unless forced), so completion is a no-op on already-complete inputs.
    """
    target = make_alphabet(alphabet)
    missing = [a for a in target if a not in d.alphabet]
    if set(d.alphabet) - set(target):
        raise ValueError(
            f"target alphabet {target!r} is missing letters of {d.alphabet!r}"
        )
    if not missing and not force_sink:
        if target == d.alphabet:
            return d
        # Same letters, different order: just realign the rows.
        return replace(d, alphabet=target, delta=tuple(d.transformation(a) for a in target))
    n = d.state_count
    sink = n
    rows = []
    for a in target:
        if a in d.alphabet:
            rows.append(Transformation(d.transformation(a).images + (sink,)))
        else:
            rows.append(Transformation.constant(n + 1, sink))
    return Dfa(
        state_count=n + 1,
        alphabet=target,
        delta=tuple(rows),
        initial=d.initial,
        finals=d.finals,
    )
