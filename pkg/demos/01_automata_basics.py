"""Build complete DFAs, minimize them two ways, and measure complexity.

Run:  python demos/01_automata_basics.py
"""

from statecomplexity import (
    Dfa,
    Transformation,
    accepts,
    brzozowski_minimize,
    build_regular,
    is_isomorphic,
    language_alphabet,
    minimize,
    parse_dfa,
    quotient_complexity,
    render_dfa,
    trim_alphabet,
)

# A DFA is an ordered alphabet plus one total transformation per letter.
# Here is the two-state machine for the words over {a,b} that end in b:
ends_in_b = Dfa(
    state_count=2,
    alphabet=("a", "b"),
    delta=(Transformation((0, 0)), Transformation((1, 1))),
    initial=0,
    finals=frozenset({1}),
)
print("ends_in_b accepts 'ab': ", accepts(ends_in_b, "ab"))
print("ends_in_b accepts 'ba': ", accepts(ends_in_b, "ba"))

# The same machine as a diff-friendly text file (and back again):
text = render_dfa(ends_in_b)
print("\nDFA file format:")
print(text)
assert parse_dfa(text) == ends_in_b

# Witness families come ready-made. The regular witness on n states uses
# a full cycle, a transposition, a single collapsing letter, and an
# identity letter:
d4 = build_regular(4)
print("regular witness n=4, letter a:", d4.transformation("a").images)
print("its quotient complexity:      ", quotient_complexity(d4))

# Two independent minimization routes must agree: partition refinement
# and the double-reversal construction.
m1 = minimize(d4)
m2 = brzozowski_minimize(d4)
print("partition refinement == double reversal:", m1 == m2)
assert is_isomorphic(m1, m2)

# Quotient complexity is measured over the language's own alphabet. A
# letter that no accepted word uses does not count: a* over {a,b} (with b
# falling into a dead state) has complexity 1, not 2.
astar = Dfa(
    state_count=2,
    alphabet=("a", "b"),
    delta=(Transformation((0, 1)), Transformation((1, 1))),
    initial=0,
    finals=frozenset({0}),
)
print("\nalphabet of a* as declared:", astar.alphabet)
print("alphabet of the language:  ", language_alphabet(astar))
print("trimmed machine:           ", trim_alphabet(astar).state_count, "state(s)")
print("quotient complexity:       ", quotient_complexity(astar))
