"""Operations on languages over different alphabets.

The motivating example: the union of the words over {a,b} ending in b
with the words over {a,c} ending in c. Each operand is complete over its
own two-letter alphabet, yet the union needs six states, beating the
classical same-alphabet bound of m*n = 4.

Run:  python demos/02_operations_across_alphabets.py
"""

from statecomplexity import (
    BooleanOp,
    Dfa,
    Transformation,
    apply_dialect,
    boolean,
    build_regular,
    complement,
    complete_over,
    parse_dialect,
    product,
    render_dfa,
    reverse,
    star,
)

ends_in_b = Dfa(2, ("a", "b"), (Transformation((0, 0)), Transformation((1, 1))), 0, frozenset({1}))
ends_in_c = Dfa(2, ("a", "c"), (Transformation((0, 0)), Transformation((1, 1))), 0, frozenset({1}))

# Boolean operations complete both operands over the union alphabet by
# adding a sink, then build the direct product. Completion itself:
print("ends_in_b completed over {a,b,c}:")
print(render_dfa(complete_over(ends_in_b, ("a", "b", "c"))))

union = boolean(BooleanOp.UNION, ends_in_b, ends_in_c)
print("kappa of the union:", union.kappa, "(six states, not four)")

# The regular witness family attains the worst case for every operation.
# Dialects rename or drop letters so that the two operands interleave
# private letters: (a,b,-,c) and (b,a,-,d) share a and b only.
def reg(n, spec):
    return apply_dialect(build_regular(n), parse_dialect(spec))

m = n = 4
lhs, rhs = reg(m, "a,b,-,c"), reg(n, "b,a,-,d")
print(f"\nworst-case complexities at m = n = {m}:")
print("  product          ", product(lhs, rhs).kappa, "= m*2^n + 2^(n-1)")
for op in (BooleanOp.UNION, BooleanOp.SYMDIFF, BooleanOp.DIFF, BooleanOp.INTER):
    print(f"  {op.name.lower():17s}", boolean(op, lhs, rhs).kappa)

# All ten proper boolean operations are available; complement inside them
# is always taken over the union universe.
print("\nthe ten proper boolean operations at (4,4):")
for op in BooleanOp:
    print(f"  {op.name.lower():14s} -> {boolean(op, lhs, rhs).kappa}")

# Unary operations, with their witness dialects:
print("\nstar of the two-letter witness:   ", star(reg(4, "a,b")).kappa, "= 2^(n-1) + 2^(n-2)")
print("reverse of the three-letter one:  ", reverse(reg(4, "a,b,c")).kappa, "= 2^n")
print("complement over a larger universe:", complement(reg(4, "a,b"), ("a", "b", "z")).kappa)
