"""Finding the variables that share a product term, and learning single terms.

The derivative oracle g(x) = f(x) ^ f(x XOR e_i) is built from two copies of
the base oracle with an X conjugation on qubit i.  It keeps exactly the
reduced forms of the terms containing x_i, so junta-testing every variable
against it reveals x_i's partners.  On a function promised to be a single
product term, one probe plus one partner sweep recovers the term exactly.
"""

from qjunta import (
    derivative,
    learn_single_term,
    parse_anf,
    same_term_variables,
    same_term_variables_brute,
)

f = parse_anf("x0&x1&x3 ^ x2 ^ x1&x2", 4)
print(f"function: {f}")
print()

for i in range(f.n):
    g = derivative(f, i)
    result = same_term_variables(f, f.n, i)
    brute = same_term_variables_brute(f, i)
    members = sorted(result.members) or "none"
    print(f"x{i}: derivative = {g}")
    print(f"    partners from the circuit: {members}   (brute force agrees: {sorted(brute) == sorted(result.members)})")
    print(f"    cost: {result.oracle_calls_quantum} base-oracle applications"
          f" (budget 2n+2 = {2 * f.n + 2})")
print()

# single-term learning, including the degenerate cases
for text in ("x0&x2&x3", "x1", "1", "0"):
    f = parse_anf(text, 4)
    learned = learn_single_term(f, 4)
    if learned.term is None:
        print(f"{text!r:12} -> constant {learned.constant_value}")
    else:
        print(f"{text!r:12} -> term {{{', '.join(f'x{i}' for i in sorted(learned.term))}}}")
