"""Walkthrough: testing one variable for the junta property.

A variable is "junta" when the function never actually depends on it.  The
tester puts the function's input register in uniform superposition, phase
marks the satisfying inputs, and undoes the superposition; after that, the
qubit for variable i is excited with probability exactly equal to the
variable's influence.  A CNOT onto a |1> auxiliary turns that excitation
into entanglement, which is what gets measured.
"""

import numpy as np

from qjunta import (
    influence_report,
    junta_scan,
    junta_variable_test,
    parse_anf,
    to_truth_table,
)

f = parse_anf("x0&x1 ^ x2", 3)
print(f"function under test: {f}  (n = {f.n})")
print()

# One variable at a time.  x2 appears in a linear term, so the cheap
# two-point classical probe catches it before any circuit runs.
for i in range(f.n):
    v = junta_variable_test(f, f.n, i)
    print(f"variable x{i}: {v.verdict.value}")
    if v.p1 is not None:
        print(f"    p1 = {v.p1:.6f}   c_effective = {v.c_effective:.6f}   c_wootters = {v.c_wootters:.6f}")
    print(f"    cost: {v.oracle_calls_quantum} oracle application(s), {v.oracle_calls_classical} classical queries")
print()

# The circuit population really is the brute-force influence.
table = to_truth_table(f)
print("circuit population vs exhaustive flip count:")
for i in range(f.n):
    brute = influence_report(table, i)
    v = junta_variable_test(f, f.n, i)
    measured = "n/a (linear exit)" if v.p1 is None else f"{v.p1:.10f}"
    print(f"    x{i}: nu1/N = {brute.influence:.10f}   circuit p1 = {measured}")
print()

# A function that ignores a variable entirely:
g = parse_anf("x1 ^ x1&x3", 4)
print(f"scanning all variables of {g}:")
for v in junta_scan(g, g.n):
    print(f"    x{v.variable}: {v.verdict.value}")
total_quantum = sum(v.oracle_calls_quantum for v in junta_scan(g, g.n))
print(f"whole scan used {total_quantum} oracle applications for n = {g.n} variables")

# Finite-shot mode declares junta only when no excitation is ever seen.
sampled = junta_variable_test(g, g.n, 3, mode="sampled", shots=4096, seed=7)
print()
print(f"sampled run on x3: {sampled.ones}/{sampled.shots} ones -> {sampled.verdict.value}"
      f" (estimated c = {sampled.c_effective:.4f})")
