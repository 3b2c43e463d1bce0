"""Constant / balanced / other categorization, and counting solutions.

One oracle application records f into a readout qubit held against the
uniform input superposition; that qubit's excitation probability is M/N
(M = number of satisfying inputs).  The probe concurrence is then
2*sqrt(M*(N-M))/N: zero exactly for constants, one exactly for balanced
functions, and in between it can be inverted for M, up to the inherent
M <-> N-M ambiguity.
"""

import numpy as np

from qjunta import TruthTable, categorize, count_ones, parse_anf, to_truth_table

cases = [
    ("0", 3),
    ("1", 3),
    ("x0", 3),              # balanced: M = 4 of 8
    ("x0&x1", 2),           # M = 1 of 4 -> c = sqrt(3)/2
    ("x0&x1 ^ x2", 3),      # balanced again
    ("x0&x1&x2 ^ x1", 3),
]

print("function          category   c_effective     M candidates   true M")
for text, n in cases:
    f = parse_anf(text, n)
    verdict = categorize(f, n)
    true_m = count_ones(to_truth_table(f))
    print(
        f"{text:16}  {verdict.category.value:9}  {verdict.c_effective:.10f}  "
        f"{str(verdict.m_candidates):13}  {true_m}"
    )
print()
print("(the two candidates always sum to N; the measurement cannot tell M from N-M)")
print()

# the same decision from finite shots
rng = np.random.default_rng(3)
bits = np.zeros(16, dtype=np.uint8)
bits[rng.permutation(16)[:5]] = 1   # M = 5 of 16
table = TruthTable(4, bits)
exact = categorize(table, 4)
sampled = categorize(table, 4, mode="sampled", shots=100_000, seed=123)
print(f"random table with M = 5 of 16:")
print(f"    exact:   c = {exact.c_effective:.6f}  candidates = {exact.m_candidates}")
print(f"    sampled: c = {sampled.c_effective:.6f}  candidates = {sampled.m_candidates}"
      f"  ({sampled.ones} ones in {sampled.shots} shots)")
