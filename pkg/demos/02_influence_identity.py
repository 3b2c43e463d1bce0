"""Why the tester works: the circuit measures influence exactly.

For every variable of a random function, compare the excitation probability
of qubit i after the circuit against nu1/N counted by brute force over all
2^n inputs.  They agree to machine precision, which is the identity that
grounds the whole decision rule: junta <=> influence 0 <=> no excitation
<=> no entanglement after the probe CNOT.
"""

import numpy as np

from qjunta import AnfFunction, influence_circuit, influence_report, to_truth_table

rng = np.random.default_rng(1)

n = 6
masks = rng.choice(1 << n, size=5, replace=False)
terms = frozenset(frozenset(i for i in range(n) if (int(m) >> i) & 1) for m in masks)
f = AnfFunction(n, terms)
table = to_truth_table(f)

print(f"random function on {n} variables: {f}")
print()
print("var   nu0   nu1     nu1/N          circuit p1       |difference|")
for i in range(n):
    brute = influence_report(table, i)
    run = influence_circuit(f, n, i)
    print(
        f"x{i}   {brute.nu0:4d}  {brute.nu1:4d}   {brute.influence:.10f}   "
        f"{run.p1:.10f}   {abs(run.p1 - brute.influence):.2e}"
    )

print()
print("and the probe's effective concurrence reproduces 2*sqrt(nu0*nu1)/N:")
for i in range(n):
    brute = influence_report(table, i)
    run = influence_circuit(f, n, i)
    print(f"x{i}   brute c = {brute.c_effective:.10f}   circuit c = {run.c_effective:.10f}")
