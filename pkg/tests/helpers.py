"""Shared random generators for the test suite (always seeded by callers)."""

import numpy as np

from qjunta import AnfFunction, PureTwoQubit, StateVector, TruthTable


def random_anf(rng: np.random.Generator, n: int, max_terms: int = 8) -> AnfFunction:
    """Uniformly pick a set of distinct product terms (possibly empty)."""
    count = int(rng.integers(0, min(max_terms, 1 << n) + 1))
    masks = rng.choice(1 << n, size=count, replace=False)
    terms = frozenset(
        frozenset(i for i in range(n) if (int(m) >> i) & 1) for m in masks
    )
    return AnfFunction(n, terms)


def random_truth_table(rng: np.random.Generator, n: int) -> TruthTable:
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def random_balanced_table(rng: np.random.Generator, n: int) -> TruthTable:
    size = 1 << n
    bits = np.zeros(size, dtype=np.uint8)
    bits[rng.permutation(size)[: size // 2]] = 1
    return TruthTable(n, bits)


def random_state(rng: np.random.Generator, num_qubits: int) -> StateVector:
    amps = rng.normal(size=1 << num_qubits) + 1j * rng.normal(size=1 << num_qubits)
    return StateVector(num_qubits, amps / np.linalg.norm(amps))


def random_pure_pair(rng: np.random.Generator) -> PureTwoQubit:
    vec = rng.normal(size=4) + 1j * rng.normal(size=4)
    vec /= np.linalg.norm(vec)
    return PureTwoQubit(*vec)
