"""Single-variable junta testing through forced entanglement.

The test for variable ``x_i`` of an n-input black box runs in three stages:

1. *Linearity gate* (classical, 2 queries): if ``f(0) != f(e_i)`` the
   variable sits in a linear term; it is reported not-junta immediately and
   no circuit runs.  This catches the one case the circuit is blind to: a
   variable appearing only linearly drives the tested qubit all the way to
   |1>, which is again a product state.
2. *Influence circuit* (quantum, 1 oracle application): prepare
   ``|0>^n (x) |1> (x) |1>`` on ``n+2`` qubits, apply H to the first ``n+1``
   qubits, apply the bit oracle with qubit ``n`` as the phase-kickback
   target, apply H to the first ``n+1`` qubits again.  Qubit ``i`` then
   carries the variable's influence as its excitation probability:
   ``p1 = nu1 / 2^n`` exactly.
3. *Entangling probe*: CNOT from qubit ``i`` onto the auxiliary qubit
   ``n+1`` (prepared in |1>), then measure the entanglement of the pair.

The verdict statistic is the population ``p1`` (equivalently the effective
concurrence ``2*sqrt(p1(1-p1))``), not the Wootters concurrence of the
reduced pair: the pair is mixed in general and its exact concurrence can
vanish for non-junta variables (``x0`` of ``x0&x1`` is the witness).  Both
numbers are always reported so the discrepancy stays visible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import qsim
from .entangle import concurrence_wootters, effective_concurrence
from .qsim import StateVector, TwoQubitDensity

# Populations at or below this are "no measurable excitation" in exact mode.
EPSILON_ZERO = 1e-9


class Verdict(enum.Enum):
    JUNTA = "junta"
    NOT_JUNTA_LINEAR = "not-junta-linear"
    NOT_JUNTA = "not-junta"


class ProbeResult(NamedTuple):
    """Entangling-probe output: post-CNOT state, reduced pair, both measures."""

    state: StateVector
    density: TwoQubitDensity
    c_effective: float
    c_wootters: float


@dataclass(frozen=True)
class CircuitRun:
    """Diagnostics of one influence-circuit execution for one variable."""

    state: StateVector
    density: TwoQubitDensity
    p1: float
    c_effective: float
    c_wootters: float


@dataclass(frozen=True)
class JuntaVerdict:
    """Decision for one variable, with full diagnostics.

    ``p1`` and the concurrences are None when the linearity gate fired (the
    circuit never ran).  In sampled mode ``p1`` is the empirical fraction
    ``ones/shots`` and ``c_effective`` is computed from it; ``c_wootters``
    always comes from the exactly simulated reduced pair.  Oracle call
    counters are in units of the oracle under test.
    """

    verdict: Verdict
    variable: int
    p1: float | None
    c_effective: float | None
    c_wootters: float | None
    constant_term_present: int
    oracle_calls_quantum: int
    oracle_calls_classical: int
    mode: str
    shots: int | None = None
    seed: int | None = None
    zeros: int | None = None
    ones: int | None = None


def _check_mode(mode: str, shots: int | None, seed: int | None) -> None:
    if mode not in ("exact", "sampled"):
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    if mode == "sampled":
        if shots is None or shots < 1:
            raise ValueError(f"sampled mode needs shots >= 1, got {shots!r}")
        if seed is None:
            raise ValueError("sampled mode needs an explicit seed")


def population_concurrence(p0: float, p1: float) -> float:
    """Effective concurrence from an unnormalized population pair."""
    total = p0 + p1
    if total <= 0.0:
        raise ValueError("populations sum to zero")
    return min(1.0, 2.0 * math.sqrt(p0 * p1) / total)


def entangling_probe(state: StateVector, tested: int, aux: int) -> ProbeResult:
    """CNOT from ``tested`` onto the |1> auxiliary, then quantify the pair.

    Requires the auxiliary to be an unentangled |1> factor, which is checked
    through its reduced state (population 1 pins the whole 2x2 density).
    """
    if tested == aux:
        raise ValueError(f"tested and auxiliary qubit coincide: {tested}")
    if abs(qsim.prob_one(state, aux) - 1.0) > 1e-9:
        raise ValueError(f"auxiliary qubit {aux} is not in |1>")
    after = qsim.apply_cnot(state, control=tested, target=aux)
    density = qsim.reduced_density_two_qubits(after, tested, aux)
    c_eff = population_concurrence(*qsim.prob_pair(after, tested))
    return ProbeResult(after, density, c_eff, concurrence_wootters(density))


def influence_circuit(f, n: int, i: int) -> CircuitRun:
    """Run the influence circuit plus entangling probe for variable ``i``.

    This is the quantum stage on its own, with no classical linearity gate;
    ``p1`` equals the variable's influence ``nu1/2^n`` exactly.
    """
    oracle = qsim.as_oracle(f, n)
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for n={n}")
    state = qsim.new_state(n + 2, basis=(1 << n) | (1 << (n + 1)))
    state = qsim.apply_hadamard_layer(state, range(n + 1))
    state = oracle.apply(state, target=n)
    state = qsim.apply_hadamard_layer(state, range(n + 1))
    probe = entangling_probe(state, tested=i, aux=n + 1)
    p0, p1 = qsim.prob_pair(probe.state, i)
    return CircuitRun(probe.state, probe.density, p1 / (p0 + p1), probe.c_effective, probe.c_wootters)


def junta_variable_test(
    f,
    n: int,
    i: int,
    mode: str = "exact",
    shots: int | None = None,
    seed: int | None = None,
) -> JuntaVerdict:
    """Decide whether variable ``i`` of the n-input black box is junta.

    Costs exactly 2 classical queries plus at most 1 quantum application of
    the oracle.  In sampled mode, junta is declared only on zero observed
    ones; populations below roughly ``1/shots`` can then be missed, which is
    inherent to any finite-shot tester.
    """
    _check_mode(mode, shots, seed)
    oracle = qsim.as_oracle(f, n)
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for n={n}")

    v0 = oracle.query(0)
    v1 = oracle.query(1 << i)
    if v0 != v1:
        return JuntaVerdict(
            verdict=Verdict.NOT_JUNTA_LINEAR,
            variable=i,
            p1=None,
            c_effective=None,
            c_wootters=None,
            constant_term_present=v0,
            oracle_calls_quantum=0,
            oracle_calls_classical=2,
            mode=mode,
            shots=shots,
            seed=seed,
        )

    run = influence_circuit(oracle, n, i)
    if mode == "exact":
        p1 = run.p1
        c_eff = run.c_effective
        zeros = ones = None
        is_junta = p1 <= EPSILON_ZERO
    else:
        zeros, ones = qsim.sample_counts(run.state, i, shots, seed)
        p1 = ones / shots
        c_eff = effective_concurrence(p1)
        is_junta = ones == 0
    return JuntaVerdict(
        verdict=Verdict.JUNTA if is_junta else Verdict.NOT_JUNTA,
        variable=i,
        p1=p1,
        c_effective=c_eff,
        c_wootters=run.c_wootters,
        constant_term_present=v0,
        oracle_calls_quantum=1,
        oracle_calls_classical=2,
        mode=mode,
        shots=shots,
        seed=seed,
        zeros=zeros,
        ones=ones,
    )


def junta_scan(
    f,
    n: int,
    mode: str = "exact",
    shots: int | None = None,
    seed: int | None = None,
) -> list[JuntaVerdict]:
    """Test every variable in turn: at most ``n`` quantum oracle applications
    and exactly ``2n`` classical queries in total.

    In sampled mode the per-variable seed is ``seed + i`` so repeated scans
    stay reproducible.
    """
    oracle = qsim.as_oracle(f, n)
    return [
        junta_variable_test(
            oracle, n, i, mode=mode, shots=shots,
            seed=None if seed is None else seed + i,
        )
        for i in range(n)
    ]
