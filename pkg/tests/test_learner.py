"""Partner discovery, single-term learning, categorization, count recovery."""

import itertools
import math

import numpy as np
import pytest

from qjunta import (
    BitOracle,
    Category,
    DerivativeOracle,
    Verdict,
    categorize,
    count_ones,
    derivative,
    junta_variable_test,
    learn_single_term,
    parse_anf,
    same_term_variables,
    same_term_variables_brute,
    solution_count_candidates,
    to_truth_table,
)
from qjunta.boolfn import AnfFunction
from helpers import random_anf, random_balanced_table, random_truth_table


class TestDerivative:
    def test_product_reduces(self):
        assert derivative(parse_anf("x0&x1", 2), 0) == parse_anf("x1", 2)

    def test_junta_variable_vanishes(self):
        assert derivative(parse_anf("x2", 3), 0) == parse_anf("0", 3)

    def test_linear_variable_gives_constant(self):
        assert derivative(parse_anf("x0", 1), 0) == parse_anf("1", 1)

    def test_never_contains_direction(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            f = random_anf(rng, n)
            i = int(rng.integers(0, n))
            g = derivative(f, i)
            assert all(i not in term for term in g.terms)
            # and the derivative oracle itself always tests junta on i
            verdict = junta_variable_test(DerivativeOracle(BitOracle(f, n), i), n, i)
            assert verdict.verdict is Verdict.JUNTA


class TestSameTermVariables:
    def test_product_partner(self):
        result = same_term_variables(parse_anf("x0&x1 ^ x2", 3), 3, 0)
        assert result.members == {1}

    def test_linear_variable_has_no_partners(self):
        result = same_term_variables(parse_anf("x0 ^ x1", 2), 2, 0)
        assert result.members == frozenset()
        assert result.initial_verdict.verdict is Verdict.NOT_JUNTA_LINEAR

    def test_junta_variable_early_exit(self):
        result = same_term_variables(parse_anf("x2", 3), 3, 0)
        assert result.members == frozenset()
        assert result.per_variable == {}
        # only the initial test ran: no derivative-oracle applications at all
        assert result.oracle_calls_quantum == result.initial_verdict.oracle_calls_quantum

    def test_matches_brute_force(self):
        rng = np.random.default_rng(43)
        for _ in range(60):
            n = int(rng.integers(1, 7))
            f = random_anf(rng, n)
            i = int(rng.integers(0, n))
            assert same_term_variables(f, n, i).members == same_term_variables_brute(f, i)

    def test_call_budget(self):
        rng = np.random.default_rng(45)
        for _ in range(40):
            n = int(rng.integers(1, 7))
            f = random_anf(rng, n)
            i = int(rng.integers(0, n))
            result = same_term_variables(f, n, i)
            assert result.oracle_calls_quantum <= 2 * n + 2

    def test_sampled_mode_reproducible(self):
        f = parse_anf("x0&x1 ^ x1&x2", 3)
        a = same_term_variables(f, 3, 1, mode="sampled", shots=2048, seed=77)
        b = same_term_variables(f, 3, 1, mode="sampled", shots=2048, seed=77)
        assert a.members == b.members == {0, 2}


class TestLearnSingleTerm:
    def test_two_variable_product(self):
        learned = learn_single_term(parse_anf("x0&x2", 3), 3)
        assert learned.term == {0, 2}
        assert learned.constant_value is None

    def test_bare_linear_variable(self):
        learned = learn_single_term(parse_anf("x1", 3), 3)
        assert learned.term == {1}

    def test_constants(self):
        for n, text, value in [(2, "1", 1), (2, "0", 0), (4, "0", 0)]:
            learned = learn_single_term(parse_anf(text, n), n)
            assert learned.term is None
            assert learned.constant_value == value

    def test_exhaustive_small(self):
        for n in range(1, 5):
            for size in range(1, n + 1):
                for combo in itertools.combinations(range(n), size):
                    f = AnfFunction(n, frozenset([frozenset(combo)]))
                    learned = learn_single_term(f, n)
                    assert learned.term == frozenset(combo), f

    def test_constant_bit_carried_with_term(self):
        learned = learn_single_term(parse_anf("1 ^ x0", 2), 2)
        assert learned.term == {0}
        assert learned.constant_term_present == 1


class TestCategorize:
    def test_constant_functions(self):
        for text, value in [("0", 0), ("1", 1)]:
            verdict = categorize(parse_anf(text, 2), 2)
            assert verdict.category is Category.CONSTANT
            assert verdict.c_effective <= 1e-9
            assert verdict.constant_value == value
            assert verdict.m_candidates == (0, 4)

    def test_balanced_function(self):
        verdict = categorize(parse_anf("x0", 2), 2)
        assert verdict.category is Category.BALANCED
        assert verdict.c_effective == pytest.approx(1.0, abs=1e-9)
        assert verdict.m_candidates == (2, 2)

    def test_other_function(self):
        verdict = categorize(parse_anf("x0&x1", 2), 2)
        assert verdict.category is Category.OTHER
        assert verdict.c_effective == pytest.approx(math.sqrt(3) / 2, abs=1e-9)
        assert verdict.m_candidates == (1, 3)
        assert verdict.constant_value is None

    def test_population_is_ones_fraction(self):
        rng = np.random.default_rng(47)
        for _ in range(40):
            n = int(rng.integers(1, 8))
            table = random_truth_table(rng, n)
            verdict = categorize(table, n)
            assert verdict.p1 == pytest.approx(count_ones(table) / (1 << n), abs=1e-9)

    def test_random_balanced_tables(self):
        rng = np.random.default_rng(49)
        for _ in range(30):
            n = int(rng.integers(1, 8))
            verdict = categorize(random_balanced_table(rng, n), n)
            assert verdict.category is Category.BALANCED
            assert abs(verdict.c_effective - 1.0) <= 1e-9

    def test_candidates_bracket_true_count(self):
        rng = np.random.default_rng(51)
        for _ in range(40):
            n = int(rng.integers(1, 8))
            table = random_truth_table(rng, n)
            verdict = categorize(table, n)
            assert count_ones(table) in verdict.m_candidates

    def test_threshold_note_attached(self):
        assert "c = 1" in categorize(parse_anf("x0", 1), 1).note

    def test_sampled_mode_reproducible(self):
        table = random_truth_table(np.random.default_rng(53), 4)
        a = categorize(table, 4, mode="sampled", shots=4096, seed=5)
        b = categorize(table, 4, mode="sampled", shots=4096, seed=5)
        assert a == b
        assert a.zeros + a.ones == 4096


class TestSolutionCountCandidates:
    def test_anchor_cases(self):
        assert solution_count_candidates(0.0, 4) == (0, 4)
        assert solution_count_candidates(1.0, 4) == (2, 2)
        assert solution_count_candidates(math.sqrt(3) / 2, 4) == (1, 3)

    def test_roots_sum_to_size_and_invert_exactly(self):
        for n in range(1, 9):
            size = 1 << n
            for m in range(size + 1):
                c = 2.0 * math.sqrt(m * (size - m)) / size
                low, high = solution_count_candidates(c, size)
                assert low + high == size
                assert (low, high) == (min(m, size - m), max(m, size - m))
                # re-substituting either root reproduces the concurrence
                assert 2.0 * math.sqrt(low * (size - low)) / size == pytest.approx(c, abs=1e-6)

    def test_validation(self):
        with pytest.raises(ValueError):
            solution_count_candidates(0.5, 3)
        with pytest.raises(ValueError):
            solution_count_candidates(1.5, 4)
