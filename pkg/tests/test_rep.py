from fractions import Fraction
from math import factorial

import pytest

from hessgkm.betti import b2_closed_form
from hessgkm.combinatorics import HessenbergFunction, Partition, Permutation, partitions
from hessgkm.errors import NonIntegralSolution, NotConnected, PreconditionUnmet
from hessgkm.rep import (
    ClassFunction,
    ModuleDecomposition,
    beta_formula,
    cycle_type,
    decompose,
    dot_action_character,
    h2d_decomposition_formula,
    m_lambda_character,
    m_lambda_dimension,
)

H = HessenbergFunction.parse
Pt = Partition.parse


def brute_fixed_cosets(lam: Partition, sigma: Permutation) -> int:
    """Count ordered set partitions with block sizes ``lam`` fixed blockwise by ``sigma``."""
    n = lam.n

    def rec(remaining: frozenset, sizes):
        if not sizes:
            return 1
        from itertools import combinations
        total = 0
        for block in combinations(sorted(remaining), sizes[0]):
            b = frozenset(block)
            if sigma.image_set(b) == b:
                total += rec(remaining - b, sizes[1:])
        return total

    return rec(frozenset(range(1, n + 1)), lam.parts)


class TestPermutationModules:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_trivial_and_natural(self, n):
        for mu in partitions(n):
            assert m_lambda_character(Partition((n,)), mu) == 1
            assert m_lambda_character(Partition((n - 1, 1)), mu) == mu.parts.count(1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_regular(self, n):
        ones = Partition((1,) * n)
        for mu in partitions(n):
            assert m_lambda_character(ones, mu) == (factorial(n) if mu == ones else 0)

    @pytest.mark.parametrize("n", [4, 5])
    def test_packing_matches_brute_force(self, n):
        from hessgkm.combinatorics import cycle_type_representative
        for lam in partitions(n):
            for mu in partitions(n):
                sigma = cycle_type_representative(mu)
                assert cycle_type(sigma) == mu
                assert m_lambda_character(lam, mu) == brute_fixed_cosets(lam, sigma)

    def test_dimension(self):
        assert m_lambda_dimension(Pt("6,2")) == 28
        assert m_lambda_dimension(Pt("7,1")) == 8


class TestDecompose:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_basic_characters(self, n):
        fixed = ClassFunction(n, {mu: mu.parts.count(1) for mu in partitions(n)})
        assert decompose(fixed) == ModuleDecomposition(n, {Partition((n - 1, 1)): 1})
        one = ClassFunction(n, {mu: 1 for mu in partitions(n)})
        assert decompose(one) == ModuleDecomposition(n, {Partition((n,)): 1})

    def test_round_trip_on_random_combination(self):
        n = 5
        mult = {lam: c for lam, c in zip(partitions(n), [3, 0, 2, 1, 0, 4, 1])}
        chi = ClassFunction(n, {mu: sum(c * m_lambda_character(lam, mu) for lam, c in mult.items())
                                for mu in partitions(n)})
        assert decompose(chi) == ModuleDecomposition(n, mult)

    def test_non_integral(self):
        with pytest.raises(NonIntegralSolution):
            decompose(ClassFunction(2, {Pt("2"): Fraction(1, 2), Pt("1,1"): 1}))

    def test_signed_output_is_flagged(self):
        sign = ClassFunction(2, {Pt("2"): -1, Pt("1,1"): 1})
        dec = decompose(sign)
        assert not dec.is_nonnegative()
        assert dec.dimension() == 1


class TestDotActionCharacter:
    def test_hexagon(self):
        chi = dot_action_character(H("2,3,3"), 1)
        assert chi(Pt("1,1,1")) == 4
        assert chi(Pt("3")) == 1
        assert decompose(chi) == ModuleDecomposition(3, {Pt("2,1"): 1, Pt("3"): 1})

    def test_flag_is_trivial(self):
        chi = dot_action_character(H("3,3,3"), 1)
        assert set(chi.values.values()) == {2}

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            dot_action_character(H("1,3,3"), 1)


class TestFormulas:
    def test_example_decomposition(self):
        dec = beta_formula(H("2,3,6,6,6,7,8,8"))
        assert dec == ModuleDecomposition(8, {Pt("8"): 3, Pt("7,1"): 2, Pt("6,2"): 2})
        assert str(dec) == "3*M(8) + 2*M(7,1) + 2*M(6,2)"
        assert dec.dimension() == 3 + 2 * 8 + 2 * 28 == b2_closed_form(H("2,3,6,6,6,7,8,8"))

    def test_derived_example(self):
        dec = beta_formula(H("3,3,4,5,5"))
        assert dec == ModuleDecomposition(5, {Pt("5"): 2, Pt("4,1"): 1, Pt("3,2"): 1})
        assert dec.dimension() == 17
        assert dec.to_json() == {"(5)": 2, "(4,1)": 1, "(3,2)": 1}

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_full_square(self, n):
        assert beta_formula(HessenbergFunction.full(n)) == ModuleDecomposition(n, {Partition((n,)): n - 1})

    def test_h2d_formula(self):
        dec = h2d_decomposition_formula(H("3,4,5,5,5"), 2)
        assert dec == ModuleDecomposition(5, {Pt("5"): 7, Pt("4,1"): 2})
        assert dec.dimension() == 17

    def test_h2d_precondition(self):
        with pytest.raises(PreconditionUnmet):
            h2d_decomposition_formula(H("2,3,4,4"), 2)

    @pytest.mark.parametrize("h, d", [("3,4,5,5,5", 2), ("4,4,4,4", 2), ("3,4,4,4", 2)])
    def test_h2d_matches_character(self, h, d):
        assert decompose(dot_action_character(H(h), d)) == h2d_decomposition_formula(H(h), d)
