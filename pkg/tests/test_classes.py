import pytest
from hypothesis import given, settings, strategies as st

from hessgkm.classes import (
    EquivariantClass,
    all_classes,
    class_sum,
    class_t,
    class_tau,
    class_x,
    class_y,
    class_y_star,
    dot_act,
    subsets_of_size,
    verify_relation_suite,
)
from hessgkm.combinatorics import HessenbergFunction, Permutation, group_elements, hessenberg_functions
from hessgkm.errors import InvalidCardinality, PreconditionUnmet
from hessgkm.gkm import build_graph, check_gkm
from hessgkm.symbolic import Polynomial

from conftest import permutations_of

H = HessenbergFunction.parse
P = Permutation.parse


def t(k, n):
    return Polynomial.var(n, k)


class TestValues:
    def test_constant_class(self):
        f = class_t(3, 2)
        assert all(f(w) == t(2, 3) for w in group_elements(3))

    def test_x(self):
        assert class_x(3, 1)(P("231")) == t(2, 3)

    def test_y_degree_one(self):
        y = class_y(H("2,3,3"), 1, 3)
        assert y(P("312")) == t(3, 3) - t(1, 3)
        assert y(P("123")).is_zero()

    def test_y_general_degree(self):
        y = class_y(H("3,4,5,5,5"), 1, 5)
        assert y.degree == 2
        w = P("51234")
        assert y(w) == (t(5, 5) - t(w(2), 5)) * (t(5, 5) - t(w(3), 5))

    def test_tau(self):
        tau = class_tau(H("2,3,3"), {3})
        assert tau(P("312")) == t(3, 3) - t(1, 3)
        assert tau(P("123")).is_zero()

    def test_tau_cardinality(self):
        with pytest.raises(InvalidCardinality):
            class_tau(H("3,3,4,5,5"), {1})

    def test_y_star(self):
        f = class_y_star(H("3,4,5,5,5"), 4, 1)
        assert f(P("23451")) == (t(1, 5) - t(3, 5)) * (t(1, 5) - t(4, 5))

    def test_y_star_vanishes_on_prefix(self):
        h = H("3,4,5,5,5")
        for w in group_elements(5):
            for i in range(2, 6):
                for k in (w(m) for m in range(1, i)):
                    assert class_y_star(h, i, k)(w).is_zero()

    @pytest.mark.parametrize("h", ["2,3,3", "3,3,4,5,5", "3,4,5,5,5"])
    def test_homogeneous(self, h):
        assert all(f.is_homogeneous() for f in all_classes(H(h)).values())


class TestRelations:
    def test_sum_x(self):
        assert class_sum((class_x(3, i) for i in (1, 2, 3)), 3, 1) == \
            class_sum((class_t(3, k) for k in (1, 2, 3)), 3, 1)

    def test_sum_y_example(self):
        h = H("3,3,4,5,5")
        lhs = class_sum((class_y(h, 2, k) for k in range(1, 6)), 5, 1)
        x = [class_x(5, i) for i in range(1, 6)]
        assert lhs == x[0] + x[1] - x[2] * 2

    def test_sum_tau(self):
        h = H("2,3,3")
        lhs = class_sum((class_tau(h, A) for A in subsets_of_size(3, 1)), 3, 1)
        assert lhs == class_x(3, 1) - class_x(3, 2)

    def test_tail_relation(self):
        h = H("2,3,3")
        for k in (1, 2, 3):
            lhs = class_sum((class_tau(h, A) for j in (1, 2) for A in subsets_of_size(3, j) if k in A), 3, 1)
            assert lhs == class_t(3, k) - class_x(3, 3)

    def test_complement_identity(self):
        h = H("3,4,5,5,5")
        for j in (1, 2):
            for k in range(1, 6):
                tk = class_t(5, k)
                rhs = (tk - class_x(5, j + 1)) * (tk - class_x(5, j + 2))
                assert class_y(h, j, k) + class_y_star(h, j + 3, k) == rhs

    def test_suite_needs_connected(self):
        with pytest.raises(PreconditionUnmet):
            verify_relation_suite(H("1,3,3"))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_suite_small(self, n):
        for h in filter(HessenbergFunction.is_connected, hessenberg_functions(n)):
            assert all(r.passed for r in verify_relation_suite(h)), str(h)


class TestDotAction:
    def test_constant_class_moves(self):
        s = P("231")
        assert dot_act(s, class_t(3, 1)) == class_t(3, 2)

    def test_x_invariant(self):
        for s in group_elements(3):
            for i in (1, 2, 3):
                assert dot_act(s, class_x(3, i)) == class_x(3, i)

    def test_y_and_tau_permuted(self):
        h = H("2,3,4,4")
        for s in group_elements(4):
            for k in range(1, 5):
                assert dot_act(s, class_y(h, 1, k)) == class_y(h, 1, s(k))
            A = frozenset({1, 3})
            assert dot_act(s, class_tau(h, A)) == class_tau(h, s.image_set(A))

    def test_identity(self):
        f = class_y(H("3,3,4,4"), 2, 3)
        assert dot_act(Permutation.identity(4), f) == f

    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_action_law(self, data):
        s, u = data.draw(permutations_of(4)), data.draw(permutations_of(4))
        f = class_y(H("3,3,4,4"), 1, data.draw(st.integers(1, 4)))
        assert dot_act(s * u, f) == dot_act(s, dot_act(u, f))

    def test_action_preserves_gkm(self):
        h = H("2,3,4,4")
        g = build_graph(h)
        f = class_tau(h, {2}) * class_x(4, 1)
        assert all(check_gkm(dot_act(s, f), g) for s in group_elements(4))


def test_class_arithmetic():
    f, g = class_x(3, 1), class_t(3, 2)
    assert (f + g) - g == f
    assert -f + f == EquivariantClass.zero(3, 1)
    assert (f * g).degree == 2
    assert (f * 3)(P("213")) == t(2, 3) * 3
    assert class_x(3, 1).to_json()["values"]["231"] == "t2"
