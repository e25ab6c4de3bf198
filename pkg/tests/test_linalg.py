from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hessgkm.errors import NonIntegralSolution, SizeMismatch
from hessgkm.linalg import RationalMatrix, SparseEchelon, integer_scaled, solve_integral, sparse_rank

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def dense_rank_reference(rows):
    """Plain Gauss elimination over Fraction, written independently of the Bareiss code."""
    a = [[Fraction(x) for x in row] for row in rows]
    rank, cols = 0, len(a[0]) if a else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def as_sparse(rows):
    return [{c: v for c, v in enumerate(row) if v} for row in rows]


@given(matrices)
def test_rank_matches_reference(rows):
    expected = dense_rank_reference(rows)
    assert RationalMatrix(rows).rank() == expected
    assert sparse_rank(as_sparse(rows)) == expected
    assert RationalMatrix(rows).transpose().rank() == expected


@settings(max_examples=50)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutations(rows, rnd):
    base = RationalMatrix(rows).rank()
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    order = list(range(len(rows[0])))
    rnd.shuffle(order)
    shuffled = [[row[c] for c in order] for row in shuffled]
    assert RationalMatrix(shuffled).rank() == base
    assert sparse_rank(as_sparse(shuffled)) == base


@given(matrices)
def test_kernel_vectors_are_annihilated(rows):
    ncols = len(rows[0])
    ech = SparseEchelon()
    ech.extend(as_sparse(rows))
    kernel = ech.kernel(ncols)
    assert len(kernel) == ncols - ech.rank
    for free, vec in kernel:
        assert vec[free] == 1
        for row in rows:
            assert sum(Fraction(row[c]) * v for c, v in vec.items()) == 0


@given(matrices)
def test_reduced_basis_spans_rows(rows):
    ech = SparseEchelon()
    ech.extend(as_sparse(rows))
    basis = ech.reduced_basis()
    pivots = [p for p, _ in basis]
    for p, row in basis:
        assert row[p] == 1
        assert all(row.get(q, 0) == 0 for q in pivots if q != p)
    for row in as_sparse(rows):
        assert not ech.reduce(row)


def test_solve():
    a = RationalMatrix([[2, 1], [1, 3]])
    assert a.solve([3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_integral(RationalMatrix([[1, 0], [1, 1]]), [2, 5]) == [2, 3]
    with pytest.raises(NonIntegralSolution):
        solve_integral(a, [3, 5])


def test_shape_errors():
    with pytest.raises(SizeMismatch):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(SizeMismatch):
        RationalMatrix([[1, 2]]).solve([1])


def test_integer_scaled():
    assert integer_scaled({0: Fraction(1, 2), 3: Fraction(1, 3)}) == {0: 3, 3: 2}
