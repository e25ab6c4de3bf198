"""
Betti numbers and Poincare polynomials of regular semisimple Hessenberg varieties.

Three independent routes are provided: a brute-force count of restricted
inversions over S_n, the recursion over the reduced functions ``h^j``, and
the closed forms for ``b_2``, for the low-degree Betti numbers under the gap
condition ``h(j) >= j + d``, and for the number of components.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from .combinatorics import (
    DEFAULT_CAP_N,
    HessenbergFunction,
    bottom_set,
    l_set,
    lambda_set,
    reduce,
)
from .errors import CapExceeded, NotConnected, PreconditionUnmet
from .symbolic import PoincarePolynomial


def dimension(h: HessenbergFunction) -> int:
    return sum(h(j) - j for j in range(1, h.n + 1))


@lru_cache(maxsize=None)
def _inversion_masks(n: int) -> tuple[tuple[int, ...], dict[tuple[int, int], int]]:
    # bit b of mask(w) is set iff the b-th pair (j, i), j < i, is an inversion of w
    pair_bits = {}
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            pair_bits[(j, i)] = 1 << len(pair_bits)
    masks = []
    for w in permutations(range(1, n + 1)):
        m = 0
        for (j, i), bit in pair_bits.items():
            if w[j - 1] > w[i - 1]:
                m |= bit
        masks.append(m)
    return tuple(masks), pair_bits


def poincare_bruteforce(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> PoincarePolynomial:
    """Count permutations by their number of ``h``-restricted inversions."""
    if h.n > cap:
        raise CapExceeded(f"n = {h.n} exceeds the group cap {cap}")
    masks, pair_bits = _inversion_masks(h.n)
    hmask = 0
    for j in range(1, h.n + 1):
        for i in range(j + 1, h(j) + 1):
            hmask |= pair_bits[(j, i)]
    counts = [0] * (len(pair_bits) + 1)
    for m in masks:
        counts[(m & hmask).bit_count()] += 1
    return PoincarePolynomial(tuple(counts))


def poincare_inductive(h: HessenbergFunction) -> PoincarePolynomial:
    """``sum_j q^{h(j)-j} Poin(h^j)``, memoized on the value vector."""
    return _poincare_inductive(h.values)


@lru_cache(maxsize=None)
def _poincare_inductive(values: tuple[int, ...]) -> PoincarePolynomial:
    h = HessenbergFunction(values)
    if h.n == 1:
        return PoincarePolynomial((1,))
    total = PoincarePolynomial((0,))
    for j in range(1, h.n + 1):
        total = total + _poincare_inductive(reduce(h, j).values).shift(h(j) - j)
    return total


def flag_poincare(n: int) -> PoincarePolynomial:
    """``prod_{i=1}^n (1 - q^i)/(1 - q)`` by exact polynomial multiplication."""
    result = PoincarePolynomial((1,))
    for i in range(1, n + 1):
        result = result * PoincarePolynomial((1,) * i)
    return result


def b2_closed_form(h: HessenbergFunction) -> int:
    if not h.is_connected():
        raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
    n = h.n
    L = l_set(h)
    return sum(comb(n, j) for j in L) + (n - 1) * len(bottom_set(h)) - len(L)


def betti_low_degree(h: HessenbergFunction, d: int) -> tuple[int, ...]:
    """``(b_0, b_2, ..., b_{2d})`` under ``h(j) >= j + d`` on ``[n - d]``, ``d >= 2``."""
    if d < 2:
        raise PreconditionUnmet(f"d must be at least 2, got {d}")
    if not h.satisfies_gap(d):
        raise PreconditionUnmet(f"h = ({h}) does not satisfy h(j) >= j+{d} on a non-empty [n-{d}]")
    flag = flag_poincare(h.n)
    out = [flag[i] for i in range(d)]
    out.append(flag[d] + (h.n - 1) * len(lambda_set(h, d)))
    return tuple(out)


def component_count(h: HessenbergFunction) -> int:
    """Multinomial coefficient over the blocks cut by the fixed points ``h(j) = j``."""
    sizes = []
    start = 0
    for j in range(1, h.n + 1):
        if h(j) == j:
            sizes.append(j - start)
            start = j
    count = factorial(h.n)
    for s in sizes:
        count //= factorial(s)
    return count
