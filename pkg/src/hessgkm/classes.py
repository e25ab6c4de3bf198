"""
Equivariant classes: functions from S_n to homogeneous polynomials.

The named constructors build the degree-one classes ``x_i``, ``y_{j,k}`` and
``tau_A`` together with their higher-degree relatives ``y_{j,k}`` (for
``h(j) - j > 1``) and ``y*_{i,k}``. Classes on groups up to ``DENSE_MAX``
are tabulated eagerly; larger ones evaluate their defining rule per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce as _fold
from itertools import combinations
from typing import Callable, Iterable

from .combinatorics import (
    HessenbergFunction,
    Permutation,
    bottom_set,
    dual_function,
    group_elements,
    l_set,
    lambda_set,
)
from .errors import IndexOutOfRange, InvalidCardinality, PreconditionUnmet, SizeMismatch
from .symbolic import Polynomial, permute_variables

DENSE_MAX = 6


@dataclass(frozen=True, eq=False)
class EquivariantClass:
    n: int
    degree: int
    rule: Callable[[Permutation], Polynomial] = field(repr=False)
    _table: dict | None = field(default=None, repr=False)

    @classmethod
    def from_rule(cls, n: int, degree: int, rule, dense: bool | None = None) -> EquivariantClass:
        if dense is None:
            dense = n <= DENSE_MAX
        table = {w: rule(w) for w in group_elements(n)} if dense else None
        return cls(n, degree, rule, table)

    @classmethod
    def constant(cls, n: int, p: Polynomial) -> EquivariantClass:
        degree = max(p.total_degree(), 0)
        return cls.from_rule(n, degree, lambda w: p)

    @classmethod
    def zero(cls, n: int, degree: int) -> EquivariantClass:
        z = Polynomial.zero(n)
        return cls.from_rule(n, degree, lambda w: z)

    def __call__(self, w: Permutation) -> Polynomial:
        if w.n != self.n:
            raise SizeMismatch(f"class on S_{self.n} evaluated at a permutation in S_{w.n}")
        if self._table is not None:
            return self._table[w]
        return self.rule(w)

    def items(self) -> Iterable[tuple[Permutation, Polynomial]]:
        for w in group_elements(self.n):
            yield w, self(w)

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous(self.degree) for _, p in self.items())

    def _combine(self, other: EquivariantClass, op, degree: int) -> EquivariantClass:
        if self.n != other.n:
            raise SizeMismatch(f"classes on S_{self.n} and S_{other.n}")
        return EquivariantClass.from_rule(self.n, degree, lambda w: op(self(w), other(w)))

    def __add__(self, other: EquivariantClass) -> EquivariantClass:
        return self._combine(other, lambda a, b: a + b, max(self.degree, other.degree))

    def __sub__(self, other: EquivariantClass) -> EquivariantClass:
        return self._combine(other, lambda a, b: a - b, max(self.degree, other.degree))

    def __neg__(self) -> EquivariantClass:
        return EquivariantClass.from_rule(self.n, self.degree, lambda w: -self(w))

    def __mul__(self, other) -> EquivariantClass:
        if isinstance(other, int):
            return EquivariantClass.from_rule(self.n, self.degree, lambda w: self(w) * other)
        return self._combine(other, lambda a, b: a * b, self.degree + other.degree)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantClass) or other.n != self.n:
            return NotImplemented
        return all(p == other(w) for w, p in self.items())

    __hash__ = None

    def support(self) -> frozenset[Permutation]:
        return frozenset(w for w, p in self.items() if not p.is_zero())

    def to_json(self) -> dict:
        return {"degree": self.degree, "values": {str(w): str(p) for w, p in self.items()}}


def class_sum(classes: Iterable[EquivariantClass], n: int, degree: int) -> EquivariantClass:
    classes = list(classes)
    if not classes:
        return EquivariantClass.zero(n, degree)
    return _fold(lambda a, b: a + b, classes)


def _check(n: int, k: int, name: str, lo: int = 1):
    if not lo <= k <= n:
        raise IndexOutOfRange(f"{name} = {k} outside [{lo}, {n}]")


def class_t(n: int, k: int) -> EquivariantClass:
    _check(n, k, "k")
    return EquivariantClass.constant(n, Polynomial.var(n, k))


def class_x(n: int, i: int) -> EquivariantClass:
    _check(n, i, "i")
    variables = [Polynomial.var(n, k) for k in range(1, n + 1)]
    return EquivariantClass.from_rule(n, 1, lambda w: variables[w.images[i - 1] - 1])


def class_y(h: HessenbergFunction, j: int, k: int) -> EquivariantClass:
    """``prod_{l=j+1}^{h(j)} (t_k - t_{w(l)})`` where ``k`` is among ``w(1..j)``, else 0."""
    n = h.n
    _check(n, j, "j")
    _check(n, k, "k")
    top = h(j)
    variables = [Polynomial.var(n, a) for a in range(1, n + 1)]
    zero, one = Polynomial.zero(n), Polynomial.constant(n, 1)

    def rule(w: Permutation) -> Polynomial:
        im = w.images
        if k not in im[:j]:
            return zero
        p = one
        for ell in range(j + 1, top + 1):
            p = p * (variables[k - 1] - variables[im[ell - 1] - 1])
        return p

    return EquivariantClass.from_rule(n, top - j, rule)


def class_tau(h: HessenbergFunction, A: Iterable[int]) -> EquivariantClass:
    n = h.n
    A = frozenset(A)
    j = len(A)
    if j not in l_set(h):
        raise InvalidCardinality(f"|A| = {j} is not in L(h) = {sorted(l_set(h))}")
    if not A <= set(range(1, n + 1)):
        raise IndexOutOfRange(f"A = {sorted(A)} is not a subset of [{n}]")
    variables = [Polynomial.var(n, a) for a in range(1, n + 1)]
    zero = Polynomial.zero(n)

    def rule(w: Permutation) -> Polynomial:
        im = w.images
        if frozenset(im[:j]) != A:
            return zero
        return variables[im[j - 1] - 1] - variables[im[j] - 1]

    return EquivariantClass.from_rule(n, 1, rule)


def class_y_star(h: HessenbergFunction, i: int, k: int) -> EquivariantClass:
    """``prod_{l=h*(i)}^{i-1} (t_k - t_{w(l)})`` where ``k`` is among ``w(i..n)``, else 0."""
    n = h.n
    _check(n, i, "i", lo=2)
    _check(n, k, "k")
    start = dual_function(h, i)
    variables = [Polynomial.var(n, a) for a in range(1, n + 1)]
    zero, one = Polynomial.zero(n), Polynomial.constant(n, 1)

    def rule(w: Permutation) -> Polynomial:
        im = w.images
        if k not in im[i - 1:]:
            return zero
        p = one
        for ell in range(start, i):
            p = p * (variables[k - 1] - variables[im[ell - 1] - 1])
        return p

    return EquivariantClass.from_rule(n, i - start, rule)


def dot_act(sigma: Permutation, f: EquivariantClass) -> EquivariantClass:
    """``(sigma . f)(w) = sigma(f(sigma^{-1} w))``."""
    if sigma.n != f.n:
        raise SizeMismatch(f"permutation in S_{sigma.n} acting on a class over S_{f.n}")
    inv = sigma.inverse()
    return EquivariantClass.from_rule(f.n, f.degree, lambda w: permute_variables(sigma, f(inv * w)))


def subsets_of_size(n: int, j: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(range(1, n + 1), j)]


def all_classes(h: HessenbergFunction) -> dict[str, EquivariantClass]:
    """Every x, y, tau and y* class available for ``h``, keyed by a readable name."""
    n = h.n
    out: dict[str, EquivariantClass] = {}
    for i in range(1, n + 1):
        out[f"x_{i}"] = class_x(n, i)
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            out[f"y_{j},{k}"] = class_y(h, j, k)
    for j in sorted(l_set(h)):
        for A in subsets_of_size(n, j):
            out[f"tau_{{{','.join(map(str, sorted(A)))}}}"] = class_tau(h, A)
    for i in range(2, n + 1):
        for k in range(1, n + 1):
            out[f"y*_{i},{k}"] = class_y_star(h, i, k)
    return out


@dataclass
class RelationCheck:
    relation: str
    params: dict
    passed: bool


def _first_disconnect(h: HessenbergFunction) -> int | None:
    for j in range(1, h.n):
        if h(j) < j + 1:
            return j
    return None


def verify_relation_suite(h: HessenbergFunction) -> list[RelationCheck]:
    """Check the degree-one relations and the higher-degree sum identities pointwise.

    Raises ``PreconditionUnmet`` unless ``h(j) >= j + 1`` on ``[n - 1]``.
    """
    bad = _first_disconnect(h)
    if bad is not None:
        raise PreconditionUnmet(f"h(j) >= j+1 fails at j={bad}: h({bad}) = {h(bad)}")
    n = h.n
    t = [class_t(n, k) for k in range(1, n + 1)]
    x = [class_x(n, i) for i in range(1, n + 1)]
    checks: list[RelationCheck] = []

    checks.append(RelationCheck("sum_x", {}, class_sum(x, n, 1) == class_sum(t, n, 1)))

    for j in sorted(bottom_set(h)):
        lhs = class_sum((class_y(h, j, k) for k in range(1, n + 1)), n, 1)
        rhs = class_sum(x[:j], n, 1) - x[j] * j
        checks.append(RelationCheck("sum_y", {"j": j}, lhs == rhs))

    for j in sorted(l_set(h)):
        lhs = class_sum((class_tau(h, A) for A in subsets_of_size(n, j)), n, 1)
        checks.append(RelationCheck("sum_tau", {"j": j}, lhs == x[j - 1] - x[j]))

    bottom = bottom_set(h)
    m = max(bottom) if bottom else 0
    lset = l_set(h)
    for k in range(1, n + 1):
        terms = [] if m == 0 else [class_y(h, m, k)]
        for j in range(m + 1, n):
            if j not in lset:
                raise AssertionError(f"{j} > max bottom set but not in L(h) for connected h={h}")
            terms.extend(class_tau(h, A) for A in subsets_of_size(n, j) if k in A)
        lhs = class_sum(terms, n, 1)
        checks.append(RelationCheck("tail", {"k": k, "m": m}, lhs == t[k - 1] - x[n - 1]))

    checks.extend(verify_sum_identity(h))
    checks.extend(verify_complement_identity(h))
    return checks


def sum_identity_rhs(h: HessenbergFunction, j: int) -> EquivariantClass:
    """``sum_{i<=j} prod_{l=j+1}^{h(j)} (x_i - x_l)``."""
    n = h.n
    x = [class_x(n, i) for i in range(1, n + 1)]
    one = EquivariantClass.constant(n, Polynomial.constant(n, 1))
    total = EquivariantClass.zero(n, h(j) - j)
    for i in range(1, j + 1):
        prod = one
        for ell in range(j + 1, h(j) + 1):
            prod = prod * (x[i - 1] - x[ell - 1])
        total = total + prod
    return total


def verify_sum_identity(h: HessenbergFunction) -> list[RelationCheck]:
    n = h.n
    out = []
    for j in range(1, n + 1):
        lhs = class_sum((class_y(h, j, k) for k in range(1, n + 1)), n, h(j) - j)
        out.append(RelationCheck("yjk_sum", {"j": j}, lhs == sum_identity_rhs(h, j)))
    return out


def verify_complement_identity(h: HessenbergFunction) -> list[RelationCheck]:
    """``y_{j,k} + y*_{j+1+d,k} = prod_{l=j+1}^{j+d} (t_k - x_l)`` for ``j`` in the Lambda set."""
    n = h.n
    x = [class_x(n, i) for i in range(1, n + 1)]
    out = []
    for d in range(1, n):
        if not h.satisfies_gap(d):
            continue
        for j in sorted(lambda_set(h, d)):
            for k in range(1, n + 1):
                tk = class_t(n, k)
                rhs = EquivariantClass.constant(n, Polynomial.constant(n, 1))
                for ell in range(j + 1, j + d + 1):
                    rhs = rhs * (tk - x[ell - 1])
                lhs = class_y(h, j, k) + class_y_star(h, j + 1 + d, k)
                out.append(RelationCheck("y_plus_ystar", {"d": d, "j": j, "k": k}, lhs == rhs))
    return out
