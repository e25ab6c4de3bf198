"""
Sparse polynomials in ``t_1, ..., t_n`` with integer coefficients.

A polynomial is a mapping from exponent vectors (tuples of length ``n``) to
nonzero Python ints. Terms are kept in graded-lexicographic order whenever
they are printed or serialized.

>>> t1, t2 = Polynomial.var(2, 1), Polynomial.var(2, 2)
>>> str((t1 - t2) ** 2)
't1^2 - 2*t1*t2 + t2^2'
>>> divisible_by_linear(t1 * t1 - t2 * t2, 1, 2)
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .combinatorics import Permutation
from .errors import IndexOutOfRange, ParseError, SizeMismatch

Exponents = tuple[int, ...]


def _grlex_key(exps: Exponents):
    return (-sum(exps), tuple(-e for e in exps))


def monomials(n: int, degree: int) -> list[Exponents]:
    """Exponent vectors of total ``degree`` in ``n`` variables, graded-lex order."""
    out: list[Exponents] = []

    def rec(prefix: list[int], remaining: int):
        if len(prefix) == n - 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining, -1, -1):
            prefix.append(e)
            rec(prefix, remaining - e)
            prefix.pop()

    if n == 0:
        return [()] if degree == 0 else []
    rec([], degree)
    return out


class Polynomial:
    """Immutable sparse polynomial over the integers in ``n`` variables."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | None = None):
        self.n = n
        clean: dict[Exponents, int] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise SizeMismatch(f"exponent vector {exps} has wrong length for n={n}")
                if c:
                    clean[tuple(exps)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponents, int]) -> Polynomial:
        # terms must already be canonical (no zero coefficients)
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> Polynomial:
        return cls._raw(n, {(0,) * n: int(c)} if c else {})

    @classmethod
    def var(cls, n: int, k: int) -> Polynomial:
        _check_index(n, k)
        exps = [0] * n
        exps[k - 1] = 1
        return cls._raw(n, {tuple(exps): 1})

    @classmethod
    def linear(cls, n: int, a: int, b: int) -> Polynomial:
        """``t_a - t_b``."""
        return cls.var(n, a) - cls.var(n, b)

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise SizeMismatch(f"polynomials in {self.n} and {other.n} variables")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial._raw(self.n, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial._raw(self.n, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # printing and serialization

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (exps, c) in enumerate(self.sorted_terms()):
            factors = []
            for k, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"t{k}")
                elif e > 1:
                    factors.append(f"t{k}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, '{self}')"

    def to_json(self) -> list[dict]:
        return [
            {
                "exponents": {str(k): e for k, e in enumerate(exps, start=1) if e},
                "coefficient": c,
            }
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, n: int, records: Iterable[dict]) -> Polynomial:
        terms: dict[Exponents, int] = {}
        for rec in records:
            exps = [0] * n
            for k, e in rec["exponents"].items():
                exps[int(k) - 1] = int(e)
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + int(rec["coefficient"])
        return cls(n, terms)

    @classmethod
    def parse(cls, n: int, text: str) -> Polynomial:
        """Inverse of ``str`` (accepts the printed normal form)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero(n)
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[Exponents, int] = {}
        for m in re.finditer(r"([+-])([^+-]+)", s):
            sign = -1 if m.group(1) == "-" else 1
            coeff = 1
            exps = [0] * n
            for factor in m.group(2).split("*"):
                fm = re.fullmatch(r"t(\d+)(?:\^(\d+))?", factor)
                if fm:
                    k = int(fm.group(1))
                    if not 1 <= k <= n:
                        raise ParseError(f"variable t{k} outside [1, {n}]")
                    exps[k - 1] += int(fm.group(2) or 1)
                elif factor.isdigit():
                    coeff *= int(factor)
                else:
                    raise ParseError(f"cannot parse polynomial term {factor!r} in {text!r}")
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coeff
        return cls(n, terms)


def _check_index(n: int, k: int):
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"variable index {k} outside [1, {n}]")


def substitute(p: Polynomial, a: int, b: int) -> Polynomial:
    """Replace ``t_a`` by ``t_b``; the image of ``p`` modulo ``t_a - t_b``."""
    _check_index(p.n, a)
    _check_index(p.n, b)
    if a == b:
        raise IndexOutOfRange("substitution needs two distinct variables")
    ia, ib = a - 1, b - 1
    terms: dict[Exponents, int] = {}
    for exps, c in p.items():
        if exps[ia]:
            e = list(exps)
            e[ib] += e[ia]
            e[ia] = 0
            exps = tuple(e)
        terms[exps] = terms.get(exps, 0) + c
    return Polynomial._raw(p.n, {e: c for e, c in terms.items() if c})


def divisible_by_linear(p: Polynomial, a: int, b: int) -> bool:
    """True iff ``t_a - t_b`` divides ``p``."""
    return substitute(p, a, b).is_zero()


def permute_variables(sigma: Permutation, p: Polynomial) -> Polynomial:
    """Apply ``t_i -> t_sigma(i)``."""
    if sigma.n != p.n:
        raise SizeMismatch(f"permutation of size {sigma.n} acting on {p.n} variables")
    im = sigma.images
    terms = {}
    for exps, c in p.items():
        e = [0] * p.n
        for i, ei in enumerate(exps):
            if ei:
                e[im[i] - 1] = ei
        terms[tuple(e)] = c
    return Polynomial._raw(p.n, terms)


@dataclass(frozen=True)
class PoincarePolynomial:
    """Even Betti numbers ``b_0, b_2, b_4, ...``; coefficient of ``q^r`` is ``b_{2r}``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, r: int) -> int:
        if 0 <= r < len(self.coefficients):
            return self.coefficients[r]
        return 0

    def __add__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        m = max(len(self.coefficients), len(other.coefficients))
        return PoincarePolynomial(tuple(self[r] + other[r] for r in range(m)))

    def __mul__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PoincarePolynomial(tuple(out))

    def shift(self, k: int) -> PoincarePolynomial:
        """Multiply by ``q^k``."""
        return PoincarePolynomial((0,) * k + self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        pieces = []
        for r, c in enumerate(self.coefficients):
            if not c:
                continue
            if r == 0:
                pieces.append(str(c))
            else:
                q = "q" if r == 1 else f"q^{r}"
                pieces.append(q if c == 1 else f"{c}{q}")
        return " + ".join(pieces) if pieces else "0"
