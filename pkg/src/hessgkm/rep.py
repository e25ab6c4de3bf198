"""
The dot action of S_n as a linear representation and its decomposition into
permutation modules ``M^lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .betti import flag_poincare
from .cohomology import DEFAULT_LA_BUDGET, GradedCohomology
from .combinatorics import (
    HessenbergFunction,
    Partition,
    cycle_type,
    cycle_type_representative,
    lambda_set,
    partitions,
)
from .errors import NonIntegralSolution, NotConnected, PreconditionUnmet, SizeMismatch
from .linalg import RationalMatrix

__all__ = [
    "ClassFunction", "ModuleDecomposition", "cycle_type", "m_lambda_character",
    "m_lambda_dimension", "dot_action_character", "decompose", "beta_formula",
    "beta_parts", "h2d_decomposition_formula",
]


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: dict[Partition, Fraction]

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[mu]

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.values.values())


@dataclass(frozen=True)
class ModuleDecomposition:
    n: int
    multiplicities: dict[Partition, int]

    def __post_init__(self):
        clean = {lam: int(c) for lam, c in self.multiplicities.items() if c}
        object.__setattr__(self, "multiplicities", dict(sorted(clean.items(), reverse=True)))

    def __eq__(self, other):
        if not isinstance(other, ModuleDecomposition):
            return NotImplemented
        return self.n == other.n and self.multiplicities == other.multiplicities

    def __getitem__(self, lam: Partition) -> int:
        return self.multiplicities.get(lam, 0)

    def dimension(self) -> int:
        return sum(c * m_lambda_dimension(lam) for lam, c in self.multiplicities.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.multiplicities.values())

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        pieces = []
        for lam, c in self.multiplicities.items():
            body = f"M{lam}"
            pieces.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> dict[str, int]:
        return {str(lam): c for lam, c in self.multiplicities.items()}


def m_lambda_dimension(lam: Partition) -> int:
    d = factorial(lam.n)
    for p in lam.parts:
        d //= factorial(p)
    return d


def m_lambda_character(lam: Partition, mu: Partition) -> int:
    """Cosets of the Young subgroup ``S_lam`` fixed by a permutation of cycle type ``mu``.

    A coset is an ordered set partition with block sizes ``lam``; it is fixed
    iff every cycle sits inside one block, so we count the ways of packing the
    cycles of ``mu`` into bins of capacities ``lam``.
    """
    if lam.n != mu.n:
        raise SizeMismatch(f"partitions of {lam.n} and {mu.n}")
    return _pack(mu.parts, lam.parts)


@lru_cache(maxsize=None)
def _pack(cycles: tuple[int, ...], capacities: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not any(capacities) else 0
    first, rest = cycles[0], cycles[1:]
    total = 0
    for b, cap in enumerate(capacities):
        if cap >= first:
            caps = capacities[:b] + (cap - first,) + capacities[b + 1:]
            total += _pack(rest, caps)
    return total


def permutation_module_matrix(n: int) -> tuple[list[Partition], RationalMatrix]:
    """Rows indexed by ``lam``, columns by cycle type ``mu``; both in reverse-lex order."""
    parts = partitions(n)
    return parts, RationalMatrix([[m_lambda_character(lam, mu) for mu in parts] for lam in parts])


def dot_action_character(h: HessenbergFunction, d: int, budget: int = DEFAULT_LA_BUDGET,
                         cohomology: GradedCohomology | None = None) -> ClassFunction:
    """Trace of one representative per cycle type on ``H^{2d}``.

    ``H^{2d}`` is realized as the degree-``d`` graph cohomology modulo the
    degree-``d`` part of the ideal ``(t_1, ..., t_n)``; both are stable under
    the action, so the quotient trace is the difference of the two traces.
    """
    if not h.is_connected():
        raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
    coh = cohomology or GradedCohomology(h, budget)
    values = {}
    for mu in partitions(h.n):
        values[mu] = coh.quotient_trace(d, cycle_type_representative(mu))
    return ClassFunction(h.n, values)


def decompose(chi: ClassFunction) -> ModuleDecomposition:
    parts, mat = permutation_module_matrix(chi.n)
    rhs = [chi(mu) for mu in parts]
    coeffs = mat.transpose().solve(rhs)
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralSolution(f"character {rhs} is not an integral sum of permutation modules")
    return ModuleDecomposition(chi.n, {lam: int(c) for lam, c in zip(parts, coeffs)})


def beta_parts(h: HessenbergFunction) -> list[Partition]:
    """``beta_1, ..., beta_{n-2}``, each normalized to a partition."""
    n = h.n
    out = []
    for j in range(1, n - 1):
        if h(j - 1) == j and h(j) == j + 1:
            out.append(Partition((n - j, j)))
        elif h(j - 1) == h(j) == j + 1:
            out.append(Partition((n - 1, 1)))
        else:
            out.append(Partition((n,)))
    return out


def beta_formula(h: HessenbergFunction) -> ModuleDecomposition:
    if not h.is_connected():
        raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
    n = h.n
    if n == 1:
        return ModuleDecomposition(1, {})
    mult: dict[Partition, int] = {}
    for lam in beta_parts(h) + [Partition((n,))]:
        mult[lam] = mult.get(lam, 0) + 1
    return ModuleDecomposition(n, mult)


def h2d_decomposition_formula(h: HessenbergFunction, d: int) -> ModuleDecomposition:
    if d < 2:
        raise PreconditionUnmet(f"d must be at least 2, got {d}")
    if not h.satisfies_gap(d):
        raise PreconditionUnmet(f"h = ({h}) does not satisfy h(j) >= j+{d} on a non-empty [n-{d}]")
    n = h.n
    lam = len(lambda_set(h, d))
    m_d = flag_poincare(n)[d] - lam
    if m_d < 0:
        raise AssertionError(f"trivial multiplicity {m_d} is negative for h=({h}), d={d}")
    mult = {Partition((n,)): m_d}
    if lam:
        mult[Partition((n - 1, 1))] = lam
    return ModuleDecomposition(n, mult)
