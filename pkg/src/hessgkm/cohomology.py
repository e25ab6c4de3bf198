"""
Graph cohomology of the labeled graph as exact linear algebra.

A degree-``d`` element is a vector of integer coefficients indexed by
``(vertex, monomial)`` where vertices follow the lexicographic order of S_n
and monomials the graded-lex order of degree-``d`` monomials in ``n``
variables. Each edge ``w -- v`` with label ``t_a - t_b`` contributes the
linear equations ``substitute(f(v) - f(w), a, b) = 0``, one for every
monomial free of ``t_a``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb, factorial

from .betti import b2_closed_form, flag_poincare
from .classes import (
    EquivariantClass,
    class_t,
    class_tau,
    class_x,
    class_y,
    subsets_of_size,
    sum_identity_rhs,
)
from .combinatorics import (
    HessenbergFunction,
    Permutation,
    bottom_set,
    l_set,
    lambda_set,
)
from .errors import BudgetExceeded, NotConnected, PreconditionUnmet
from .gkm import LabeledGraph, build_graph, check_gkm
from .linalg import RationalMatrix, SparseEchelon, integer_scaled
from .symbolic import Exponents, Polynomial, monomials

DEFAULT_LA_BUDGET = 10**7


def system_size(n: int, d: int, edge_count: int) -> tuple[int, int]:
    """``(rows, columns)`` of the degree-``d`` congruence system."""
    rows = edge_count * comb(n - 1 + d - 1, d) if n > 1 else 0
    cols = factorial(n) * comb(n + d - 1, d)
    return rows, cols


def edge_count(h: HessenbergFunction) -> int:
    return factorial(h.n) * len(h.pairs) // 2


def check_budget(h: HessenbergFunction, d: int, budget: int = DEFAULT_LA_BUDGET):
    """Refuse congruence systems with more than ``budget`` matrix entries."""
    rows, cols = system_size(h.n, d, edge_count(h))
    if rows * cols > budget:
        raise BudgetExceeded(
            f"degree-{d} system for h=({h}) has {rows}x{cols} = {rows * cols} entries "
            f"(budget {budget})"
        )


class CoordinateSpace:
    """Indexing of ``Map(S_n, degree-d polynomials)`` by integers."""

    def __init__(self, g: LabeledGraph, d: int):
        self.g = g
        self.n = g.n
        self.d = d
        self.monomials: list[Exponents] = monomials(g.n, d)
        self.mono_index = {m: k for k, m in enumerate(self.monomials)}
        self.width = len(self.monomials)
        self.size = len(g.vertices) * self.width

    def coord(self, vertex_index: int, mono: Exponents) -> int:
        return vertex_index * self.width + self.mono_index[mono]

    def vector(self, f: EquivariantClass) -> dict[int, int]:
        vec = {}
        for vi, w in enumerate(self.g.vertices):
            for exps, c in f(w).items():
                vec[self.coord(vi, exps)] = c
        return vec

    def to_class(self, vec: dict) -> EquivariantClass:
        ivec = integer_scaled(vec)
        values = [dict() for _ in self.g.vertices]
        for k, c in ivec.items():
            vi, mi = divmod(k, self.width)
            values[vi][self.monomials[mi]] = c
        table = {w: Polynomial(self.n, values[vi]) for vi, w in enumerate(self.g.vertices)}
        return EquivariantClass(self.n, self.d, table.__getitem__, table)

    def congruence_rows(self):
        n, g = self.n, self.g
        # for each variable a: group the monomials by their image under t_a -> t_b
        for e in g.edges:
            a, b = e.variables
            wi, vi = g.index(e.w), g.index(e.v)
            groups: dict[Exponents, list[int]] = {}
            for mi, m in enumerate(self.monomials):
                if m[a - 1]:
                    img = list(m)
                    img[b - 1] += img[a - 1]
                    img[a - 1] = 0
                    img = tuple(img)
                else:
                    img = m
                groups.setdefault(img, []).append(mi)
            for members in groups.values():
                row = {}
                for mi in members:
                    row[vi * self.width + mi] = 1
                    row[wi * self.width + mi] = -1
                yield row

    @cached_property
    def _vertex_index(self):
        return {w: k for k, w in enumerate(self.g.vertices)}

    def permutation_map(self, sigma: Permutation) -> list[int]:
        """``pi[k]`` is the coordinate that ``k`` is sent to by the dot action of ``sigma``."""
        vidx = self._vertex_index
        vertex_img = [vidx[sigma * u] for u in self.g.vertices]
        im = sigma.images
        mono_img = []
        for m in self.monomials:
            e = [0] * self.n
            for i, ei in enumerate(m):
                if ei:
                    e[im[i] - 1] = ei
            mono_img.append(self.mono_index[tuple(e)])
        return [vertex_img[vi] * self.width + mono_img[mi]
                for vi in range(len(self.g.vertices)) for mi in range(self.width)]


@dataclass
class CohomologyPiece:
    """The degree-``d`` graph cohomology as a rational kernel."""

    space: CoordinateSpace
    kernel: list[tuple[int, dict[int, Fraction]]]

    @property
    def d(self) -> int:
        return self.space.d

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    @cached_property
    def basis(self) -> list[EquivariantClass]:
        return [self.space.to_class(vec) for _, vec in self.kernel]

    def trace(self, pi: list[int]) -> Fraction:
        inv = [0] * len(pi)
        for k, img in enumerate(pi):
            inv[img] = k
        return sum((vec.get(inv[f], 0) for f, vec in self.kernel), Fraction(0))


def graph_cohomology_basis(g: LabeledGraph, d: int, budget: int = DEFAULT_LA_BUDGET) -> CohomologyPiece:
    check_budget(g.h, d, budget)
    space = CoordinateSpace(g, d)
    ech = SparseEchelon()
    ech.extend(space.congruence_rows())
    return CohomologyPiece(space, ech.kernel(space.size))


@dataclass
class IdealPiece:
    """Degree-``d`` part of the ideal generated by ``t_1, ..., t_n``."""

    space: CoordinateSpace
    basis: list[tuple[int, dict[int, Fraction]]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def trace(self, pi: list[int]) -> Fraction:
        inv = [0] * len(pi)
        for k, img in enumerate(pi):
            inv[img] = k
        return sum((row.get(inv[p], 0) for p, row in self.basis), Fraction(0))

    def echelon(self) -> SparseEchelon:
        ech = SparseEchelon()
        for _, row in self.basis:
            ech.add(integer_scaled(row))
        return ech


def ideal_piece(lower: CohomologyPiece | None, space: CoordinateSpace) -> IdealPiece:
    """Span of ``t_k * b`` over ``k`` and a basis ``b`` of the degree ``d - 1`` piece."""
    if lower is None or space.d == 0:
        return IdealPiece(space, [])
    lsp = lower.space
    ech = SparseEchelon()
    for _, vec in lower.kernel:
        ivec = integer_scaled(vec)
        for k in range(space.n):
            row = {}
            for coord, c in ivec.items():
                vi, mi = divmod(coord, lsp.width)
                m = list(lsp.monomials[mi])
                m[k] += 1
                row[space.coord(vi, tuple(m))] = c
            ech.add(row)
    return IdealPiece(space, ech.reduced_basis())


class GradedCohomology:
    """Cached graph-cohomology pieces of one Hessenberg function."""

    def __init__(self, h: HessenbergFunction, budget: int = DEFAULT_LA_BUDGET):
        self.h = h
        self.budget = budget
        self._pieces: dict[int, CohomologyPiece] = {}
        self._ideals: dict[int, IdealPiece] = {}

    @cached_property
    def graph(self) -> LabeledGraph:
        return build_graph(self.h)

    def piece(self, d: int) -> CohomologyPiece:
        if d not in self._pieces:
            check_budget(self.h, d, self.budget)
            self._pieces[d] = graph_cohomology_basis(self.graph, d, self.budget)
        return self._pieces[d]

    def ideal(self, d: int) -> IdealPiece:
        if d not in self._ideals:
            lower = self.piece(d - 1) if d > 0 else None
            self._ideals[d] = ideal_piece(lower, self.piece(d).space)
        return self._ideals[d]

    def quotient_rank(self, d: int) -> int:
        """``dim H^{2d} = dim(degree-d piece) - dim(degree-d part of (t_1..t_n))``."""
        return self.piece(d).dimension - self.ideal(d).dimension

    def quotient_trace(self, d: int, sigma: Permutation) -> Fraction:
        pi = self.piece(d).space.permutation_map(sigma)
        return self.piece(d).trace(pi) - self.ideal(d).trace(pi)

    def span_rank(self, d: int, classes: list[EquivariantClass]) -> int:
        space = self.piece(d).space
        ech = SparseEchelon()
        for f in classes:
            ech.add(space.vector(f))
        return ech.rank

    def quotient_span_rank(self, d: int, classes: list[EquivariantClass]) -> int:
        """Rank of the images of ``classes`` in the quotient by the ideal part."""
        ideal = self.ideal(d)
        ech = ideal.echelon()
        base = ech.rank
        space = self.piece(d).space
        for f in classes:
            ech.add(space.vector(f))
        return ech.rank - base


def h2_rank(h: HessenbergFunction, budget: int = DEFAULT_LA_BUDGET) -> int:
    if not h.is_connected():
        raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
    return GradedCohomology(h, budget).piece(1).dimension - h.n


@dataclass
class CohomologyPresentation:
    generators: list[dict]
    relations: list[list[int]]
    rank: int
    relations_independent: bool = True
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"generators": self.generators, "relations": self.relations, "rank": self.rank}
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _h2_generators(h: HessenbergFunction) -> list[dict]:
    n = h.n
    gens: list[dict] = [{"kind": "X", "i": i} for i in range(1, n + 1)]
    for j in sorted(bottom_set(h) - {n - 1}):
        gens.extend({"kind": "Y", "j": j, "k": k} for k in range(1, n + 1))
    for j in sorted(l_set(h) - {n - 1}):
        gens.extend({"kind": "T", "A": sorted(A)} for A in sorted(subsets_of_size(n, j), key=sorted))
    return gens


def h2_presentation(h: HessenbergFunction) -> CohomologyPresentation:
    """Generators ``X_i, Y_{j,k}, T_A`` modulo the three families of relations."""
    if not h.is_connected():
        raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
    n = h.n
    gens = _h2_generators(h)
    pos = {}
    for k, gen in enumerate(gens):
        key = (gen["kind"], gen.get("i"), gen.get("j"), gen.get("k"), tuple(gen.get("A", ())))
        pos[key] = k

    def x(i):
        return pos[("X", i, None, None, ())]

    relations = []
    r1 = [0] * len(gens)
    for i in range(1, n + 1):
        r1[x(i)] = 1
    relations.append(r1)
    for j in sorted(bottom_set(h) - {n - 1}):
        r = [0] * len(gens)
        for k in range(1, n + 1):
            r[pos[("Y", None, j, k, ())]] = 1
        for i in range(1, j + 1):
            r[x(i)] -= 1
        r[x(j + 1)] += j
        relations.append(r)
    for j in sorted(l_set(h) - {n - 1}):
        r = [0] * len(gens)
        for A in subsets_of_size(n, j):
            r[pos[("T", None, None, None, tuple(sorted(A)))]] = 1
        r[x(j)] -= 1
        r[x(j + 1)] += 1
        relations.append(r)
    rel_rank = RationalMatrix(relations).rank()
    return CohomologyPresentation(
        gens, relations, len(gens) - rel_rank, relations_independent=rel_rank == len(relations)
    )


def realize_generator(h: HessenbergFunction, gen: dict) -> EquivariantClass:
    if gen["kind"] == "X":
        return class_x(h.n, gen["i"])
    if gen["kind"] == "Y":
        return class_y(h, gen["j"], gen["k"])
    if gen["kind"] == "T":
        return class_tau(h, gen["A"])
    raise ValueError(f"unknown generator kind {gen['kind']!r}")


@dataclass
class H2Verification:
    presentation_rank: int
    closed_form_b2: int
    graph_dimension: int | None
    quotient_rank: int | None
    generators_span: bool | None
    relations_vanish: bool | None
    generators_gkm: bool | None

    @property
    def passed(self) -> bool:
        ok = self.presentation_rank == self.closed_form_b2
        if self.graph_dimension is not None:
            ok = ok and self.quotient_rank == self.presentation_rank
            ok = ok and bool(self.generators_span and self.relations_vanish and self.generators_gkm)
        return ok


def verify_h2_presentation(h: HessenbergFunction, budget: int = DEFAULT_LA_BUDGET,
                           cohomology: GradedCohomology | None = None) -> H2Verification:
    """Compare the presentation against the linear algebra when it fits the budget."""
    pres = h2_presentation(h)
    b2 = b2_closed_form(h)
    try:
        coh = cohomology or GradedCohomology(h, budget)
        piece = coh.piece(1)
    except BudgetExceeded:
        return H2Verification(pres.rank, b2, None, None, None, None, None)
    n = h.n
    realized = [realize_generator(h, gen) for gen in pres.generators]
    constants = [class_t(n, k) for k in range(1, n + 1)]
    gkm_ok = all(check_gkm(f, coh.graph) for f in realized)
    span = coh.span_rank(1, constants + realized) == piece.dimension
    space = piece.space
    ech = coh.ideal(1).echelon()
    vanish = True
    for rel in pres.relations:
        image: dict[int, int] = {}
        for coeff, f in zip(rel, realized):
            if coeff:
                for k, c in space.vector(f).items():
                    image[k] = image.get(k, 0) + coeff * c
        if ech.reduce({k: c for k, c in image.items() if c}):
            vanish = False
    return H2Verification(pres.rank, b2, piece.dimension, coh.quotient_rank(1), span, vanish, gkm_ok)


def _check_gap(h: HessenbergFunction, d: int):
    if d < 2:
        raise PreconditionUnmet(f"d must be at least 2, got {d}")
    if not h.satisfies_gap(d):
        raise PreconditionUnmet(f"h = ({h}) does not satisfy h(j) >= j+{d} on a non-empty [n-{d}]")


def flag_relation_term(h: HessenbergFunction, j: int) -> str:
    """Readable form of ``sum_{i<=j} prod_{l=j+1}^{h(j)} (X_i - X_l)``."""
    terms = []
    for i in range(1, j + 1):
        terms.append("*".join(f"(X{i} - X{ell})" for ell in range(j + 1, h(j) + 1)))
    return " + ".join(terms)


def h2d_presentation(h: HessenbergFunction, d: int) -> CohomologyPresentation:
    """The flag-variety image in degree ``d`` plus ``Y_{j,k}``, one relation per ``j``."""
    _check_gap(h, d)
    n = h.n
    lam = sorted(lambda_set(h, d))
    b_flag = flag_poincare(n)[d]
    gens: list[dict] = [{"kind": "FLAG", "degree": d, "rank": b_flag}]
    gens.extend({"kind": "Y", "j": j, "k": k} for j in lam for k in range(1, n + 1))
    relations = []
    for idx, j in enumerate(lam):
        r = [0] * len(gens)
        for k in range(n):
            r[1 + idx * n + k] = 1
        relations.append(r)
    rank = b_flag + n * len(lam) - (RationalMatrix(relations).rank() if relations else 0)
    return CohomologyPresentation(
        gens, relations, rank,
        extra={"flag_terms": [{"j": j, "y_j": flag_relation_term(h, j)} for j in lam]},
    )


def degree_monomial_classes(n: int, p: int) -> list[EquivariantClass]:
    """All degree-``p`` products of the classes ``t_1..t_n, x_1..x_n``."""
    gens = [class_t(n, k) for k in range(1, n + 1)] + [class_x(n, i) for i in range(1, n + 1)]
    one = EquivariantClass.constant(n, Polynomial.constant(n, 1))
    out = []
    for combo in combinations_with_replacement(range(len(gens)), p):
        f = one
        for idx in combo:
            f = f * gens[idx]
        out.append(f)
    return out


def x_monomial_classes(n: int, p: int) -> list[EquivariantClass]:
    x = [class_x(n, i) for i in range(1, n + 1)]
    one = EquivariantClass.constant(n, Polynomial.constant(n, 1))
    out = []
    for combo in combinations_with_replacement(range(n), p):
        f = one
        for idx in combo:
            f = f * x[idx]
        out.append(f)
    return out


@dataclass
class SpanReport:
    degree: int
    computed: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.computed == self.expected


def span_check(h: HessenbergFunction, d: int, budget: int = DEFAULT_LA_BUDGET,
               cohomology: GradedCohomology | None = None) -> list[SpanReport]:
    """Check that the stated generators span each graded piece up to degree ``d``.

    For ``d = 1`` the generators are ``t_i, x_i, y_{j,k}`` (``j`` in the bottom
    set) and ``tau_A``; for ``d >= 2`` they are products of ``t``'s and
    ``x``'s, joined in degree ``d`` by ``y_{j,k}`` for ``j`` in the Lambda set.
    """
    n = h.n
    coh = cohomology or GradedCohomology(h, budget)
    if d == 1:
        if not h.is_connected():
            raise NotConnected(f"h = ({h}) does not satisfy h(j) >= j+1 on [n-1]")
        gens = [class_t(n, k) for k in range(1, n + 1)] + [class_x(n, i) for i in range(1, n + 1)]
        gens += [class_y(h, j, k) for j in sorted(bottom_set(h)) for k in range(1, n + 1)]
        gens += [class_tau(h, A) for j in sorted(l_set(h)) for A in subsets_of_size(n, j)]
        return [SpanReport(1, coh.span_rank(1, gens), coh.piece(1).dimension)]
    _check_gap(h, d)
    reports = []
    for p in range(1, d + 1):
        gens = degree_monomial_classes(n, p)
        if p == d:
            gens += [class_y(h, j, k) for j in sorted(lambda_set(h, d)) for k in range(1, n + 1)]
        reports.append(SpanReport(p, coh.span_rank(p, gens), coh.piece(p).dimension))
    return reports


@dataclass
class H2dVerification:
    presentation_rank: int
    quotient_ranks: dict[int, int]
    flag_image_ranks: dict[int, int]
    flag_betti: dict[int, int]
    yjk_sum_holds: bool

    @property
    def passed(self) -> bool:
        d = max(self.quotient_ranks)
        ok = self.quotient_ranks[d] == self.presentation_rank and self.yjk_sum_holds
        for p in self.quotient_ranks:
            ok = ok and self.flag_image_ranks[p] == self.flag_betti[p]
            if p < d:
                ok = ok and self.quotient_ranks[p] == self.flag_betti[p]
        return ok


def verify_h2d_presentation(h: HessenbergFunction, d: int, budget: int = DEFAULT_LA_BUDGET,
                            cohomology: GradedCohomology | None = None) -> H2dVerification:
    """Quotient ranks in degrees ``p <= d`` against the presentation and the flag variety.

    Also checks that the image of the flag-variety classes (monomials in the
    ``x_i``) has full rank ``b_{2p}(flag)`` in every degree ``p <= d``.
    """
    pres = h2d_presentation(h, d)
    coh = cohomology or GradedCohomology(h, budget)
    flag = flag_poincare(h.n)
    quotient, image, betti = {}, {}, {}
    for p in range(0, d + 1):
        quotient[p] = coh.quotient_rank(p)
        image[p] = coh.quotient_span_rank(p, x_monomial_classes(h.n, p))
        betti[p] = flag[p]
    sums = all(
        sum((class_y(h, j, k) for k in range(2, h.n + 1)), class_y(h, j, 1)) == sum_identity_rhs(h, j)
        for j in lambda_set(h, d)
    )
    return H2dVerification(pres.rank, quotient, image, betti, sums)
