"""
Exact linear algebra over the rationals.

``RationalMatrix`` is a small dense matrix with a fraction-free (Bareiss) rank
and a Gauss-Jordan solver. ``SparseEchelon`` is the workhorse for the large,
very sparse congruence systems: rows are integer dicts reduced fraction-free
and kept primitive (content 1), which is enough to read off ranks, kernels and
reduced row-space bases.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import NonIntegralSolution, SizeMismatch

SparseRow = dict[int, int]


class RationalMatrix:
    def __init__(self, rows: Sequence[Sequence]):
        self.entries = [[Fraction(x) for x in row] for row in rows]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise SizeMismatch("ragged matrix")

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix([list(col) for col in zip(*self.entries)]) if self.rows else self

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.entries:
            m = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * m) for x in row])
        return out

    def rank(self) -> int:
        """Bareiss fraction-free elimination; every intermediate entry stays integral."""
        a = self._integer_rows()
        nrows, ncols = self.rows, self.cols
        prev = 1
        rank = 0
        for c in range(ncols):
            if rank == nrows:
                break
            pivot = next((r for r in range(rank, nrows) if a[r][c] != 0), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            p = a[rank][c]
            for r in range(rank + 1, nrows):
                f = a[r][c]
                row_r, row_p = a[r], a[rank]
                for cc in range(c, ncols):
                    row_r[cc] = (p * row_r[cc] - f * row_p[cc]) // prev
            prev = p
            rank += 1
        return rank

    def solve(self, b: Sequence) -> list[Fraction]:
        """Unique solution of ``A x = b`` for square invertible ``A``."""
        if self.rows != self.cols or len(b) != self.rows:
            raise SizeMismatch("solve needs a square system")
        n = self.rows
        aug = [row[:] + [Fraction(bv)] for row, bv in zip(self.entries, b)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if pivot is None:
                raise ArithmeticError("singular matrix")
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return [row[n] for row in aug]


def solve_integral(a: RationalMatrix, b: Sequence) -> list[int]:
    x = a.solve(b)
    if any(v.denominator != 1 for v in x):
        raise NonIntegralSolution(f"solution {x} is not integral")
    return [int(v) for v in x]


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


class SparseEchelon:
    """Incremental fraction-free row echelon form of sparse integer rows."""

    def __init__(self):
        self.pivots: dict[int, SparseRow] = {}
        self._reduced = False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, int]) -> SparseRow:
        """Reduce ``row`` against the current pivots (result is a multiple of the residue)."""
        row = {c: int(v) for c, v in row.items() if v}
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = row.get(c)
            if not coef:
                continue
            prow = self.pivots.get(c)
            if prow is None:
                continue
            p = prow[c]
            if coef % p == 0:
                f = coef // p
            else:
                g = gcd(p, coef)
                scale = p // g
                row = {k: v * scale for k, v in row.items()}
                f = coef // g
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: Mapping[int, int]) -> bool:
        """Add a row; returns True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        row = _primitive(row)
        self.pivots[min(row)] = row
        self._reduced = False
        return True

    def extend(self, rows: Iterable[Mapping[int, int]]) -> int:
        return sum(1 for r in rows if self.add(r))

    def back_substitute(self):
        """Clear every pivot column from the other pivot rows (reduced echelon form)."""
        if self._reduced:
            return
        for c in sorted(self.pivots, reverse=True):
            row = self.pivots[c]
            changed = False
            for k in sorted(row):
                if k == c or k not in self.pivots or k not in row:
                    continue
                other = self.pivots[k]
                p, coef = other[k], row[k]
                g = gcd(p, coef)
                scale, f = p // g, coef // g
                if scale != 1:
                    row = {kk: v * scale for kk, v in row.items()}
                for kk, v in other.items():
                    nv = row.get(kk, 0) - f * v
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
                changed = True
            if changed:
                self.pivots[c] = _primitive(row)
        self._reduced = True

    def reduced_basis(self) -> list[tuple[int, dict[int, Fraction]]]:
        """Row-space basis ``(pivot, row)`` with ``row[pivot] = 1`` and zeros on other pivots."""
        self.back_substitute()
        out = []
        for c in sorted(self.pivots):
            row = self.pivots[c]
            p = row[c]
            out.append((c, {k: Fraction(v, p) for k, v in row.items()}))
        return out

    def kernel(self, ncols: int) -> list[tuple[int, dict[int, Fraction]]]:
        """Null-space basis ``(free column, vector)`` with ``vector[free] = 1``.

        Each vector vanishes on every other free column, so the coordinates of
        a kernel element in this basis are its entries on the free columns.
        """
        self.back_substitute()
        column_hits: dict[int, list[tuple[int, Fraction]]] = {}
        for c, row in self.pivots.items():
            p = row[c]
            for k, v in row.items():
                if k != c:
                    column_hits.setdefault(k, []).append((c, Fraction(-v, p)))
        out = []
        for f in range(ncols):
            if f in self.pivots:
                continue
            vec = {f: Fraction(1)}
            for c, v in column_hits.get(f, ()):
                vec[c] = v
            out.append((f, vec))
        return out


def integer_scaled(vec: Mapping[int, Fraction]) -> dict[int, int]:
    m = lcm(*(Fraction(v).denominator for v in vec.values())) if vec else 1
    return {k: int(Fraction(v) * m) for k, v in vec.items()}


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    ech = SparseEchelon()
    ech.extend(rows)
    return ech.rank
