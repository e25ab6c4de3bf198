"""
Permutations, partitions and Hessenberg functions.

Everything here is 1-indexed: a permutation ``w`` of ``[n] = {1, ..., n}`` is
stored in one-line notation ``(w(1), ..., w(n))`` and a Hessenberg function
``h`` as ``(h(1), ..., h(n))``.

>>> h = HessenbergFunction.parse("3,3,4,5,5")
>>> sorted(bottom_set(h)), sorted(l_set(h))
([2], [3, 4])
>>> reduce(h, 2)
HessenbergFunction(values=(2, 3, 4, 4))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BelowDiagonal,
    CapExceeded,
    IndexOutOfRange,
    NotWeaklyIncreasing,
    OutOfRange,
    ParseError,
    SizeMismatch,
    ValidationError,
)

DEFAULT_CAP_N = 8


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"not a permutation of [{len(images)}]: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        try:
            if "," in text:
                images = tuple(int(x) for x in text.split(","))
            else:
                images = tuple(int(c) for c in text)
        except ValueError as exc:
            raise ParseError(f"cannot parse permutation {text!r}") from exc
        try:
            return cls(images)
        except ValidationError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexOutOfRange(f"index {i} outside [1, {len(self.images)}]")
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        if self.n != other.n:
            raise SizeMismatch(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, wi in enumerate(self.images, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def swap_positions(self, i: int, j: int) -> Permutation:
        """Right multiplication by the transposition ``(i, j)``."""
        images = list(self.images)
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return Permutation(tuple(images))

    def image_set(self, positions: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[p - 1] for p in positions)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.images)
        return ",".join(str(x) for x in self.images)


@dataclass(frozen=True)
class HessenbergFunction:
    """A weakly increasing ``h: [n] -> [n]`` with ``h(j) >= j``.

    Calling ``h(0)`` returns 1, the convention used by the index sets
    :func:`bottom_set` and :func:`l_set`.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _check_hessenberg(self.values))

    @classmethod
    def parse(cls, text: str) -> HessenbergFunction:
        try:
            values = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
        except ValueError as exc:
            raise ParseError(f"cannot parse Hessenberg function {text!r}") from exc
        return cls(values)

    @classmethod
    def full(cls, n: int) -> HessenbergFunction:
        """The flag variety case ``(n, ..., n)``."""
        return cls((n,) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        if j == 0:
            return 1
        if not 1 <= j <= len(self.values):
            raise IndexOutOfRange(f"index {j} outside [0, {len(self.values)}]")
        return self.values[j - 1]

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All ``(j, i)`` with ``j < i <= h(j)``, in lexicographic order."""
        return tuple(
            (j, i) for j in range(1, self.n + 1) for i in range(j + 1, self.values[j - 1] + 1)
        )

    def is_connected(self) -> bool:
        return all(self.values[j - 1] >= j + 1 for j in range(1, self.n))

    def satisfies_gap(self, d: int) -> bool:
        """Whether ``h(j) >= j + d`` for every ``j`` in ``[n - d]``, which must be non-empty.

        For ``d >= n`` the range is empty and the condition would hold for every
        ``h``, disconnected ones included; the degree-``d`` statements built on it
        need ``n > d``, so that case is reported as unsatisfied.
        """
        if d >= self.n:
            return False
        return all(self.values[j - 1] >= j + d for j in range(1, self.n - d + 1))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def _check_hessenberg(values: Sequence[int]) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    n = len(values)
    if n == 0:
        raise ValidationError("a Hessenberg function needs at least one value")
    for j, v in enumerate(values, start=1):
        if v > n or v < 1:
            raise OutOfRange(f"h({j}) = {v} is outside [1, {n}]")
    for j in range(1, n):
        if values[j] < values[j - 1]:
            raise NotWeaklyIncreasing(f"h({j}) = {values[j - 1]} > h({j + 1}) = {values[j]}")
    for j, v in enumerate(values, start=1):
        if v < j:
            raise BelowDiagonal(f"h({j}) = {v} < {j}")
    return values


def validate(values: Sequence[int] | HessenbergFunction) -> HessenbergFunction:
    if isinstance(values, HessenbergFunction):
        return values
    return HessenbergFunction(tuple(values))


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; any composition normalizes by sorting."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValidationError(f"partition parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @classmethod
    def parse(cls, text: str) -> Partition:
        body = text.strip().strip("()")
        try:
            return cls(tuple(int(x) for x in body.split(",") if x.strip()))
        except ValueError as exc:
            raise ParseError(f"cannot parse partition {text!r}") from exc


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return out


def reduce(h: HessenbergFunction, j: int) -> HessenbergFunction:
    """Remove the ``j``-th row and column of the configuration of ``h``."""
    n = h.n
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"j = {j} outside [1, {n}]")
    values = []
    for i in range(1, n):
        if i < j:
            hi = h(i)
            values.append(hi if hi < j else hi - 1)
        else:
            values.append(h(i + 1) - 1)
    return HessenbergFunction(tuple(values))


def dual_function(h: HessenbergFunction, i: int) -> int:
    """``h*(i) = min{j : h(j) >= i}`` for ``1 < i <= n``."""
    if not 1 < i <= h.n:
        raise IndexOutOfRange(f"i = {i} outside (1, {h.n}]")
    for j in range(1, h.n + 1):
        if h(j) >= i:
            return j
    raise AssertionError("unreachable: h(n) = n >= i")


def bottom_set(h: HessenbergFunction) -> frozenset[int]:
    return frozenset(j for j in range(1, h.n) if h(j - 1) == h(j) == j + 1)


def l_set(h: HessenbergFunction) -> frozenset[int]:
    return frozenset(j for j in range(1, h.n) if h(j - 1) == j and h(j) == j + 1)


def lambda_set(h: HessenbergFunction, d: int) -> frozenset[int]:
    """Indices ``j`` with ``h(j) = j + d < n``.

    The strict bound ``j + d < n`` is what the degree ``2d`` Betti number
    count needs; ``j = n - d`` (where ``h(j) = n`` automatically) is excluded.
    """
    if d < 1:
        raise ValidationError(f"d must be >= 1, got {d}")
    return frozenset(j for j in range(1, h.n - d) if h(j) == j + d)


def lambda_star_set(h: HessenbergFunction, d: int) -> frozenset[int]:
    """Indices ``i`` in ``[d+2, n]`` with ``h*(i) = i - d``."""
    if d < 1:
        raise ValidationError(f"d must be >= 1, got {d}")
    return frozenset(i for i in range(d + 2, h.n + 1) if dual_function(h, i) == i - d)


def inversions(w: Permutation) -> int:
    im = w.images
    n = len(im)
    return sum(1 for j in range(n) for i in range(j + 1, n) if im[j] > im[i])


def h_inversions(h: HessenbergFunction, w: Permutation) -> int:
    """Count pairs ``j < i <= h(j)`` with ``w(j) > w(i)``."""
    if h.n != w.n:
        raise SizeMismatch(f"h has size {h.n} but w has size {w.n}")
    im = w.images
    return sum(1 for j, i in h.pairs if im[j - 1] > im[i - 1])


def enumerate_group(n: int, cap: int = DEFAULT_CAP_N) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the group cap {cap}")
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


@lru_cache(maxsize=None)
def group_elements(n: int) -> tuple[Permutation, ...]:
    """Cached tuple of S_n in lexicographic order (no cap applied)."""
    return tuple(Permutation(images) for images in _itertools_permutations(range(1, n + 1)))


def hessenberg_functions(n: int) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions of size ``n``, lexicographically."""

    def rec(prefix: list[int]):
        j = len(prefix) + 1
        if j > n:
            yield HessenbergFunction(tuple(prefix))
            return
        lo = max(j, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def cycle_type(w: Permutation) -> Partition:
    seen = [False] * (w.n + 1)
    lengths = []
    for start in range(1, w.n + 1):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = w.images[k - 1]
            length += 1
        lengths.append(length)
    return Partition(tuple(lengths))


def cycle_type_representative(mu: Partition) -> Permutation:
    """Cycles of ``mu`` on consecutive integers, longest first."""
    images = []
    start = 1
    for length in mu.parts:
        block = list(range(start, start + length))
        images.extend(block[1:] + block[:1])
        start += length
    return Permutation(tuple(images))
