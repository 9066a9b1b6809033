"""Integer partitions, permutations, cycle types and border strips.

Everything here is immutable and purely combinatorial. Partitions never
store trailing zeros; indexing past the last part reads as 0.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Union


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        # tolerate trailing zeros on input, never store them
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the comma-separated form, e.g. ``"3,2,2"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        if any(v <= 0 for v in values):
            raise ValueError(f"not a partition: {text!r}")
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def part(self, i: int) -> int:
        """1-based part lookup, zero past the end."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, other: Partition) -> bool:
        """True when ``other`` fits inside this diagram."""
        if len(other) > len(self):
            return False
        return all(b <= a for a, b in zip(self.parts, other.parts))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({self.parts})"


PartitionLike = Union[Partition, Iterable[int]]


def as_partition(p: PartitionLike) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, CycleType):
        return p.partition
    return Partition(tuple(p))


def conjugate(p: PartitionLike) -> Partition:
    p = as_partition(p)
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for v in p.parts if v >= j) for j in range(1, p.parts[0] + 1)))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def subpartitions(p: PartitionLike) -> Iterator[Partition]:
    """Every partition whose diagram fits inside ``p`` (the empty one included)."""
    p = as_partition(p)

    def rec(i, cap):
        if i == len(p):
            yield ()
            return
        yield ()
        for v in range(min(cap, p.parts[i]), 0, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for parts in rec(0, p.parts[0] if p.parts else 0):
        yield Partition(parts)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: ``images[i] = pi(i+1)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise ValueError(f"not a permutation: {text!r}") from None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycle_type(cls, mu: PartitionLike) -> Permutation:
        """The standard representative (1..mu_1)(mu_1+1..mu_1+mu_2)... of a class."""
        mu = as_partition(mu)
        images = []
        start = 1
        for length in mu:
            images.extend(range(start + 1, start + length))
            images.append(start)
            start += length
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self.images[i - 1]
            out.append(tuple(cycle))
        return out

    def sign(self) -> int:
        return epsilon_of(cycle_type(self))

    def __iter__(self):
        return iter(self.images)

    def __str__(self):
        return ",".join(map(str, self.images))


@dataclass(frozen=True)
class CycleType:
    """A partition read as a conjugacy class <1^j1 2^j2 ...> of S_n."""

    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", as_partition(self.partition))

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def multiplicities(self) -> dict[int, int]:
        """part size -> number of parts of that size"""
        return dict(sorted(Counter(self.partition.parts).items()))

    def __str__(self):
        return str(self.partition)


def cycle_type(perm: Permutation) -> CycleType:
    lengths = sorted((len(c) for c in perm.cycles()), reverse=True)
    return CycleType(Partition(tuple(lengths)))


def _class_of(mu) -> CycleType:
    return mu if isinstance(mu, CycleType) else CycleType(as_partition(mu))


def z_of(mu: CycleType | PartitionLike) -> int:
    """Centralizer order prod_i i^{j_i} j_i!."""
    z = 1
    for size, count in _class_of(mu).multiplicities.items():
        z *= size**count * factorial(count)
    return z


def epsilon_of(mu: CycleType | PartitionLike) -> int:
    """Sign of any permutation with cycle type ``mu``."""
    even_parts = sum(c for size, c in _class_of(mu).multiplicities.items() if size % 2 == 0)
    return -1 if even_parts % 2 else 1


def count_r(mu: PartitionLike, lam: PartitionLike) -> int:
    """Number of ordered set partitions (B_1..B_p) of mu's part indices with
    sum(mu_i for i in B_j) == lam_j for every j."""
    mu, lam = as_partition(mu), as_partition(lam)
    if mu.n != lam.n:
        return 0
    parts = mu.parts

    @lru_cache(maxsize=None)
    def place(i: int, room: tuple[int, ...]) -> int:
        if i == len(parts):
            # every block is exactly full because the totals agree
            return 1
        size = parts[i]
        total = 0
        for j, r in enumerate(room):
            if r >= size:
                total += place(i + 1, room[:j] + (r - size,) + room[j + 1:])
        return total

    return place(0, lam.parts)


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram outer/inner, with inner contained in outer."""

    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self):
        outer, inner = as_partition(self.outer), as_partition(self.inner)
        if not outer.contains(inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def row_lengths(self) -> list[int]:
        return [self.outer.part(i) - self.inner.part(i) for i in range(1, len(self.outer) + 1)]

    def occupied_rows(self) -> list[int]:
        """1-based indices of the rows that hold at least one cell."""
        return [i for i, r in enumerate(self.row_lengths(), 1) if r > 0]

    def cells(self) -> set[tuple[int, int]]:
        """(row, column) pairs, both 1-based."""
        return {
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        }

    def conjugate(self) -> SkewShape:
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self):
        return f"({self.outer})/({self.inner})"


def is_border_strip(s: SkewShape) -> bool:
    """Connected, nonempty and free of 2x2 squares.

    Tested row by row: the occupied rows must be consecutive and each one
    must overlap the row above it in exactly one column, i.e.
    outer_i == inner_{i-1} + 1.
    """
    rows = s.occupied_rows()
    if not rows:
        return False
    if rows[-1] - rows[0] + 1 != len(rows):
        return False
    return all(s.outer.part(i) == s.inner.part(i - 1) + 1 for i in rows[1:])


def height(s: SkewShape) -> int:
    if not is_border_strip(s):
        raise ValueError(f"{s} is not a border strip")
    return len(s.occupied_rows()) - 1


def border_strip_removals(p: PartitionLike, l: int) -> list[tuple[Partition, int]]:
    """All (nu, height) with p/nu a border strip of ``l`` cells.

    Each strip is the rim of a hook of length ``l``: for the hook at cell
    (i, j) the strip runs from the end of row i down to column j of row
    conj_j, so its height is conj_j - i.
    """
    if l < 1:
        raise ValueError("strip size must be at least 1")
    lam = as_partition(p)
    conj = conjugate(lam)
    out = []
    for i in range(1, len(lam) + 1):
        lam_i = lam.part(i)
        for j in range(1, lam_i + 1):
            foot = conj.part(j)
            if lam_i - j + foot - i + 1 != l:
                continue
            nu = list(lam.parts)
            for r in range(i, foot):
                nu[r - 1] = lam.part(r + 1) - 1
            nu[foot - 1] = j - 1
            out.append((Partition(tuple(nu)), foot - i))
    return out
