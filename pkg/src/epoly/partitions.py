"""Partitions in power notation and rectangular partitions with the gluing map."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """Partition [1^{k_1} ... n^{k_n}] of n, stored as the multiplicity vector."""

    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("partitions are of positive integers")
        if len(self.mult) != self.n or any(k < 0 for k in self.mult):
            raise ValueError(f"bad multiplicity vector {self.mult} for n={self.n}")
        if sum(j * k for j, k in enumerate(self.mult, 1)) != self.n:
            raise ValueError(f"multiplicities {self.mult} do not sum to {self.n}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        n = sum(parts)
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        return cls(n, tuple(mult))

    @classmethod
    def from_mult(cls, mult: Iterable[int]) -> "Partition":
        mult = tuple(mult)
        n = sum(j * k for j, k in enumerate(mult, 1))
        mult = (mult + (0,) * n)[:n]
        return cls(n, mult)

    @classmethod
    def parse(cls, spec: str) -> "Partition":
        """Read a comma list of parts, e.g. ``"1,1,2"``."""
        try:
            parts = [int(s) for s in spec.split(",") if s.strip()]
        except ValueError:
            raise ValueError(f"cannot parse partition {spec!r}; expected e.g. 1,1,2") from None
        return cls.from_parts(parts)

    def k(self, j: int) -> int:
        return self.mult[j - 1] if 1 <= j <= self.n else 0

    def length(self) -> int:
        return sum(self.mult)

    def parts(self) -> list[int]:
        return [j for j, k in enumerate(self.mult, 1) for _ in range(k)]

    def items(self) -> Iterator[tuple[int, int]]:
        """(part size, multiplicity) pairs with nonzero multiplicity."""
        return ((j, k) for j, k in enumerate(self.mult, 1) if k)

    def max_part(self) -> int:
        return max(j for j, _ in self.items())

    def __str__(self) -> str:
        return "[" + " ".join(str(j) if k == 1 else f"{j}^{k}" for j, k in self.items()) + "]"

    def to_json(self) -> dict:
        return {"n": self.n, "mult": list(self.mult)}


@dataclass(frozen=True)
class RectPartition:
    """Rectangular partition: multiplicities k_{l,h} of l x h rectangles with sum l*h*k = n.

    ``mult`` holds only the nonzero entries, sorted by (l, h).
    """

    n: int
    mult: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rectangular partitions are of positive integers")
        keys = [lh for lh, _ in self.mult]
        if keys != sorted(set(keys)):
            raise ValueError("rectangles must be listed once each, sorted by (l, h)")
        for (l, h), k in self.mult:
            if l < 1 or h < 1 or k < 1:
                raise ValueError(f"bad entry k_{l},{h} = {k}")
        if sum(l * h * k for (l, h), k in self.mult) != self.n:
            raise ValueError(f"rectangles {self.mult} do not have total area {self.n}")

    @classmethod
    def from_dict(cls, ks: dict[tuple[int, int], int]) -> "RectPartition":
        items = tuple(sorted((lh, k) for lh, k in ks.items() if k))
        return cls(sum(l * h * k for (l, h), k in items), items)

    def k(self, l: int, h: int) -> int:
        return dict(self.mult).get((l, h), 0)

    def rectangles(self) -> list[tuple[int, int]]:
        """Every rectangle repeated by multiplicity, largest (l, h) first."""
        return sorted((lh for lh, k in self.mult for _ in range(k)), reverse=True)

    def __str__(self) -> str:
        return "[" + " ".join(f"({l}x{h})^{k}" for (l, h), k in self.mult) + "]"

    def to_json(self) -> dict:
        return {"n": self.n, "mult": [{"l": l, "h": h, "k": k} for (l, h), k in self.mult]}


def _partition_vectors(n: int, largest: int) -> Iterator[list[int]]:
    # multiplicity vectors (k_1..k_largest) of partitions of n with parts <= largest
    if largest == 1:
        yield [n]
        return
    for k in range(n // largest + 1):
        for rest in _partition_vectors(n - k * largest, largest - 1):
            yield rest + [k]


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    out = []
    for vec in _partition_vectors(n, n):
        out.append(Partition(n, tuple(vec)))
    out.sort(key=lambda p: p.mult)
    return tuple(out)


def enum_partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographic in the multiplicity vector (so [n] comes first)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return list(_partitions_cached(n))


def _rect_search(remaining: int, shapes: list[tuple[int, int]], i: int, acc: dict) -> Iterator[dict]:
    if remaining == 0:
        yield dict(acc)
        return
    if i == len(shapes):
        return
    l, h = shapes[i]
    area = l * h
    for k in range(remaining // area, -1, -1):
        if k:
            acc[(l, h)] = k
        yield from _rect_search(remaining - k * area, shapes, i + 1, acc)
        acc.pop((l, h), None)


def glue(rp: RectPartition) -> Partition:
    """Glue rectangles into a Young diagram: m_l = sum_h h * k_{l,h}."""
    mult = [0] * rp.n
    for (l, h), k in rp.mult:
        mult[l - 1] += h * k
    return Partition(rp.n, tuple(mult))


def _rect_sort_key(rp: RectPartition):
    # glued partitions with larger parts first; within a fiber, larger rectangles first
    parts = sorted(glue(rp).parts(), reverse=True)
    return ([-p for p in parts], [(-l, -h) for l, h in rp.rectangles()])


@lru_cache(maxsize=None)
def _rect_cached(n: int) -> tuple[RectPartition, ...]:
    shapes = [(l, h) for l in range(1, n + 1) for h in range(1, n // l + 1)]
    found = [RectPartition.from_dict(ks) for ks in _rect_search(n, shapes, 0, {})]
    found.sort(key=_rect_sort_key)
    return tuple(found)


def enum_rect_partitions(n: int) -> list[RectPartition]:
    """All rectangular partitions of n; l x h and h x l are different rectangles.

    Ordered by glued partition, then largest rectangles first, which
    reproduces the usual picture listing for n = 3 and n = 4.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return list(_rect_cached(n))


def fibers_of_glue(n: int) -> dict[Partition, list[RectPartition]]:
    fibers: dict[Partition, list[RectPartition]] = {p: [] for p in enum_partitions(n)}
    for rp in enum_rect_partitions(n):
        fibers[glue(rp)].append(rp)
    return fibers


def fiber(m: Partition) -> list[RectPartition]:
    return [rp for rp in enum_rect_partitions(m.n) if glue(rp) == m]
