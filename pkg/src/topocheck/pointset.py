"""Fixed-width bitmask subsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SizeLimitExceeded, WidthMismatch

MAX_WIDTH = 64


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, order=True)
class PointSet:
    """A subset of the points ``0 .. width-1`` stored as an int mask."""

    width: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.width <= MAX_WIDTH:
            raise SizeLimitExceeded(f"width {self.width} outside 0..{MAX_WIDTH}")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits:#x} exceed width {self.width}")

    @classmethod
    def of(cls, width: int, points: Iterable[int]) -> PointSet:
        mask = 0
        for p in points:
            if not 0 <= p < width:
                raise ValueError(f"point {p} outside width {width}")
            mask |= 1 << p
        return cls(width, mask)

    @classmethod
    def full(cls, width: int) -> PointSet:
        return cls(width, (1 << width) - 1)

    @classmethod
    def empty(cls, width: int) -> PointSet:
        return cls(width, 0)

    def _check(self, other: PointSet) -> None:
        if self.width != other.width:
            raise WidthMismatch(f"width {self.width} != {other.width}")

    def __or__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.width, self.bits | other.bits)

    def __and__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.width, self.bits & other.bits)

    def __sub__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.width, self.bits & ~other.bits)

    def __invert__(self) -> PointSet:
        return PointSet(self.width, ((1 << self.width) - 1) ^ self.bits)

    complement = __invert__

    def issubset(self, other: PointSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def issuperset(self, other: PointSet) -> bool:
        return other.issubset(self)

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.width and bool(self.bits >> point & 1)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"PointSet({self.width}, {{{', '.join(map(str, self))}}})"
