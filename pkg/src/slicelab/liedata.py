"""Partitions, dominance order, and quiver dimension bookkeeping.

For a partition mu = (mu_1 >= ... >= mu_l) of N the two tables produced
here are the quiver-variety dimension data attached to the slice through
mu and to its equivariant thickening:

* `mv_quiver`: dimV = (0, s_1, ..., s_{l-1}) where s_i is the sum of the
  i smallest parts (reversed partial sums), dimW = (0, ..., 0, N);
* `equiv_quiver`: dimV = mv dimV followed by (N, N-1, ..., 1), dimW = 0.

`alpha_mu` is the length-2N integer vector (2, ..., 2, 0, ..., 0) minus
mu padded with zeros into the first N slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if any(x <= 0 for x in self.parts):
            raise ValueError("partition parts must be positive")
        if any(self.parts[i] < self.parts[i + 1]
               for i in range(len(self.parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def N(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return self.parts + (0,) * (length - len(self.parts))

    @classmethod
    def all_partitions(cls, N: int) -> Iterator["Partition"]:
        def rec(remaining: int, cap: int):
            if remaining == 0:
                yield ()
                return
            for head in range(min(cap, remaining), 0, -1):
                for tail in rec(remaining - head, head):
                    yield (head,) + tail

        for parts in rec(N, N):
            yield cls(parts)

    def to_json(self) -> list:
        return list(self.parts)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(tuple(int(x) for x in data))

    def __repr__(self):
        return f"Partition{self.parts}"


def dominance_leq(a: Partition, b: Partition) -> bool:
    """Partial sums of a never exceed those of b (same N required)."""
    if a.N != b.N:
        raise ValueError("dominance compares partitions of the same integer")
    length = max(a.length, b.length)
    pa, pb = a.padded(length), b.padded(length)
    sa = sb = 0
    for x, y in zip(pa, pb):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def alpha_mu(mu: Partition, N: int) -> tuple[int, ...]:
    """(2, ..., 2, 0, ..., 0) of length 2N minus mu in the first N slots."""
    if mu.N != N:
        raise ValueError(f"mu must be a partition of N = {N}")
    if mu.length > N:
        raise ValueError("partition has more than N parts")
    padded = mu.padded(N)
    return tuple(2 - x for x in padded) + (0,) * N


@dataclass(frozen=True)
class QuiverData:
    """Dimension vectors of a type-A framed quiver."""

    dimV: tuple[int, ...]
    dimW: tuple[int, ...]

    def to_json(self) -> dict:
        return {"dimV": list(self.dimV), "dimW": list(self.dimW)}


def mv_quiver(mu: Partition) -> QuiverData:
    """dimV = reversed partial sums prefixed by 0; dimW = (0,...,0,N)."""
    l = mu.length
    sums = []
    acc = 0
    for x in reversed(mu.parts):
        acc += x
        sums.append(acc)
    dimV = (0,) + tuple(sums[:l - 1])
    dimW = (0,) * (l - 1) + (mu.N,)
    return QuiverData(dimV, dimW)


def equiv_quiver(mu: Partition) -> QuiverData:
    """mv_quiver dimV extended by (N, N-1, ..., 1); empty framing."""
    base = mv_quiver(mu)
    tail = tuple(range(mu.N, 0, -1))
    dimV = base.dimV + tail
    return QuiverData(dimV, (0,) * len(dimV))
