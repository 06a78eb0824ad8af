"""Young diagrams: transposes, hook lengths, constrained enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (a Young diagram).

    Boxes are 1-indexed as (row i, column j), matching the usual diagram
    coordinates used throughout the block formulas.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {p!r}")
            if i > 0 and self.parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the last row."""
        if i < 1:
            raise ValueError("row index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes (i, j), row by row, 1-indexed."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def transpose(self) -> "Partition":
        """The conjugate diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def hook_length(self, i: int, j: int) -> int:
        """Arm plus leg plus one of box (i, j): parts[i] + transpose[j] - i - j + 1."""
        if not self.contains(i, j):
            raise ValueError(f"box ({i}, {j}) is not in partition {self.parts}")
        col_len = sum(1 for p in self.parts if p >= j)
        return self.parts[i - 1] + col_len - i - j + 1

    def to_json(self) -> list[int]:
        return list(self.parts)


def enumerate_partitions(
    n: int, max_part: int | None = None, max_len: int | None = None
) -> list[Partition]:
    """All partitions of n with the given constraints, in decreasing
    lexicographic order (so (4) comes before (3,1) before (2,2) ...).

    n = 0 yields exactly the empty partition.  The order is fixed so that
    block-sum results downstream are reproducible term by term.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    out: list[Partition] = []
    first_cap = n if max_part is None else min(n, max_part)
    len_cap = n if max_len is None else max_len

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if len(prefix) >= len_cap:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, first_cap, [])
    return out
