"""Integer partitions with hooks, contents and t-core tests."""

from __future__ import annotations

from collections import Counter
from typing import Iterator


class InvalidPartitionError(ValueError):
    pass


class Partition:
    """A weakly decreasing sequence of positive integers (possibly empty).

    Values are immutable; the empty partition serializes as "-" and a
    nonempty one as a comma-separated part list, e.g. "8,4,3,2,2,1".
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise InvalidPartitionError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise InvalidPartitionError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        try:
            return cls(tuple(int(s) for s in text.split(",")))
        except ValueError as exc:
            raise InvalidPartitionError(f"cannot parse partition {text!r}") from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (i, j), 1-based, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def hooks(self, r: int = 1) -> tuple[int, ...]:
        """Hook lengths of all cells divisible by r, in row-major cell order."""
        if r < 1:
            raise ValueError("r must be a positive integer")
        conj = self.conjugate().parts
        out = []
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                h = p - j + conj[j - 1] - i + 1
                if h % r == 0:
                    out.append(h)
        return tuple(out)

    def hook(self, i: int, j: int) -> int:
        """Hook length of cell (i, j), 1-based; arm + leg + 1."""
        if not (1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]):
            raise ValueError(f"({i},{j}) is not a cell of {self}")
        conj = self.conjugate().parts
        return self.parts[i - 1] - j + conj[j - 1] - i + 1

    def contents(self) -> tuple[int, ...]:
        """Contents j - i of all cells, row-major."""
        return tuple(j - i for i, j in self.cells())

    def small_hook_counts(self, t: int) -> tuple[int, ...]:
        """Counts (b_1, ..., b_{t-1}) where b_i is the number of cells
        with hook length exactly t - i."""
        if t < 1:
            raise ValueError("t must be a positive integer")
        tally = Counter(self.hooks())
        return tuple(tally.get(t - i, 0) for i in range(1, t))

    def row_moment(self) -> int:
        """Sum of (i - 1) * part_i, the exponent in the hook-content formula."""
        return sum((i - 1) * p for i, p in enumerate(self.parts, start=1))

    def is_t_core(self, t: int) -> bool:
        if t < 1:
            raise ValueError("t must be a positive integer")
        return all(h % t for h in self.hooks())

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def __repr__(self):
        return f"Partition({self.parts})"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, reverse-lexicographic on parts (largest first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, cap):
        if remaining == 0:
            yield []
            return
        for k in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - k, k):
                yield [k] + rest

    for parts in rec(n, n):
        yield Partition(tuple(parts))


def partitions_up_to(max_n: int) -> Iterator[Partition]:
    """All partitions of every size 0..max_n, sizes ascending."""
    for n in range(max_n + 1):
        yield from enumerate_partitions(n)


def enumerate_t_cores(t: int, max_n: int) -> list[Partition]:
    """All t-cores of size at most max_n, by filtering the full enumeration."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return [p for p in partitions_up_to(max_n) if p.is_t_core(t)]
