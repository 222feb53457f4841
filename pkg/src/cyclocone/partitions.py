"""Partitions, multipartitions, box contents and cyclic residues.

Young diagram coordinates are pairs (i, j) with j the row index and i the
position within the row: the diagram of a partition holds (i, j) whenever
1 <= j <= number of rows and 1 <= i <= j-th part.  The content of the box
(i, j) is j - i, so the first box of row j has content j - 1 and contents
decrease along a row.

All enumeration functions use one fixed order so that reports and test
fixtures are byte-stable: partitions are listed by size ascending and, within
a size, by descending lexicographic order on the part tuples, e.g. for size
four: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .rootlattice import DimVector


class Box(NamedTuple):
    """A box of a Young diagram: `column` is the index within the row."""

    column: int
    row: int


def content(box: Box) -> int:
    """Content of a box, row index minus column index."""
    return box.row - box.column


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for k in range(len(parts)):
            if parts[k] < 1:
                raise ValueError(f"parts must be positive: {parts!r}")
            if k + 1 < len(parts) and parts[k] < parts[k + 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def boxes(self) -> Iterator[Box]:
        for j, part in enumerate(self.parts, start=1):
            for i in range(1, part + 1):
                yield Box(column=i, row=j)

    def __contains__(self, box: Box) -> bool:
        return 1 <= box.row <= len(self.parts) and 1 <= box.column <= self.parts[
            box.row - 1
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the bracket syntax, e.g. `[2,1]` or `[]`."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"malformed partition: {text!r}")
        inner = s[1:-1].strip()
        if not inner:
            return cls(())
        return cls(tuple(int(tok) for tok in inner.split(",")))


class MultiPartition:
    """A fixed-length tuple of partitions, one per cycle vertex."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Partition]):
        components = tuple(components)
        if not components:
            raise ValueError("a multipartition needs at least one component")
        for comp in components:
            if not isinstance(comp, Partition):
                raise TypeError(f"expected Partition, got {type(comp).__name__}")
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPartition is immutable")

    @property
    def ell(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(comp.size for comp in self.components)

    def is_empty(self) -> bool:
        return all(not comp for comp in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def __getitem__(self, index: int) -> Partition:
        return self.components[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPartition):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"MultiPartition({list(self.components)!r})"

    def __str__(self) -> str:
        return ";".join(str(comp) for comp in self.components)

    @classmethod
    def parse(cls, text: str, ell: int | None = None) -> MultiPartition:
        """Parse the semicolon syntax, e.g. `[2];[]` for two components."""
        comps = tuple(Partition.parse(tok) for tok in text.strip().split(";"))
        if ell is not None and len(comps) != ell:
            raise ValueError(
                f"expected {ell} components, got {len(comps)} in {text!r}"
            )
        return cls(comps)

    @classmethod
    def empty(cls, ell: int) -> MultiPartition:
        return cls((Partition(),) * ell)


@lru_cache(maxsize=None)
def _residue_coords(parts: tuple[int, ...], ell: int) -> tuple[int, ...]:
    counts = [0] * ell
    for j, part in enumerate(parts, start=1):
        for i in range(1, part + 1):
            counts[(j - i) % ell] += 1
    return tuple(counts)


def residue(lam: Partition, ell: int) -> DimVector:
    """Count boxes by content modulo ell; coordinate sum equals the size."""
    if ell < 1:
        raise ValueError("cycle length must be positive")
    return DimVector(_residue_coords(lam.parts, ell))


def shifted_residue(nu: MultiPartition, ell: int) -> DimVector:
    """Sum of the component residues, the i-th rotated by sigma^i."""
    if ell < 1:
        raise ValueError("cycle length must be positive")
    if nu.ell != ell:
        raise ValueError(f"expected {ell} components, got {nu.ell}")
    total = DimVector((0,) * ell)
    for i, comp in enumerate(nu.components):
        total = total + residue(comp, ell).rotated(i)
    return total


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """Part tuples of all partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    cur = [n]
    while True:
        out.append(tuple(cur))
        k = len(cur) - 1
        while k >= 0 and cur[k] == 1:
            k -= 1
        if k < 0:
            break
        rem = len(cur) - k  # the trailing ones, plus one from the decrement
        cur[k] -= 1
        cap = cur[k]
        del cur[k + 1 :]
        while rem > 0:
            take = min(cap, rem)
            cur.append(take)
            rem -= take
    return tuple(out)


def enumerate_partitions(max_size: int) -> Iterator[Partition]:
    """All partitions of size 0..max_size, each exactly once."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    for size in range(max_size + 1):
        for parts in partitions_of(size):
            yield Partition(parts)


def enumerate_multipartitions(n: int, ell: int) -> Iterator[MultiPartition]:
    """All ell-tuples of partitions with total size exactly n."""
    if ell < 1:
        raise ValueError("cycle length must be positive")
    if n < 0:
        raise ValueError("total size must be nonnegative")

    def fill(index: int, remaining: int) -> Iterator[tuple[Partition, ...]]:
        if index == ell - 1:
            for parts in partitions_of(remaining):
                yield (Partition(parts),)
            return
        for size in range(remaining + 1):
            for parts in partitions_of(size):
                head = Partition(parts)
                for tail in fill(index + 1, remaining - size):
                    yield (head,) + tail

    for combo in fill(0, n):
        yield MultiPartition(combo)
