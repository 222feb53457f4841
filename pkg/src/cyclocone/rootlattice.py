"""Root lattice of the affine cycle, hyperplane roots and character pairings.

The lattice Z^ell is identified with the group algebra Z[Z_ell]: coordinate
r is the multiplicity of the basis element sigma^r (equivalently the quiver
vertex r).  Vectors optionally carry a framing multiplicity for the extra
vertex used by framed dimension vectors; the framing never takes part in
character pairings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .params import RationalCharacter


class DimVector:
    """Integer vector of length ell with an optional framing multiplicity."""

    __slots__ = ("coords", "framing")

    def __init__(self, coords: Sequence[int], framing: int = 0):
        coords = tuple(int(c) for c in coords)
        if not coords:
            raise ValueError("dimension vector needs at least one coordinate")
        if framing < 0:
            raise ValueError("framing multiplicity must be nonnegative")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "framing", int(framing))

    def __setattr__(self, name, value):
        raise AttributeError("DimVector is immutable")

    @property
    def ell(self) -> int:
        return len(self.coords)

    def coordinate_sum(self) -> int:
        return sum(self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def rotated(self, shift: int) -> DimVector:
        """Multiplication by sigma^shift: coordinate r moves to r + shift."""
        n = self.ell
        shift %= n
        return DimVector(
            tuple(self.coords[(r - shift) % n] for r in range(n)), self.framing
        )

    def _check_compatible(self, other: DimVector) -> None:
        if not isinstance(other, DimVector):
            raise TypeError(f"expected DimVector, got {type(other).__name__}")
        if other.ell != self.ell:
            raise ValueError(f"length mismatch: {self.ell} vs {other.ell}")

    def __add__(self, other: DimVector) -> DimVector:
        self._check_compatible(other)
        return DimVector(
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.framing + other.framing,
        )

    def __sub__(self, other: DimVector) -> DimVector:
        self._check_compatible(other)
        return DimVector(
            tuple(a - b for a, b in zip(self.coords, other.coords)),
            self.framing - other.framing,
        )

    def __mul__(self, scalar: int) -> DimVector:
        if not isinstance(scalar, int):
            return NotImplemented
        return DimVector(
            tuple(scalar * c for c in self.coords), scalar * self.framing
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DimVector):
            return NotImplemented
        return self.coords == other.coords and self.framing == other.framing

    def __hash__(self) -> int:
        return hash((self.coords, self.framing))

    def __repr__(self) -> str:
        if self.framing:
            return f"DimVector({self.coords!r}, framing={self.framing})"
        return f"DimVector({self.coords!r})"

    def __str__(self) -> str:
        body = "(" + ",".join(str(c) for c in self.coords) + ")"
        if self.framing == 0:
            return body
        if self.framing == 1:
            return "inf+" + body
        return f"{self.framing}inf+" + body

    @classmethod
    def parse(cls, text: str) -> DimVector:
        """Parse the `(1,0,1)` syntax, optionally prefixed by `inf+`."""
        s = text.strip()
        framing = 0
        if "inf+" in s:
            head, _, s = s.partition("inf+")
            head = head.strip()
            framing = 1 if head == "" else int(head)
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"malformed dimension vector: {text!r}")
        inner = s[1:-1].strip()
        if not inner:
            raise ValueError(f"malformed dimension vector: {text!r}")
        return cls(tuple(int(tok) for tok in inner.split(",")), framing)


def delta(ell: int) -> DimVector:
    """The all-ones vector, the minimal imaginary root of the cycle."""
    if ell < 1:
        raise ValueError("cycle length must be positive")
    return DimVector((1,) * ell)


def epsilon(index: int, ell: int) -> DimVector:
    """Coordinate vector at the given cycle vertex."""
    if not 0 <= index < ell:
        raise ValueError(f"vertex {index} out of range for cycle length {ell}")
    return DimVector(tuple(1 if r == index else 0 for r in range(ell)))


class RootSet:
    """The finite root list attached to the bound n on a cycle of length ell."""

    __slots__ = ("roots", "n", "ell")

    def __init__(self, roots: Sequence[DimVector], n: int, ell: int):
        object.__setattr__(self, "roots", tuple(roots))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ell", ell)

    def __setattr__(self, name, value):
        raise AttributeError("RootSet is immutable")

    def __iter__(self) -> Iterator[DimVector]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"RootSet(n={self.n}, ell={self.ell}, size={len(self.roots)})"


def _interval(i: int, j: int, ell: int) -> DimVector:
    # epsilon_i + ... + epsilon_j for 1 <= i <= j <= ell-1
    return DimVector(tuple(1 if i <= r <= j else 0 for r in range(ell)))


def generate_Rn(n: int, ell: int) -> RootSet:
    """All positive roots with vertex-0 coefficient below n, plus n*delta.

    Generated from the closed-form union of three families: the imaginary
    multiples m*delta (1 <= m <= n), and m*delta plus/minus an interval of
    finite simple roots.  The vertex-0 coefficient of every member of the
    interval families equals m, which realizes the bound.
    """
    if n < 1:
        raise ValueError("bound n must be positive")
    if ell < 1:
        raise ValueError("cycle length must be positive")
    d = delta(ell)
    roots: list[DimVector] = [m * d for m in range(1, n + 1)]
    for m in range(0, n):
        for i in range(1, ell):
            for j in range(i, ell):
                roots.append(m * d + _interval(i, j, ell))
    for m in range(1, n):
        for i in range(1, ell):
            for j in range(i, ell):
                roots.append(m * d - _interval(i, j, ell))
    # The three families are pairwise disjoint; dedupe defensively anyway.
    roots = list(dict.fromkeys(roots))
    return RootSet(roots, n, ell)


def pair(chi: "RationalCharacter", alpha: DimVector) -> Fraction:
    """Exact dot product of a character with a lattice vector.

    The framing coordinate of alpha is ignored: characters live on the
    unframed group.
    """
    values = chi.values
    if len(values) != alpha.ell:
        raise ValueError(
            f"length mismatch: character has {len(values)} entries, "
            f"vector has {alpha.ell}"
        )
    return sum((v * c for v, c in zip(values, alpha.coords)), Fraction(0))


def is_integral_pairing(chi: "RationalCharacter", alpha: DimVector) -> bool:
    return pair(chi, alpha).denominator == 1
