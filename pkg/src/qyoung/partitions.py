"""Integer partitions and their combinatorics.

Partitions are the index objects for everything else in this package:
hook lengths, Specht module dimensions, Frobenius coordinates and the
power sums built on them.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterator, NamedTuple


class Partition:
    """A weakly decreasing sequence of positive integers (possibly empty).

    Instances are immutable and hashable.  The bracket text form "[3,1]"
    (empty partition: "[]") is produced by ``str()`` and parsed by
    :meth:`from_string`; it is the partition format used by the CLI.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: tuple[int, ...] | list[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self._parts = parts
        self._size = sum(parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse the bracket format, e.g. "[3,1]" or "[]"."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"not a bracketed partition: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return cls(())
        return cls(tuple(int(tok) for tok in inner.split(",")))

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    @property
    def length(self) -> int:
        return len(self._parts)

    def runs(self) -> tuple[tuple[int, int], ...]:
        """Run-length view: ((value, multiplicity), ...) with values decreasing."""
        out = []
        for p in self._parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return tuple((v, m) for v, m in out)

    def row(self, i: int) -> int:
        """The i-th part (1-based), or 0 past the last row."""
        if i < 1:
            raise ValueError("row indices are 1-based")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def conjugate(self) -> "Partition":
        """The transposed diagram."""
        if not self._parts:
            return self
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def __iter__(self):
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        # Deterministic total order: by size, then lexicographic on parts.
        return (self._size, self._parts) < (other._size, other._parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"


EMPTY = Partition(())


def _partition_tuples(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order (largest part first).

    For n = 4 the order is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part is None:
        max_part = n
    for parts in _partition_tuples(n, max_part):
        yield Partition(parts)


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """All boxes (i, j) of the diagram, 1-based, row-major."""
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            yield i, j


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length of the box (i, j): arm + leg + 1."""
    conj = lam.conjugate().parts
    return (lam.parts[i - 1] - j) + (conj[j - 1] - i) + 1


def hook_multiset(lam: Partition) -> list[int]:
    """Multiset of all hook lengths, as a descending list of size |lam|."""
    conj = lam.conjugate().parts
    hooks = [
        (p - j) + (conj[j - 1] - i) + 1
        for i, p in enumerate(lam.parts, start=1)
        for j in range(1, p + 1)
    ]
    hooks.sort(reverse=True)
    return hooks


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible symmetric group module, by the hook length formula."""
    num = factorial(lam.size)
    den = prod(hook_multiset(lam))
    q, r = divmod(num, den)
    assert r == 0
    return q


def b_statistic(lam: Partition) -> int:
    """The statistic b(lam) = sum_i (i-1) * lam_i."""
    return sum((i - 1) * p for i, p in enumerate(lam.parts, start=1))


class FrobeniusCoordinates(NamedTuple):
    """Modified Frobenius coordinates, stored as doubled (odd) integers.

    a*_i = lam_i - i + 1/2 and b*_i = lam'_i - i + 1/2 for i up to the
    diagonal size d; ``doubled_a[i] == 2 * a*_{i+1}`` and likewise for b.
    """

    d: int
    doubled_a: tuple[int, ...]
    doubled_b: tuple[int, ...]


def frobenius(lam: Partition) -> FrobeniusCoordinates:
    conj = lam.conjugate().parts
    d = 0
    while d < len(lam.parts) and lam.parts[d] >= d + 1:
        d += 1
    da = tuple(2 * (lam.parts[i] - (i + 1)) + 1 for i in range(d))
    db = tuple(2 * (conj[i] - (i + 1)) + 1 for i in range(d))
    return FrobeniusCoordinates(d, da, db)


def power_sum_eval(k: int, lam: Partition) -> Fraction:
    """The k-th power sum of the modified Frobenius alphabet of lam.

    p_k(lam) = sum_i (a*_i)^k - (-b*_i)^k; in particular p_1(lam) = |lam|.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    fc = frobenius(lam)
    num = sum(a**k - (-b) ** k for a, b in zip(fc.doubled_a, fc.doubled_b))
    return Fraction(num, 2**k)


def addable_cells(lam: Partition) -> list[tuple[int, Partition]]:
    """All ways to add one box: (1-based row index, resulting partition).

    There is one addable cell per distinct part value, plus the new row.
    """
    out = []
    parts = lam.parts
    for i, p in enumerate(parts):
        if i == 0 or parts[i - 1] > p:
            grown = parts[:i] + (p + 1,) + parts[i + 1 :]
            out.append((i + 1, Partition(grown)))
    out.append((len(parts) + 1, Partition(parts + (1,))))
    return out


def covers(lam: Partition, big: Partition) -> bool:
    """True when big is obtained from lam by adding a single box."""
    if big.size != lam.size + 1 or big.length < lam.length:
        return False
    diff = 0
    for i in range(big.length):
        a = lam.parts[i] if i < lam.length else 0
        if big.parts[i] == a + 1:
            diff += 1
        elif big.parts[i] != a:
            return False
    return diff == 1


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); zero when k > n >= 0."""
    out = 1
    for i in range(k):
        out *= n - i
    return out
