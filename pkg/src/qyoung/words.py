"""RSK shapes of words, permutation statistics, and the major-index measure.

The RSK row-insertion shape of a uniform random word of length n over an
N-letter alphabet is Schur-Weyl distributed; the shape of a permutation
weighted by q^maj is q-Plancherel distributed.  Both pushforwards are
verified against enumeration in the tests rather than assumed.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from itertools import permutations

import numpy as np

from . import _kernels
from .measures import QParameter, q_factorial
from .partitions import Partition
from .sampling import stream_rng


class Word:
    """A word with letters in 1..N."""

    __slots__ = ("letters", "N")

    def __init__(self, letters, N: int):
        letters = tuple(int(x) for x in letters)
        if N < 1:
            raise ValueError("alphabet size must be >= 1")
        for x in letters:
            if not 1 <= x <= N:
                raise ValueError(f"letter {x} outside 1..{N}")
        self.letters = letters
        self.N = N

    def __len__(self):
        return len(self.letters)


def rsk_shape(word) -> Partition:
    """Common shape of the RSK insertion pair of the word, by row insertion.

    The first row length equals the longest non-decreasing subsequence.
    """
    letters = word.letters if isinstance(word, Word) else tuple(word)
    rows: list[list[int]] = []
    for x in letters:
        for row in rows:
            idx = bisect_right(row, x)
            if idx == len(row):
                row.append(x)
                x = None
                break
            row[idx], x = x, row[idx]
        if x is not None:
            rows.append([x])
    return Partition(tuple(len(r) for r in rows))


def longest_nondecreasing(seq) -> int:
    """Length of the longest non-decreasing subsequence (patience sorting)."""
    tails: list[int] = []
    for x in seq:
        idx = bisect_right(tails, x)
        if idx == len(tails):
            tails.append(x)
        else:
            tails[idx] = x
    return len(tails)


def longest_increasing(seq) -> int:
    """Length of the longest strictly increasing subsequence."""
    tails: list[int] = []
    for x in seq:
        idx = bisect_left(tails, x)
        if idx == len(tails):
            tails.append(x)
        else:
            tails[idx] = x
    return len(tails)


def perm_statistics(sigma) -> tuple[int, int]:
    """(major index, longest increasing subsequence length) of a permutation.

    maj is the sum of the positions i (1-based) with sigma(i) > sigma(i+1);
    the LIS length equals the first row of the RSK shape.
    """
    sigma = list(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("input is not a permutation of 1..n")
    maj = sum(i + 1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
    return maj, longest_increasing(sigma)


def sample_schur_weyl(n: int, N: int, seed: int, stream: int = 0) -> Partition:
    """Shape of the RSK tableau of a uniform word: one Schur-Weyl draw."""
    parts = sample_schur_weyl_parts(n, N, seed, stream)
    return Partition(tuple(int(x) for x in parts))


def sample_schur_weyl_parts(n: int, N: int, seed: int, stream: int = 0) -> np.ndarray:
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    rng = stream_rng(seed, stream)
    word = rng.integers(1, N + 1, size=n, dtype=np.int64)
    counts = np.zeros((N + 1, N + 2), dtype=np.int64)
    nrows = _kernels.rsk_row_counts(word, N, counts)
    return counts[:nrows].sum(axis=1)


def schur_weyl_distribution_bruteforce(n: int, N: int) -> dict[Partition, Fraction]:
    """Exact Schur-Weyl law by enumerating all N^n words (small n only)."""
    if N**n > 100_000:
        raise ValueError("word enumeration is limited to N^n <= 100000")
    law: dict[Partition, Fraction] = {}
    total = Fraction(1, N**n)
    from itertools import product

    for word in product(range(1, N + 1), repeat=n):
        shape = rsk_shape(word)
        law[shape] = law.get(shape, Fraction(0)) + total
    return law


def maj_pushforward(n: int, q: QParameter) -> dict[Partition, Fraction]:
    """Law of the RSK shape of a permutation drawn proportionally to q^maj.

    Enumerates the n! permutations (n <= 8); an oracle for the q-Plancherel
    measure via the major-index correspondence.
    """
    if n > 8:
        raise ValueError("permutation enumeration is limited to n <= 8")
    qq = q.as_fraction()
    norm = q_factorial(n, qq)
    law: dict[Partition, Fraction] = {}
    for sigma in permutations(range(1, n + 1)):
        maj, _ = perm_statistics(sigma)
        shape = rsk_shape(sigma)
        law[shape] = law.get(shape, Fraction(0)) + qq**maj / norm
    return law
