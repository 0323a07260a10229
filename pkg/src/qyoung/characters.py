"""Irreducible characters of the symmetric groups.

Character values are computed with the Murnaghan-Nakayama recursion over
border strips, memoized on (shape, remaining cycle type).  The recursion
peels the largest part of the cycle type first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, dimension, falling_factorial


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    t, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newparts = tuple(
            x - (ell - 1 - j) for j, x in enumerate(newbeta) if x - (ell - 1 - j) > 0
        )
        total += (-1) ** height * _mn(newparts, rest)
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Non-normalized character value on the conjugacy class of cycle type rho."""
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |{rho}| = {rho.size}")
    return _mn(lam.parts, tuple(sorted(rho.parts, reverse=True)))


def normalized_character(lam: Partition, rho: Partition) -> Fraction:
    """Character value divided by the dimension."""
    return Fraction(character(lam, rho), dimension(lam))


@lru_cache(maxsize=None)
def _dim(lam: tuple[int, ...]) -> int:
    return dimension(Partition(lam))


def sigma_character(rho: Partition, lam: Partition) -> Fraction:
    """The normalized character Sigma_rho evaluated on lam.

    Sigma_rho(lam) = n^(falling |rho|) * chi^lam(rho completed with 1s),
    where n = |lam|; the value is 0 when |rho| > |lam|.
    """
    k, n = rho.size, lam.size
    if k > n:
        return Fraction(0)
    completed = Partition(tuple(sorted(rho.parts + (1,) * (n - k), reverse=True)))
    num = falling_factorial(n, k) * _mn(lam.parts, tuple(sorted(completed.parts, reverse=True)))
    return Fraction(num, _dim(lam.parts))


def z_order(rho: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type rho.

    z_rho = prod_i i^{m_i} m_i! where m_i is the multiplicity of i in rho.
    """
    out = 1
    for value, mult in rho.runs():
        out *= value**mult * factorial(mult)
    return out
