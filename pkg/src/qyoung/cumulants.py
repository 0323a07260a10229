"""Joint, disjoint and identity cumulants of normalized characters.

Three moment-to-cumulant inversions over set partitions are in play:
the classical joint cumulants k of random variables, the disjoint
cumulants k_dot taken with respect to the disjoint product (for which
the moment of a family of Sigma's is the mean of one Sigma with the
concatenated index), and the identity cumulants k_id with values in the
observable algebra itself.  Brillinger's decomposition glues them:

    k(X_1, ..., X_r) = sum over set partitions pi of
        k_dot( k_id(X, block_1), ..., k_id(X, block_l) ).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .measures import QParameter, qplancherel_mass, sigma_expectation_qplancherel
from .observables import SigmaCombination, disjoint_product, sigma_combination_product
from .characters import sigma_character
from .partitions import Partition, partitions_of


def set_partitions(r: int):
    """All set partitions of {1..r}, ordered by their restricted growth strings.

    Bell(r) partitions; blocks are tuples ordered by smallest element.
    """
    if not 1 <= r <= 10:
        raise ValueError("set partitions supported for 1 <= r <= 10")

    def rec(i, rgs, maxblock):
        if i == r:
            blocks = [[] for _ in range(maxblock + 1)]
            for pos, b in enumerate(rgs):
                blocks[b].append(pos + 1)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(maxblock + 2):
            yield from rec(i + 1, rgs + [b], max(maxblock, b))

    yield from rec(1, [0], 0)


def joint_cumulant(moment, items: list) -> Fraction:
    """Cumulant of a family of items under a symmetric moment functional.

    ``moment`` maps a tuple of items to their joint moment; the cumulants
    are defined by E[prod] = sum over set partitions of the product of
    block cumulants, and computed by recursive subtraction.
    """
    if not 1 <= len(items) <= 8:
        raise ValueError("joint cumulants supported for 1 to 8 arguments")

    memo: dict[tuple, Fraction] = {}

    def k(sub: tuple) -> Fraction:
        if sub in memo:
            return memo[sub]
        total = Fraction(moment(sub))
        if len(sub) > 1:
            for pi in set_partitions(len(sub)):
                if len(pi) == 1:
                    continue
                term = Fraction(1)
                for block in pi:
                    term *= k(tuple(sub[i - 1] for i in block))
                total -= term
        memo[sub] = total
        return total

    return k(tuple(items))


def disjoint_sigma_moment(indices: list[Partition], n: int, q: QParameter) -> Fraction:
    """Mean of the disjoint product of Sigma's: E[Sigma_{union of indices}]."""
    union = Partition(tuple(sorted((p for idx in indices for p in idx.parts), reverse=True)))
    return sigma_expectation_qplancherel(union, n, q)


def disjoint_cumulant(indices: list[Partition], n: int, q: QParameter) -> Fraction:
    """Disjoint cumulant k_dot of the Sigma's with the given indices under M_{n,q}."""
    if n > 12:
        raise ValueError("disjoint cumulants capped at n <= 12")
    return joint_cumulant(lambda sub: disjoint_sigma_moment(list(sub), n, q), list(indices))


@lru_cache(maxsize=None)
def _identity_cumulant_cached(indices: tuple[int, ...]) -> SigmaCombination:
    if len(indices) == 1:
        return SigmaCombination.sigma((indices[0],))
    # full pointwise product of the Sigma's, expanded in the Sigma basis
    prod = SigmaCombination.sigma((indices[0],))
    for i in indices[1:]:
        prod = sigma_combination_product(prod, SigmaCombination.sigma((i,)))
    total = prod
    for pi in set_partitions(len(indices)):
        if len(pi) == 1:
            continue
        term = None
        for block in pi:
            factor = _identity_cumulant_cached(tuple(indices[i - 1] for i in block))
            term = factor if term is None else disjoint_product(term, factor)
        total = total - term
    return total


def identity_cumulant(indices: list[int]) -> SigmaCombination:
    """Identity cumulant k_id(Sigma_{i_1}, ..., Sigma_{i_r}) in the Sigma basis.

    Satisfies the degree bound deg <= i_1 + ... + i_r - (r - 1): the
    surviving terms come from families of cycle supports whose
    intersection graph is connected.
    """
    if sum(indices) > 10:
        raise ValueError("identity cumulants capped at total index <= 10")
    if any(i < 1 for i in indices):
        raise ValueError("indices must be positive")
    return _identity_cumulant_cached(tuple(indices))


def disjoint_cumulant_of_combinations(
    combos: list[SigmaCombination], n: int, q: QParameter
) -> Fraction:
    """k_dot extended multilinearly to Sigma-combinations."""
    bases = [list(c.coeffs.items()) for c in combos]
    total = Fraction(0)
    for choice in iproduct(*bases):
        coeff = Fraction(1)
        for _idx, c in choice:
            coeff *= c
        total += coeff * disjoint_cumulant([idx for idx, _c in choice], n, q)
    return total


def pointwise_sigma_moment(indices: tuple[int, ...], n: int, q: QParameter) -> Fraction:
    """E[prod_j Sigma_{i_j}] under M_{n,q}, by full enumeration with characters."""
    total = Fraction(0)
    for lam in partitions_of(n):
        mass = qplancherel_mass(lam, q)
        value = Fraction(1)
        for i in indices:
            value *= sigma_character(Partition((i,)), lam)
        total += mass * value
    return total


def brillinger_check(indices: list[int], n: int, q: QParameter) -> tuple[Fraction, Fraction]:
    """Both sides of the Brillinger decomposition for Sigma_{i_1}, ..., Sigma_{i_r}.

    The left side is the joint cumulant computed from pointwise moments
    over the full enumeration of partitions of n; the right side composes
    disjoint cumulants of identity cumulants.  They must agree exactly.
    """
    if n > 10:
        raise ValueError("brillinger check capped at n <= 10")
    if sum(indices) > 8:
        raise ValueError("brillinger check capped at total index <= 8")

    lhs = joint_cumulant(lambda sub: pointwise_sigma_moment(sub, n, q), list(indices))

    rhs = Fraction(0)
    for pi in set_partitions(len(indices)):
        combos = [
            identity_cumulant([indices[i - 1] for i in block]) for block in pi
        ]
        rhs += disjoint_cumulant_of_combinations(combos, n, q)
    return lhs, rhs
