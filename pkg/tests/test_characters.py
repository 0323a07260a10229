from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from qyoung.characters import character, normalized_character, sigma_character, z_order
from qyoung.partitions import Partition, dimension, partitions_of


def _expand_power_sum(rho, ell):
    """Sparse expansion of p_rho in ell variables: exponent vector -> int coeff."""
    poly = {(0,) * ell: 1}
    for part in rho.parts:
        new = {}
        for expo, c in poly.items():
            for i in range(ell):
                e = list(expo)
                e[i] += part
                key = tuple(e)
                new[key] = new.get(key, 0) + c
        poly = new
    return poly


def frobenius_character_oracle(lam, rho):
    """Character value as the coefficient of x^(lam+delta) in p_rho times the Vandermonde."""
    ell = max(lam.length, 1)
    poly = _expand_power_sum(rho, ell)
    lam_padded = lam.parts + (0,) * (ell - lam.length)
    delta = tuple(range(ell - 1, -1, -1))
    total = 0
    for sigma in permutations(range(ell)):
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if sigma[i] > sigma[j]:
                    sign = -sign
        target = tuple(lam_padded[i] + delta[i] - delta[sigma[i]] for i in range(ell))
        total += sign * poly.get(target, 0)
    return total


def test_character_examples():
    lam = Partition((2, 1))
    assert character(lam, Partition((1, 1, 1))) == 2
    assert character(lam, Partition((3,))) == -1
    assert character(lam, Partition((2, 1))) == 0
    for n in range(1, 9):
        for rho in partitions_of(n):
            assert character(Partition((n,)), rho) == 1


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        character(Partition((2, 1)), Partition((2,)))


def test_character_at_identity_is_dimension():
    for n in range(9):
        for lam in partitions_of(n):
            assert character(lam, Partition((1,) * n)) == dimension(lam)


def test_character_against_frobenius_formula_oracle():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert character(lam, rho) == frobenius_character_oracle(lam, rho)


def test_regular_character_identity():
    # sum_lam dim(lam) * char(lam, rho) is n! at the identity class and 0 elsewhere
    for n in range(1, 10):
        identity = Partition((1,) * n)
        for rho in partitions_of(n):
            total = sum(dimension(lam) * character(lam, rho) for lam in partitions_of(n))
            assert total == (factorial(n) if rho == identity else 0)


def test_column_orthogonality():
    for n in range(1, 8):
        lams = list(partitions_of(n))
        for rho in lams:
            for tau in lams:
                total = sum(character(lam, rho) * character(lam, tau) for lam in lams)
                assert total == (z_order(rho) if rho == tau else 0)


def test_z_order():
    assert z_order(Partition(())) == 1
    assert z_order(Partition((3,))) == 3
    assert z_order(Partition((1, 1, 1))) == 6
    assert z_order(Partition((2, 2, 1))) == 8
    # class sizes n!/z_rho add up to the whole group
    for n in range(1, 8):
        assert sum(Fraction(factorial(n), z_order(r)) for r in partitions_of(n)) == factorial(n)


def test_sigma_character_values():
    # Sigma_rho(lam) vanishes when |rho| > |lam| and extends rho by fixed points
    lam = Partition((2, 1))
    assert sigma_character(Partition((4,)), lam) == 0
    assert sigma_character(Partition((1,)), lam) == 3
    assert sigma_character(Partition((2,)), lam) == 0
    # 3^(falling 3) * chi^(2,1)((3)) = 6 * (-1/2)
    assert sigma_character(Partition((3,)), lam) == -3


def test_normalized_character():
    assert normalized_character(Partition((2, 1)), Partition((3,))) == Fraction(-1, 2)
