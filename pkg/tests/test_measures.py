from fractions import Fraction

import pytest

from qyoung.characters import sigma_character
from qyoung.measures import (
    QParameter,
    corner_growth_weights,
    exact_growth_distribution,
    generic_degree,
    q_factorial,
    q_int,
    q_transition,
    qplancherel_mass,
    schur_weyl_sigma_expectation,
    sigma_expectation_qplancherel,
)
from qyoung.partitions import Partition, partitions_of

Q_LIST = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 2)]


def P(*parts):
    return Partition(tuple(sorted(parts, reverse=True)))


def sym(q, coeffs):
    """Polynomial in q from a list of coefficients, constant term first."""
    return sum(Fraction(c) * q**i for i, c in enumerate(coeffs))


def test_qparameter_validation():
    with pytest.raises(ValueError):
        QParameter.exact(1)
    with pytest.raises(ValueError):
        QParameter.exact(0)
    with pytest.raises(ValueError):
        QParameter.exact(Fraction(-1, 2))
    with pytest.raises(ValueError):
        QParameter(0.5, "exact")  # exact mode needs a rational
    assert QParameter.exact("2/3").value == Fraction(2, 3)
    assert QParameter.fast(0.5).as_float() == 0.5
    assert QParameter.exact("1/2").reciprocal().value == 2


def test_q_int_and_factorial():
    q = Fraction(1, 2)
    assert q_int(1, q) == 1
    assert q_int(3, q) == Fraction(7, 4)
    assert q_factorial(3, q) == Fraction(3, 2) * Fraction(7, 4)


def test_generic_degree_examples():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        for n in (1, 3, 5):
            assert generic_degree(P(n), qp) == 1
        assert generic_degree(P(1, 1), qp) == q
        assert generic_degree(P(1, 1, 1, 1), qp) == q**6
        # further golden degrees from the n <= 4 table
        assert generic_degree(P(2, 1), qp) == q**2 + q
        assert generic_degree(P(2, 2), qp) == q**4 + q**2
        assert generic_degree(P(3, 1), qp) == q**3 + q**2 + q
        assert generic_degree(P(2, 1, 1), qp) == q**5 + q**4 + q**3


def test_qplancherel_mass_golden_values():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        assert qplancherel_mass(P(2), qp) == 1 / (q + 1)
        assert qplancherel_mass(P(1, 1), qp) == q / (q + 1)
        assert qplancherel_mass(P(2, 1), qp) == 2 * q / (q**2 + q + 1)
        d3 = sym(q, [1, 2, 2, 1])
        assert qplancherel_mass(P(3), qp) == 1 / d3
        assert qplancherel_mass(P(1, 1, 1), qp) == q**3 / d3
        d4 = sym(q, [1, 3, 5, 6, 5, 3, 1])
        assert qplancherel_mass(P(1, 1, 1, 1), qp) == q**6 / d4
        assert qplancherel_mass(P(4), qp) == 1 / d4
        assert qplancherel_mass(P(3, 1), qp) == 3 * q / sym(q, [1, 2, 2, 2, 1])
        assert qplancherel_mass(P(2, 2), qp) == 2 * q**2 / sym(q, [1, 3, 4, 3, 1])


def test_masses_sum_to_one():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        for n in range(13):
            assert sum(qplancherel_mass(lam, qp) for lam in partitions_of(n)) == 1


def test_conjugation_duality():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        qp_inv = qp.reciprocal()
        for n in range(11):
            for lam in partitions_of(n):
                assert qplancherel_mass(lam.conjugate(), qp_inv) == qplancherel_mass(lam, qp)


def test_q_transition_golden_edges():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        assert q_transition(P(1), P(2), qp) == 1 / (q + 1)
        assert q_transition(P(1), P(1, 1), qp) == q / (q + 1)
        assert q_transition(P(2), P(2, 1), qp) == (q**2 + q) / (q**2 + q + 1)
        assert q_transition(P(2), P(3), qp) == 1 / (q**2 + q + 1)
        assert q_transition(P(1, 1), P(2, 1), qp) == (q + 1) / (q**2 + q + 1)
        assert q_transition(P(1, 1), P(1, 1, 1), qp) == q**2 / (q**2 + q + 1)
        d = sym(q, [1, 1, 1, 1])
        assert q_transition(P(3), P(4), qp) == 1 / d
        assert q_transition(P(3), P(3, 1), qp) == (q**3 + q**2 + q) / d
        assert q_transition(P(1, 1, 1), P(1, 1, 1, 1), qp) == q**3 / d
        assert q_transition(P(1, 1, 1), P(2, 1, 1), qp) == (q**2 + q + 1) / d
        d21 = sym(q, [1, 2, 2, 2, 1])
        assert q_transition(P(2, 1), P(3, 1), qp) == (q**2 + q + 1) / d21
        assert q_transition(P(2, 1), P(2, 2), qp) == (q**3 + q) / d21
        assert q_transition(P(2, 1), P(2, 1, 1), qp) == (q**4 + q**3 + q**2) / d21


def test_q_transition_rejects_non_cover():
    qp = QParameter.exact(Fraction(1, 2))
    with pytest.raises(ValueError):
        q_transition(P(2, 1), P(4), qp)


def test_corner_weights_match_direct_transitions_and_normalize():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        for n in range(13):
            for lam in partitions_of(n):
                weights = corner_growth_weights(lam, qp)
                assert sum(w for _, _, w in weights) == 1
                for _row, big, w in weights:
                    assert w == q_transition(lam, big, qp)
                    assert 0 < w < 1 or (lam.size == 0 and w == 1)


def test_trajectory_conjugation_duality():
    for q in (Fraction(1, 2), Fraction(2, 3)):
        qp = QParameter.exact(q)
        qp_inv = qp.reciprocal()
        for n in range(9):
            for lam in partitions_of(n):
                for _row, big, w in corner_growth_weights(lam, qp):
                    assert q_transition(lam.conjugate(), big.conjugate(), qp_inv) == w


def test_exact_growth_distribution_matches_direct_masses():
    for q in Q_LIST:
        qp = QParameter.exact(q)
        for n in range(9):
            law = exact_growth_distribution(n, qp)
            assert sum(law.values()) == 1
            assert set(law) == set(partitions_of(n))
            for lam, mass in law.items():
                assert mass == qplancherel_mass(lam, qp)


def test_growth_distribution_n2_closed_form():
    q = Fraction(1, 2)
    law = exact_growth_distribution(2, QParameter.exact(q))
    assert law == {P(2): 1 / (q + 1), P(1, 1): q / (q + 1)}


def test_exact_growth_distribution_cap():
    with pytest.raises(ValueError):
        exact_growth_distribution(25, QParameter.exact(Fraction(1, 2)))


def test_sigma_expectation_closed_form_matches_enumeration():
    q = QParameter.exact(Fraction(1, 2))
    for n in range(8):
        masses = {lam: qplancherel_mass(lam, q) for lam in partitions_of(n)}
        for size in range(1, 5):
            for rho in partitions_of(size):
                want = sum(
                    (m * sigma_character(rho, lam) for lam, m in masses.items()),
                    Fraction(0),
                )
                assert sigma_expectation_qplancherel(rho, n, q) == want


def test_schur_weyl_expectation_examples():
    from qyoung.partitions import falling_factorial

    for n in (3, 5):
        for N in (2, 3):
            for k in range(1, 4):
                assert schur_weyl_sigma_expectation(P(*([1] * k)), n, N) == falling_factorial(n, k)
    assert schur_weyl_sigma_expectation(P(2), 3, 2) == 3
    assert schur_weyl_sigma_expectation(P(3), 3, 2) == Fraction(3, 2)
