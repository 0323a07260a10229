import random
from fractions import Fraction

import pytest

from qyoung.characters import normalized_character
from qyoung.cumulants import (
    brillinger_check,
    disjoint_cumulant,
    identity_cumulant,
    joint_cumulant,
    set_partitions,
)
from qyoung.measures import QParameter, sigma_expectation_qplancherel
from qyoung.observables import SigmaCombination, evaluate_sigma_combination
from qyoung.partitions import Partition, falling_factorial, partitions_of

HALF = QParameter.exact(Fraction(1, 2))


def P(*parts):
    return Partition(tuple(sorted(parts, reverse=True)))


def bell_oracle(r):
    # Bell triangle: Bell(r) is the last entry of the r-th row
    row = [1]
    for _ in range(r - 1):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return row[-1]


def test_set_partitions_counts():
    assert len(list(set_partitions(1))) == 1
    assert len(list(set_partitions(3))) == 5
    assert len(list(set_partitions(6))) == 203
    for r in range(1, 9):
        pts = list(set_partitions(r))
        assert len(pts) == bell_oracle(r)
        assert len(set(pts)) == len(pts)
        for pi in pts:
            flat = sorted(x for b in pi for x in b)
            assert flat == list(range(1, r + 1))
    with pytest.raises(ValueError):
        list(set_partitions(0))


def test_joint_cumulant_base_cases():
    moments = {("x",): Fraction(3), ("x", "x"): Fraction(11)}
    oracle = lambda sub: moments[tuple(sub)]
    assert joint_cumulant(oracle, ["x"]) == 3
    assert joint_cumulant(oracle, ["x", "x"]) == 11 - 9


def test_joint_cumulants_vanish_for_multiplicative_oracle():
    means = {"x": Fraction(2), "y": Fraction(-3), "z": Fraction(1, 2)}

    def oracle(sub):
        out = Fraction(1)
        for s in sub:
            out *= means[s]
        return out

    for vars_ in (["x", "y"], ["x", "x", "y"], ["x", "y", "z", "x"]):
        assert joint_cumulant(oracle, vars_) == 0


def test_moebius_consistency_random_moments():
    rng = random.Random(99)
    names = ["a", "b", "c", "d", "e"]
    table = {}

    def oracle(sub):
        key = tuple(sorted(sub))
        if key not in table:
            table[key] = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        return table[key]

    # cumulants of all sub-multisets, then rebuild the full moment
    def k(sub):
        return joint_cumulant(oracle, list(sub))

    full = tuple(names)
    rebuilt = Fraction(0)
    for pi in set_partitions(len(full)):
        term = Fraction(1)
        for block in pi:
            term *= k(tuple(full[i - 1] for i in block))
        rebuilt += term
    assert rebuilt == oracle(full)


def test_disjoint_cumulant_closed_forms():
    q = Fraction(1, 2)
    for n in (5, 9, 12):
        for l in (1, 2, 3):
            want = sigma_expectation_qplancherel(P(l), n, HALF)
            assert disjoint_cumulant([P(l)], n, HALF) == want
            assert want == Fraction((1 - q) ** l, 1) / (1 - q**l) * falling_factorial(n, l)
        for l, m in ((2, 2), (2, 3)):
            got = disjoint_cumulant([P(l), P(m)], n, HALF)
            want = (1 - q) ** (l + m) / ((1 - q**l) * (1 - q**m)) * (
                falling_factorial(n, l + m) - falling_factorial(n, l) * falling_factorial(n, m)
            )
            assert got == want


def test_disjoint_cumulant_leading_term_richardson():
    # k_dot(Sigma_l, Sigma_m) ~ -lm (1-q)^{l+m} / ((1-q^l)(1-q^m)) n^{l+m-1}
    q = Fraction(1, 2)
    for l, m in ((2, 2), (2, 3)):
        lead = -l * m * (1 - q) ** (l + m) / ((1 - q**l) * (1 - q**m))

        def scaled(n):
            got = (1 - q) ** (l + m) / ((1 - q**l) * (1 - q**m)) * (
                falling_factorial(n, l + m)
                - falling_factorial(n, l) * falling_factorial(n, m)
            )
            return got / Fraction(n) ** (l + m - 1)

        f20, f40, f80 = scaled(20), scaled(40), scaled(80)
        r1 = 2 * f40 - f20
        r2 = 2 * f80 - f40
        assert abs(r2 - lead) < abs(r1 - lead)
        assert abs(r2 - lead) < abs(lead) * Fraction(1, 100)


def test_identity_cumulant_examples():
    for l in (1, 2, 5):
        assert identity_cumulant([l]) == SigmaCombination.sigma((l,))
    got = identity_cumulant([2, 3])
    assert got == SigmaCombination({P(4): 6, P(2, 1): 6})
    assert identity_cumulant([1, 1]) == SigmaCombination.sigma((1,))


def test_identity_cumulant_degree_bound():
    for indices in (
        [2, 2],
        [3, 4],
        [4, 4],
        [2, 2, 2],
        [3, 3, 4],
        [4, 4, 2],
        [1, 2, 3],
    ):
        got = identity_cumulant(indices)
        assert got.degree() <= sum(indices) - (len(indices) - 1)


def test_identity_cumulant_caps():
    with pytest.raises(ValueError):
        identity_cumulant([6, 5])
    with pytest.raises(ValueError):
        identity_cumulant([0, 2])


def _cycle_from_arrangement(arr, n):
    # permutation of 1..n as a tuple, mapping arr[i] -> arr[i+1]
    perm = list(range(n + 1))
    for i, a in enumerate(arr):
        perm[a] = arr[(i + 1) % len(arr)]
    return perm


def _cycle_type(perm, n):
    seen = [False] * (n + 1)
    lens = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        x, c = start, 0
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            c += 1
        lens.append(c)
    return Partition(tuple(sorted(lens, reverse=True)))


def test_identity_cumulant_against_group_algebra_bruteforce():
    # k_id(Sigma_2, Sigma_2) evaluated on lam equals the restricted sum over
    # pairs of 2-arrangements with intersecting supports of chi^lam(product).
    got = identity_cumulant([2, 2])
    for n in range(4, 8):
        for lam in partitions_of(n):
            brute = Fraction(0)
            pool = [
                (a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b
            ]
            for arr1 in pool:
                for arr2 in pool:
                    if not (set(arr1) & set(arr2)):
                        continue
                    p1 = _cycle_from_arrangement(arr1, n)
                    p2 = _cycle_from_arrangement(arr2, n)
                    prod = [p1[p2[x]] for x in range(n + 1)]
                    rho = _cycle_type(prod, n)
                    brute += normalized_character(lam, rho)
            assert evaluate_sigma_combination(got, lam) == brute


def test_brillinger_identity():
    assert brillinger_check([2], 6, HALF)[0] == brillinger_check([2], 6, HALF)[1]
    for indices, n in (([2, 2], 6), ([2, 3], 7), ([2, 2], 4)):
        lhs, rhs = brillinger_check(indices, n, HALF)
        assert lhs == rhs
        assert lhs != 0


def test_brillinger_r1_is_mean():
    lhs, rhs = brillinger_check([3], 7, HALF)
    assert lhs == rhs == sigma_expectation_qplancherel(P(3), 7, HALF)


def _sigma_joint_cumulant_closed_form(indices, n, q):
    # E of any pointwise product of Sigma's follows from the matching
    # expansion plus the closed form for single means, valid at every n;
    # no enumeration of partitions of n is involved.
    from qyoung.cumulants import joint_cumulant
    from qyoung.observables import SigmaCombination, sigma_combination_product

    def moment(sub):
        prod = SigmaCombination({Partition(()): 1})
        for i in sub:
            prod = sigma_combination_product(prod, SigmaCombination.sigma((i,)))
        return sum(
            (c * sigma_expectation_qplancherel(idx, n, q) for idx, c in prod.coeffs.items()),
            Fraction(0),
        )

    return joint_cumulant(moment, list(indices))


def test_joint_cumulant_order_of_magnitude_window():
    # heuristic bounded-ratio check: k(Sigma_l, Sigma_m, ...) scaled by
    # n^-(sum deg - r + 1) stays bounded over n in {10, 20, 40} and, for
    # r = 2, approaches the limiting covariance
    from qyoung.harness import clt_covariance_targets

    q = Fraction(1, 2)
    for indices in ([2, 2], [2, 3], [3, 3], [2, 2, 2]):
        exponent = sum(indices) - (len(indices) - 1)
        scaled = [
            _sigma_joint_cumulant_closed_form(indices, n, HALF) / Fraction(n) ** exponent
            for n in (10, 20, 40)
        ]
        assert all(abs(s) < 10 for s in scaled)
        if len(indices) == 2:
            limit = clt_covariance_targets(q, "sigmas", *indices)
            drift = [abs(s - limit) for s in scaled]
            assert drift[2] < drift[1] < drift[0]


def test_closed_form_cumulant_agrees_with_enumeration():
    # the closed-form route of the previous test matches the brute-force
    # pointwise-moment route where enumeration is feasible
    from qyoung.cumulants import pointwise_sigma_moment, joint_cumulant

    for indices, n in (([2, 2], 6), ([2, 3], 7)):
        closed = _sigma_joint_cumulant_closed_form(indices, n, HALF)
        brute = joint_cumulant(lambda sub: pointwise_sigma_moment(sub, n, HALF), list(indices))
        assert closed == brute
