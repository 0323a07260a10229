"""The q-Plancherel measure: exact masses, transition probabilities, growth law.

For a positive rational q != 1 the measure on partitions of n is

    M_{n,q}(lam) = D_lam(q) * dim(lam) / {n!}_q,

where D_lam(q) = q^{b(lam)} {n!}_q / prod {h}_q is the generic degree and
{m}_q = (q^m - 1)/(q - 1).  The same measure is the marginal law of a
Markov growth process on the Young graph whose transition probabilities
are quotients of q-hook products; both routes are implemented and their
agreement is an acceptance test, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, b_statistic, covers, dimension, falling_factorial, hook_multiset


@dataclass(frozen=True)
class QParameter:
    """The deformation parameter q.

    exact mode carries a rational value for exact arithmetic; fast mode a
    double for Monte-Carlo sampling.  q must be positive and != 1 (the
    classical q = 1 case is out of scope).
    """

    value: Fraction | float
    mode: str  # "exact" | "fast"

    def __post_init__(self):
        if self.mode not in ("exact", "fast"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exact" and not isinstance(self.value, Fraction):
            raise ValueError("exact mode requires a rational q")
        if self.value <= 0:
            raise ValueError("q must be positive")
        if self.value == 1:
            raise ValueError("q = 1 is unsupported; the classical case is out of scope")

    @classmethod
    def exact(cls, q) -> "QParameter":
        return cls(Fraction(q), "exact")

    @classmethod
    def fast(cls, q) -> "QParameter":
        return cls(float(q), "fast")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def as_fraction(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("operation requires exact mode")
        return self.value

    def as_float(self) -> float:
        return float(self.value)

    def reciprocal(self) -> "QParameter":
        if self.is_exact:
            return QParameter.exact(1 / self.value)
        return QParameter.fast(1.0 / self.value)


def q_int(m: int, q: Fraction) -> Fraction:
    """The q-integer {m}_q = 1 + q + ... + q^(m-1)."""
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(m):
        total += power
        power *= q
    return total


def q_factorial(m: int, q: Fraction) -> Fraction:
    out = Fraction(1)
    for i in range(1, m + 1):
        out *= q_int(i, q)
    return out


def generic_degree(lam: Partition, q: QParameter) -> Fraction:
    """D_lam(q) = q^{b(lam)} {n!}_q / prod over boxes of {h}_q."""
    qq = q.as_fraction()
    out = qq ** b_statistic(lam) * q_factorial(lam.size, qq)
    for h in hook_multiset(lam):
        out /= q_int(h, qq)
    return out


def qplancherel_mass(lam: Partition, q: QParameter) -> Fraction:
    """M_{n,q}(lam) = D_lam(q) dim(lam) / {n!}_q."""
    qq = q.as_fraction()
    return generic_degree(lam, q) * dimension(lam) / q_factorial(lam.size, qq)


def q_transition(lam: Partition, big: Partition, q: QParameter) -> Fraction:
    """Growth transition probability from lam to big = lam plus one box.

    p_q(lam, big) = q^(b(big) - b(lam)) * prod_lam {h}_q / prod_big {h}_q.
    Raises when big does not cover lam.
    """
    if not covers(lam, big):
        raise ValueError(f"{big} does not cover {lam} in the Young graph")
    qq = q.as_fraction()
    out = qq ** (b_statistic(big) - b_statistic(lam))
    for h in hook_multiset(lam):
        out *= q_int(h, qq)
    for h in hook_multiset(big):
        out /= q_int(h, qq)
    return out


def corner_growth_weights(lam: Partition, q: QParameter) -> list[tuple[int, Partition, Fraction]]:
    """Exact transition weights for every addable corner, from the run-length view.

    Adding a box at the first row of run k changes hooks only in that row
    and in the new box's column; within a run the changed hooks are
    consecutive integers, so each quotient of q-hook products telescopes
    to one factor {a}_q / {b}_q per run.  Cost is O(#runs) per corner.
    Returned weights are the probabilities p_q(lam, .), summing to 1.
    """
    qq = q.as_fraction()
    runs = lam.runs()
    m = len(runs)
    vals = [v for v, _ in runs] + [0]
    mults = [mu for _, mu in runs]
    cum = [0]
    for mu in mults:
        cum.append(cum[-1] + mu)

    out = []
    for k in range(m + 1):
        start_row = cum[k] + 1  # first row of run k (1-based); new row when k == m
        weight = qq ** (start_row - 1)
        # row hooks: blocks j = k..m-1
        for j in range(k, m):
            a = vals[k] - vals[j] + cum[j + 1] - start_row + 1
            b1 = vals[k] - vals[j + 1] + cum[j + 1] - start_row + 1
            weight *= q_int(a, qq) / q_int(b1, qq)
        # column hooks: blocks j = 0..k-1
        for j in range(k):
            c = vals[j] - vals[k] + start_row - cum[j] - 1 - mults[j]
            d = vals[j] - vals[k] + start_row - cum[j] - 1
            weight *= q_int(c, qq) / q_int(d, qq)
        if k < m:
            grown = lam.parts[: cum[k]] + (vals[k] + 1,) + lam.parts[cum[k] + 1 :]
        else:
            grown = lam.parts + (1,)
        out.append((start_row, Partition(grown), weight))
    return out


def exact_growth_distribution(n: int, q: QParameter, n_cap: int = 20) -> dict[Partition, Fraction]:
    """Exact law of the n-th partition of the growth process, by dynamic programming."""
    if n > n_cap:
        raise ValueError(f"exact growth distribution capped at n = {n_cap}")
    law = {Partition(()): Fraction(1)}
    for _ in range(n):
        new: dict[Partition, Fraction] = {}
        for lam, mass in law.items():
            for _row, big, w in corner_growth_weights(lam, q):
                new[big] = new.get(big, Fraction(0)) + mass * w
        law = new
    return law


def sigma_expectation_qplancherel(rho: Partition, n: int, q: QParameter) -> Fraction:
    """Closed form for the mean of Sigma_rho under M_{n,q}.

    E[Sigma_rho] = (1-q)^{|rho|} / prod_i (1 - q^{rho_i}) * n^(falling |rho|).
    Exact for every n (both sides vanish when |rho| > n).
    """
    qq = q.as_fraction()
    out = Fraction(falling_factorial(n, rho.size)) * (1 - qq) ** rho.size
    for part in rho.parts:
        out /= 1 - qq**part
    return out


def schur_weyl_sigma_expectation(rho: Partition, n: int, N: int) -> Fraction:
    """Mean of Sigma_rho under the Schur-Weyl measure with alphabet size N.

    E[Sigma_rho] = n^(falling |rho|) * N^(l(rho) - |rho|).
    """
    return Fraction(falling_factorial(n, rho.size)) * Fraction(N) ** (rho.length - rho.size)
