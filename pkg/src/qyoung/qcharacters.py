"""Quantized normalized characters of the Iwahori-Hecke algebras.

The quantized symbols Sigma_{rho,q} are linear combinations of the
classical Sigma_nu with coefficients built from Hall scalar products
<p_nu, h_rho> and <m_nu, p_rho>.  The scalar products are computed by
brute-force expansion of symmetric polynomials in finitely many formal
variables; both transition matrices are triangular with respect to
refinement and are mutual inverses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .characters import sigma_character, z_order
from .partitions import Partition, partitions_of


def _expand_product_of_power_sums(parts: tuple[int, ...], ell: int) -> dict[tuple[int, ...], int]:
    """Sparse expansion of p_{parts} in ell variables: exponent vector -> coeff."""
    poly = {(0,) * ell: 1}
    for part in parts:
        new: dict[tuple[int, ...], int] = {}
        for expo, c in poly.items():
            for i in range(ell):
                e = list(expo)
                e[i] += part
                key = tuple(e)
                new[key] = new.get(key, 0) + c
        poly = new
    return poly


def _monomials_of_degree(k: int, ell: int):
    """All exponent vectors of total degree k in ell variables."""
    if ell == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _monomials_of_degree(k - first, ell - 1):
            yield (first,) + rest


def _expand_complete_homogeneous(parts: tuple[int, ...], ell: int) -> dict[tuple[int, ...], int]:
    """Sparse expansion of h_{parts} in ell variables."""
    poly = {(0,) * ell: 1}
    for part in parts:
        new: dict[tuple[int, ...], int] = {}
        for expo, c in poly.items():
            for mono in _monomials_of_degree(part, ell):
                key = tuple(a + b for a, b in zip(expo, mono))
                new[key] = new.get(key, 0) + c
        poly = new
    return poly


def scalar_ph(nu: Partition, rho: Partition) -> Fraction:
    """Hall scalar product <p_nu, h_rho>.

    Since (h, m) are dual bases, this is the coefficient of the dominant
    monomial x^rho in the expansion of p_nu; it vanishes unless nu refines
    rho.
    """
    if nu.size != rho.size:
        raise ValueError("scalar products need |nu| == |rho|")
    if nu.size == 0:
        return Fraction(1)
    ell = rho.length
    poly = _expand_power_sum_cached(nu.parts, ell)
    return Fraction(poly.get(rho.parts, 0))


@lru_cache(maxsize=None)
def _expand_power_sum_cached(parts: tuple[int, ...], ell: int):
    return _expand_product_of_power_sums(parts, ell)


@lru_cache(maxsize=None)
def _mp_matrix(k: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]:
    """All <m_nu, p_rho> for nu, rho of size k, via exact inversion of [<p_nu, h_rho>].

    Writing p_pi = sum_nu <p_pi, h_nu> m_nu and m_nu = sum_pi B[nu][pi] p_pi,
    the matrix B is the inverse of P = [<p_pi, h_nu>], and
    <m_nu, p_rho> = B[nu][rho] * z_rho.
    """
    if k == 0:
        return {((), ()): Fraction(1)}
    index = [p for p in partitions_of(k)]
    size = len(index)
    P = [
        [scalar_ph(index[i], index[j]) for j in range(size)]
        for i in range(size)
    ]
    # exact Gauss-Jordan inverse
    aug = [row[:] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(P)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    Pinv = [row[size:] for row in aug]
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
    for i, nu in enumerate(index):
        for j, rho in enumerate(index):
            out[(nu.parts, rho.parts)] = Pinv[i][j] * z_order(rho)
    return out


def scalar_mp(nu: Partition, rho: Partition) -> Fraction:
    """Hall scalar product <m_nu, p_rho>."""
    if nu.size != rho.size:
        raise ValueError("scalar products need |nu| == |rho|")
    return _mp_matrix(nu.size)[(nu.parts, rho.parts)]


def refines(nu: Partition, rho: Partition) -> bool:
    """True when the parts of nu can be grouped into blocks summing to the parts of rho."""
    if nu.size != rho.size:
        return False

    def assign(parts, targets):
        if not parts:
            return all(t == 0 for t in targets)
        p, rest = parts[0], parts[1:]
        seen = set()
        for i, t in enumerate(targets):
            if t >= p and t not in seen:
                seen.add(t)
                if assign(rest, targets[:i] + (t - p,) + targets[i + 1 :]):
                    return True
        return False

    return assign(nu.parts, rho.parts)


def _check_q(q: Fraction):
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be a positive rational different from 1")
    return q


def _q_power_product(q: Fraction, rho: Partition) -> Fraction:
    """q^rho - 1 in the product convention: prod_i (q^{rho_i} - 1)."""
    out = Fraction(1)
    for part in rho.parts:
        out *= q**part - 1
    return out


def qchar_transition(k: int, q: Fraction, direction: str) -> dict[Partition, dict[Partition, Fraction]]:
    """Transition matrices between quantized and classical normalized characters.

    direction="to_classical": rows rho give Sigma_{rho,q} = sum_nu M[rho][nu] Sigma_nu,
    with M[rho][nu] = (q^nu - 1) <p_nu, h_rho> / (z_nu (q-1)^{l(rho)}).

    direction="from_classical": rows rho give Sigma_rho = sum_nu M[rho][nu] Sigma_{nu,q},
    with M[rho][nu] = (q-1)^{l(nu)} <m_nu, p_rho> / (q^rho - 1).

    The two matrices are mutual inverses; both are triangular with respect
    to refinement.
    """
    q = _check_q(q)
    if direction not in ("to_classical", "from_classical"):
        raise ValueError(f"unknown direction {direction!r}")
    index = list(partitions_of(k))
    out: dict[Partition, dict[Partition, Fraction]] = {}
    for rho in index:
        row: dict[Partition, Fraction] = {}
        for nu in index:
            if direction == "to_classical":
                c = scalar_ph(nu, rho)
                if c:
                    row[nu] = (
                        _q_power_product(q, nu) * c / (z_order(nu) * (q - 1) ** rho.length)
                    )
            else:
                c = scalar_mp(nu, rho)
                if c:
                    row[nu] = (q - 1) ** nu.length * c / _q_power_product(q, rho)
        out[rho] = row
    return out


@lru_cache(maxsize=None)
def _to_classical_row(rho_parts: tuple[int, ...], q: Fraction) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    rho = Partition(rho_parts)
    row = qchar_transition(rho.size, q, "to_classical")[rho]
    return tuple(sorted((nu.parts, c) for nu, c in row.items()))


def eval_qcharacter(lam: Partition, rho: Partition, q: Fraction) -> Fraction:
    """The quantized normalized character Sigma_{rho,q} evaluated on lam.

    Computed through the triangular expansion over classical Sigma_nu; the
    value is 0 when |rho| > |lam|.
    """
    q = _check_q(q)
    if rho.size > lam.size:
        return Fraction(0)
    total = Fraction(0)
    for nu_parts, c in _to_classical_row(rho.parts, q):
        total += c * sigma_character(Partition(nu_parts), lam)
    return total


def qcharacter_observable(rho: Partition, q: Fraction):
    """Sigma_{rho,q} expanded in the p-basis (an exact Observable)."""
    from .observables import Observable, sigma_rho_in_p

    q = _check_q(q)
    out = Observable.zero()
    for nu_parts, c in _to_classical_row(rho.parts, q):
        out = out + sigma_rho_in_p(Partition(nu_parts)).scale(c)
    return out
