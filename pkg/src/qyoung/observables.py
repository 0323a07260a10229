"""The algebra of polynomial functions on Young diagrams.

Elements are finite linear combinations of power-sum monomials p_rho
(power sums of modified Frobenius coordinates) with exact rational
coefficients.  The normalized characters Sigma_rho live in the same
algebra; their expansion into the p-basis is computed from a truncated
generating series, and products of Sigma's are expanded through partial
matchings of cycle entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import Partition, power_sum_eval

Scalar = Fraction | int


class Observable:
    """A finite linear combination of p_rho monomials with Fraction coefficients.

    The empty partition indexes the constant function 1.  Stored maps are
    canonical: zero coefficients are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, Scalar] | None = None):
        clean: dict[Partition, Fraction] = {}
        if coeffs:
            for idx, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[idx] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "Observable":
        return cls()

    @classmethod
    def one(cls) -> "Observable":
        return cls({Partition(()): 1})

    @classmethod
    def p(cls, rho: Partition | tuple[int, ...]) -> "Observable":
        if not isinstance(rho, Partition):
            rho = Partition(tuple(sorted(rho, reverse=True)))
        return cls({rho: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """deg p_rho = |rho|; the zero observable has degree -inf by convention."""
        if not self.coeffs:
            return -(10**9)
        return max(idx.size for idx in self.coeffs)

    def degree_alpha(self, alpha: Fraction) -> Fraction:
        """Gradation deg_alpha(p_rho) = |rho| + alpha*l(rho) - alpha*|rho|."""
        if not self.coeffs:
            return Fraction(-(10**9))
        alpha = Fraction(alpha)
        return max(
            idx.size + alpha * idx.length - alpha * idx.size for idx in self.coeffs
        )

    def __add__(self, other: "Observable") -> "Observable":
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) + c
        return Observable(out)

    def __sub__(self, other: "Observable") -> "Observable":
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) - c
        return Observable(out)

    def __neg__(self) -> "Observable":
        return Observable({idx: -c for idx, c in self.coeffs.items()})

    def scale(self, scalar: Scalar) -> "Observable":
        scalar = Fraction(scalar)
        return Observable({idx: c * scalar for idx, c in self.coeffs.items()})

    def __mul__(self, other: "Observable") -> "Observable":
        out: dict[Partition, Fraction] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                idx = Partition(tuple(sorted(a.parts + b.parts, reverse=True)))
                out[idx] = out.get(idx, Fraction(0)) + ca * cb
        return Observable(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Observable) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Observable(0)"
        terms = sorted(self.coeffs.items(), key=lambda kv: (-kv[0].size, kv[0].parts))
        body = " + ".join(f"({c})*p{idx}" for idx, c in terms)
        return f"Observable({body})"


def observable_multiply(x: Observable, y: Observable) -> Observable:
    return x * y


def evaluate(x: Observable, lam: Partition) -> Fraction:
    """Evaluate the polynomial function on a concrete diagram."""
    cache: dict[int, Fraction] = {}

    def pk(k: int) -> Fraction:
        if k not in cache:
            cache[k] = power_sum_eval(k, lam)
        return cache[k]

    total = Fraction(0)
    for idx, c in x.coeffs.items():
        term = c
        for part in idx.parts:
            term *= pk(part)
        total += term
    return total


class TruncatedSeries:
    """Polynomial in a formal variable t with Observable coefficients, exact up to order T."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list[Observable] | None = None):
        self.order = order
        if coeffs is None:
            coeffs = [Observable.zero() for _ in range(order + 1)]
        assert len(coeffs) == order + 1
        self.coeffs = coeffs

    @classmethod
    def from_scalars(cls, order: int, scalars: list[Scalar]) -> "TruncatedSeries":
        coeffs = [Observable.one().scale(s) for s in scalars]
        coeffs += [Observable.zero() for _ in range(order + 1 - len(coeffs))]
        return cls(order, coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.order == other.order
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.order == other.order
        out = [Observable.zero() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, out)

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term."""
        assert self.coeffs[0].is_zero(), "exp needs zero constant term"
        result = TruncatedSeries.from_scalars(self.order, [1])
        power = TruncatedSeries.from_scalars(self.order, [1])
        for ell in range(1, self.order + 1):
            power = power * self
            result = result + TruncatedSeries(
                self.order, [c.scale(Fraction(1, factorial(ell))) for c in power.coeffs]
            )
        return result


@lru_cache(maxsize=None)
def sigma_k_in_p(k: int) -> Observable:
    """Expansion of the normalized character Sigma_k in the p-basis.

    Sigma_k is the t^(k+1) coefficient of
        -(1/k) * prod_{j=1..k} (1 - (j - 1/2) t)
               * exp( sum_j p_j t^j / j * (1 - (1 - kt)^(-j)) ).
    The top homogeneous component is p_k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    order = k + 1

    prefactor = TruncatedSeries.from_scalars(order, [1])
    for j in range(1, k + 1):
        prefactor = prefactor * TruncatedSeries.from_scalars(
            order, [1, -(Fraction(2 * j - 1, 2))]
        )
    prefactor = TruncatedSeries(
        order, [c.scale(Fraction(-1, k)) for c in prefactor.coeffs]
    )

    # argument of the exponential: -(1/j) * C(j+i-1, i) * k^i * p_j * t^(i+j)
    arg = TruncatedSeries(order)
    for j in range(1, order + 1):
        for i in range(1, order + 1 - j):
            coeff = -Fraction(comb(j + i - 1, i) * k**i, j)
            arg.coeffs[i + j] = arg.coeffs[i + j] + Observable.p((j,)).scale(coeff)

    series = prefactor * arg.exp()
    return series.coeffs[k + 1]


class SigmaCombination:
    """A finite linear combination of normalized-character symbols Sigma_rho.

    ``q`` is None for the classical flavor and a fixed rational for the
    quantized flavor Sigma_{rho,q}; the two flavors never mix.
    """

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs: dict[Partition, Scalar] | None = None, q: Fraction | None = None):
        clean: dict[Partition, Fraction] = {}
        if coeffs:
            for idx, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[idx] = c
        self.coeffs = clean
        self.q = q

    @classmethod
    def sigma(cls, rho: Partition | tuple[int, ...], q: Fraction | None = None) -> "SigmaCombination":
        if not isinstance(rho, Partition):
            rho = Partition(tuple(sorted(rho, reverse=True)))
        return cls({rho: 1}, q=q)

    def _check_flavor(self, other: "SigmaCombination"):
        if self.q != other.q:
            raise ValueError(f"flavor mismatch: q={self.q} vs q={other.q}")

    def __add__(self, other: "SigmaCombination") -> "SigmaCombination":
        self._check_flavor(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) + c
        return SigmaCombination(out, q=self.q)

    def __sub__(self, other: "SigmaCombination") -> "SigmaCombination":
        self._check_flavor(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) - c
        return SigmaCombination(out, q=self.q)

    def scale(self, scalar: Scalar) -> "SigmaCombination":
        scalar = Fraction(scalar)
        return SigmaCombination(
            {idx: c * scalar for idx, c in self.coeffs.items()}, q=self.q
        )

    def degree(self) -> int:
        if not self.coeffs:
            return -(10**9)
        return max(idx.size for idx in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SigmaCombination)
            and self.coeffs == other.coeffs
            and self.q == other.q
        )

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.q))

    def __repr__(self) -> str:
        flavor = "" if self.q is None else f", q={self.q}"
        terms = sorted(self.coeffs.items(), key=lambda kv: (-kv[0].size, kv[0].parts))
        body = " + ".join(f"({c})*S{idx}" for idx, c in terms) or "0"
        return f"SigmaCombination({body}{flavor})"


def _cycle_type_of_matching(mu: tuple[int, ...], nu: tuple[int, ...], matching: dict[int, int]) -> Partition:
    """Cycle type of C(A_1)...C(A_r) C(B_1)...C(B_s) for a partial matching.

    Cells of the mu-cycles carry formal letters 0..|mu|-1; cells of the
    nu-cycles carry |mu|..|mu|+|nu|-1 unless matched, in which case they
    reuse the matched cell's letter.  The product is taken over the whole
    support, counting fixed points.
    """
    total_mu = sum(mu)
    letters_a = list(range(total_mu))
    letters_b = []
    nxt = total_mu
    for bcell in range(sum(nu)):
        if bcell in matching:
            letters_b.append(matching[bcell])
        else:
            letters_b.append(nxt)
            nxt += 1

    def cycles_of(parts, letters):
        out = []
        pos = 0
        for p in parts:
            out.append(letters[pos : pos + p])
            pos += p
        return out

    # permutation as a map; compose right-to-left (B-cycles act first)
    perm = {x: x for x in set(letters_a) | set(letters_b)}

    def apply_cycle(cyc):
        # post-compose: new_perm = cycle . perm
        move = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        for x in perm:
            y = perm[x]
            perm[x] = move.get(y, y)

    for cyc in reversed(cycles_of(nu, letters_b)):
        apply_cycle(cyc)
    for cyc in reversed(cycles_of(mu, letters_a)):
        apply_cycle(cyc)

    seen = set()
    lengths = []
    for x in perm:
        if x in seen:
            continue
        y, clen = x, 0
        while y not in seen:
            seen.add(y)
            y = perm[y]
            clen += 1
        lengths.append(clen)
    return Partition(tuple(sorted(lengths, reverse=True)))


def _partial_matchings(na: int, nb: int):
    """All injective partial maps from range(na) into range(nb), as dicts b->a."""

    def rec(a, used):
        if a == na:
            yield {}
            return
        for rest in rec(a + 1, used):
            yield rest
        for b in range(nb):
            if not used[b]:
                used[b] = True
                for rest in rec(a + 1, used):
                    m = dict(rest)
                    m[b] = a
                    yield m
                used[b] = False

    yield from rec(0, [False] * nb)


@lru_cache(maxsize=None)
def _sigma_product_cached(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: dict[Partition, int] = {}
    for matching in _partial_matchings(sum(mu), sum(nu)):
        rho = _cycle_type_of_matching(mu, nu, matching)
        counts[rho] = counts.get(rho, 0) + 1
    return tuple(sorted((rho.parts, c) for rho, c in counts.items()))


def sigma_product(mu: Partition, nu: Partition) -> SigmaCombination:
    """Pointwise product Sigma_mu * Sigma_nu expanded in the Sigma-basis.

    The expansion runs over partial matchings between the entries of the
    mu-cycles and the nu-cycles; the empty matching contributes
    Sigma_{mu union nu} and every matching M contributes an index of size
    |mu| + |nu| - |M|.
    """
    out = {
        Partition(parts): Fraction(c)
        for parts, c in _sigma_product_cached(mu.parts, nu.parts)
    }
    return SigmaCombination(out)


def sigma_combination_product(x: SigmaCombination, y: SigmaCombination) -> SigmaCombination:
    """Bilinear extension of sigma_product to combinations (classical flavor)."""
    if x.q is not None or y.q is not None:
        raise ValueError("pointwise Sigma-products are implemented for the classical flavor")
    out = SigmaCombination(q=None)
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            out = out + sigma_product(a, b).scale(ca * cb)
    return out


def disjoint_product(x: SigmaCombination, y: SigmaCombination) -> SigmaCombination:
    """The disjoint product: bilinear with Sigma_mu . Sigma_nu = Sigma_{mu union nu}."""
    x._check_flavor(y)
    out: dict[Partition, Fraction] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            idx = Partition(tuple(sorted(a.parts + b.parts, reverse=True)))
            out[idx] = out.get(idx, Fraction(0)) + ca * cb
    return SigmaCombination(out, q=x.q)


@lru_cache(maxsize=None)
def _sigma_rho_in_p_cached(rho: tuple[int, ...]) -> Observable:
    if len(rho) == 0:
        return Observable.one()
    if len(rho) == 1:
        return sigma_k_in_p(rho[0])
    head, tail = rho[0], rho[1:]
    # Sigma_head * Sigma_tail = Sigma_rho + lower-size correction terms
    expansion = sigma_product(Partition((head,)), Partition(tail))
    result = sigma_k_in_p(head) * _sigma_rho_in_p_cached(tail)
    for idx, c in expansion.coeffs.items():
        if idx.parts == rho:
            assert c == 1
            continue
        assert idx.size < sum(rho)
        result = result - _sigma_rho_in_p_cached(idx.parts).scale(c)
    return result


def sigma_rho_in_p(rho: Partition) -> Observable:
    """Expansion of Sigma_rho in the p-basis, with top homogeneous component p_rho."""
    return _sigma_rho_in_p_cached(tuple(sorted(rho.parts, reverse=True)))


def sigma_combination_in_p(x: SigmaCombination) -> Observable:
    """Linear extension of sigma_rho_in_p (classical flavor)."""
    if x.q is not None:
        raise ValueError("p-expansion is defined for the classical flavor")
    out = Observable.zero()
    for idx, c in x.coeffs.items():
        out = out + sigma_rho_in_p(idx).scale(c)
    return out


@lru_cache(maxsize=None)
def _p_rho_in_sigma_cached(rho: tuple[int, ...]) -> SigmaCombination:
    if len(rho) == 0:
        return SigmaCombination({Partition(()): 1})
    # Sigma_rho = p_rho + lower-size terms, so invert by size recursion
    out = SigmaCombination.sigma(rho)
    for idx, c in _sigma_rho_in_p_cached(rho).coeffs.items():
        if idx.parts == rho:
            continue
        out = out - _p_rho_in_sigma_cached(idx.parts).scale(c)
    return out


def p_rho_in_sigma(rho: Partition) -> SigmaCombination:
    """Expansion of the p-monomial p_rho over the Sigma-basis (triangular inverse)."""
    return _p_rho_in_sigma_cached(tuple(sorted(rho.parts, reverse=True)))


def evaluate_sigma_combination(x: SigmaCombination, lam: Partition) -> Fraction:
    """Evaluate a classical Sigma-combination on a diagram via character values."""
    from .characters import sigma_character

    if x.q is not None:
        raise ValueError("use eval_qcharacter for the quantized flavor")
    return sum(
        (c * sigma_character(idx, lam) for idx, c in x.coeffs.items()), Fraction(0)
    )
