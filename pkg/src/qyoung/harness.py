"""Verification harness: exact identity suites and Monte-Carlo estimation.

The exact suite checks, in rational arithmetic at small sizes, the
identities that define the q-Plancherel measure (normalization, growth
consistency, the closed form for character means, the trace property,
conjugation duality, the major-index correspondence, and the observable
algebra).  The Monte-Carlo runner estimates row lengths, power sums and
(q-)character statistics at scale with independent seeded streams, and
reports means, covariances and standard errors; every statistical
assertion downstream is of the form |estimate - target| <
max(abs_tol, 5 * standard_error).
"""

from __future__ import annotations

import json
import os
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .characters import sigma_character
from .measures import (
    QParameter,
    corner_growth_weights,
    exact_growth_distribution,
    q_int,
    qplancherel_mass,
    schur_weyl_sigma_expectation,
    sigma_expectation_qplancherel,
)
from .observables import Observable, SigmaCombination, evaluate, sigma_k_in_p, sigma_rho_in_p
from .partitions import Partition, falling_factorial, partitions_of
from .qcharacters import eval_qcharacter, qcharacter_observable
from .sampling import sample_qplancherel_parts
from .words import maj_pushforward, sample_schur_weyl_parts, schur_weyl_distribution_bruteforce

SCHEMA_VERSION = 1
DEFAULT_EXACT_CAP = 12
HARD_EXACT_CAP = 30


def exact_enumeration_cap() -> int:
    """Partition-enumeration size cap; QYOUNG_MAX_EXACT_N raises it (hard max 30)."""
    cap = int(os.environ.get("QYOUNG_MAX_EXACT_N", DEFAULT_EXACT_CAP))
    return min(cap, HARD_EXACT_CAP)


def _check_enumeration_size(n: int):
    cap = exact_enumeration_cap()
    if n > cap:
        raise ValueError(
            f"exact enumeration at n = {n} exceeds the cap {cap}; "
            "raise QYOUNG_MAX_EXACT_N (hard max 30) to override"
        )
    if n > DEFAULT_EXACT_CAP:
        warnings.warn(f"exact enumeration at n = {n} may be slow", RuntimeWarning)


def exact_expectation(stat, n: int, q: QParameter) -> Fraction:
    """Mean of an Observable or SigmaCombination under M_{n,q}, by enumeration."""
    _check_enumeration_size(n)
    total = Fraction(0)
    for lam in partitions_of(n):
        mass = qplancherel_mass(lam, q)
        if isinstance(stat, Observable):
            value = evaluate(stat, lam)
        elif isinstance(stat, SigmaCombination):
            if stat.q is None:
                value = sum(
                    (c * sigma_character(idx, lam) for idx, c in stat.coeffs.items()),
                    Fraction(0),
                )
            else:
                value = sum(
                    (c * eval_qcharacter(lam, idx, stat.q) for idx, c in stat.coeffs.items()),
                    Fraction(0),
                )
        else:
            raise TypeError(f"cannot average a {type(stat).__name__}")
        total += mass * value
    return total


# ---------------------------------------------------------------------------
# exact verification suite


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(CheckResult(name, passed, detail))

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "verify_report",
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify_exact_suite(n_max: int, q_list) -> VerifyReport:
    """Run every exact identity check up to size n_max for each q.

    q_list entries may be Fractions or exact QParameters.  Any failure is
    reported with a counterexample string.
    """
    qs = [q if isinstance(q, QParameter) else QParameter.exact(q) for q in q_list]
    report = VerifyReport()
    from . import measures as _measures  # late binding so tests can inject faults

    for q in qs:
        tag = f"q={q.value}"

        bad = []
        for n in range(n_max + 1):
            total = sum(_measures.qplancherel_mass(lam, q) for lam in partitions_of(n))
            if total != 1:
                bad.append(f"n={n}: sum={total}")
        report.add(f"mass-normalization [{tag}]", not bad, "; ".join(bad))

        bad = []
        for n in range(min(n_max, 8) + 1):
            law = exact_growth_distribution(n, q)
            for lam, mass in law.items():
                direct = _measures.qplancherel_mass(lam, q)
                if mass != direct:
                    bad.append(f"n={n} {lam}: growth={mass} direct={direct}")
        report.add(f"growth-consistency [{tag}]", not bad, "; ".join(bad[:3]))

        bad = []
        for n in range(n_max + 1):
            masses = {lam: _measures.qplancherel_mass(lam, q) for lam in partitions_of(n)}
            for size in range(1, min(n_max, 5) + 1):
                for rho in partitions_of(size):
                    enumerated = sum(
                        (m * sigma_character(rho, lam) for lam, m in masses.items()),
                        Fraction(0),
                    )
                    closed = sigma_expectation_qplancherel(rho, n, q)
                    if enumerated != closed:
                        bad.append(f"n={n} rho={rho}: {enumerated} != {closed}")
        report.add(f"character-mean-closed-form [{tag}]", not bad, "; ".join(bad[:3]))

        bad = []
        for n in range(min(n_max, 8) + 1):
            for size in range(1, min(4, n) + 1):
                for rho in partitions_of(size):
                    got = exact_expectation(SigmaCombination.sigma(rho, q=q.value), n, q)
                    ones = Partition((1,) * size)
                    want = Fraction(falling_factorial(n, size)) if rho == ones else Fraction(0)
                    if got != want:
                        bad.append(f"n={n} rho={rho}: {got} != {want}")
        report.add(f"trace-property [{tag}]", not bad, "; ".join(bad[:3]))

        bad = []
        q_inv = q.reciprocal()
        for n in range(n_max + 1):
            for lam in partitions_of(n):
                if _measures.qplancherel_mass(lam.conjugate(), q_inv) != _measures.qplancherel_mass(lam, q):
                    bad.append(f"n={n} {lam}")
        report.add(f"conjugation-duality [{tag}]", not bad, "; ".join(bad[:3]))

        bad = []
        for n in range(min(n_max, 7) + 1):
            law = maj_pushforward(n, q)
            for lam in partitions_of(n):
                direct = _measures.qplancherel_mass(lam, q)
                if law.get(lam, Fraction(0)) != direct:
                    bad.append(f"n={n} {lam}: maj={law.get(lam)} direct={direct}")
        report.add(f"major-index-pushforward [{tag}]", not bad, "; ".join(bad[:3]))

    bad = []
    for size in range(1, 6):
        for rho in partitions_of(size):
            expansion = sigma_rho_in_p(rho)
            for n in range(min(n_max, 8) + 1):
                for lam in partitions_of(n):
                    if evaluate(expansion, lam) != sigma_character(rho, lam):
                        bad.append(f"rho={rho} lam={lam}")
    report.add("character-polynomial-expansion", not bad, "; ".join(bad[:3]))

    from .observables import sigma_product

    got = sigma_product(Partition((2,)), Partition((3,)))
    want = SigmaCombination(
        {Partition((3, 2)): 1, Partition((4,)): 6, Partition((2, 1)): 6}
    )
    report.add("sigma-product-example", got == want, "" if got == want else repr(got))

    return report


# ---------------------------------------------------------------------------
# Monte-Carlo runner


@dataclass(frozen=True)
class MCConfig:
    """Configuration of one Monte-Carlo run.

    measure: "qplancherel" (parameter q) or "schur-weyl" (alphabet size N,
    or N = round(c * n^alpha)).  statistics entries take the canonical
    forms "row:i", "p:k", "sigma:k", "qchar:k".  mode selects the sampler
    arithmetic ("fast" float weights or "exact" rationals, the latter
    capped at small n); qchar coefficients always need a rational q.
    Every sample i is drawn from its own RNG stream (seed, i), so results
    are independent of the worker count.
    """

    n: int
    samples: int
    seed: int
    measure: str = "qplancherel"
    q: QParameter | None = None
    N: int | None = None
    c: Fraction | None = None
    alpha: Fraction | None = None
    workers: int = 1
    mode: str = "fast"
    statistics: tuple[str, ...] = ("row:1",)

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.measure not in ("qplancherel", "schur-weyl"):
            raise ValueError(f"unknown measure {self.measure!r}")
        if self.mode not in ("exact", "fast"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.measure == "qplancherel" and self.q is None:
            raise ValueError("qplancherel runs need q")
        if self.mode == "exact" and self.q is not None and not self.q.is_exact:
            raise ValueError("exact-mode sampling needs a rational q")
        if self.measure == "schur-weyl" and self.alphabet_size() < 1:
            raise ValueError("schur-weyl runs need N >= 1 (or c, alpha)")
        for spec in self.statistics:
            kind, _, arg = spec.partition(":")
            if kind not in ("row", "p", "sigma", "qchar") or not arg.isdigit() or int(arg) < 1:
                raise ValueError(f"bad statistic spec {spec!r}")
            if kind == "qchar" and (self.q is None or not self.q.is_exact):
                raise ValueError("qchar statistics need an exact rational q")

    def alphabet_size(self) -> int:
        if self.N is not None:
            return self.N
        if self.c is None or self.alpha is None:
            return 0
        return max(1, round(float(self.c) * float(self.n) ** float(self.alpha)))

    def echo(self) -> dict:
        out = {
            "measure": self.measure,
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
            "mode": self.mode,
            "statistics": list(self.statistics),
        }
        if self.q is not None:
            out["q"] = str(self.q.value) if self.q.is_exact else float(self.q.value)
            out["q_mode"] = self.q.mode
        if self.measure == "schur-weyl":
            out["N"] = self.alphabet_size()
            if self.c is not None:
                out["c"] = str(self.c)
            if self.alpha is not None:
                out["alpha"] = str(self.alpha)
        return out


@dataclass
class SampleReport:
    """Aggregated Monte-Carlo output for one MCConfig."""

    labels: list[str]
    mean: np.ndarray
    variance: np.ndarray
    covariance: np.ndarray
    standard_error: np.ndarray
    skewness: np.ndarray
    samples: int
    wall_time_s: float
    seed: int
    config: dict

    def stat(self, label: str) -> int:
        return self.labels.index(label)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "mc_report",
            "config": self.config,
            "labels": self.labels,
            "mean": {l: float(self.mean[i]) for i, l in enumerate(self.labels)},
            "variance": {l: float(self.variance[i]) for i, l in enumerate(self.labels)},
            "covariance": self.covariance.tolist(),
            "standard_error": {
                l: float(self.standard_error[i]) for i, l in enumerate(self.labels)
            },
            "skewness": {l: float(self.skewness[i]) for i, l in enumerate(self.labels)},
            "samples": self.samples,
            "wall_time_s": self.wall_time_s,
            "seed": self.seed,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _float_power_sums(parts: np.ndarray, ks) -> dict[int, float]:
    """Float power sums of the modified Frobenius alphabet, from the parts."""
    ell = len(parts)
    d = 0
    while d < ell and parts[d] >= d + 1:
        d += 1
    astars = [float(parts[i]) - i - 0.5 for i in range(d)]
    bstars = []
    for i in range(1, d + 1):
        conj = np.count_nonzero(parts >= i)
        bstars.append(float(conj) - i + 0.5)
    out = {}
    for k in ks:
        out[k] = sum(a**k for a in astars) - sum((-b) ** k for b in bstars)
    return out


def _compile_statistics(config: MCConfig):
    """Turn statistic specs into (labels, evaluator over a parts array)."""
    labels: list[str] = []
    rows: list[int] = []
    powers: set[int] = set()
    polys: list[tuple[str, list[tuple[float, tuple[int, ...]]]]] = []

    plan: list[tuple[str, object]] = []
    for spec in config.statistics:
        kind, _, arg = spec.partition(":")
        k = int(arg)
        if kind == "row":
            labels.append(f"row{k}")
            plan.append(("row", k))
            rows.append(k)
        elif kind == "p":
            labels.append(f"p{k}")
            plan.append(("p", k))
            powers.add(k)
        else:
            if kind == "sigma":
                obs = sigma_k_in_p(k)
                labels.append(f"sigma{k}")
            else:
                obs = qcharacter_observable(Partition((k,)), config.q.as_fraction())
                labels.append(f"qchar{k}")
            terms = [(float(c), idx.parts) for idx, c in obs.coeffs.items()]
            powers.update(p for _c, idx in terms for p in idx)
            plan.append(("poly", terms))

    powers = sorted(powers)

    def evaluator(parts: np.ndarray, out: np.ndarray):
        ps = _float_power_sums(parts, powers) if powers else {}
        for j, (kind, payload) in enumerate(plan):
            if kind == "row":
                k = payload
                out[j] = float(parts[k - 1]) if k <= len(parts) else 0.0
            elif kind == "p":
                out[j] = ps[payload]
            else:
                total = 0.0
                for c, idx in payload:
                    term = c
                    for p in idx:
                        term *= ps[p]
                    total += term
                out[j] = total
    return labels, evaluator


def draw_sample_parts(config: MCConfig, index: int) -> np.ndarray:
    """Draw the index-th sample of the run (stream index = sample index)."""
    if config.measure == "qplancherel":
        q = config.q
        if config.mode == "fast" and q.is_exact:
            q = QParameter.fast(float(q.value))
        return sample_qplancherel_parts(config.n, q, config.seed, stream=index)
    return sample_schur_weyl_parts(config.n, config.alphabet_size(), config.seed, stream=index)


def mc_run(config: MCConfig) -> SampleReport:
    """Run the Monte-Carlo estimation described by config.

    Deterministic given (seed, samples, statistics): sample i always uses
    RNG stream (seed, i) and aggregation is in sample order, so reports
    are bit-identical across worker counts.
    """
    t0 = time.perf_counter()
    labels, evaluator = _compile_statistics(config)
    data = np.empty((config.samples, len(labels)), dtype=np.float64)

    def run_range(lo: int, hi: int):
        for i in range(lo, hi):
            parts = draw_sample_parts(config, i)
            evaluator(parts, data[i])

    workers = max(1, config.workers)
    if workers == 1:
        run_range(0, config.samples)
    else:
        bounds = np.linspace(0, config.samples, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(run_range, int(bounds[w]), int(bounds[w + 1]))
                for w in range(workers)
            ]
            for f in futures:
                f.result()

    mean = data.mean(axis=0)
    centered = data - mean
    nsamp = config.samples
    if nsamp > 1:
        covariance = centered.T @ centered / (nsamp - 1)
    else:
        covariance = np.zeros((len(labels), len(labels)))
    variance = np.diag(covariance).copy()
    standard_error = np.sqrt(variance / nsamp)
    m2 = (centered**2).mean(axis=0)
    m3 = (centered**3).mean(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        skewness = np.where(m2 > 0, m3 / np.maximum(m2, 1e-300) ** 1.5, 0.0)

    return SampleReport(
        labels=labels,
        mean=mean,
        variance=variance,
        covariance=covariance,
        standard_error=standard_error,
        skewness=skewness,
        samples=nsamp,
        wall_time_s=time.perf_counter() - t0,
        seed=config.seed,
        config=config.echo(),
    )


def mc_gate(estimate: float, target: float, abs_tol: float, standard_error: float) -> bool:
    """The statistical pass rule: |estimate - target| < max(abs_tol, 5 se)."""
    return abs(estimate - target) < max(abs_tol, 5.0 * standard_error)


# ---------------------------------------------------------------------------
# limit-theorem targets


def clt_covariance_targets(q, which: str, l: int, m: int) -> Fraction:
    """Exact limiting covariances of the rescaled statistics.

    which="rows":      cov(Y_i, Y_j) for Y = sqrt(n) (lam_i/n - (1-q)q^{i-1})
    which="powersums": cov(W_l, W_m) for W = sqrt(n) (p_l - E[p_l]) / n^l
    which="sigmas":    same matrix for the rescaled Sigma_k deviations
    which="qchars":    cov(S_l, S_m) for S = sqrt(n) Sigma_{k,q} / n^k  (l, m >= 2)

    The convention 1 - q^{a,b} means (1 - q^a)(1 - q^b).
    """
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be positive and != 1")
    if which == "rows":
        diag = (1 - q) * q ** (l - 1) if l == m else Fraction(0)
        return diag - (1 - q) ** 2 * q ** (l + m - 2)
    if which in ("powersums", "sigmas"):
        return (
            l
            * m
            * (1 - q) ** (l + m)
            * (
                1 / ((1 - q ** (l + m - 1)) * (1 - q))
                - 1 / ((1 - q**l) * (1 - q**m))
            )
        )
    if which == "qchars":
        if l < 2 or m < 2:
            raise ValueError("q-character covariances need l, m >= 2")
        num = (q - q**2) ** (l + m - 3) * (1 - q**2) * q_int(l - 1, q) * q_int(m - 1, q)
        den = q_int(l + m - 1, q) * q_int(l + m - 2, q) * q_int(l + m - 3, q)
        return num / den
    raise ValueError(f"unknown target family {which!r}")


# ---------------------------------------------------------------------------
# Schur-Weyl shape checks


def schur_weyl_check(
    n: int,
    c,
    alpha,
    eta,
    samples: int,
    seed: int,
    epsilon=Fraction(1, 20),
    box_fraction_min: float = 0.9,
) -> dict:
    """Desk-scale instantiation of the rectangular limit shape.

    For N ~ c n^alpha with alpha < 1/2, rows concentrate at c n^(1-alpha):
    per sample we record the fraction of boxes lying in rows within
    [c(1-eta), c(1+eta)] n^(1-alpha), the number of such rows against
    (1-eta)/c n^alpha, the first-row bound lam_1 <= n^(1-alpha+epsilon),
    and the structural bound l(lam) <= N.  The 0.9 box-fraction threshold
    is a pilot-calibrated engineering choice, not a theorem constant.
    """
    c, alpha, eta, epsilon = Fraction(c), Fraction(alpha), Fraction(eta), Fraction(epsilon)
    if not 0 < alpha < Fraction(1, 2):
        raise ValueError("alpha must lie in (0, 1/2)")
    N = max(1, round(float(c) * float(n) ** float(alpha)))
    scale = float(n) ** (1 - float(alpha))
    lo = float(c) * (1 - float(eta)) * scale
    hi = float(c) * (1 + float(eta)) * scale
    row_count_target = (1 - float(eta)) / float(c) * float(n) ** float(alpha)
    lam1_bound = float(n) ** (1 - float(alpha) + float(epsilon))

    box_fractions = np.empty(samples)
    rows_in_window = np.empty(samples, dtype=np.int64)
    lam1 = np.empty(samples, dtype=np.int64)
    lengths = np.empty(samples, dtype=np.int64)
    for i in range(samples):
        parts = sample_schur_weyl_parts(n, N, seed, stream=i)
        inside = (parts >= lo) & (parts <= hi)
        box_fractions[i] = parts[inside].sum() / n if n else 1.0
        rows_in_window[i] = int(inside.sum())
        lam1[i] = int(parts[0]) if len(parts) else 0
        lengths[i] = len(parts)

    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "schur_weyl_report",
        "config": {
            "n": n,
            "c": str(c),
            "alpha": str(alpha),
            "eta": str(eta),
            "epsilon": str(epsilon),
            "N": N,
            "samples": samples,
            "seed": seed,
            "thresholds_note": "box-fraction and pass-rate thresholds are pilot-calibrated",
        },
        "row_window": [lo, hi],
        "row_count_target": row_count_target,
        "lam1_bound": lam1_bound,
        "box_fraction_min": box_fraction_min,
        "samples_with_box_fraction_ok": int((box_fractions >= box_fraction_min).sum()),
        "samples_with_row_count_ok": int((rows_in_window >= row_count_target).sum()),
        "samples_with_lam1_ok": int((lam1 <= lam1_bound).sum()),
        "samples_with_length_ok": int((lengths <= N).sum()),
        "mean_box_fraction": float(box_fractions.mean()),
        "max_lam1": int(lam1.max()),
        "max_length": int(lengths.max()),
        "mean_length_over_n": float(lengths.mean()) / n if n else 0.0,
    }


def exact_schur_weyl_expectation(rho: Partition, n: int, N: int) -> Fraction:
    """Closed-form mean of Sigma_rho under the Schur-Weyl measure."""
    return schur_weyl_sigma_expectation(rho, n, N)


def schur_weyl_degree_scaling(rho: Partition, c, alpha, ns=(10**3, 10**4, 10**5)) -> dict:
    """Numerical check of the alpha-gradation: E[p_rho] = O(n^{deg_alpha}).

    Under the Schur-Weyl measure with N = round(c n^alpha), the exact mean
    of p_rho follows from its Sigma-basis expansion and the closed form for
    E[Sigma_nu].  Returns the log-log slope across the sample sizes and the
    rescaled values E[p_rho] / n^{deg_alpha}, whose limit is c^{|rho|-l(rho)}.
    """
    from .observables import Observable, p_rho_in_sigma

    c, alpha = Fraction(c), Fraction(alpha)
    expansion = p_rho_in_sigma(rho)
    deg = float(Observable.p(rho).degree_alpha(alpha))

    values = []
    for n in ns:
        N = max(1, round(float(c) * float(n) ** float(alpha)))
        mean = sum(
            (coeff * schur_weyl_sigma_expectation(nu, n, N) for nu, coeff in expansion.coeffs.items()),
            Fraction(0),
        )
        values.append(float(mean))
    logs_n = np.log(np.array(ns, dtype=float))
    logs_v = np.log(np.abs(np.array(values)))
    slope = np.polyfit(logs_n, logs_v, 1)[0]
    rescaled = [v / float(n) ** deg for v, n in zip(values, ns)]
    return {
        "rho": str(rho),
        "alpha": str(alpha),
        "c": str(c),
        "deg_alpha": deg,
        "slope": float(slope),
        "rescaled": rescaled,
        "limit": float(c) ** (rho.size - rho.length),
    }


def schur_weyl_expectation_bruteforce(rho: Partition, n: int, N: int) -> Fraction:
    """The same mean by enumerating all N^n words through RSK (small n)."""
    law = schur_weyl_distribution_bruteforce(n, N)
    return sum((mass * sigma_character(rho, lam) for lam, mass in law.items()), Fraction(0))
