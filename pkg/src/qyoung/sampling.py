"""Seeded samplers for the q-Plancherel growth process.

Randomness policy: every sample owns an independent RNG stream, a
numpy PCG64 generator keyed by SeedSequence((seed, stream_index)).
One uniform is consumed per growth step, so the exact and fast modes of
the sampler see the identical random stream and produce the identical
trajectory whenever their transition weights agree to float precision.
For q > 1 the process is sampled at 1/q and the result conjugated,
which is an exact distributional identity and keeps log-weights bounded.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from .measures import QParameter, corner_growth_weights
from .partitions import Partition

EXACT_SAMPLER_MAX_N = 200


def stream_rng(seed: int, stream: int) -> np.random.Generator:
    """The documented stream-splitting rule: PCG64 keyed by (seed, stream)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, stream))))


def _runs_to_parts(vals, mults, m) -> np.ndarray:
    return np.repeat(vals[:m], mults[:m])


def _conjugate_runs_to_parts(vals, mults, m) -> np.ndarray:
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    cum = np.cumsum(mults[:m])
    conj_vals = cum[::-1].copy()
    widths = np.empty(m, dtype=np.int64)
    for j in range(m):
        widths[j] = vals[j] - (vals[j + 1] if j + 1 < m else 0)
    return np.repeat(conj_vals, widths[::-1])


class GrowthState:
    """One growth trajectory of the q-Plancherel process.

    Holds the run-length view of the current partition, the step counter
    and the owning RNG stream.  The cached fast-mode weight table depends
    only on q and is lazily shared; the run-length view is checked to be
    reproducible from the bare partition.
    """

    def __init__(self, q: QParameter, seed: int, stream: int = 0):
        if q.as_float() >= 1.0:
            raise ValueError("GrowthState runs the q < 1 process; use sample_qplancherel for q > 1")
        self.q = q
        self.rng = stream_rng(seed, stream)
        self.steps = 0
        self._partition = Partition(())
        if q.is_exact:
            self._table = None
        else:
            self._table = _kernels.log_table(q.as_float())

    @property
    def partition(self) -> Partition:
        return self._partition

    def _debug_check(self):
        runs = self._partition.runs()
        flat = tuple(v for v, mult in runs for _ in range(mult))
        assert flat == self._partition.parts

    def advance(self, steps: int = 1) -> Partition:
        for _ in range(steps):
            u = self.rng.random()
            if self.q.is_exact:
                self._partition = _exact_growth_step(self._partition, self.q, u)
            else:
                self._partition = _float_growth_step(self._partition, self.q.as_float(), self._table, u)
            self.steps += 1
        if __debug__:
            self._debug_check()
        return self._partition


def _exact_growth_step(lam: Partition, q: QParameter, u: float) -> Partition:
    weights = corner_growth_weights(lam, q)
    target = Fraction(u)  # floats are dyadic rationals, so this is exact
    acc = Fraction(0)
    for _row, big, w in weights:
        acc += w
        if acc > target:
            return big
    return weights[-1][1]


def _float_growth_step(lam: Partition, q: float, table, u: float) -> Partition:
    logtab, cutoff = table
    vals, mults, logw = _kernels.growth_buffers(lam.size + 1)
    runs = lam.runs()
    m = len(runs)
    for i, (v, mult) in enumerate(runs):
        vals[i], mults[i] = v, mult
    uu = np.array([u], dtype=np.float64)
    m = _kernels.qplancherel_growth(1, np.log(q), logtab, cutoff, uu, vals, mults, logw, m)
    # the kernel was started from `lam`, so run a single step on its state
    return Partition(tuple(int(x) for x in _runs_to_parts(vals, mults, m)))


def sample_qplancherel(n: int, q: QParameter, seed: int, stream: int = 0) -> Partition:
    """One draw from M_{n,q}, deterministic given (seed, stream)."""
    parts = sample_qplancherel_parts(n, q, seed, stream)
    return Partition(tuple(int(x) for x in parts))


def sample_qplancherel_parts(n: int, q: QParameter, seed: int, stream: int = 0) -> np.ndarray:
    """One draw from M_{n,q} as a descending int64 array of parts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rng = stream_rng(seed, stream)
    u = rng.random(n)
    conjugate_out = q.as_float() > 1.0
    q_run = q.reciprocal() if conjugate_out else q

    if q.is_exact:
        if n > EXACT_SAMPLER_MAX_N:
            raise ValueError(f"exact-mode sampling capped at n = {EXACT_SAMPLER_MAX_N}")
        lam = Partition(())
        for t in range(n):
            lam = _exact_growth_step(lam, q_run, float(u[t]))
        if conjugate_out:
            lam = lam.conjugate()
        return np.array(lam.parts, dtype=np.int64)

    logtab, cutoff = _log_table_cached(q_run.as_float())
    vals, mults, logw = _kernels.growth_buffers(n)
    m = _kernels.qplancherel_growth(n, np.log(q_run.as_float()), logtab, cutoff, u, vals, mults, logw, 0)
    if conjugate_out:
        return _conjugate_runs_to_parts(vals, mults, m)
    return _runs_to_parts(vals, mults, m)


_TABLE_CACHE: dict[float, tuple[np.ndarray, int]] = {}


def _log_table_cached(q: float):
    if q not in _TABLE_CACHE:
        _TABLE_CACHE[q] = _kernels.log_table(q)
    return _TABLE_CACHE[q]
