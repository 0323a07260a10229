"""Hot loops for the Monte-Carlo samplers.

Compiled with numba when available; the same functions run as plain
Python otherwise (exact semantics, much slower).  Everything here is
deterministic given its inputs: all randomness enters through the
uniform arrays drawn by the caller.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return deco


@njit(cache=True, nogil=True)
def qplancherel_growth(n, lnq, logtab, cutoff, u, vals, mults, logw, m0):
    """Run n growth steps of the q-Plancherel process (q < 1), in place.

    vals/mults hold the run-length view of the current partition (distinct
    part values, decreasing, with multiplicities), with m0 runs on entry;
    logw is scratch.  logtab[a] = log(1 - q^a) for a < cutoff; factors with
    both q-powers below 1e-18 are treated as exactly 1.  One uniform u[t]
    is consumed per step; the corner picked is the smallest k whose
    cumulative weight exceeds u[t] * total.  Returns the number of runs.
    """
    m = m0
    for t in range(n):
        prefix = 0  # number of rows above run k
        for k in range(m + 1):
            start_row = prefix + 1
            w = (start_row - 1) * lnq
            vk = vals[k] if k < m else 0
            # hooks in the extended row, one telescoped factor per run below
            Mj = prefix
            for j in range(k, m):
                Mj += mults[j]
                a = vk - vals[j] + Mj - start_row + 1
                if a >= cutoff:
                    break
                b1 = (vk - (vals[j + 1] if j + 1 < m else 0)) + Mj - start_row + 1
                w += logtab[a]
                if b1 < cutoff:
                    w -= logtab[b1]
            # hooks in the new box's column, one factor per run above
            cumj = prefix
            for j in range(k - 1, -1, -1):
                cumj -= mults[j]
                c = vals[j] - vk + prefix - cumj - mults[j]
                if c >= cutoff:
                    break
                d = vals[j] - vk + prefix - cumj
                w += logtab[c]
                if d < cutoff:
                    w -= logtab[d]
            logw[k] = w
            if k < m:
                prefix += mults[k]

        mx = logw[0]
        for k in range(1, m + 1):
            if logw[k] > mx:
                mx = logw[k]
        tot = 0.0
        for k in range(m + 1):
            logw[k] = math.exp(logw[k] - mx)
            tot += logw[k]
        target = u[t] * tot
        acc = 0.0
        pick = m
        for k in range(m + 1):
            acc += logw[k]
            if acc > target:
                pick = k
                break

        # add the box at run `pick`, keeping the run-length view canonical
        if pick == m:
            if m > 0 and vals[m - 1] == 1:
                mults[m - 1] += 1
            else:
                vals[m] = 1
                mults[m] = 1
                m += 1
        else:
            v = vals[pick]
            if mults[pick] == 1:
                if pick > 0 and vals[pick - 1] == v + 1:
                    mults[pick - 1] += 1
                    for i in range(pick, m - 1):
                        vals[i] = vals[i + 1]
                        mults[i] = mults[i + 1]
                    m -= 1
                else:
                    vals[pick] = v + 1
            else:
                mults[pick] -= 1
                if pick > 0 and vals[pick - 1] == v + 1:
                    mults[pick - 1] += 1
                else:
                    for i in range(m, pick, -1):
                        vals[i] = vals[i - 1]
                        mults[i] = mults[i - 1]
                    vals[pick] = v + 1
                    mults[pick] = 1
                    m += 1
    return m


@njit(cache=True, nogil=True)
def rsk_row_counts(word, N, counts):
    """Row-insert a word with letters in 1..N, tracking per-row letter counts.

    counts[i, v] is the multiplicity of letter v in row i (0-based rows);
    rows of the insertion tableau are non-decreasing, so inserting x bumps
    the smallest letter strictly greater than x.  Returns the number of
    rows; row lengths are the per-row count sums.
    """
    nrows = 0
    for idx in range(word.shape[0]):
        x = word[idx]
        i = 0
        while True:
            y = -1
            for v in range(x + 1, N + 1):
                if counts[i, v] > 0:
                    y = v
                    break
            counts[i, x] += 1
            if y == -1:
                if i + 1 > nrows:
                    nrows = i + 1
                break
            counts[i, y] -= 1
            x = y
            i += 1
    return nrows


def growth_buffers(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Work arrays sized for any partition of n (distinct parts are O(sqrt n))."""
    cap = int((math.isqrt(8 * n + 1) - 1) // 2) + 3
    return (
        np.zeros(cap, dtype=np.int64),
        np.zeros(cap, dtype=np.int64),
        np.zeros(cap + 1, dtype=np.float64),
    )


def log_table(q: float, eps: float = 1e-18, max_size: int = 2_000_000) -> tuple[np.ndarray, int]:
    """Table of log(1 - q^a) for 0 < q < 1, up to the first negligible power."""
    if not 0.0 < q < 1.0:
        raise ValueError("log table requires 0 < q < 1")
    cutoff = int(math.ceil(math.log(eps) / math.log(q))) + 1
    if cutoff > max_size:
        raise ValueError("q is too close to 1 for fast mode")
    table = np.empty(cutoff, dtype=np.float64)
    table[0] = 0.0
    for a in range(1, cutoff):
        table[a] = math.log1p(-(q**a))
    return table, cutoff
