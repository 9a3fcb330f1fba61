"""Random matrices ``(N-1)^(-1/2) sum_k Z_k rho((k, k+1))`` and their spectra.

Random numbers
--------------
Uniforms come from a counter-based SplitMix64 stream: output ``i`` (0-based)
of the stream with state ``s`` is ``mix64(s + (i + 1) * 0x9E3779B97F4A7C15)``
and the uniform is its top 53 bits times ``2**-53``.  Standard normals are
produced in pairs by Marsaglia's polar method, consuming uniforms in order and
rejecting pairs with ``s = u^2 + v^2`` outside ``(0, 1)``.  Monte Carlo trial
``t`` uses the stream seeded by ``derive_seed(seed, t)``, so trials do not
depend on each other or on execution order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np
import scipy.linalg

from .hermite import LimitParameters, limit_moment
from .partitions import Partition, as_partition, theta_ratio
from .representation import generators, trace_character
from .tableaux import DEFAULT_DIMENSION_CAP, check_cap

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1

HIST_RANGE = (-4.5, 4.5)
HIST_BINS = 81
IDENTITY_TOL = 1e-8
TRACE_TOL = 1e-9


class SpectralCheckError(ArithmeticError):
    """A spectral identity failed beyond tolerance."""


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(0xBF58476D1CE4E5B9)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, t: int) -> int:
    """Seed of the independent substream for trial ``t``."""
    return mix64(mix64(seed) + (t + 1) * GOLDEN_GAMMA)


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Stream outputs ``start .. start + count - 1`` as floats in ``[0, 1)``."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK) + idx * np.uint64(GOLDEN_GAMMA)
        out = _mix64_array(z)
    return (out >> np.uint64(11)).astype(np.float64) * 2.0**-53


def standard_normals(seed: int, count: int) -> np.ndarray:
    """``count`` standard normal variates from the seeded stream (polar method)."""
    out = []
    have, pos = 0, 0
    while have < count:
        pairs = max(8, int((count - have) * 0.65) + 8)
        u = 2.0 * uniforms(seed, pos, 2 * pairs) - 1.0
        pos += 2 * pairs
        a, b = u[0::2], u[1::2]
        s = a * a + b * b
        ok = (s > 0.0) & (s < 1.0)
        a, b, s = a[ok], b[ok], s[ok]
        f = np.sqrt(-2.0 * np.log(s) / s)
        z = np.empty(2 * len(s))
        z[0::2], z[1::2] = a * f, b * f
        out.append(z)
        have += len(z)
    return np.concatenate(out)[:count]


@dataclass(frozen=True, eq=False)
class GaussianDraw:
    n: int
    seed: int
    coefficients: np.ndarray
    scaled_sum: float


def sample_coefficients(n: int, seed: int) -> GaussianDraw:
    """The ``N - 1`` i.i.d. standard Gaussian weights for a matrix on ``S_N``."""
    if n < 2:
        raise ValueError(f"N must be at least 2, got {n}")
    z = standard_normals(seed, n - 1)
    z.setflags(write=False)
    return GaussianDraw(n, seed, z, float(z.sum() / math.sqrt(n - 1)))


@dataclass(frozen=True, eq=False)
class SampledMatrix:
    shape: Partition
    draw: GaussianDraw
    entries: np.ndarray
    scale: float | None = None

    def __post_init__(self):
        # tolerances are relative to max(1, largest |entry|)
        if self.scale is None:
            object.__setattr__(self, "scale", max(1.0, float(np.max(np.abs(self.entries)))))


@lru_cache(maxsize=16)
def _sparsity_pattern(p: Partition, cap: int | None):
    """Stacked generator data: ``(diag rows, flat off-diagonal slots, their k, their values)``."""
    f = check_cap(p, cap)
    gens = generators(p, cap)
    diag = np.array([g.diag for g in gens])
    slots, ks, vals = [], [], []
    for k, g in enumerate(gens):
        rows = np.flatnonzero(g.partner >= 0)
        slots.append(rows * f + g.partner[rows])
        ks.append(np.full(len(rows), k))
        vals.append(g.offdiag[rows])
    return diag, np.concatenate(slots), np.concatenate(ks), np.concatenate(vals)


def assemble_matrix(p, draw: GaussianDraw, cap: int | None = DEFAULT_DIMENSION_CAP) -> SampledMatrix:
    """Accumulate ``sum_k Z_k G_k / sqrt(N - 1)`` from the sparse generators."""
    p = as_partition(p)
    if draw.n != p.size:
        raise ValueError(f"draw is for N={draw.n} but shape has N={p.size}")
    f = check_cap(p, cap)
    diag, slots, ks, vals = _sparsity_pattern(p, cap)
    z = draw.coefficients / math.sqrt(p.size - 1)
    m = np.zeros(f * f)
    # distinct generators never link the same pair of tableaux, so slots are unique
    off = z[ks] * vals
    on = z @ diag
    m[slots] = off
    m[::f + 1] = on
    scale = max(1.0, float(np.max(np.abs(on))), float(np.max(np.abs(off), initial=0.0)))
    return SampledMatrix(p, draw, m.reshape(f, f), scale)


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Eigenvalues (ascending), each carrying mass ``1 / f``."""

    eigenvalues: np.ndarray
    trace_residual: float = 0.0
    frobenius_residual: float = 0.0

    @property
    def weight(self) -> float:
        return 1.0 / len(self.eigenvalues)


def spectrum(m: SampledMatrix, tol: float = IDENTITY_TOL) -> SpectralMeasure:
    """Eigenvalues of a sampled matrix with trace and Frobenius checks.

    LAPACK's MRRR driver (``dsyevr``: Householder tridiagonalisation, then
    relatively robust representations) does the work; a convergence failure
    surfaces as ``numpy.linalg.LinAlgError``.
    """
    a = m.entries
    ev = scipy.linalg.eigh(a, eigvals_only=True, driver="evr", check_finite=False)
    scale = m.scale
    tr = abs(float(ev.sum()) - float(np.trace(a)))
    fro = abs(float(ev @ ev) - float(np.vdot(a, a)))
    if tr > tol * scale or fro > tol * scale:
        raise SpectralCheckError(f"spectral identity residuals {tr:.3g}, {fro:.3g} exceed {tol}*{scale:.3g}")
    return SpectralMeasure(ev, tr, fro)


def empirical_moment(xi: SpectralMeasure, s: int) -> float:
    """``(1/f) sum_i e_i^s``, the ``s``-th moment of the spectral measure."""
    return float(np.mean(xi.eigenvalues ** s))


def ks_distance(sample, cdf=None) -> float:
    """Sup distance between the empirical CDF of ``sample`` and ``cdf`` (default N(0, 1))."""
    x = np.sort(np.asarray(sample, dtype=float).ravel())
    n = len(x)
    if n == 0:
        raise ValueError("empty sample")
    if cdf is None:
        cdf = normal_cdf
    F = cdf(x)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))


_erf = np.vectorize(math.erf, otypes=[float])


def normal_cdf(x):
    return 0.5 * (1.0 + _erf(np.asarray(x) / math.sqrt(2.0)))


def histogram_edges(bins: int = HIST_BINS, lo: float = HIST_RANGE[0], hi: float = HIST_RANGE[1]) -> np.ndarray:
    """``bins`` equal bins on ``[lo, hi]`` plus an overflow bin at each end."""
    if bins < 1:
        raise ValueError("bins must be positive")
    return np.concatenate(([-np.inf], np.linspace(lo, hi, bins + 1), [np.inf]))


# -- exact finite-N expectations -----------------------------------------------

def _perfect_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for m in _perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def _cycle_type(n: int, word) -> tuple[int, ...]:
    perm = list(range(n))
    for k in word:
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
    seen, lengths = [False] * n, []
    for i in range(n):
        if not seen[i]:
            c = 0
            while not seen[i]:
                seen[i] = True
                i = perm[i]
                c += 1
            lengths.append(c)
    return tuple(sorted(lengths, reverse=True))


MAX_WICK_TERMS = 2_000_000


def expected_moment(p, s: int, cap: int | None = DEFAULT_DIMENSION_CAP) -> float | None:
    """Exact ``E[m_s]`` over the Gaussian weights for shape ``p``.

    Expands ``E[trace(M^s)] / f`` by Wick pairings; the character ratio of each
    word is taken from the trace oracle, cached by cycle type.  Returns
    ``None`` when the expansion would exceed ``MAX_WICK_TERMS`` terms.
    """
    p = as_partition(p)
    if s % 2:
        return 0.0
    n, half = p.size, s // 2
    if s == 0:
        return 1.0
    terms = math.prod(range(s - 1, 0, -2)) * (n - 1) ** half
    if terms > MAX_WICK_TERMS:
        return None
    ratios: dict[tuple[int, ...], float] = {}
    total = 0.0
    for matching in _perfect_matchings(list(range(s))):
        for labels in product(range(1, n), repeat=half):
            word = [0] * s
            for (a, b), k in zip(matching, labels):
                word[a] = word[b] = k
            ct = _cycle_type(n, word)
            if ct not in ratios:
                ratios[ct] = trace_character(p, word, cap)
            total += ratios[ct]
    return total / (n - 1) ** half


# -- Monte Carlo ---------------------------------------------------------------

@dataclass(eq=False)
class MomentReport:
    shape: Partition
    seed: int
    trials: int
    smax: int
    theta: float
    per_trial: np.ndarray            # columns: z_bar, m_1 .. m_smax
    hist_edges: np.ndarray
    hist_mass: np.ndarray
    estimates: np.ndarray            # mean of m_s over trials, s = 1..smax
    std_errors: np.ndarray
    conditional_variance: float      # mean over trials of m_2 - m_1^2
    conditional_variance_se: float
    limit_gap: np.ndarray            # mean over trials of m_s - limit_moment(s, theta, z_bar)
    residuals: dict = field(default_factory=dict)
    pooled: np.ndarray | None = None

    def moment(self, s: int) -> tuple[float, float]:
        return float(self.estimates[s - 1]), float(self.std_errors[s - 1])


def run_trial(p, seed: int, t: int, smax: int, cap: int | None = DEFAULT_DIMENSION_CAP):
    """One independent trial: ``(z_bar, [m_1..m_smax], eigenvalues, residuals)``."""
    p = as_partition(p)
    draw = sample_coefficients(p.size, derive_seed(seed, t))
    mat = assemble_matrix(p, draw, cap)
    xi = spectrum(mat)
    ev = xi.eigenvalues
    moments = [float(np.mean(ev ** s)) for s in range(1, smax + 1)]
    theta = float(theta_ratio(p))
    res = {
        "first_moment": abs(moments[0] - theta * draw.scaled_sum) / mat.scale,
        "trace": xi.trace_residual / mat.scale,
        "frobenius": xi.frobenius_residual / mat.scale,
    }
    return draw.scaled_sum, moments, ev, res


def monte_carlo(
    p,
    trials: int,
    seed: int,
    smax: int = 4,
    bins: int = HIST_BINS,
    cap: int | None = DEFAULT_DIMENSION_CAP,
    keep_pooled: bool = True,
    workers: int = 1,
) -> MomentReport:
    """Run ``trials`` independent matrices and summarise their spectral moments.

    With ``workers > 1`` trials run on a thread pool (the eigensolver releases
    the GIL).  Results are reduced in trial order, so the report does not
    depend on ``workers``.
    """
    p = as_partition(p)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if smax < 2:
        raise ValueError("smax must be at least 2")
    f = check_cap(p, cap)
    generators(p, cap)  # build the shared generator set once
    theta_exact = theta_ratio(p)
    edges = histogram_edges(bins)
    counts = np.zeros(len(edges) - 1)
    per_trial = np.empty((trials, smax + 1))
    gaps = np.zeros((trials, smax))
    worst = {"first_moment": 0.0, "trace": 0.0, "frobenius": 0.0}
    pooled = np.empty(trials * f) if keep_pooled else None
    def one(t):
        return run_trial(p, seed, t, smax, cap)

    if workers > 1:
        pool = ThreadPoolExecutor(max_workers=workers)
        results = pool.map(one, range(trials))
    else:
        pool, results = None, map(one, range(trials))
    for t, (zbar, moments, ev, res) in enumerate(results):
        per_trial[t, 0] = zbar
        per_trial[t, 1:] = moments
        lp = LimitParameters(theta_exact, zbar)
        gaps[t] = [moments[s - 1] - float(limit_moment(s, lp)) for s in range(1, smax + 1)]
        counts += np.histogram(ev, bins=edges)[0]
        for key, val in res.items():
            worst[key] = max(worst[key], val)
        if keep_pooled:
            pooled[t * f:(t + 1) * f] = ev
    if pool is not None:
        pool.shutdown()
    m = per_trial[:, 1:]
    se = m.std(axis=0, ddof=1) / math.sqrt(trials) if trials > 1 else np.full(smax, np.inf)
    cond = m[:, 1] - m[:, 0] ** 2
    cond_se = float(cond.std(ddof=1) / math.sqrt(trials)) if trials > 1 else math.inf
    return MomentReport(
        shape=p,
        seed=seed,
        trials=trials,
        smax=smax,
        theta=float(theta_exact),
        per_trial=per_trial,
        hist_edges=edges,
        hist_mass=counts / counts.sum(),
        estimates=m.mean(axis=0),
        std_errors=se,
        conditional_variance=float(cond.mean()),
        conditional_variance_se=cond_se,
        limit_gap=gaps.mean(axis=0),
        residuals=worst,
        pooled=pooled,
    )
