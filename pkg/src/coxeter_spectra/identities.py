"""Exact checks of the domino-chain identities for shapes with odd row gaps.

For a ``K``-row shape with ``l_i - l_{i+1} = 2 eta_i + 1`` the transposition
ratio tends to ``1/K`` and the ratio on ``r`` disjoint transpositions to
``K^-r``.  Expanding the latter with the Murnaghan-Nakayama rule and letting
the shape grow gives sums over ``delta`` vectors that must equal ``K^r``.

The staircase sum has two candidate denominators, ``prod (lbar_i - lbar_j - i
+ j)`` and the same product of factorials.  Both are implemented
(``variant="plain"`` / ``"factorial"``); only ``"plain"`` reproduces ``K^r``,
and it is the default.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .characters import SkewShape, ratio_mn, skew_count
from .partitions import Partition, dimension

VARIANTS = ("plain", "factorial")


def _inv_factorial(m) -> Fraction:
    m = Fraction(m)
    assert m.denominator == 1
    return Fraction(0) if m < 0 else Fraction(1, factorial(int(m)))


def det(mat: list[list[Fraction]]) -> Fraction:
    """Determinant by rational Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in mat]
    n, out = len(a), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            out = -out
        out *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return out


@dataclass(frozen=True)
class StaircaseSpec:
    """``K`` rows with gaps ``2 eta_i + 1`` between consecutive rows."""

    K: int
    eta: tuple[int, ...] = ()

    def __post_init__(self):
        eta = tuple(int(e) for e in self.eta) if self.eta else (0,) * (self.K - 1)
        if self.K < 1 or len(eta) != self.K - 1 or any(e < 0 for e in eta):
            raise ValueError(f"need K >= 1 and K - 1 nonnegative gaps, got K={self.K}, eta={eta}")
        object.__setattr__(self, "eta", eta)

    @property
    def lambda_bar(self) -> tuple[int, ...]:
        """Row lengths minus the last row length."""
        out = [0]
        for e in reversed(self.eta):
            out.append(out[-1] + 2 * e + 1)
        return tuple(reversed(out))

    def partition(self, last_row: int) -> Partition:
        if last_row < 1:
            raise ValueError("last row must be positive")
        return Partition(x + last_row for x in self.lambda_bar)

    def partition_of_size(self, n: int) -> Partition:
        m, rem = divmod(n - sum(self.lambda_bar), self.K)
        if rem or m < 1:
            raise ValueError(f"no partition of {n} with K={self.K}, eta={self.eta}")
        return self.partition(m)


def delta_vectors(spec: StaircaseSpec, r: int, constrained: bool = True):
    """Nonnegative ``delta`` with sum ``r``; with ``constrained`` also
    ``delta_i <= delta_{i+1} + eta_i``."""
    K, eta = spec.K, spec.eta

    def rec(i: int, remaining: int, nxt):
        # fill from the last coordinate backwards so the constraint prunes early
        if i < 0:
            if remaining == 0:
                yield ()
            return
        hi = remaining
        if constrained and nxt is not None:
            hi = min(hi, nxt + eta[i])
        lo = remaining if i == 0 else 0
        for d in range(lo, hi + 1):
            for rest in rec(i - 1, remaining - d, d):
                yield rest + (d,)

    yield from rec(K - 1, r, None)


def staircase_term(spec: StaircaseSpec, delta, variant: str = "plain") -> Fraction:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    K, lb = spec.K, spec.lambda_bar
    mat = []
    for i in range(K):
        row = []
        for j in range(K):
            row.append(_inv_factorial(delta[j] + Fraction(lb[i] - lb[j] - i + j, 2)))
        mat.append(row)
    num = prod(lb[i] - lb[j] - 2 * delta[i] + 2 * delta[j] - i + j
               for i in range(K) for j in range(i + 1, K))
    dens = [lb[i] - lb[j] - i + j for i in range(K) for j in range(i + 1, K)]
    den = prod(factorial(x) for x in dens) if variant == "factorial" else prod(dens)
    return det(mat) * Fraction(num, den)


def staircase_lhs(spec: StaircaseSpec, r: int, variant: str = "plain", constrained: bool = True) -> Fraction:
    """``r! sum_delta det(...) prod(...)/prod(...)``; equals ``K^r`` for the plain variant."""
    total = sum((staircase_term(spec, d, variant) for d in delta_vectors(spec, r, constrained)), Fraction(0))
    return factorial(r) * total


def resolve_staircase_variant(K_max: int = 3, eta_max: int = 2, r_max: int = 4) -> dict[str, bool]:
    """Which denominator variants reproduce ``K^r`` (and the eta = 0 sum) on a grid."""
    from itertools import product as cartesian

    ok = {v: True for v in VARIANTS}
    for K in range(1, K_max + 1):
        for eta in cartesian(range(eta_max + 1), repeat=K - 1):
            spec = StaircaseSpec(K, eta)
            for r in range(r_max + 1):
                for v in VARIANTS:
                    val = staircase_lhs(spec, r, v)
                    if val != K ** r:
                        ok[v] = False
                    if not any(eta) and val != eta_zero_lhs(K, r):
                        ok[v] = False
    return ok


def _nondecreasing(K: int, r: int, lo: int = 0):
    if K == 0:
        if r == 0:
            yield ()
        return
    if K == 1:
        if r >= lo:
            yield (r,)
        return
    for d in range(lo, r // K + 1):
        for rest in _nondecreasing(K - 1, r - d, d):
            yield (d,) + rest


def eta_zero_lhs(K: int, r: int) -> Fraction:
    """``r!/prod (i-1)! * sum prod_{i<j} (d_j - d_i + j - i)^2 / prod (d_i + i - 1)!``
    over ``0 <= d_1 <= ... <= d_K`` with sum ``r``."""
    if K < 1 or r < 0:
        raise ValueError("need K >= 1 and r >= 0")
    total = Fraction(0)
    for d in _nondecreasing(K, r):
        num = prod((d[j] - d[i] + j - i) ** 2 for i in range(K) for j in range(i + 1, K))
        den = prod(factorial(d[i] + i) for i in range(K))  # 0-based i
        total += Fraction(num, den)
    return Fraction(factorial(r), prod(factorial(i) for i in range(K))) * total


def k2_series(r: int) -> Fraction:
    """``r! sum_{q <= r/2} (r - 2q + 1)^2 / (q! (r - q + 1)!)``, which is ``2^r``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return factorial(r) * sum(
        (Fraction((r - 2 * q + 1) ** 2, factorial(q) * factorial(r - q + 1)) for q in range(r // 2 + 1)),
        Fraction(0),
    )


def skew_for_delta(spec: StaircaseSpec, delta) -> SkewShape:
    """The skew shape whose standard fillings index horizontal-domino chains."""
    K, eta = spec.K, spec.eta
    alpha = [delta[-1] + sum(eta[i:]) for i in range(K)]
    beta = [alpha[i] - delta[i] for i in range(K - 1)] + [0]
    return SkewShape(tuple(alpha), tuple(beta))


def finite_ratio_from_skew(spec: StaircaseSpec, last_row: int, r: int) -> Fraction:
    """MN ratio for the finite shape assembled from skew counts (needs ``last_row >= 2r``)."""
    lam = spec.partition(last_row)
    if last_row < 2 * r:
        raise ValueError("last row too short for every delta to give a partition")
    total = 0
    for d in delta_vectors(spec, r):
        mu = Partition(l - 2 * x for l, x in zip(lam.parts, d))
        total += skew_count(skew_for_delta(spec, d)) * dimension(mu)
    return Fraction(total, dimension(lam))


@dataclass(frozen=True)
class ProbeRow:
    n: int
    ratio: Fraction
    deviation: Fraction


def mn_convergence_probe(spec: StaircaseSpec, r: int, sizes) -> list[ProbeRow]:
    """``ratio_mn`` at each size and its distance from ``K^-r``."""
    target = Fraction(1, spec.K ** r)
    rows = []
    for n in sizes:
        val = ratio_mn(spec.partition_of_size(n), r)
        rows.append(ProbeRow(n, val, val - target))
    return rows


def deviations_shrink(rows: list[ProbeRow]) -> bool:
    devs = [abs(row.deviation) for row in rows]
    return all(b < a or a == b == 0 for a, b in zip(devs, devs[1:]))
