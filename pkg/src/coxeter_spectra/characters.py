"""Character ratios on the classes ``1^(N-2r) 2^r``.

Three routes are provided: closed forms for one and two transpositions, the
Murnaghan-Nakayama domino recursion for any ``r``, and (in
:mod:`coxeter_spectra.representation`) the trace of an explicit matrix.
Everything here is exact; ratios are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import (
    DegenerateShapeError,
    Partition,
    as_partition,
    dimension,
    partitions_of,
    shape_statistics,
)

log = logging.getLogger(__name__)

PLANCHEREL_CAP = 20


class FormulaDiscrepancy(ArithmeticError):
    """A closed form disagreed with an independent route."""


def ratio_one_transposition(p) -> Fraction:
    """``chi(1^(N-2) 2) / chi(e) = sum of contents / C(N, 2)``."""
    p = as_partition(p)
    if p.size < 2:
        raise DegenerateShapeError(f"need N >= 2, got {p}")
    return shape_statistics(p).theta_ratio


def ratio_two_transpositions(p) -> Fraction:
    """Closed form for ``chi(1^(N-4) 2^2) / chi(e)``:

    ``4 (N-4)!/N! * ((sum c)^2 - 3 sum c^2 + 2 C(N, 2))`` with ``c`` the contents.
    """
    p = as_partition(p)
    n = p.size
    if n < 4:
        raise DegenerateShapeError(f"need N >= 4, got {p}")
    st = shape_statistics(p)
    bracket = st.content_sum ** 2 - 3 * st.content_square_sum + 2 * comb(n, 2)
    return Fraction(4 * factorial(n - 4) * bracket, factorial(n))


def check_two_transpositions(p, tol: float = 1e-10) -> Fraction:
    """Closed form cross-checked against the trace of ``rho((1,2)(3,4))``.

    Raises :class:`FormulaDiscrepancy` carrying both values on mismatch.
    """
    from .representation import trace_character

    closed = ratio_two_transpositions(p)
    oracle = trace_character(p, [1, 3])
    if abs(float(closed) - oracle) > tol:
        raise FormulaDiscrepancy(f"{as_partition(p)}: closed form {closed} vs trace {oracle!r}")
    return closed


# -- dominoes ---------------------------------------------------------------

def remove_dominoes(parts: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Every ``(nu, sign)`` with ``nu`` obtained by deleting one domino.

    Horizontal dominoes carry sign +1, vertical ones -1.
    """
    out = []
    k = len(parts)
    for i, x in enumerate(parts):
        below = parts[i + 1] if i + 1 < k else 0
        if x - 2 >= below:
            nu = parts[:i] + (x - 2,) + parts[i + 1:]
            out.append((_strip(nu), 1))
        if i + 1 < k and parts[i + 1] == x:
            below2 = parts[i + 2] if i + 2 < k else 0
            if x - 1 >= below2:
                nu = parts[:i] + (x - 1, x - 1) + parts[i + 2:]
                out.append((_strip(nu), -1))
    return out


def _strip(parts: tuple[int, ...]) -> tuple[int, ...]:
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@lru_cache(maxsize=None)
def _zeta(inner: tuple[int, ...], outer: tuple[int, ...]) -> int:
    if inner == outer:
        return 1
    if sum(outer) <= sum(inner):
        return 0
    total = 0
    for nu, sign in remove_dominoes(outer):
        if Partition(nu).contains(Partition(inner)):
            total += sign * _zeta(inner, nu)
    return total


def zeta(inner, outer) -> int:
    """Signed count of domino chains from ``inner`` up to ``outer``.

    ``zeta(l, l) = 1``; 0 when no chain exists.
    """
    inner, outer = as_partition(inner), as_partition(outer)
    diff = outer.size - inner.size
    if diff < 0 or diff % 2:
        raise ValueError(f"|outer| - |inner| must be even and >= 0, got {diff}")
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return _zeta(inner.parts, outer.parts)


def domino_layers(p, r: int) -> dict[tuple[int, ...], int]:
    """``{mu: zeta(mu, p)}`` over all ``mu`` reached by removing ``r`` dominoes."""
    layer = {as_partition(p).parts: 1}
    for _ in range(r):
        nxt: dict[tuple[int, ...], int] = {}
        for nu, z in layer.items():
            for mu, sign in remove_dominoes(nu):
                nxt[mu] = nxt.get(mu, 0) + sign * z
        layer = {mu: z for mu, z in nxt.items() if z}
    return layer


def ratio_mn(p, r: int) -> Fraction:
    """``sum_mu zeta(mu, p) f^mu / f^p`` over ``mu`` of size ``N - 2r``."""
    p = as_partition(p)
    if r < 0 or p.size < 2 * r:
        raise DegenerateShapeError(f"need 0 <= 2r <= N, got r={r} for {p}")
    total = sum(z * dimension(Partition(mu)) for mu, z in domino_layers(p, r).items())
    return Fraction(total, dimension(p))


# -- skew shapes ------------------------------------------------------------

@dataclass(frozen=True)
class SkewShape:
    """``outer / inner``; both may carry zero parts as padding."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self):
        outer, inner = tuple(self.outer), tuple(self.inner)
        for name, seq in (("outer", outer), ("inner", inner)):
            if any(x < 0 for x in seq) or any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} {seq} is not weakly decreasing and nonnegative")
        if len(inner) > len(outer):
            if any(inner[len(outer):]):
                raise ValueError("inner does not fit inside outer")
            inner = inner[: len(outer)]
        inner = inner + (0,) * (len(outer) - len(inner))
        if any(b > a for a, b in zip(outer, inner)):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def box_count(self) -> int:
        return sum(self.outer) - sum(self.inner)


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def skew_count(s: SkewShape) -> int:
    """Standard fillings of ``outer / inner``: ``r! det(1 / (a_i - b_j - i + j)!)``.

    Factorials of negative integers count as infinite (entry 0).  Row ``i`` is
    scaled by ``(a_i - i + K)!`` so the determinant is taken over the integers;
    the scaling is divided out exactly afterwards.
    """
    a, b, K = s.outer, s.inner, len(s.outer)
    if K == 0:
        return 1
    row_scale = [factorial(a[i] - i + K) for i in range(K)]
    mat = []
    for i in range(K):
        row = []
        for j in range(K):
            arg = a[i] - b[j] - i + j
            # (a_i - i + K)! / arg!  is an integer because b_j - j + K >= 0
            row.append(row_scale[i] // factorial(arg) if arg >= 0 else 0)
        mat.append(row)
    num = factorial(s.box_count) * _bareiss_det(mat)
    den = 1
    for x in row_scale:
        den *= x
    count, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"non-integral skew count for {s}")
    return count


# -- profiles and Plancherel ------------------------------------------------

@dataclass(frozen=True)
class LimitProfile:
    """Limiting row fractions ``p`` and column fractions ``q``."""

    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...] = ()

    def __post_init__(self):
        p = tuple(Fraction(x) for x in self.p)
        q = tuple(Fraction(x) for x in self.q)
        for name, seq in (("p", p), ("q", q)):
            if any(x < 0 for x in seq) or sum(seq) > 1:
                raise ValueError(f"{name} must be nonnegative with sum <= 1")
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be weakly decreasing")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def theta_from_profiles(prof: LimitProfile) -> Fraction:
    return sum((x * x for x in prof.p), Fraction(0)) - sum((x * x for x in prof.q), Fraction(0))


@dataclass(frozen=True)
class PlancherelSummary:
    n: int
    mean: Fraction
    variance: Fraction
    total_mass: Fraction


def plancherel_moments(n: int, cap: int = PLANCHEREL_CAP) -> PlancherelSummary:
    """Exact mean/variance of the transposition ratio under ``(f^l)^2 / n!``."""
    if not 2 <= n <= cap:
        raise ValueError(f"n must lie in 2..{cap}, got {n}")
    nfact = factorial(n)
    mass = mean = second = Fraction(0)
    for lam in partitions_of(n):
        w = Fraction(dimension(lam) ** 2, nfact)
        x = ratio_one_transposition(lam)
        mass += w
        mean += w * x
        second += w * x * x
    return PlancherelSummary(n, mean, second - mean * mean, mass)
