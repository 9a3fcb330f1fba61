"""Hermite polynomials with leading coefficient ``1/n!`` and Gaussian moments.

With this normalisation ``sum_n t^n H_n(x) = exp(t x - t^2 / 2)`` and
``E[H_m(Z) H_n(Z)] = delta_mn / n!`` for standard Gaussian ``Z``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


def hermite(n: int, x):
    """``H_n(x)`` by ``(n+1) H_{n+1} = x H_n - H_{n-1}``.

    Works for floats, numpy arrays and Fractions (exact in the last case).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if isinstance(x, int):
        x = Fraction(x)
    prev, cur = 0 * x + 1, x
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, (x * cur - prev) / (m + 1)
    return cur


def hermite_coefficients(n: int) -> list[Fraction]:
    """Exact monomial coefficients ``c[i]`` of ``H_n = sum c[i] x^i``."""
    prev, cur = [Fraction(1)], [Fraction(0), Fraction(1)]
    if n == 0:
        return prev
    for m in range(1, n):
        nxt = [Fraction(0)] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, [c / (m + 1) for c in nxt]
    return cur


def double_factorial(m: int) -> int:
    """``m!!``, with ``(-1)!! = 0!! = 1``."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def standard_gaussian_moment(m: int) -> int:
    """``E[Z^m]``: ``(m - 1)!!`` for even ``m``, else 0."""
    return double_factorial(m - 1) if m % 2 == 0 else 0


def gaussian_expectation(coeffs) -> Fraction:
    """``E[p(Z)]`` for a polynomial given by its coefficients."""
    return sum((c * standard_gaussian_moment(i) for i, c in enumerate(coeffs)), Fraction(0))


def gaussian_raw_moment(s: int, mean, variance):
    """``E[X^s]`` for ``X ~ Normal(mean, variance)``."""
    if variance < 0:
        raise ValueError("variance must be nonnegative")
    total = 0 * mean
    for m in range(0, s + 1, 2):
        total += comb(s, m) * mean ** (s - m) * double_factorial(m - 1) * variance ** (m // 2)
    return total


@dataclass(frozen=True)
class LimitParameters:
    theta: Fraction
    z: float

    def __post_init__(self):
        if abs(self.theta) > 1:
            raise ValueError("|theta| must be at most 1")


def limit_moment(s: int, lp: LimitParameters):
    """``sum_r s!/(s-r)! E[Z^(s-r)] theta^r H_r(z)``: moments of the limit law given ``Z = z``."""
    total = 0
    for r in range(s + 1):
        g = standard_gaussian_moment(s - r)
        if g:
            total += factorial(s) // factorial(s - r) * g * lp.theta ** r * hermite(r, lp.z)
    return total
