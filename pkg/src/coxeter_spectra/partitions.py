"""Partitions and Young diagrams.

Boxes are addressed by zero-based ``(row, col)`` pairs.  Contents ``col - row``
are the same under the one-based convention, so nothing downstream depends on
the offset.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator


class DegenerateShapeError(ValueError):
    """Raised when a statistic is undefined for the given shape (e.g. N < 2)."""


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts.

    Trailing zeros are stripped on construction; anything else that is not
    weakly decreasing and nonnegative is rejected.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"part {i} is {x}; parts must be positive")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing at position {i}: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j

    def contains(self, other: "Partition") -> bool:
        """True if the diagram of ``other`` sits inside this one."""
        if len(other) > len(self):
            return False
        return all(b <= a for a, b in zip(self.parts, other.parts))

    def padded(self, length: int) -> tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def conjugate(p) -> Partition:
    p = as_partition(p)
    if not p.parts:
        return p
    return Partition(sum(1 for x in p.parts if x > j) for j in range(p.parts[0]))


@dataclass(frozen=True)
class HookData:
    hooks: tuple[tuple[int, ...], ...]
    dimension: int


def hook_data(p) -> HookData:
    """Hooklengths of every box and ``f = N! / prod(hooks)``."""
    p = as_partition(p)
    conj = conjugate(p)
    hooks = tuple(
        tuple(row - j + conj.parts[j] - i - 1 for j in range(row))
        for i, row in enumerate(p.parts)
    )
    denom = prod(h for row in hooks for h in row)
    dim, rem = divmod(factorial(p.size), denom)
    assert rem == 0
    return HookData(hooks, dim)


@lru_cache(maxsize=None)
def _dimension_cached(parts: tuple[int, ...]) -> int:
    return hook_data(Partition(parts)).dimension


def dimension(p) -> int:
    """Number of standard Young tableaux of shape ``p`` (cached)."""
    return _dimension_cached(as_partition(p).parts)


def dimension_determinant(p) -> int:
    """``f`` via ``N! prod_{i<j}(l_i - l_j - i + j) / prod_i (l_i + k - i)!``.

    ``k`` is the stored number of rows (no zero padding); empty products are 1.
    """
    p = as_partition(p)
    lam, k = p.parts, len(p)
    num = factorial(p.size) * prod(
        lam[i] - lam[j] - i + j for i in range(k) for j in range(i + 1, k)
    )
    # rows are 0-based here, so (l_i + k - i) becomes (l_i + k - 1 - i)
    den = prod(factorial(lam[i] + k - 1 - i) for i in range(k))
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


@dataclass(frozen=True)
class ShapeStatistics:
    content_sum: int
    content_square_sum: int
    pair_count: int
    theta_ratio: Fraction | None = field(default=None)


def shape_statistics(p) -> ShapeStatistics:
    """Content sums of ``p`` and the transposition ratio ``sum(j - i) / C(N, 2)``.

    The boxwise content sum is checked against the binomial form
    ``sum_i C(l_i, 2) - sum_j C(l'_j, 2)``.  ``theta_ratio`` is ``None`` when
    ``N < 2``; use :func:`theta_ratio` to get an error instead.
    """
    p = as_partition(p)
    contents = [j - i for i, j in p.boxes()]
    csum = sum(contents)
    binomial_form = sum(comb(x, 2) for x in p.parts) - sum(comb(x, 2) for x in conjugate(p).parts)
    assert csum == binomial_form, (p, csum, binomial_form)
    pairs = comb(p.size, 2)
    theta = Fraction(csum, pairs) if pairs else None
    return ShapeStatistics(csum, sum(c * c for c in contents), pairs, theta)


def theta_ratio(p) -> Fraction:
    stats = shape_statistics(p)
    if stats.theta_ratio is None:
        raise DegenerateShapeError(f"theta ratio needs N >= 2, got shape {as_partition(p)}")
    return stats.theta_ratio


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [Partition(t) for t in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions_bounded(n - first, first))
    return tuple(out)


def staircase(k: int) -> Partition:
    return Partition(range(k, 0, -1))


def hook_shape(n: int) -> Partition:
    """The two-row shape ``(n - 1, 1)``."""
    if n < 2:
        raise ValueError("hook:N needs N >= 2")
    return Partition((n - 1, 1))


def parse_shape(text: str) -> Partition:
    """Parse ``"4,3,2,1"``, ``"stair:k"`` or ``"hook:N"``.

    Raises ``ValueError`` naming the offending character position.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty shape spec")
    for prefix, build in (("stair:", staircase), ("hook:", hook_shape)):
        if s.startswith(prefix):
            arg = s[len(prefix):]
            if not arg.isdigit() or int(arg) < 1:
                raise ValueError(f"bad argument {arg!r} at position {len(prefix)} in {text!r}")
            return build(int(arg))
    parts = []
    pos = 0
    for token in s.split(","):
        tok = token.strip()
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"bad part {token!r} at position {pos} in {text!r}")
        if parts and int(tok) > parts[-1]:
            raise ValueError(f"part {tok} at position {pos} exceeds previous part; not weakly decreasing")
        parts.append(int(tok))
        pos += len(token) + 1
    return Partition(parts)
