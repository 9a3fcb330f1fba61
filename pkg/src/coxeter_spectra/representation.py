"""Young's orthogonal form of the adjacent transpositions.

In the tableau basis, ``rho((k, k+1))`` has diagonal entry ``1/d`` at ``T``
(``d = axial_distance(T, k)``) and off-diagonal entry ``sqrt(1 - 1/d^2)``
linking ``T`` with the swapped tableau when that is standard.  Each row has at
most one off-diagonal entry, so a generator is stored as a diagonal plus a
partner permutation.

Words are read left to right as matrix products: ``[a, b]`` is
``rho((a, a+1)) @ rho((b, b+1))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .partitions import Partition, as_partition
from .tableaux import (
    DEFAULT_DIMENSION_CAP,
    TableauBasis,
    apply_adjacent,
    axial_distance,
    check_cap,
)


@dataclass(frozen=True, eq=False)
class AdjacentGenerator:
    """Sparse symmetric orthogonal matrix for ``(k, k+1)``.

    ``partner[i]`` is the basis index paired with ``i`` (``-1`` if none) and
    ``offdiag[i]`` the corresponding entry (0 where unpaired).
    """

    shape: Partition
    k: int
    diag: np.ndarray
    partner: np.ndarray
    offdiag: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        out = np.diag(self.diag)
        rows = np.flatnonzero(self.partner >= 0)
        out[rows, self.partner[rows]] = self.offdiag[rows]
        return out

    def apply(self, v: np.ndarray) -> np.ndarray:
        return apply_generator(self, v)


def _offdiag_value(d: int) -> float:
    # sqrt(1 - d^-2) without cancellation for large |d|
    return float(np.sqrt((d - 1) * (d + 1)) / abs(d))


def _check_k(p: Partition, k: int) -> None:
    if p.size < 2 or not 1 <= k <= p.size - 1:
        raise ValueError(f"generator index k={k} out of range 1..{p.size - 1}")


@lru_cache(maxsize=32)
def _basis(parts: tuple[int, ...]) -> TableauBasis:
    return TableauBasis(parts, cap=None)


def basis(p, cap: int | None = DEFAULT_DIMENSION_CAP) -> TableauBasis:
    p = as_partition(p)
    check_cap(p, cap)
    return _basis(p.parts)


@lru_cache(maxsize=256)
def _generator(parts: tuple[int, ...], k: int) -> AdjacentGenerator:
    b = _basis(parts)
    f = len(b)
    diag = np.empty(f)
    partner = np.full(f, -1, dtype=np.intp)
    offdiag = np.zeros(f)
    for t in b:
        d = axial_distance(t, k)
        diag[t.index] = 1.0 / d
        swapped = apply_adjacent(t, k)
        if swapped is not None:
            partner[t.index] = b.index_of(swapped)
            offdiag[t.index] = _offdiag_value(d)
    for a in (diag, partner, offdiag):
        a.setflags(write=False)
    return AdjacentGenerator(b.shape, k, diag, partner, offdiag)


def generator(p, k: int, cap: int | None = DEFAULT_DIMENSION_CAP) -> AdjacentGenerator:
    """Young's orthogonal matrix for ``(k, k+1)`` acting on shape ``p``."""
    p = as_partition(p)
    _check_k(p, k)
    check_cap(p, cap)
    return _generator(p.parts, k)


def generators(p, cap: int | None = DEFAULT_DIMENSION_CAP) -> list[AdjacentGenerator]:
    """All ``N - 1`` generators; built once per shape and shared read-only."""
    p = as_partition(p)
    check_cap(p, cap)
    return [_generator(p.parts, k) for k in range(1, p.size)]


def apply_generator(g: AdjacentGenerator, v: np.ndarray) -> np.ndarray:
    """``G @ v`` for a vector, or for a matrix column-wise, in O(f) per column."""
    v = np.asarray(v, dtype=float)
    if v.shape[0] != g.dim:
        raise ValueError(f"length mismatch: generator has dimension {g.dim}, got {v.shape[0]}")
    scale = g.diag if v.ndim == 1 else g.diag[:, None]
    out = scale * v
    rows = np.flatnonzero(g.partner >= 0)
    off = g.offdiag[rows] if v.ndim == 1 else g.offdiag[rows][:, None]
    out[rows] += off * v[g.partner[rows]]
    return out


def _check_word(p: Partition, word) -> list[int]:
    word = [int(k) for k in word]
    for k in word:
        _check_k(p, k)
    return word


def represent_word(p, word, cap: int | None = DEFAULT_DIMENSION_CAP) -> np.ndarray:
    """Dense product of the generators in ``word`` (identity for the empty word)."""
    p = as_partition(p)
    f = check_cap(p, cap)
    word = _check_word(p, word)
    out = np.eye(f)
    for k in reversed(word):
        out = apply_generator(_generator(p.parts, k), out)
    return out


def trace_character(p, word, cap: int | None = DEFAULT_DIMENSION_CAP) -> float:
    """``trace(rho(word)) / f``: the character ratio at the permutation ``word`` spells."""
    p = as_partition(p)
    f = check_cap(p, cap)
    word = _check_word(p, word)
    if not word:
        return 1.0
    if len(word) == 1:
        return float(_generator(p.parts, word[0]).diag.sum()) / f
    return float(np.trace(represent_word(p, word, cap))) / f


@dataclass(frozen=True)
class CoxeterReport:
    shape: Partition
    involution: float
    commuting: float
    braid: float
    symmetry: float
    orthogonality: float
    max_offdiag_per_row: int

    @property
    def worst(self) -> float:
        return max(self.involution, self.commuting, self.braid, self.symmetry, self.orthogonality)

    def as_dict(self) -> dict:
        return {
            "shape": str(self.shape),
            "involution": self.involution,
            "commuting": self.commuting,
            "braid": self.braid,
            "symmetry": self.symmetry,
            "orthogonality": self.orthogonality,
            "max_offdiag_per_row": self.max_offdiag_per_row,
        }


def coxeter_audit(p, cap: int | None = DEFAULT_DIMENSION_CAP) -> CoxeterReport:
    """Max-norm residuals of the Coxeter relations plus symmetry/orthogonality."""
    p = as_partition(p)
    f = check_cap(p, cap)
    gens = generators(p, cap) if p.size >= 2 else []
    dense = [g.to_dense() for g in gens]
    eye = np.eye(f)

    def dev(a) -> float:
        return float(np.max(np.abs(a))) if a.size else 0.0

    involution = symmetry = orthogonality = commuting = braid = 0.0
    max_off = 0
    for g, m in zip(gens, dense):
        sq = apply_generator(g, m)
        involution = max(involution, dev(sq - eye))
        symmetry = max(symmetry, dev(m - m.T))
        orthogonality = max(orthogonality, dev(m.T @ m - eye))
        paired = g.partner >= 0
        if np.any(paired):
            # partner pairing must be mutual with equal entries
            idx = np.flatnonzero(paired)
            assert np.all(g.partner[g.partner[idx]] == idx)
        max_off = max(max_off, int(np.max(np.count_nonzero(m - np.diag(np.diag(m)), axis=1))))
    for a in range(len(gens)):
        for b in range(a + 2, len(gens)):
            ab = apply_generator(gens[a], dense[b])
            ba = apply_generator(gens[b], dense[a])
            commuting = max(commuting, dev(ab - ba))
        if a + 1 < len(gens):
            g, h = gens[a], gens[a + 1]
            aba = apply_generator(g, apply_generator(h, dense[a]))
            bab = apply_generator(h, apply_generator(g, dense[a + 1]))
            braid = max(braid, dev(aba - bab))
    return CoxeterReport(p, involution, commuting, braid, symmetry, orthogonality, max_off)
