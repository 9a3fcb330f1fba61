"""Standard Young tableaux, axial distances and the adjacent-transposition action.

Basis order (version 1): tableaux of a shape are sorted lexicographically by
their row-reading word, i.e. the entries of row 0 left to right, then row 1,
and so on.  The matrices in :mod:`coxeter_spectra.representation` are written
in this basis, so changing the order changes every golden file.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, as_partition, dimension

BASIS_ORDER_VERSION = 1
DEFAULT_DIMENSION_CAP = 5000


class DimensionCapError(ValueError):
    """Raised when ``f^lambda`` is larger than the configured cap."""


def check_cap(p: Partition, cap: int | None) -> int:
    f = dimension(p)
    if cap is not None and f > cap:
        raise DimensionCapError(f"f^{p} = {f} exceeds dimension cap {cap}")
    return f


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling stored as ``positions[m - 1] = (row, col)`` of entry ``m``.

    ``index`` is the position in the canonical enumeration of the shape; it is
    ``None`` for tableaux built outside :func:`enumerate_tableaux` and is
    ignored by equality.
    """

    shape: Partition
    positions: tuple[tuple[int, int], ...]
    index: int | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.positions)

    def rows(self) -> list[list[int]]:
        grid = [[0] * r for r in self.shape.parts]
        for m, (i, j) in enumerate(self.positions, start=1):
            grid[i][j] = m
        return grid

    def reading_word(self) -> tuple[int, ...]:
        return tuple(m for row in self.rows() for m in row)

    def content(self, m: int) -> int:
        i, j = self.positions[m - 1]
        return j - i

    def render(self) -> str:
        width = len(str(self.size))
        return "\n".join(" ".join(str(m).rjust(width) for m in row) for row in self.rows())

    def is_standard(self) -> bool:
        grid = self.rows()
        for i, row in enumerate(grid):
            for j, m in enumerate(row):
                if j and row[j - 1] >= m:
                    return False
                if i and grid[i - 1][j] >= m:
                    return False
        return True


def from_rows(rows) -> StandardTableau:
    """Build a tableau from a list of rows of entries; validates standardness."""
    shape = Partition(len(r) for r in rows)
    n = shape.size
    positions = [None] * n
    for i, row in enumerate(rows):
        for j, m in enumerate(row):
            if not 1 <= m <= n or positions[m - 1] is not None:
                raise ValueError(f"entries must be 1..{n} each exactly once")
            positions[m - 1] = (i, j)
    t = StandardTableau(shape, tuple(positions))
    if not t.is_standard():
        raise ValueError("filling is not standard")
    return t


def _corners(parts: tuple[int, ...]) -> list[int]:
    """Rows whose last box can be removed."""
    return [i for i, x in enumerate(parts) if i + 1 == len(parts) or parts[i + 1] < x]


def _fillings(parts: tuple[int, ...]):
    # place N, N-1, ... into removable corners
    if not parts:
        yield ()
        return
    for i in _corners(parts):
        smaller = list(parts)
        smaller[i] -= 1
        box = (i, parts[i] - 1)
        for rest in _fillings(tuple(x for x in smaller if x)):
            yield rest + (box,)


@lru_cache(maxsize=64)
def _enumerate(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    shape = Partition(parts)
    raw = [StandardTableau(shape, pos) for pos in _fillings(parts)]
    raw.sort(key=StandardTableau.reading_word)
    return tuple(StandardTableau(shape, t.positions, k) for k, t in enumerate(raw))


def enumerate_tableaux(p, cap: int | None = DEFAULT_DIMENSION_CAP) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape ``p`` in canonical (reading-word) order."""
    p = as_partition(p)
    check_cap(p, cap)
    tabs = _enumerate(p.parts)
    assert len(tabs) == dimension(p)
    return tabs


def _check_k(t: StandardTableau, k: int) -> None:
    if not 1 <= k <= t.size - 1:
        raise ValueError(f"k must lie in 1..{t.size - 1}, got {k}")


def axial_distance(t: StandardTableau, k: int) -> int:
    """Content of the box holding ``k + 1`` minus content of the box holding ``k``."""
    _check_k(t, k)
    d = t.content(k + 1) - t.content(k)
    assert d != 0
    return d


def apply_adjacent(t: StandardTableau, k: int) -> StandardTableau | None:
    """Swap entries ``k`` and ``k + 1``; ``None`` when the result is not standard.

    The swap is standard exactly when ``|axial_distance(t, k)| >= 2``.
    """
    _check_k(t, k)
    if abs(axial_distance(t, k)) < 2:
        return None
    pos = list(t.positions)
    pos[k - 1], pos[k] = pos[k], pos[k - 1]
    return StandardTableau(t.shape, tuple(pos))


class TableauBasis:
    """Canonical list of tableaux for a shape plus a reverse lookup."""

    def __init__(self, p, cap: int | None = DEFAULT_DIMENSION_CAP):
        self.shape = as_partition(p)
        self.tableaux = enumerate_tableaux(self.shape, cap)
        self._index = {t.positions: t.index for t in self.tableaux}

    def __len__(self) -> int:
        return len(self.tableaux)

    def __getitem__(self, i: int) -> StandardTableau:
        return self.tableaux[i]

    def __iter__(self):
        return iter(self.tableaux)

    def index_of(self, t: StandardTableau) -> int:
        return self._index[t.positions]
