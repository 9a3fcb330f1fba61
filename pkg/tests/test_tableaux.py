import pytest

from coxeter_spectra.partitions import dimension, partitions_of
from coxeter_spectra.tableaux import (
    DimensionCapError,
    StandardTableau,
    TableauBasis,
    apply_adjacent,
    axial_distance,
    enumerate_tableaux,
    from_rows,
)
from oracles import all_syt_rows


def hook_tableau(n, ell):
    """T_ell of shape (n-1, 1): ell alone in the second row."""
    first = [m for m in range(1, n + 1) if m != ell]
    return from_rows([first, [ell]])


def test_single_column():
    tabs = enumerate_tableaux((1, 1, 1))
    assert len(tabs) == 1
    assert tabs[0].rows() == [[1], [2], [3]]


def test_two_one_matches_brute_force():
    tabs = enumerate_tableaux((2, 1))
    assert sorted(tuple(map(tuple, t.rows())) for t in tabs) == sorted(all_syt_rows((2, 1)))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_complete_and_ordered(n):
    for lam in partitions_of(n):
        tabs = enumerate_tableaux(lam)
        assert len(tabs) == dimension(lam)
        words = [t.reading_word() for t in tabs]
        assert words == sorted(words)
        assert len(set(words)) == len(words)
        assert [t.index for t in tabs] == list(range(len(tabs)))
        assert all(t.is_standard() for t in tabs)


def test_hook_shape_tableaux_are_the_T_ell():
    n = 6
    tabs = enumerate_tableaux((n - 1, 1))
    assert {t.positions for t in tabs} == {hook_tableau(n, ell).positions for ell in range(2, n + 1)}
    # reading-word order puts T_N first and T_2 last
    assert tabs[0] == hook_tableau(n, n)
    assert tabs[-1] == hook_tableau(n, 2)


@pytest.mark.parametrize("k", range(1, 7))
def test_hook_axial_distances(k):
    n = 7
    for ell in range(2, n + 1):
        t = hook_tableau(n, ell)
        if ell == k:
            assert axial_distance(t, k) == k
        elif ell == k + 1:
            assert axial_distance(t, k) == -k
        else:
            assert axial_distance(t, k) == 1


def test_single_column_distance():
    t = enumerate_tableaux((1, 1, 1, 1))[0]
    assert all(axial_distance(t, k) == -1 for k in range(1, 4))
    assert apply_adjacent(t, 1) is None


def test_hook_swap():
    n = 6
    for k in range(2, n):
        assert apply_adjacent(hook_tableau(n, k), k) == hook_tableau(n, k + 1)
        assert apply_adjacent(hook_tableau(n, k + 1), k) == hook_tableau(n, k)
    assert apply_adjacent(hook_tableau(n, 2), 1) is None
    assert apply_adjacent(hook_tableau(n, 5), 2) is None


@pytest.mark.parametrize("n", range(2, 8))
def test_swap_properties(n):
    for lam in partitions_of(n):
        tabs = enumerate_tableaux(lam)
        basis = TableauBasis(lam)
        for t in tabs:
            grid = t.rows()
            for k in range(1, n):
                d = axial_distance(t, k)
                assert d != 0
                (i1, j1), (i2, j2) = t.positions[k - 1], t.positions[k]
                same_line = i1 == i2 or j1 == j2
                u = apply_adjacent(t, k)
                assert (u is not None) == (abs(d) >= 2) == (not same_line)
                if u is not None:
                    assert u.is_standard()
                    assert apply_adjacent(u, k) == t
                    assert axial_distance(u, k) == -d
                    assert basis[basis.index_of(u)] == u
            assert grid == t.rows()


def test_k_out_of_range():
    t = enumerate_tableaux((2, 1))[0]
    for k in (0, 3):
        with pytest.raises(ValueError):
            axial_distance(t, k)
        with pytest.raises(ValueError):
            apply_adjacent(t, k)


def test_cap_refuses_large_shapes():
    with pytest.raises(DimensionCapError):
        enumerate_tableaux((4, 3, 2, 1), cap=100)


def test_from_rows_validates():
    with pytest.raises(ValueError):
        from_rows([[2, 1]])
    with pytest.raises(ValueError):
        from_rows([[1, 1]])


def test_render():
    t = from_rows([[1, 3], [2]])
    assert t.render() == "1 3\n2"
    assert isinstance(t, StandardTableau) and t.index is None
