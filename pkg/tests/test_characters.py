from fractions import Fraction
from math import comb

import pytest

from coxeter_spectra.characters import (
    FormulaDiscrepancy,
    LimitProfile,
    SkewShape,
    check_two_transpositions,
    domino_layers,
    plancherel_moments,
    ratio_mn,
    ratio_one_transposition,
    ratio_two_transpositions,
    remove_dominoes,
    skew_count,
    theta_from_profiles,
    zeta,
)
from coxeter_spectra.partitions import DegenerateShapeError, conjugate, partitions_of
from coxeter_spectra.representation import trace_character
from oracles import brute_partitions, count_standard_fillings, subpartitions, zeta_by_chains


def test_one_transposition_examples():
    assert ratio_one_transposition((5,)) == 1
    assert ratio_one_transposition((1,) * 5) == -1
    assert ratio_one_transposition((2, 2)) == 0
    with pytest.raises(DegenerateShapeError):
        ratio_one_transposition((1,))


def test_two_transposition_examples():
    assert ratio_two_transpositions((2, 2)) == 1
    assert ratio_two_transpositions((3, 1)) == Fraction(-1, 3)
    assert ratio_two_transpositions((4,)) == 1
    with pytest.raises(DegenerateShapeError):
        ratio_two_transpositions((2, 1))


@pytest.mark.parametrize("n", range(4, 11))
def test_two_transposition_closed_form_against_trace(n):
    for lam in partitions_of(n):
        check_two_transpositions(lam)


def test_discrepancy_is_reported(monkeypatch):
    import coxeter_spectra.characters as ch

    monkeypatch.setattr(ch, "ratio_two_transpositions", lambda p: Fraction(7, 9))
    with pytest.raises(FormulaDiscrepancy):
        ch.check_two_transpositions((3, 1))


def test_single_domino_signs():
    assert zeta((3,), (5,)) == 1
    assert zeta((1, 1), (2, 2)) == -1
    assert zeta((), (2, 2)) == 2
    assert zeta((2, 1), (2, 1)) == 1


def test_zeta_errors():
    with pytest.raises(ValueError):
        zeta((2,), (2, 1))
    with pytest.raises(ValueError):
        zeta((3,), (2, 2, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_zeta_matches_chain_enumeration(n):
    for lam in partitions_of(n):
        for r in range(1, n // 2 + 1):
            layer = domino_layers(lam, r)
            for mu in brute_partitions(n - 2 * r) if n > 2 * r else [()]:
                if not all(a <= b for a, b in zip(mu, lam.parts)) or len(mu) > len(lam):
                    continue
                expected = zeta_by_chains(mu, lam.parts)
                assert zeta(mu, lam) == expected
                assert layer.get(mu, 0) == expected


def test_remove_dominoes_small():
    assert sorted(remove_dominoes((2, 2))) == [((1, 1), -1), ((2,), 1)]
    assert remove_dominoes((2, 1)) == []


def test_ratio_mn_examples():
    assert ratio_mn((4, 2, 1), 0) == 1
    assert ratio_mn((2, 1), 1) == 0
    assert ratio_mn((2, 2), 2) == 1
    with pytest.raises(DegenerateShapeError):
        ratio_mn((2, 1), 2)


@pytest.mark.parametrize("n", range(2, 11))
def test_ratio_mn_routes(n):
    for lam in partitions_of(n):
        assert ratio_mn(lam, 1) == ratio_one_transposition(lam)
        if n >= 4:
            assert ratio_mn(lam, 2) == ratio_two_transpositions(lam)
        for r in range(n // 2 + 1):
            v = ratio_mn(lam, r)
            assert abs(v) <= 1
            assert ratio_mn(conjugate(lam), r) == (-1) ** r * v


@pytest.mark.parametrize("n", range(3, 9))
def test_ratio_mn_against_trace(n):
    for lam in partitions_of(n):
        for r in range(1, (n + 1) // 2):
            word = list(range(1, 2 * r, 2))
            assert abs(float(ratio_mn(lam, r)) - trace_character(lam, word)) < 1e-10


def test_skew_count_examples():
    assert skew_count(SkewShape((3, 2), (3, 2))) == 1
    assert skew_count(SkewShape((2, 1), (1, 0))) == 2
    assert skew_count(SkewShape((6,), (0,))) == 1
    assert skew_count(SkewShape((4, 3, 2, 1), ())) == 768


def test_skew_shape_validation():
    with pytest.raises(ValueError):
        SkewShape((2, 1), (3,))
    with pytest.raises(ValueError):
        SkewShape((1, 2), ())
    assert SkewShape((3, 1, 0), (1,)).inner == (1, 0, 0)


@pytest.mark.parametrize("outer", [(4, 2, 1), (3, 3, 2), (5, 1, 1, 1), (2, 2, 2, 2)])
def test_skew_count_against_enumeration(outer):
    for inner in subpartitions(outer):
        s = SkewShape(outer, inner)
        assert skew_count(s) == count_standard_fillings(outer, inner)


def test_skew_count_padding_harmless():
    base = skew_count(SkewShape((3, 2), (1,)))
    assert skew_count(SkewShape((3, 2, 0, 0), (1, 0, 0, 0))) == base


def test_theta_from_profiles():
    assert theta_from_profiles(LimitProfile((1,))) == 1
    half = Fraction(1, 2)
    assert theta_from_profiles(LimitProfile((half, half))) == half
    p = (Fraction(1, 3), Fraction(1, 4))
    assert theta_from_profiles(LimitProfile(p, p)) == 0
    with pytest.raises(ValueError):
        LimitProfile((Fraction(3, 4), Fraction(1, 2)))


def test_theta_from_profiles_matches_large_shapes():
    # rows growing like (N/2, N/2): ratio tends to 1/2
    for m in (50, 200):
        lam = (m, m)
        assert abs(ratio_one_transposition(lam) - Fraction(1, 2)) < Fraction(2, m)


def test_plancherel_small():
    s2 = plancherel_moments(2)
    assert (s2.mean, s2.variance) == (0, 1)
    s3 = plancherel_moments(3)
    assert (s3.mean, s3.variance) == (0, Fraction(1, 3))
    assert plancherel_moments(10).variance == Fraction(1, 45)
    with pytest.raises(ValueError):
        plancherel_moments(1)
    with pytest.raises(ValueError):
        plancherel_moments(21)


@pytest.mark.parametrize("n", range(2, 15))
def test_plancherel_exact(n):
    s = plancherel_moments(n)
    assert s.total_mass == 1
    assert s.mean == 0
    assert s.variance == Fraction(1, comb(n, 2))
