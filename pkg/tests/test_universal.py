"""Engine tests: series determination, multiplicativity, defining vanishings.

The frozen A, B prefixes come from extracting roots of the determined
b and s1 sequences by hand; C_2 and D_2 were solved by hand from the
k = 2 probe system and confirmed through an independent expansion of
the Lehn function at the single-exponent tuples.
"""

from __future__ import annotations

import random
from fractions import Fraction as F
from math import factorial

import pytest

from hilbsegre import (
    SegreTable,
    SurfaceInvariants,
    TruncatedPowerSeries,
    UniversalSeriesSet,
    blowup_targets,
    closed_segre,
    determine_AB,
    determine_b_s1,
    segre_number,
    segre_series,
    universal_series_set,
)

A_PREFIX = (F(1), F(1), F(-9, 2), F(65, 2), F(-2261, 8))
B_PREFIX = (F(1), F(0), F(1, 2), F(-20, 3), F(649, 8))

U8 = universal_series_set(8)


# -- invariants type ----------------------------------------------------------


def test_invariants_accept_arbitrary_integers():
    inv = SurfaceInvariants(-7, 3, -2, 100)
    assert inv.as_tuple() == (-7, 3, -2, 100)


def test_invariants_reject_non_integers():
    with pytest.raises(TypeError):
        SurfaceInvariants(F(1, 2), 0, 0, 0)


def test_invariants_addition_is_componentwise():
    total = SurfaceInvariants(1, 2, 3, 4) + SurfaceInvariants(10, 20, 30, 40)
    assert total == SurfaceInvariants(11, 22, 33, 44)


# -- determination of A and B ------------------------------------------------------


def test_A_prefix():
    A, _ = determine_AB(4)
    assert A.coefficients == A_PREFIX


def test_B_prefix():
    _, B = determine_AB(4)
    assert B.coefficients == B_PREFIX


def test_A_squares_to_abelian_series():
    A, _ = determine_AB(8)
    assert A.pow(2).coefficients == determine_b_s1(8).b


def test_B_24th_power_is_genus_one_series():
    _, B = determine_AB(8)
    assert B.pow(24).coefficients == determine_b_s1(8).s1


def test_CD_hand_values():
    assert U8.C[1] == 0
    assert U8.D[1] == 0
    assert U8.C[2] == F(-5, 2)
    assert U8.D[2] == F(-1, 2)


def test_series_set_validates_normalization():
    good = TruncatedPowerSeries([1, 0, 5], order=2)
    bad_constant = TruncatedPowerSeries([2, 0], order=2)
    with pytest.raises(ValueError, match="constant term 1"):
        UniversalSeriesSet(good, good, good, bad_constant)
    bad_linear = TruncatedPowerSeries([1, 3], order=2)
    with pytest.raises(ValueError, match="linear coefficient"):
        UniversalSeriesSet(bad_linear, good, good, good)


def test_series_set_cached_per_order():
    assert universal_series_set(8) is U8
    assert universal_series_set(6) is not U8


# -- generating series ----------------------------------------------------------------


def test_empty_surface_gives_constant_one():
    series = segre_series(SurfaceInvariants(0, 0, 0, 0), 8, U8)
    assert series.coefficients == TruncatedPowerSeries.one(8).coefficients


def test_linear_coefficient_is_d():
    for tup in ((5, 1, 2, 3), (-4, 0, 7, 12), (0, -2, -1, 25)):
        inv = SurfaceInvariants(*tup)
        assert segre_series(inv, 4, U8)[1] == inv.d


def test_k3_family_matches_closed_formula():
    for g in range(-19, 22):  # |2g - 2| <= 40
        inv = SurfaceInvariants(2 * g - 2, 0, 0, 24)
        series = segre_series(inv, 8, U8)
        for k in range(9):
            assert series[k] == closed_segre(k, g), (k, g)


def test_abelian_family_matches_b_sequence():
    series = segre_series(SurfaceInvariants(2, 0, 0, 0), 8, U8)
    assert series.coefficients == determine_b_s1(8).b


def test_even_d_abelian_consistency():
    # the d = 2 normalization determines every even-d abelian series by multiplicativity
    b_series = TruncatedPowerSeries(determine_b_s1(8).b)
    for d in (4, 6):
        engine = segre_series(SurfaceInvariants(d, 0, 0, 0), 8, U8)
        assert engine.coefficients == b_series.pow(d // 2).coefficients


def test_multiplicativity_under_disjoint_union():
    rng = random.Random(7)
    for _ in range(12):
        first = SurfaceInvariants(*(rng.randint(-2, 2) for _ in range(4)))
        second = SurfaceInvariants(*(rng.randint(-2, 2) for _ in range(4)))
        left = segre_series(first + second, 8, U8)
        right = segre_series(first, 8, U8) * segre_series(second, 8, U8)
        assert left.coefficients == right.coefficients


def test_defining_vanishings_hold():
    for k in range(2, 9):
        for target in blowup_targets(k):
            assert segre_number(target.invariants, k, U8) == 0


def test_k_factorial_times_sk_is_integer():
    rng = random.Random(11)
    for _ in range(25):
        inv = SurfaceInvariants(*(rng.randint(-4, 4) for _ in range(4)))
        for k in range(6):
            value = factorial(k) * segre_number(inv, k, U8)
            assert value.denominator == 1, (inv, k)


def test_insufficient_order_rejected():
    with pytest.raises(ValueError, match="insufficient truncation order"):
        segre_number(SurfaceInvariants(2, 0, 0, 0), 9, U8)
    with pytest.raises(ValueError, match="insufficient truncation order"):
        segre_series(SurfaceInvariants(2, 0, 0, 0), 9, U8)


# -- blow-up targets ---------------------------------------------------------------------


def test_targets_k5():
    first, second = blowup_targets(5)
    assert first.invariants.as_tuple() == (28, 4, -1, 25)
    assert second.invariants.as_tuple() == (29, 5, -1, 25)
    assert first.section_count == 14
    assert second.section_count == 14


def test_targets_k2():
    first, second = blowup_targets(2)
    assert first.invariants.as_tuple() == (7, 1, -1, 25)
    assert second.invariants.as_tuple() == (8, 2, -1, 25)


def test_section_count_is_3k_minus_1():
    for k in range(2, 12):
        for target in blowup_targets(k):
            assert target.section_count == 3 * k - 1


def test_targets_require_k_at_least_2():
    with pytest.raises(ValueError, match="targets defined for k >= 2 only"):
        blowup_targets(1)


# -- the provenance table ---------------------------------------------------------------


def test_table_records_and_reports_discrepancies():
    table = SegreTable()
    inv = SurfaceInvariants(2, 0, 0, 0)
    value = segre_number(inv, 2, U8, table=table)
    assert value == -8
    assert table.get(inv, 2, "engine") == -8
    assert table.discrepancies() == []
    table.record(inv, 2, F(-8), "lehn")
    assert table.discrepancies() == []
    table.record(inv, 2, F(5), "closed")
    assert len(table.discrepancies()) == 1
    with pytest.raises(ValueError, match="unknown route"):
        table.record(inv, 2, F(1), "guess")
