import math
from fractions import Fraction

import pytest

from farey_brocot.core import CapacityError, DomainError, InvalidInputError
from farey_brocot.analysis import (
    asymptotic_sweep,
    classical_L,
    classical_L_direct,
    classical_moment,
    classical_moment_sweep,
    cumulative_moment_check,
    dirichlet_L,
    dirichlet_L_auto,
    exact_unit_sum,
    extreme_areas,
    main_term,
    moment,
    moment_sweep,
    summability_bound,
    zeta,
)

ZETA3 = 1.2020569031595942  # Apery's constant, reference value


def test_zeta_closed_forms():
    z2 = zeta(2.0)
    assert abs(z2.value - math.pi**2 / 6) <= z2.tail_bound + 1e-15
    z4 = zeta(4.0)
    assert abs(z4.value - math.pi**4 / 90) <= z4.tail_bound + 1e-15
    assert z4.tail_bound <= 1e-12


def test_zeta_bracket_contains_truth():
    z3 = zeta(3.0)
    assert z3.tail_bound <= 1e-12
    assert z3.value <= ZETA3 <= z3.value + z3.tail_bound + 1e-15


def test_zeta_domain():
    with pytest.raises(DomainError):
        zeta(1.0)
    with pytest.raises(DomainError):
        zeta(0.5)


@pytest.mark.parametrize("algo,n", [("a", 0), ("a", 3), ("b", 7), ("b", 12)])
def test_moment_order_one_is_one(algo, n):
    m = moment(algo, n, 1)
    assert m.exact and m.value == 1


def test_moment_examples_exact():
    assert moment("a", 1, 2).value == Fraction(5, 48)
    assert moment("b", 2, 2).value == Fraction(1, 8)


def test_moment_float_agrees_with_exact():
    for algo, n in (("a", 3), ("b", 6)):
        ex = moment(algo, n, 2, exact=True)
        fl = moment(algo, n, 2, exact=False)
        assert not fl.exact
        assert fl.value == pytest.approx(float(ex.value), rel=1e-12)


def test_moment_sweep_matches_single():
    sweep = moment_sweep("a", 4, 2)
    assert sweep[4] == moment("a", 4, 2, exact=False).value
    assert sweep[0] == pytest.approx(0.5, rel=1e-12)  # two cells of area 1/2


def test_moment_sweep_jobs_bitwise_identical():
    assert moment_sweep("b", 9, 2, jobs=1) == moment_sweep("b", 9, 2, jobs=2)
    assert moment_sweep("a", 5, 1.5, jobs=1) == moment_sweep("a", 5, 1.5, jobs=3)


def test_moment_guards():
    with pytest.raises(DomainError):
        moment("a", 2, 0.5)
    with pytest.raises(CapacityError):
        moment("a", 99, 2)
    with pytest.raises(CapacityError):
        moment("a", 8, 2, exact=True)  # 2*6^8 cells exceed the exact budget
    with pytest.raises(DomainError):
        moment("a", 2, 1.5, exact=True)


def test_classical_moment_examples():
    assert classical_moment(1, 2).value == Fraction(1, 2)
    assert classical_moment(2, 2).value == Fraction(5, 18)
    for n in range(9):
        assert classical_moment(n, 1).value == 1


def test_classical_sweep_consistent():
    sweep = classical_moment_sweep(10, 2)
    assert sweep[2] == pytest.approx(5 / 18, rel=1e-12)
    ex = classical_moment(10, 2, exact=True)
    assert sweep[10] == pytest.approx(float(ex.value), rel=1e-12)


def test_exact_unit_sum_all_lanes():
    assert exact_unit_sum("a", 5) == 1
    assert exact_unit_sum("b", 10) == 1
    assert exact_unit_sum("classical", 10) == 1


def test_dirichlet_heads():
    sv = dirichlet_L("a", 6, 1)
    assert sv.value == 10.0
    sv = dirichlet_L("a", 6, 2)
    assert sv.value == pytest.approx(10 + 28 / 2**6, rel=1e-15)


def test_dirichlet_tail_shrinks():
    tails = [dirichlet_L("a", 6, q).tail_bound for q in (4, 8, 16, 32)]
    assert tails == sorted(tails, reverse=True)
    sv, qmax = dirichlet_L_auto("a", 6)
    assert sv.tail_bound < 0.01 * sv.value
    assert qmax >= 8


def test_dirichlet_domain():
    with pytest.raises(DomainError):
        dirichlet_L("a", 3, 10)
    with pytest.raises(DomainError):
        dirichlet_L("b", 2.5, 10)


def test_classical_L_closed_form_and_oracle():
    sv = classical_L(4)
    z3 = zeta(3.0)
    z4 = zeta(4.0)
    expected = 2 * z3.value / z4.value
    assert sv.value == pytest.approx(expected, rel=1e-9)
    direct = classical_L_direct(4, 10**4)
    lo, hi = sv.value, sv.value + sv.tail_bound
    dlo, dhi = direct.value, direct.value + direct.tail_bound
    assert dlo <= hi and lo <= dhi  # brackets overlap


def test_classical_L_domain():
    with pytest.raises(DomainError):
        classical_L(2)


def test_asymptotic_rows_smoke():
    rows = asymptotic_sweep("classical", 2, 5, 8)
    assert [r.n for r in rows] == [5, 6, 7, 8]
    assert all(r.ratio > 0 for r in rows)
    assert rows[0].main_term == pytest.approx(
        main_term("classical", 5, 2, rows[0].L_value), rel=1e-15
    )
    with pytest.raises(DomainError):
        asymptotic_sweep("a", 1, 3, 4)


def test_cumulative_bounds_hold():
    partial, bound = cumulative_moment_check("a", 2, 5)
    assert 0 < partial <= bound
    partial, bound = cumulative_moment_check("b", 2, 8)
    assert 0 < partial <= bound
    partial, bound = cumulative_moment_check("a", 1.5, 6)
    assert 0 < partial <= bound


def test_summability_constants():
    z4 = math.pi**4 / 90
    assert summability_bound("a", 2) == pytest.approx(16 / 3 * z4 * z4, rel=1e-9)
    assert summability_bound("b", 2) == pytest.approx(32 / 3 * 4 * z4 * z4, rel=1e-9)


def test_extreme_area_law():
    for n in range(1, 5):
        smallest, largest = extreme_areas("a", n)
        assert largest == Fraction(1, 2 * (n + 1) ** 2)
        assert smallest <= largest


def test_dirichlet_head_monotone_in_qmax():
    heads = [dirichlet_L("b", 6, q).value for q in (1, 2, 4, 8, 16, 32)]
    assert heads == sorted(heads)
    uppers = [dirichlet_L("b", 6, q) for q in (1, 2, 4, 8, 16, 32)]
    best = uppers[-1]
    for sv in uppers:
        assert sv.value <= best.value + best.tail_bound <= sv.value + sv.tail_bound + 1e-12


def test_zeta_term_cap_guard():
    with pytest.raises(CapacityError):
        zeta(1.05, 1e-12)
    loose = zeta(1.5, 1e-6)  # affordable with a loose tolerance
    assert loose.tail_bound <= 1e-6


def test_moment_values_in_unit_interval():
    for algo in ("a", "b"):
        for n in range(4):
            for beta in (1, 2, 3):
                val = moment(algo, n, beta).value
                assert 0 < val <= 1
                assert (val == 1) == (beta == 1)
    for n in range(1, 6):
        for beta in (1, 2):
            val = classical_moment(n, beta).value
            assert 0 < val <= 1
            assert (val == 1) == (beta == 1)
