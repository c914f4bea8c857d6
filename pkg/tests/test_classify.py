import itertools

import pytest

from cqforms.classify import classify, table1_lookup
from cqforms.repkit import InvalidInputError, irrep_catalog


def test_generic_non_pv_example():
    r = classify(3, 2, (2,))
    assert r.generic and not r.degenerate and not r.exceptional
    assert not r.prehomogeneous and r.pv_entry is None


def test_exceptional_pv_example():
    r = classify(9, 0, (1, 0))
    assert r.exceptional and r.prehomogeneous
    assert r.pv_entry == "(GL₁(ℝ)×SO(16), Λ₁)"


def test_large_rank_never_pv():
    r = classify(12, 0, (1,))
    assert r.generic and not r.prehomogeneous


def test_degenerate_cases():
    r = classify(2, 2, (1,))
    assert r.degenerate and not r.prehomogeneous and not r.square_of_quadratic
    r = classify(1, 1, (2, 1, 0, 0))
    assert r.degenerate


def test_square_flags():
    assert classify(3, 2, (1,)).square_of_quadratic
    assert not classify(3, 2, (2,)).square_of_quadratic
    assert classify(1, 0, (5, 2)).square_of_quadratic  # every rank-one module
    assert classify(9, 0, (1, 0)).square_of_quadratic
    assert not classify(9, 0, (1, 1)).square_of_quadratic


def test_table1_examples():
    assert table1_lookup(7, 1, (1, 0)) == "(GL₁(ℂ)×SO(8,ℂ), Λ₁)"
    assert table1_lookup(6, 5, (1, 0)) == "(GL₁(ℝ)×Spin(6,6), Λ_♯)"
    assert table1_lookup(12, 0, (1,)) is None


def test_table1_side_conditions():
    # (5, 1): quaternionic row needs total multiplicity >= 2 on one half
    assert table1_lookup(5, 1, (1, 0, 0, 0)) is None  # degenerate
    assert "Sp(2,0)" in table1_lookup(5, 1, (2, 0, 0, 0))
    assert "SL(2,ℍ)" in table1_lookup(5, 1, (1, 0, 1, 0))
    assert table1_lookup(5, 1, (2, 0, 1, 0)) is None  # mixed with m > 16
    # (3, 3) split row
    assert "Sp(2,ℝ)" in table1_lookup(3, 3, (2, 0))
    assert "SL(4,ℝ)" in table1_lookup(3, 3, (1, 1))
    assert table1_lookup(3, 3, (2, 1)) is None


def test_invalid_mults():
    with pytest.raises(InvalidInputError):
        classify(3, 2, (0,))
    with pytest.raises(InvalidInputError):
        classify(2, 3, (1,))


def test_verdicts_mutually_exclusive_and_pv_iff_table():
    for n in range(1, 13):
        for q in range(0, n // 2 + 1):
            p = n - q
            cat = irrep_catalog(p, q)
            for mults in itertools.product(range(3), repeat=cat.count):
                if not 1 <= sum(mults) <= 2:
                    continue
                r = classify(p, q, mults)
                assert [r.degenerate, r.exceptional, r.generic].count(True) == 1
                assert r.prehomogeneous == (table1_lookup(p, q, mults) is not None)
                if r.degenerate:
                    assert not r.prehomogeneous


def test_pq_at_most_4_always_pv():
    for n in range(1, 5):
        for q in range(0, n // 2 + 1):
            p = n - q
            cat = irrep_catalog(p, q)
            for mults in itertools.product(range(3), repeat=cat.count):
                if not 1 <= sum(mults) <= 2:
                    continue
                r = classify(p, q, mults)
                if not r.degenerate:
                    assert r.prehomogeneous, (p, q, mults)


def test_explain_notes():
    r = classify(9, 0, (1, 0), explain=True)
    assert r.explain is not None and "prehomogeneous" in r.explain
