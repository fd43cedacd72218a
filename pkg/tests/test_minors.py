from itertools import combinations

import pytest

from fvectors.exact import det
from fvectors.minors import (
    phi_minor, verify_lemma3, verify_total_nonnegativity, step1_ratio_equiv,
)
from fvectors.transforms import build_md, delta


def test_phi_minor_examples():
    assert phi_minor(10, 0, 1, 0, 1) == 55  # 11*10 - 55*1
    assert phi_minor(10, 2, 3, 2, 3) == 36  # 9*8 - 36*1


def test_phi_minor_rejects_bad_indices():
    with pytest.raises(ValueError):
        phi_minor(10, 1, 1, 0, 1)
    with pytest.raises(ValueError):
        phi_minor(10, 0, 1, 2, 2)
    with pytest.raises(ValueError):
        phi_minor(10, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        phi_minor(10, 0, 9, 0, 1)  # row beyond delta


def test_verify_lemma3_counts():
    report = verify_lemma3(10)
    assert report.minors_checked == 15 * 45 == 675
    assert report.all_nonnegative

    report = verify_lemma3(3)
    assert report.minors_checked == 3
    assert report.all_nonnegative


def test_verify_lemma3_range():
    for d in range(3, 31):
        report = verify_lemma3(d)
        assert report.all_nonnegative, (d, report.min_witness)
        assert report.min_value >= 0


def test_total_nonnegativity_d3_by_hand():
    # all minors of [[4,6,4],[1,3,2]]: six entries plus the three 2x2
    # determinants 6, 4, 0
    report = verify_total_nonnegativity(3)
    assert report.minors_checked == 6 + 3
    assert report.all_nonnegative
    assert report.min_value == 0
    md = build_md(3)
    dets = [det([[md[0][c1], md[0][c2]], [md[1][c1], md[1][c2]]])
            for c1, c2 in combinations(range(3), 2)]
    assert sorted(dets) == [0, 4, 6]


def test_total_nonnegativity_small_range():
    for d in range(3, 10):
        report = verify_total_nonnegativity(d)
        assert report.all_nonnegative
        assert not report.beyond_verified_range


def test_order2_matches_lemma3():
    for d in (4, 7, 10, 13):
        full = verify_lemma3(d)
        dl = delta(d)
        md = build_md(d)
        order2 = verify_total_nonnegativity(d, 2)
        # same 2x2 minimum (order-2 scan also includes 1x1 minors)
        min_2x2 = min(
            phi_minor(d, a, b, r, s)
            for a, b in combinations(range(dl + 1), 2)
            for r, s in combinations(range(d), 2)
        )
        assert full.min_value == min_2x2
        entries_min = min(min(row) for row in md)
        assert order2.min_value == min(min_2x2, entries_min)


def test_minor_count_formula():
    from fvectors.exact import binomial

    for d in (5, 9, 13):
        dl = delta(d)
        report = verify_total_nonnegativity(d)
        assert report.minors_checked == sum(
            binomial(dl + 1, k) * binomial(d, k) for k in range(1, dl + 2)
        )


def test_max_order_truncation():
    r1 = verify_total_nonnegativity(11, 1)
    assert r1.order == 1
    md = build_md(11)
    assert r1.minors_checked == len(md) * len(md[0])
    assert r1.min_value == min(min(row) for row in md)


def test_beyond_range_flagged():
    report = verify_total_nonnegativity(14, 2)
    assert report.beyond_verified_range
    assert report.all_nonnegative


def test_step1_ratio_equiv():
    for d in range(3, 14):
        assert step1_ratio_equiv(d)


def test_step1_composition_witness():
    # nonnegativity of the (0,2) minor follows from the two consecutive
    # minors via cross-multiplication transitivity; check the arithmetic
    d, r, s = 10, 0, 1
    md = build_md(d)
    assert phi_minor(d, 0, 1, r, s) >= 0
    assert phi_minor(d, 1, 2, r, s) >= 0
    # compose: m[0][r]*m[1][s] >= m[0][s]*m[1][r] and
    #          m[1][r]*m[2][s] >= m[1][s]*m[2][r]
    lhs = md[0][r] * md[1][s] * md[1][r] * md[2][s]
    rhs = md[0][s] * md[1][r] * md[1][s] * md[2][r]
    assert lhs >= rhs
    assert phi_minor(d, 0, 2, r, s) >= 0
