import pytest

from fvectors.exact import binomial
from fvectors.families import (
    FamilySpec, CYCLIC, STACKED, CS_STACKED,
    g_cyclic, g_stacked, g_cs_stacked, g_of_family, f_of_family,
    stanley_cs_floor,
)
from fvectors.transforms import delta

from oracles import cyclic_fvector_gale, stacked_fvector_subdivision


def test_g_cyclic_examples():
    assert g_cyclic(7, 4).entries == (1, 2, 3)
    assert g_cyclic(7, 3).entries == (1, 3)
    for d in range(3, 10):
        assert g_cyclic(d + 1, d).entries == (1,) + (0,) * delta(d)


def test_g_stacked_examples():
    assert g_stacked(6, 4).entries == (1, 1, 0)
    assert g_stacked(20, 5).entries == (1, 14, 0)
    for d in range(3, 10):
        assert g_stacked(d + 1, d).entries == (1,) + (0,) * delta(d)


def test_g_cs_stacked_examples():
    assert g_cs_stacked(3, 3).entries == (1, 2)
    assert g_cs_stacked(4, 4).entries == (1, 3, 2)
    assert g_cs_stacked(5, 4).entries == (1, 5, 2)


def test_stanley_cs_floor_examples():
    assert stanley_cs_floor(4).entries == (1, 3, 2)
    assert stanley_cs_floor(3).entries == (1, 2)
    assert stanley_cs_floor(6).entries == (1, 5, 9, 5)


def test_cs_floor_equals_cross_polytope_g():
    for d in range(3, 13):
        assert stanley_cs_floor(d) == g_cs_stacked(d, d)


def test_parameter_floors_rejected():
    with pytest.raises(ValueError):
        g_cyclic(4, 4)
    with pytest.raises(ValueError):
        g_stacked(5, 5)
    with pytest.raises(ValueError):
        g_cs_stacked(3, 4)
    with pytest.raises(ValueError):
        FamilySpec("prism", 8, 4)


def test_cross_polytope_fvector():
    # CS(2d, d) is the cross-polytope: f_j = 2^(j+1) * C(d, j+1)
    for d in range(3, 13):
        f = f_of_family(FamilySpec(CS_STACKED, d, d))
        assert f.entries == tuple(
            2 ** (j + 1) * binomial(d, j + 1) for j in range(d)
        )


def test_octahedron():
    assert f_of_family(FamilySpec(CS_STACKED, 3, 3)).entries == (6, 12, 8)


def test_f_of_family_examples():
    assert f_of_family(FamilySpec(CYCLIC, 7, 4)).entries == (7, 21, 28, 14)
    assert f_of_family(FamilySpec(STACKED, 6, 4)).entries == (6, 14, 16, 8)
    # g = (1,5,2) so h = (1,6,8,6,1) and f = (10,32,44,22); checked against
    # the cross-polytope value (8,24,32,16) plus one doubled stacking step,
    # which adds 2*(1,4,6,3)
    assert f_of_family(FamilySpec(CS_STACKED, 5, 4)).entries == (10, 32, 44, 22)
    assert f_of_family(FamilySpec(CS_STACKED, 4, 4)).entries == (8, 24, 32, 16)


def test_vertex_counts():
    for d in range(3, 13):
        for n in range(d + 1, 31):
            assert f_of_family(FamilySpec(CYCLIC, n, d))[0] == n
            assert f_of_family(FamilySpec(STACKED, n, d))[0] == n
        for n in range(d, 31):
            assert f_of_family(FamilySpec(CS_STACKED, n, d))[0] == 2 * n


def test_strict_monotonicity_in_n():
    # underwrites the monotone bound search in the comparison engine
    for d in range(3, 13):
        for family, floor in ((CYCLIC, d + 1), (STACKED, d + 1), (CS_STACKED, d)):
            prev = f_of_family(FamilySpec(family, floor, d))
            for n in range(floor + 1, 51):
                cur = f_of_family(FamilySpec(family, n, d))
                assert all(a < b for a, b in zip(prev.entries, cur.entries))
                prev = cur


def test_cyclic_against_gale_evenness_oracle():
    for d in range(3, 7):
        for n in range(d + 1, 11):
            assert (
                f_of_family(FamilySpec(CYCLIC, n, d)).entries
                == cyclic_fvector_gale(n, d)
            )


def test_stacked_against_subdivision_oracle():
    for d in range(3, 9):
        for n in range(d + 1, 20):
            assert (
                f_of_family(FamilySpec(STACKED, n, d)).entries
                == stacked_fvector_subdivision(n, d)
            )


def test_stacked_facet_count_closed_form():
    for d in range(3, 12):
        for n in range(d + 1, 30):
            assert f_of_family(FamilySpec(STACKED, n, d))[d - 1] == (n - d) * (d - 1) + 2


def test_g_of_family_dispatch():
    assert g_of_family(FamilySpec(CYCLIC, 7, 4)) == g_cyclic(7, 4)
    assert g_of_family(FamilySpec(STACKED, 6, 4)) == g_stacked(6, 4)
    assert g_of_family(FamilySpec(CS_STACKED, 5, 4)) == g_cs_stacked(5, 4)
