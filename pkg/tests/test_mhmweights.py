from math import comb

import pytest

from dethodge.matrixspace import MatrixSpace, Stratum, codim_stratum, dim_stratum
from dethodge.mhmweights import (
    HodgeModuleTag,
    filtration_support_check,
    generation_level_Sdet,
    local_cohomology_weight,
    local_weight_ledger_check,
    square_start_levels_consistency,
    square_weight_layer,
    start_level,
    weight_of,
)


def test_weight_of_examples():
    assert weight_of(HodgeModuleTag(MatrixSpace(4, 4), 4, 0)) == 16
    assert weight_of(HodgeModuleTag(MatrixSpace(3, 3), 2, -1)) == 10
    assert weight_of(HodgeModuleTag(MatrixSpace(2, 2), 1, -1)) == 5
    assert HodgeModuleTag(MatrixSpace(2, 2), 1, -1).weight == 5


def test_weight_parity():
    for m in range(1, 6):
        for n in range(1, m + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                for k in range(-3, 4):
                    w = weight_of(HodgeModuleTag(space, p, k))
                    assert (w - dim_stratum(Stratum(space, p))) % 2 == 0


def test_square_weight_layer_values():
    space = MatrixSpace(2, 2)
    assert [square_weight_layer(space, p) for p in (2, 1, 0)] == [
        (4, 0),
        (5, -1),
        (6, -3),
    ]
    for n in range(1, 9):
        w_n, k_n = square_weight_layer(MatrixSpace(n, n), n)
        assert (w_n, k_n) == (n * n, 0)
    with pytest.raises(ValueError):
        square_weight_layer(MatrixSpace(3, 2), 1)


def test_square_weight_layer_consistency():
    for n in range(1, 9):
        space = MatrixSpace(n, n)
        for p in range(n + 1):
            w, k = square_weight_layer(space, p)
            assert w == n * n + n - p
            assert k == -comb(n - p + 1, 2)
            assert w == dim_stratum(Stratum(space, p)) - 2 * k


def test_start_level():
    space = MatrixSpace(3, 3)
    for p in range(4):
        _, k_p = square_weight_layer(space, p)
        assert start_level(space, p, k_p) == comb(3 - p, 2)
        assert start_level(space, p, 0) == codim_stratum(Stratum(space, p))
    assert start_level(space, 3, 0) == 0


def test_square_ledger_report():
    for n in range(1, 9):
        report = square_start_levels_consistency(MatrixSpace(n, n))
        assert report.ok, report.failures
    ws = [square_weight_layer(MatrixSpace(1, 1), p)[0] for p in (0, 1)]
    assert ws == [2, 1]


def test_local_cohomology_weight_values():
    space = MatrixSpace(3, 2)
    assert local_cohomology_weight(space, 1) == (8, -2)
    assert local_cohomology_weight(space, 0) == (10, -5)
    assert local_cohomology_weight(space, 2) == (6, 0)
    with pytest.raises(ValueError):
        local_cohomology_weight(MatrixSpace(2, 2), 0)


def test_local_weight_ledger():
    report = local_weight_ledger_check(8)
    assert report.ok, report.failures
    assert report.checks > 0


def test_generation_level():
    assert generation_level_Sdet(MatrixSpace(2, 2)) == 1
    assert generation_level_Sdet(MatrixSpace(1, 1)) == 0
    assert generation_level_Sdet(MatrixSpace(5, 5)) == 10


def test_start_level_matches_weight():
    # mn + c_p - 2*(c_p + k) and d_p - 2k are the same number
    for n in range(1, 7):
        for m in range(n, 7):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                for k in range(-4, 5):
                    tag = HodgeModuleTag(space, p, k)
                    lhs = m * n + codim_stratum(Stratum(space, p)) - 2 * start_level(
                        space, p, k
                    )
                    assert lhs == weight_of(tag)


def test_filtration_support_small():
    for n in range(1, 5):
        report = filtration_support_check(MatrixSpace(n, n), 2 * n * n, 3 * n)
        assert report.ok, report.failures[:5]
    with pytest.raises(ValueError):
        filtration_support_check(MatrixSpace(3, 2), 4, 9)
    with pytest.raises(ValueError):
        filtration_support_check(MatrixSpace(3, 3), 4, 2)
