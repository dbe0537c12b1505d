import pytest

from dethodge.matrixspace import (
    MatrixSpace,
    Stratum,
    codim_stratum,
    dim_stratum,
    local_cohomology_degree,
)


def test_space_validation():
    with pytest.raises(ValueError):
        MatrixSpace(2, 3)
    with pytest.raises(ValueError):
        MatrixSpace(1, 0)
    assert MatrixSpace(3, 2).dim == 6
    assert MatrixSpace(2, 2).is_square


def test_stratum_validation():
    space = MatrixSpace(3, 2)
    with pytest.raises(ValueError):
        Stratum(space, 3)
    with pytest.raises(ValueError):
        Stratum(space, -1)


def test_dim_stratum_examples():
    assert dim_stratum(Stratum(MatrixSpace(3, 3), 3)) == 9
    assert dim_stratum(Stratum(MatrixSpace(3, 2), 1)) == 4
    assert dim_stratum(Stratum(MatrixSpace(5, 4), 0)) == 0


def test_codim_stratum_examples():
    assert codim_stratum(Stratum(MatrixSpace(3, 3), 2)) == 1
    assert codim_stratum(Stratum(MatrixSpace(4, 2), 0)) == 8


def test_dim_plus_codim_exhausts_space():
    for m in range(1, 7):
        for n in range(1, m + 1):
            space = MatrixSpace(m, n)
            for s in space.strata():
                assert dim_stratum(s) + codim_stratum(s) == m * n


def test_local_cohomology_degree_examples():
    space = MatrixSpace(3, 2)
    assert local_cohomology_degree(Stratum(space, 1)) == 2
    assert local_cohomology_degree(Stratum(space, 0)) == 3
    with pytest.raises(ValueError):
        local_cohomology_degree(Stratum(MatrixSpace(2, 2), 0))
    with pytest.raises(ValueError):
        local_cohomology_degree(Stratum(space, 2))


def test_local_cohomology_degrees_strictly_decreasing():
    for n in range(1, 6):
        for m in range(n + 1, n + 5):
            space = MatrixSpace(m, n)
            degrees = [local_cohomology_degree(Stratum(space, p)) for p in range(n)]
            assert all(a > b for a, b in zip(degrees, degrees[1:]))
            assert len(set(degrees)) == len(degrees)


def test_stratum_json_round_trip():
    s = Stratum(MatrixSpace(3, 2), 1)
    assert Stratum.from_json_obj(s.to_json_obj()) == s
    assert s.to_json_obj() == {"m": 3, "n": 2, "p": 1}
