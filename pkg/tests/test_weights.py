import pytest

from dethodge.matrixspace import MatrixSpace
from dethodge.repsets import in_Wp
from dethodge.weights import (
    WeightBox,
    delta_p,
    dominant_tuples,
    dual,
    is_dominant,
    lambda_of_p,
    leq,
    pad,
    partitions_of,
    strip_zeros,
    weights_equal,
)


def test_is_dominant_examples():
    assert is_dominant((3, 1, 0))
    assert not is_dominant((0, 1))
    assert is_dominant((-2, -2, -4))


def test_is_dominant_rejects_empty():
    with pytest.raises(ValueError):
        is_dominant(())


def test_dual_examples():
    assert dual((2, 0)) == (0, -2)
    assert dual((1, 1)) == (-1, -1)


def test_dual_involution_and_order_reversal():
    for bound in range(4):
        for n in (1, 2, 3):
            box = list(WeightBox(n, bound))
            for lam in box:
                assert dual(dual(lam)) == lam
                assert is_dominant(dual(lam))
            for mu in box:
                for lam in box:
                    assert leq(mu, lam) == leq(dual(lam), dual(mu))


def test_leq_examples():
    assert leq((0, -2), (1, -1))
    assert not leq((0, -2), (1, -3))
    with pytest.raises(ValueError):
        leq((1,), (1, 2))


def test_leq_reflexive():
    for lam in WeightBox(2, 2):
        assert leq(lam, lam)


def test_delta_p_examples():
    assert delta_p(1, MatrixSpace(3, 3)) == (-2, -2, -2)
    assert delta_p(1, MatrixSpace(3, 2)) == (-1, -2)
    assert delta_p(2, MatrixSpace(2, 2)) == (0, 0)
    assert delta_p(4, MatrixSpace(4, 4)) == (0, 0, 0, 0)


def test_delta_p_lies_in_its_stratum_set():
    for m in range(1, 6):
        for n in range(1, m + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                assert in_Wp(delta_p(p, space), p, space)


def test_lambda_of_p_examples():
    assert lambda_of_p((5, -2), 1, MatrixSpace(3, 2)) == (5, -1, -1)
    assert lambda_of_p((-3, -4), 0, MatrixSpace(3, 2)) == (-2, -2, -3)


def test_lambda_of_p_identity_on_square_spaces():
    space = MatrixSpace(3, 3)
    for lam in WeightBox(3, 3):
        p = next(p for p in range(4) if in_Wp(lam, p, space))
        assert lambda_of_p(lam, p, space) == lam


def test_lambda_of_p_requires_stratum_membership():
    with pytest.raises(ValueError):
        lambda_of_p((0, 0), 1, MatrixSpace(3, 2))


def test_lambda_of_p_output_dominant():
    for m in range(1, 6):
        for n in range(1, min(m, 4) + 1):
            space = MatrixSpace(m, n)
            for lam in WeightBox(n, 4):
                for p in range(n + 1):
                    if in_Wp(lam, p, space):
                        out = lambda_of_p(lam, p, space)
                        assert len(out) == m
                        assert is_dominant(out)


def test_enumerate_box_small():
    assert list(WeightBox(1, 1)) == [(-1,), (0,), (1,)]
    assert list(WeightBox(2, 1)) == [
        (-1, -1),
        (0, -1),
        (0, 0),
        (1, -1),
        (1, 0),
        (1, 1),
    ]


def test_enumerate_box_counts_and_order():
    for n in range(1, 5):
        for bound in range(6):
            box = WeightBox(n, bound)
            members = list(box)
            assert len(members) == box.count
            assert members == sorted(set(members))
            assert all(is_dominant(w) for w in members)
    assert WeightBox(3, 2).count == 35


def test_pad_and_strip():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    assert strip_zeros((2, 1, 0, 0)) == (2, 1)
    assert strip_zeros((0, 0)) == ()
    assert weights_equal((2, 1), (2, 1, 0))
    with pytest.raises(ValueError):
        pad((1, -1), 3)


def test_partitions_of():
    assert list(partitions_of(2, 2)) == [(2, 0), (1, 1)]
    assert list(partitions_of(4, 2)) == [(4, 0), (3, 1), (2, 2)]
    assert len(list(partitions_of(6, 3))) == 7
    assert list(partitions_of(0, 0)) == [()]
    assert list(partitions_of(3, 0)) == []


def test_dominant_tuples_degenerate():
    assert list(dominant_tuples(0, -3, 1)) == [()]
    assert list(dominant_tuples(2, 1, 0)) == []
