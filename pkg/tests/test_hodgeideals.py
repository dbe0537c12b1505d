from math import comb

import pytest

from dethodge.hodgeideals import (
    IdealWeightSet,
    hodge_ideal_exponents,
    in_Fk_Sdet,
    in_hodge_ideal,
    in_symbolic_power,
    parse_ideal_descriptor,
    translate,
    untranslate,
    verify_equivalence,
)
from dethodge.matrixspace import MatrixSpace
from dethodge.weights import WeightBox, leq


def partitions_in_box(n, bound):
    return [lam for lam in WeightBox(n, bound) if lam[-1] >= 0]


def test_in_symbolic_power_examples():
    assert in_symbolic_power((1, 1), 1, 2, MatrixSpace(2, 2))
    assert not in_symbolic_power((3, 1, 0), 2, 2, MatrixSpace(3, 3))
    assert in_symbolic_power((0, 0), 1, 0, MatrixSpace(2, 2))
    assert in_symbolic_power((0, 0), 1, -3, MatrixSpace(2, 2))
    with pytest.raises(ValueError):
        in_symbolic_power((1, -1), 1, 1, MatrixSpace(2, 2))


def test_symbolic_power_d1_is_the_minor_criterion():
    # vanishing once along the rank p-1 locus picks out lam_p >= 1
    space = MatrixSpace(3, 3)
    for lam in partitions_in_box(3, 4):
        for p in (1, 2, 3):
            assert in_symbolic_power(lam, p, 1, space) == (lam[p - 1] >= 1)


def test_hodge_ideal_exponents():
    assert hodge_ideal_exponents(2, MatrixSpace(3, 3)) == (1, 1)
    assert hodge_ideal_exponents(3, MatrixSpace(3, 3)) == (3, 2)
    assert hodge_ideal_exponents(0, MatrixSpace(4, 4)) == (-6, -3, -1)


def test_in_hodge_ideal_low_k_is_unit():
    for n in range(1, 6):
        space = MatrixSpace(n, n)
        for mu in partitions_in_box(n, 3):
            assert in_hodge_ideal(mu, 0, space)
            assert in_hodge_ideal(mu, 1, space)


def test_in_hodge_ideal_k2_is_subminor_ideal():
    for n in range(2, 6):
        space = MatrixSpace(n, n)
        for mu in partitions_in_box(n, 4):
            assert in_hodge_ideal(mu, 2, space) == in_symbolic_power(
                mu, n - 1, 1, space
            )


def test_in_hodge_ideal_examples():
    space = MatrixSpace(3, 3)
    assert in_hodge_ideal((2, 1, 1), 3, space)
    assert not in_hodge_ideal((3, 1, 0), 3, space)
    with pytest.raises(ValueError):
        in_hodge_ideal((1, 0, 0), -1, space)


def test_hodge_ideal_chain_and_interval():
    for n in (2, 3, 4):
        space = MatrixSpace(n, n)
        box = partitions_in_box(n, 10)
        for k in range(7):
            members = {mu for mu in box if in_hodge_ideal(mu, k, space)}
            nxt = {mu for mu in box if in_hodge_ideal(mu, k + 1, space)}
            assert nxt <= members
            for mu in members:
                for nu in box:
                    if leq(mu, nu):
                        assert nu in members


def test_hodge_ideal_inside_coarse_symbolic_bound():
    # comparison bound: I_k sits inside J_p^(q) for
    # q = min(n-p, (n-p+1)*(k-n+p))
    for n in (2, 3, 4):
        space = MatrixSpace(n, n)
        for k in range(7):
            for mu in partitions_in_box(n, 8):
                if not in_hodge_ideal(mu, k, space):
                    continue
                for p in range(1, n):
                    q = min(n - p, (n - p + 1) * (k - n + p))
                    assert in_symbolic_power(mu, p, q, space)


def test_in_Fk_Sdet_examples():
    space1 = MatrixSpace(1, 1)
    assert in_Fk_Sdet((-3,), 2, space1)
    assert not in_Fk_Sdet((-4,), 2, space1)
    space2 = MatrixSpace(2, 2)
    assert not in_Fk_Sdet((0, -4), 2, space2)
    for lam in partitions_in_box(2, 3):
        for k in range(4):
            assert in_Fk_Sdet(lam, k, space2)


def test_translate():
    assert translate((1, 1), 0) == (0, 0)
    assert translate((2, 1, 1), 3) == (-2, -3, -3)
    assert untranslate(translate((4, 2, 0), 5), 5) == (4, 2, 0)


def test_verify_equivalence_small():
    for n, bound in ((1, 12), (2, 10)):
        for k in range(4):
            report = verify_equivalence(MatrixSpace(n, n), k, bound)
            assert report.ok, report.failures[:3]
            assert report.checks > 0


def test_rank_one_filtration_levels():
    # both descriptions reduce to lam_1 >= -1-k when n = 1
    space = MatrixSpace(1, 1)
    for k in range(5):
        for x in range(-9, 4):
            assert in_Fk_Sdet((x,), k, space) == (x >= -1 - k)


def test_ideal_weight_set_and_descriptors():
    ideal = parse_ideal_descriptor("Ik(n=2,k=3)")
    assert ideal.kind == "HodgeIdeal" and ideal.param == 3
    assert ideal.contains((2, 0))
    assert not ideal.contains((1, 0))
    assert parse_ideal_descriptor(ideal.descriptor()) == ideal

    sym = parse_ideal_descriptor("Jpd(n=3,p=2,d=2)")
    assert sym.contains((2, 1, 1))
    assert not sym.contains((3, 1, 0))
    assert parse_ideal_descriptor(sym.descriptor()) == sym

    filt = parse_ideal_descriptor("FkSdet(n=2,k=1)")
    assert not filt.partitions_only
    assert filt.contains((0, -2))
    assert parse_ideal_descriptor(filt.descriptor()) == filt

    with pytest.raises(ValueError):
        parse_ideal_descriptor("Ik(n=2)")


def test_ideal_weight_set_members():
    ideal = IdealWeightSet(MatrixSpace(2, 2), "HodgeIdeal", param=2)
    members = ideal.members(2)
    assert (1, 0) in members and (2, 2) in members
    assert (0, 0) not in members
    assert all(mu[-1] >= 0 for mu in members)


def test_unit_ideal_thresholds_match_membership():
    # every exponent nonpositive exactly when everything is a member
    for n in range(1, 5):
        space = MatrixSpace(n, n)
        for k in range(5):
            exps = hodge_ideal_exponents(k, space)
            unit = all(e <= 0 for e in exps)
            everything = all(
                in_hodge_ideal(mu, k, space) for mu in partitions_in_box(n, 3)
            )
            assert unit == everything


def test_equivalence_inequality_family_direct():
    # freeze one concrete witness pair on each side of the boundary
    space = MatrixSpace(2, 2)
    lam = (0, -3)  # stratum p=1, tail sum -3, needs -comb(2,2)-k <= -3
    assert not in_Fk_Sdet(lam, 1, space)
    assert in_Fk_Sdet(lam, 2, space)
    assert all(sum(lam[s:]) >= -comb(2 - s + 1, 2) - 2 for s in range(2))
