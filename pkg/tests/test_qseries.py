from itertools import combinations
from math import comb

import pytest

from dethodge.matrixspace import MatrixSpace, Stratum, dim_stratum
from dethodge.qseries import (
    DecompositionTable,
    LaurentPoly,
    closed_form_OYp,
    grassmannian_poincare,
    pushforward_structure_checks,
    pushforward_DpY,
    pushforward_prefactor,
    q_binomial,
    solve_pushforward_OYp,
    stalk_poly,
    substitute_q2,
    verify_qbinomial_identity,
)


def qbin_by_subsets(a, b):
    """Independent oracle: the Gaussian binomial counts b-subsets of
    {0..a-1} by their sum above the minimum."""
    coeffs = {}
    for subset in combinations(range(a), b):
        e = sum(subset) - comb(b, 2)
        coeffs[e] = coeffs.get(e, 0) + 1
    return LaurentPoly(coeffs)


def test_laurent_arithmetic():
    f = LaurentPoly({-1: 1, 2: 3})
    g = LaurentPoly({0: 1, 1: -1})
    assert f + g == LaurentPoly({-1: 1, 0: 1, 1: -1, 2: 3})
    assert f - f == LaurentPoly.zero()
    assert f * LaurentPoly.zero() == LaurentPoly.zero()
    assert (f * g).coefficient(3) == -3
    assert f.shift(2) == LaurentPoly({1: 1, 4: 3})
    assert f.stretch(2) == LaurentPoly({-2: 1, 4: 3})
    assert LaurentPoly({0: 1, 1: 1}) ** 2 == LaurentPoly({0: 1, 1: 2, 2: 1})
    assert f.at_one() == 4
    assert f.evaluate(1) == 4


def test_laurent_str_and_json():
    f = LaurentPoly({-2: 1, 0: 2, 2: 1})
    assert str(f) == "q^-2 + 2 + q^2"
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly({1: -1, 3: 5})) == "-q + 5*q^3"
    assert LaurentPoly.from_coeff_map(f.to_coeff_map()) == f
    assert f.to_coeff_map() == {"-2": 1, "0": 2, "2": 1}


def test_laurent_divexact():
    f = LaurentPoly({0: 1, 1: 2, 2: 1})
    g = LaurentPoly({0: 1, 1: 1})
    assert f.divexact(g) == g
    shifted = f.shift(-3)
    assert shifted.divexact(g) == g.shift(-3)
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1, 2: 1}).divexact(LaurentPoly({0: 1, 1: 1}))
    with pytest.raises(ZeroDivisionError):
        f.divexact(LaurentPoly.zero())


def test_q_binomial_examples():
    assert q_binomial(2, 1) == LaurentPoly({0: 1, 1: 1})
    assert q_binomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(2, 3) == LaurentPoly.zero()
    with pytest.raises(ValueError):
        q_binomial(2, -1)


def test_q_binomial_against_subset_oracle():
    for a in range(11):
        for b in range(a + 1):
            assert q_binomial(a, b) == qbin_by_subsets(a, b), (a, b)


def test_q_binomial_shape():
    for a in range(16):
        for b in range(a + 1):
            f = q_binomial(a, b)
            assert f.at_one() == comb(a, b)
            assert all(v > 0 for v in f.coefficients())
            assert f.is_palindromic()
            if f.at_one() > 1 or b in (0, a):
                assert f.min_exp == 0 and f.max_exp == b * (a - b)


def test_substitute_q2():
    assert substitute_q2(LaurentPoly({0: 1, 1: 1})) == LaurentPoly({0: 1, 2: 1})
    assert substitute_q2(LaurentPoly({-1: 1})) == LaurentPoly({-2: 1})
    assert substitute_q2(q_binomial(3, 1)) == LaurentPoly({0: 1, 2: 1, 4: 1})


def test_grassmannian_poincare():
    assert grassmannian_poincare(1, 2) == LaurentPoly({0: 1, 2: 1})
    expected = LaurentPoly({0: 1, 2: 1, 4: 2, 6: 1, 8: 1})
    assert grassmannian_poincare(2, 4) == expected
    assert grassmannian_poincare(2, 4).at_one() == 6
    assert grassmannian_poincare(0, 5) == LaurentPoly.one()
    assert grassmannian_poincare(3, 2) == LaurentPoly.zero()


def test_stalk_poly():
    space = MatrixSpace(2, 2)
    assert stalk_poly(1, 0, space) == LaurentPoly({-3: 1, -1: 1})
    for i in range(3):
        assert stalk_poly(i, i, space) == LaurentPoly.monomial(
            -dim_stratum(Stratum(space, i))
        )
    with pytest.raises(ValueError):
        stalk_poly(0, 1, space)


def test_stalk_poly_specializes_to_binomial():
    for m in range(1, 6):
        for n in range(1, min(m, 4) + 1):
            space = MatrixSpace(m, n)
            for i in range(n + 1):
                for k in range(i + 1):
                    assert stalk_poly(i, k, space).at_one() == comb(n - k, i - k)


def test_solver_blow_up_case():
    table = solve_pushforward_OYp(MatrixSpace(2, 1), 1)
    assert table.entries == {0: LaurentPoly.one(), 1: LaurentPoly.one()}


def test_solver_top_entry_is_always_one():
    for m in range(1, 6):
        for n in range(1, min(m, 3) + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                assert solve_pushforward_OYp(space, p).entries[p] == LaurentPoly.one()


def test_solver_matches_closed_form():
    for m in range(1, 6):
        for n in range(1, min(m, 3) + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                assert solve_pushforward_OYp(space, p) == closed_form_OYp(space, p)


def test_pushforward_examples():
    one = LaurentPoly.one()
    # adjacent rectangular case: two summands, both in degree zero
    for n in (1, 2, 3):
        table = pushforward_DpY(MatrixSpace(n + 1, n), n)
        expected = {n: one, n - 1: one}
        assert table.entries == expected
    assert pushforward_DpY(MatrixSpace(3, 2), 2).entries == {2: one, 1: one}


def test_pushforward_square_case_is_identity():
    for n in (1, 2, 3):
        space = MatrixSpace(n, n)
        for p in range(n + 1):
            assert pushforward_DpY(space, p).entries == {p: LaurentPoly.one()}


def test_pushforward_parity():
    # every entry is supported in exponents of one parity
    for m in range(1, 7):
        for n in range(1, min(m, 4) + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                for poly in pushforward_DpY(space, p).entries.values():
                    parities = {e % 2 for e, _ in poly.items()}
                    assert len(parities) == 1


def test_pushforward_prefactor_consistency():
    space = MatrixSpace(4, 2)
    for p in range(3):
        pre = pushforward_prefactor(space, p)
        base = solve_pushforward_OYp(space, p)
        rebuilt = DecompositionTable(
            space, p, {i: pre * f for i, f in base.entries.items()}
        )
        assert rebuilt == pushforward_DpY(space, p)


def test_qbinomial_identity_examples():
    assert verify_qbinomial_identity(1, 1, 1)
    assert verify_qbinomial_identity(0, 0, 0)
    for a in range(9):
        for b in range(9):
            for c in range(9):
                assert verify_qbinomial_identity(a, b, c), (a, b, c)


def test_pushforward_structure_reports():
    for p in range(3):
        report = pushforward_structure_checks(MatrixSpace(3, 2), p)
        assert report.ok, report.failures
    report = pushforward_structure_checks(MatrixSpace(4, 2), 2)
    assert report.ok
    table = pushforward_DpY(MatrixSpace(4, 2), 2)
    assert table.entries[0].max_exp == 0


def test_pushforward_top_degree_at_i_equals_p():
    # at i = p the top degree coincides with the middle-degree exponent
    for m in range(2, 6):
        for n in range(1, min(m, 3) + 1):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                table = pushforward_DpY(space, p)
                assert table.entries[p].max_exp == (n - p) * (m - n)


def test_decomposition_table_validation():
    space = MatrixSpace(3, 2)
    with pytest.raises(ValueError):
        DecompositionTable(space, 1, {2: LaurentPoly.one()})
    with pytest.raises(ValueError):
        DecompositionTable(space, 1, {0: LaurentPoly({0: -1})})
    table = DecompositionTable(space, 1, {0: LaurentPoly.zero(), 1: LaurentPoly.one()})
    assert 0 not in table.entries


def test_decomposition_table_json_round_trip():
    table = pushforward_DpY(MatrixSpace(4, 3), 2)
    assert DecompositionTable.from_json_obj(table.to_json_obj()) == table
