from fractions import Fraction

import pytest

from narayana_lab.lambdaring import hall_littlewood_principal
from narayana_lab.partitions import Partition, enumerate_partitions
from narayana_lab.poly import PolyQQ
from narayana_lab.rationals import gen_binomial
from narayana_lab.sequences import (
    CLOSED_FORM_VARIANTS,
    catalan,
    catalan_hsequence,
    jacobi11,
    large_narayana,
    master_formula,
    narayana,
    narayana_closed,
    narayana_hsequence,
    narayana_power_sum,
    narayana_schur,
    schroeder,
    type_b_w,
)
from narayana_lab.series import TruncSeries

Q = PolyQQ.var_q()
ONE = PolyQQ.one()

GOLDEN_FIRST_FIVE = {
    1: [1],
    2: [1, 1],
    3: [1, 3, 1],
    4: [1, 6, 6, 1],
    5: [1, 10, 20, 10, 1],
}


def test_golden_first_five():
    assert narayana(0) == ONE
    for n, coeffs in GOLDEN_FIRST_FIVE.items():
        assert narayana(n) == PolyQQ.from_q_coefficients(coeffs), n


def second_recurrence(n: int) -> PolyQQ:
    # independent route, valid from n = 3
    acc = (Q + 1) * narayana(n - 1)
    for i in range(1, n - 1):
        acc = acc + Q * narayana(i) * narayana(n - i - 1)
    return acc


def test_both_recurrences_agree():
    for n in range(3, 31):
        assert narayana(n) == second_recurrence(n), n


def test_palindromic_coefficients():
    for n in range(1, 31):
        coeffs = narayana(n).q_coefficients()
        assert coeffs == coeffs[::-1], n
        assert coeffs[0] == 1 and coeffs[-1] == 1, n
        assert len(coeffs) == max(n, 1), n


def test_generating_function_quadratic():
    order = 20
    c = TruncSeries([narayana(k) for k in range(order + 1)], order=order)
    c2 = c * c
    zero = PolyQQ.zero()
    lhs = TruncSeries([zero] + [x * Q for x in c2.coefficients()], order=order)
    lhs = lhs + TruncSeries([zero] + [x * (ONE - Q) for x in c.coefficients()], order=order)
    lhs = lhs - c
    residual = TruncSeries([lhs.coefficient(0) + ONE] + list(lhs.coefficients()[1:]), order=order)
    assert residual.is_zero()


def test_catalan_and_schroeder_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [schroeder("small", n) for n in range(6)] == [1, 1, 3, 11, 45, 197]
    assert [schroeder("large", n) for n in range(6)] == [1, 2, 6, 22, 90, 394]
    with pytest.raises(ValueError):
        schroeder("medium", 3)


def test_large_narayana():
    assert large_narayana(0) == ONE
    for n in range(1, 8):
        assert large_narayana(n) == Q * narayana(n)


def test_closed_form_examples():
    assert narayana_closed(2, "eqde") == Q**2 + Q
    assert narayana_closed(1, "eqci") == ONE
    assert narayana_closed(4, "binomial-N") == PolyQQ.from_q_coefficients([1, 6, 6, 1])


def test_closed_forms_agree_with_recurrence():
    for variant in CLOSED_FORM_VARIANTS:
        for n in range(1, 13):
            got = narayana_closed(n, variant)
            want = large_narayana(n) if variant == "eqde" else narayana(n)
            assert got == want, (variant, n)
    with pytest.raises(ValueError):
        narayana_closed(3, "nope")
    with pytest.raises(ValueError):
        narayana_closed(0, "eqde")


def test_master_formula_examples():
    assert master_formula(1, -1, 2) == Q + 1
    assert master_formula(-1, -1, 5) == PolyQQ.from_q_coefficients([1, 10, 20, 10, 1])
    assert master_formula(1, 1, 1) == ONE
    with pytest.raises(ValueError):
        master_formula(2, 1, 3)


def test_master_formula_all_sign_pairs():
    for eta in (1, -1):
        for zeta in (1, -1):
            for r in range(1, 13):
                assert master_formula(eta, zeta, r) == narayana(r), (eta, zeta, r)


GOLDEN_POWER_SUMS = {
    1: [1],
    2: [1, 2],
    3: [1, 6, 3],
    4: [1, 12, 18, 4],
    5: [1, 20, 60, 40, 5],
}


def test_power_sum_goldens():
    for r, coeffs in GOLDEN_POWER_SUMS.items():
        assert narayana_power_sum(r) == PolyQQ.from_q_coefficients(coeffs), r


def test_power_sum_newton_and_refinement():
    seq = narayana_hsequence()
    for r in range(1, 13):
        assert narayana_power_sum(r) == seq.p(r), r
    for r in range(1, 26):
        total = sum(gen_binomial(r - 1, k) * gen_binomial(r, k) for k in range(r))
        assert total == gen_binomial(2 * r - 1, r - 1), r
    assert narayana_power_sum(3).eval(at_q=1) == 10


def test_catalan_alphabet_power_sums():
    seq = catalan_hsequence()
    for r in range(1, 13):
        assert seq.p(r) == gen_binomial(2 * r - 1, r - 1), r


def test_narayana_schur_rectangles():
    for k in range(1, 7):
        want = (-Q) ** (k * (k - 1) // 2)
        assert narayana_schur(Partition((k,) * k)) == want, k
        km1 = Partition(tuple(x for x in (k - 1,) * k if x > 0))
        assert narayana_schur(km1) == want, k


def test_narayana_schur_caps():
    with pytest.raises(ValueError):
        narayana_schur(Partition((1,) * 15))
    with pytest.raises(ValueError):
        narayana_schur(Partition((20, 1)))


def test_schur_sign_pattern_observation():
    # every small Schur value is plus-or-minus a polynomial with nonnegative
    # integer coefficients; recorded as data, not a theorem
    for w in range(1, 9):
        for mu in enumerate_partitions(w):
            coeffs = narayana_schur(mu).q_coefficients() or [0]
            nonneg = all(c >= 0 for c in coeffs)
            nonpos = all(c <= 0 for c in coeffs)
            assert nonneg or nonpos, mu


def test_hall_littlewood_connection():
    for n in range(1, 21):
        lhs = narayana(n).subst_q(ONE - Q) * (n + 1)
        assert lhs == hall_littlewood_principal(n, n + 1), n


def test_jacobi11():
    assert jacobi11(0) == ONE
    assert jacobi11(1) == 2 * Q
    assert jacobi11(2) == Q**2 * Fraction(15, 4) - Fraction(3, 4)


def test_type_b_w():
    assert type_b_w(2) == Q**2 + 4 * Q + 1
    assert type_b_w(0) == ONE
    assert type_b_w(3).eval(at_q=1) == 20
    for r in range(9):
        assert type_b_w(r).eval(at_q=1) == gen_binomial(2 * r, r), r
