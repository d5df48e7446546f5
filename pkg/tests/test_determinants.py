"""Exact determinant identities and lcm-scaled integrality inequalities.

Every identity is verified against an independent route: cofactor
expansion for small determinants, naive rational elimination against the
fraction-free path, direct beta-integral factorials for matrix entries,
and seeded random instances for the polynomial determinant lemma.
"""

import math
import random
from fractions import Fraction

import pytest

from primebound import determinants as det
from primebound.exact import factorial, pochhammer


def _cofactor_det(rows):
    """Laplace expansion along the first row; exact for any field values."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _cofactor_det(minor)
    return total


# ----------------------------------------------------------------------
# spec validation
# ----------------------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError):
        det.HankelSpec(alpha=0, beta=1, n=1)
    with pytest.raises(ValueError):
        det.HankelSpec(alpha=1, beta=1, n=0)
    with pytest.raises(ValueError):
        det.KrattenthalerInstance(x=(1, 2), a=(3,), b=())
    with pytest.raises(ValueError):
        det.GeneralizedSpec(xs=(0, 0), beta=1)
    with pytest.raises(ValueError):
        det.GeneralizedSpec(xs=(-1,), beta=1)
    with pytest.raises(ValueError):
        det.SelbergSpec(alpha=0.0, beta=1, gamma=1, n=1)
    with pytest.raises(ValueError):
        det.SelbergSpec(alpha=1, beta=1, gamma=0, n=1)
    # Real alpha/beta are allowed; gamma and n must stay integral.
    det.SelbergSpec(alpha=1.5, beta=2.5, gamma=2, n=2)


# ----------------------------------------------------------------------
# determinant kernels
# ----------------------------------------------------------------------


def test_bareiss_against_cofactor_oracle():
    rng = random.Random(42)
    for n in range(1, 6):
        for _ in range(25):
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det.bareiss_det([r[:] for r in rows]) == _cofactor_det(rows)


def test_bareiss_handles_zero_pivots():
    assert det.bareiss_det([[0, 1], [1, 0]]) == -1
    assert det.bareiss_det([[0, 2, 3], [0, 0, 5], [7, 0, 0]]) == 70
    assert det.bareiss_det([[1, 2], [2, 4]]) == 0


def test_fraction_det_routes_agree_on_random_matrices():
    rng = random.Random(99)
    for n in range(1, 7):
        for _ in range(10):
            rows = [
                [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(n)]
                for _ in range(n)
            ]
            got = det.fraction_det([r[:] for r in rows])
            want = det.fraction_det_naive([r[:] for r in rows])
            assert got == want
            if n <= 4:
                assert got == _cofactor_det(rows)


def test_fraction_det_routes_agree_on_moment_matrices():
    for n in range(1, 9):
        for alpha in range(1, 7):
            for beta in range(1, 7):
                m = det.hankel_matrix(det.HankelSpec(alpha=alpha, beta=beta, n=n))
                assert det.fraction_det([r[:] for r in m]) == det.fraction_det_naive(
                    [r[:] for r in m]
                )


# ----------------------------------------------------------------------
# Hankel moment determinant and closed form
# ----------------------------------------------------------------------


def test_hankel_entry_fixtures():
    assert det.hankel_entry(det.HankelSpec(1, 1, 1), 1, 1) == 1
    assert det.hankel_entry(det.HankelSpec(1, 1, 2), 1, 2) == Fraction(1, 2)
    assert det.hankel_entry(det.HankelSpec(1, 2, 1), 1, 1) == Fraction(1, 2)


def test_hankel_entry_is_beta_integral():
    # (beta-1)!/(p)_beta == (p-1)!(beta-1)!/(p+beta-1)! with p = alpha+i+j-2,
    # the exact value of the moment integral the matrix is built from.
    for alpha in range(1, 7):
        for beta in range(1, 7):
            spec = det.HankelSpec(alpha=alpha, beta=beta, n=4)
            for i in range(1, 5):
                for j in range(1, 5):
                    p = alpha + i + j - 2
                    want = Fraction(
                        factorial(p - 1) * factorial(beta - 1), factorial(p + beta - 1)
                    )
                    assert det.hankel_entry(spec, i, j) == want


def test_hankel_det_fixtures():
    assert det.hankel_det(det.HankelSpec(1, 1, 1)) == 1
    assert det.hankel_det(det.HankelSpec(1, 1, 2)) == Fraction(1, 12)
    assert det.hankel_det(det.HankelSpec(2, 1, 2)) == Fraction(1, 72)
    assert det.closed_form_det(det.HankelSpec(1, 1, 1)) == 1
    assert det.closed_form_det(det.HankelSpec(1, 1, 2)) == Fraction(1, 12)
    assert det.closed_form_det(det.HankelSpec(2, 1, 2)) == Fraction(1, 72)


def test_hankel_det_equals_closed_form_grid():
    # Moderate grid here; the acceptance gate sweeps the full range.
    for n in range(1, 9):
        for alpha in range(1, 7):
            for beta in range(1, 7):
                spec = det.HankelSpec(alpha=alpha, beta=beta, n=n)
                assert det.hankel_det(spec) == det.closed_form_det(spec)


def test_hankel_det_matches_cofactor_oracle_small():
    for n in (1, 2, 3):
        for alpha in (1, 2, 3):
            for beta in (1, 2, 3):
                spec = det.HankelSpec(alpha=alpha, beta=beta, n=n)
                assert det.hankel_det(spec) == _cofactor_det(det.hankel_matrix(spec))


# ----------------------------------------------------------------------
# partial fractions
# ----------------------------------------------------------------------


def test_partial_fraction_fixtures():
    assert det.partial_fraction_sum(1, 1, 2) == 1
    assert det.partial_fraction_sum(1, 2, 2) == Fraction(1, 2)
    assert det.partial_fraction_sum(2, 3, 3) == Fraction(1, 30)


def test_partial_fraction_expands_entry_grid():
    for alpha in range(1, 13):
        for beta in range(1, 13):
            for m in range(2, 25):
                want = Fraction(factorial(beta - 1), pochhammer(alpha + m - 2, beta))
                assert det.partial_fraction_sum(alpha, beta, m) == want


# ----------------------------------------------------------------------
# polynomial determinant lemma
# ----------------------------------------------------------------------


def test_lemma_fixtures():
    assert det.krattenthaler_sides(det.KrattenthalerInstance(x=(7,), a=(), b=())) == (1, 1)
    inst = det.KrattenthalerInstance(x=(3, 5), a=(2,), b=(7,))
    assert det.krattenthaler_sides(inst) == (-10, -10)
    inst3 = det.KrattenthalerInstance(x=(1, 2, 4), a=(0, 5), b=(3, -1))
    lhs, rhs = det.krattenthaler_sides(inst3)
    assert lhs == rhs
    assert lhs == det.bareiss_det(det.krattenthaler_matrix(inst3))
    assert lhs == _cofactor_det(det.krattenthaler_matrix(inst3))


def test_lemma_analytic_orders_one_and_two():
    rng = random.Random(5)
    for _ in range(50):
        x1 = rng.randint(-50, 50)
        lhs, rhs = det.krattenthaler_sides(
            det.KrattenthalerInstance(x=(x1,), a=(), b=())
        )
        assert lhs == rhs == 1
        x2, a2, b2 = (rng.randint(-50, 50) for _ in range(3))
        lhs, rhs = det.krattenthaler_sides(
            det.KrattenthalerInstance(x=(x1, x2), a=(a2,), b=(b2,))
        )
        assert lhs == rhs == (x1 - x2) * (b2 - a2)


def test_lemma_random_instances():
    rng = random.Random(0)
    for _ in range(60):
        inst = det.random_krattenthaler(rng)
        assert len(inst.x) <= 6
        assert all(-50 <= v <= 50 for v in inst.x + inst.a + inst.b)
        lhs, rhs = det.krattenthaler_sides(inst)
        assert lhs == rhs


def test_specialization_fixtures():
    inst = det.specialize_to_hankel(det.HankelSpec(1, 1, 2))
    assert (inst.x, inst.b, inst.a) == ((1, 2), (0,), (1,))
    inst = det.specialize_to_hankel(det.HankelSpec(3, 2, 2))
    assert (inst.x, inst.b, inst.a) == ((1, 2), (2,), (4,))
    inst = det.specialize_to_hankel(det.HankelSpec(2, 3, 3))
    assert (inst.x, inst.b, inst.a) == ((1, 2, 3), (1, 2), (4, 5))


def test_specialization_reproduces_hankel_determinant():
    for n in range(1, 9):
        for alpha in range(1, 7):
            for beta in range(1, 7):
                spec = det.HankelSpec(alpha=alpha, beta=beta, n=n)
                lhs, rhs = det.krattenthaler_sides(det.specialize_to_hankel(spec))
                assert lhs == rhs
                assert Fraction(lhs) == det.hankel_det(spec) * det.specialization_scale(
                    spec
                )


# ----------------------------------------------------------------------
# lcm integrality inequalities
# ----------------------------------------------------------------------


def test_basic_integrality_fixtures():
    # Cutoff is alpha+beta+i+j-1 throughout, so at (1,1,1,1) the scale is
    # lcm(1..3) = 6 and the scaled unit entry is 6.
    w = det.basic_integrality(1, 1, 1, 1)
    assert (w.cutoff, w.d, w.scaled) == (3, 6, 6)
    w = det.basic_integrality(1, 2, 1, 1)
    assert (w.d, w.scaled) == (12, 6)
    w = det.basic_integrality(2, 3, 1, 1)
    assert (w.d, w.scaled) == (60, 5)


def test_basic_integrality_grid():
    # Full 20/10 range runs in the acceptance gate.
    for alpha in range(1, 9):
        for beta in range(1, 9):
            for i in range(1, 7):
                for j in range(1, 7):
                    w = det.basic_integrality(alpha, beta, i, j)
                    assert w.scaled.denominator == 1
                    assert w.scaled >= 1


def test_basic_integrality_validation():
    with pytest.raises(ValueError):
        det.basic_integrality(1, 1, 0, 1)


def test_improved_product_fixtures():
    assert det.improved_product(det.HankelSpec(1, 1, 1)) == 1
    assert det.improved_product(det.HankelSpec(1, 1, 2)) == 1
    assert det.improved_product(det.HankelSpec(2, 2, 2)) == 1
    assert det.improved_product(det.HankelSpec(1, 1, 3)) == 2


def test_improved_product_at_least_one_grid():
    for n in range(1, 9):
        for alpha in range(1, 9):
            for beta in range(1, 9):
                assert det.improved_product(det.HankelSpec(alpha, beta, n)) >= 1


def test_improved_product_non_lcm_factor_is_determinant():
    # Dropping the lcm factors must leave exactly the Hankel determinant.
    for n in range(1, 6):
        for alpha in range(1, 6):
            for beta in range(1, 6):
                spec = det.HankelSpec(alpha=alpha, beta=beta, n=n)
                bare = Fraction(1)
                for i in range(1, n + 1):
                    bare *= Fraction(
                        factorial(n - i) * factorial(beta + i - 2),
                        pochhammer(alpha + i - 1, beta + n - 1),
                    )
                assert bare == det.hankel_det(spec)


# ----------------------------------------------------------------------
# generalized (non-consecutive) index rows
# ----------------------------------------------------------------------


def test_generalized_fixtures():
    lhs, rhs = det.generalized_sides(det.GeneralizedSpec(xs=(0,), beta=1))
    assert lhs == rhs == Fraction(1, 2)
    lhs, rhs = det.generalized_sides(det.GeneralizedSpec(xs=(0, 1), beta=1))
    assert lhs == rhs == Fraction(1, 72)
    lhs, rhs = det.generalized_sides(det.GeneralizedSpec(xs=(0, 2), beta=2))
    assert lhs == rhs


def test_generalized_sides_antisymmetric_in_row_order():
    a = det.generalized_sides(det.GeneralizedSpec(xs=(0, 3, 7), beta=2))
    b = det.generalized_sides(det.GeneralizedSpec(xs=(3, 0, 7), beta=2))
    assert a[0] == a[1] and b[0] == b[1]
    assert a[0] == -b[0] != 0


def test_generalized_identity_random():
    rng = random.Random(1)
    for _ in range(40):
        spec = det.random_generalized(rng)
        lhs, rhs = det.generalized_sides(spec)
        assert lhs == rhs


def test_generalized_inequality():
    assert det.generalized_inequality(det.GeneralizedSpec(xs=(0,), beta=1)) == 1
    assert det.generalized_inequality(det.GeneralizedSpec(xs=(0, 1), beta=1)) == 1
    assert det.generalized_inequality(det.GeneralizedSpec(xs=(0, 2), beta=1)) == 6
    rng = random.Random(2)
    for _ in range(40):
        spec = det.random_generalized(rng)
        assert det.generalized_inequality(spec) >= 1


def test_consecutive_indices_collapse_to_hankel():
    for n in range(1, 7):
        for beta in range(1, 6):
            lhs, rhs = det.generalized_sides(det.consecutive_spec(n, beta))
            assert lhs == rhs
            assert lhs == det.closed_form_det(det.HankelSpec(alpha=2, beta=beta, n=n))


# ----------------------------------------------------------------------
# Selberg product forms and the quadrature oracle
# ----------------------------------------------------------------------


def test_selberg_exact_fixtures():
    assert det.selberg_rhs_exact(det.SelbergSpec(1, 1, 1, 1)) == 1
    assert det.selberg_rhs_exact(det.SelbergSpec(1, 1, 1, 2)) == Fraction(1, 6)
    assert det.selberg_rhs_exact(det.SelbergSpec(1, 1, 2, 2)) == Fraction(1, 15)
    with pytest.raises(ValueError):
        det.selberg_rhs_exact(det.SelbergSpec(1.5, 1, 1, 2))


def test_selberg_float_tracks_exact():
    for n in (1, 2, 3):
        for gamma in (1, 2):
            for alpha in (1, 2, 4):
                for beta in (1, 3):
                    spec = det.SelbergSpec(alpha, beta, gamma, n)
                    want = det.selberg_rhs_exact(spec)
                    got = det.selberg_rhs(spec)
                    assert abs(got - want) <= 1e-10 * max(1.0, float(want))


def test_selberg_vs_det_fixtures_and_grid():
    assert det.selberg_vs_det(det.HankelSpec(1, 1, 1)) == (1, 1)
    pair = det.selberg_vs_det(det.HankelSpec(1, 1, 2))
    assert pair == (Fraction(1, 6), Fraction(1, 6))
    lhs, rhs = det.selberg_vs_det(det.HankelSpec(2, 2, 2))
    assert lhs == rhs
    # Moderate grid; acceptance covers n <= 10, alpha, beta <= 8.
    for n in range(1, 7):
        for alpha in range(1, 6):
            for beta in range(1, 6):
                lhs, rhs = det.selberg_vs_det(det.HankelSpec(alpha, beta, n))
                assert lhs == rhs


def test_quadrature_oracle_fixtures():
    assert abs(det.quadrature_oracle(det.SelbergSpec(1, 1, 1, 1)) - 1.0) <= 1e-12
    assert abs(det.quadrature_oracle(det.SelbergSpec(1, 1, 1, 2)) - 1 / 6) <= 1e-8
    assert abs(det.quadrature_oracle(det.SelbergSpec(1, 1, 2, 2)) - 1 / 15) <= 1e-8
    spec = det.SelbergSpec(2, 1, 1, 2)
    assert abs(det.quadrature_oracle(spec) - det.selberg_rhs(spec)) <= 1e-8


def test_quadrature_oracle_integer_grid():
    for n in (1, 2):
        for gamma in (1, 2, 3):
            for alpha in (1, 2, 3, 4):
                for beta in (1, 2, 3, 4):
                    spec = det.SelbergSpec(alpha, beta, gamma, n)
                    exact_v = float(det.selberg_rhs_exact(spec))
                    assert abs(det.quadrature_oracle(spec) - exact_v) <= 1e-8 * max(
                        1.0, exact_v
                    )


def test_quadrature_oracle_real_parameters_sanity():
    # Non-polynomial integrand: only a loose agreement is promised.
    spec = det.SelbergSpec(1.5, 2.5, 1, 2)
    assert abs(det.quadrature_oracle(spec) - det.selberg_rhs(spec)) <= 1e-5


def test_quadrature_oracle_validation():
    with pytest.raises(ValueError):
        det.quadrature_oracle(det.SelbergSpec(1, 1, 1, 3))
    with pytest.raises(ValueError):
        det.quadrature_oracle(det.SelbergSpec(0.5, 1, 1, 2))
