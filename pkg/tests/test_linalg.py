"""Generic LU, exact product verification, and the two determinant oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlehmer.lehmer import (
    TriMatrix,
    band_monomial,
    closed_factors,
    det_closed,
    lambda_sum,
    lehmer_matrix,
)
from qlehmer.linalg import (
    DenseMatrix,
    ZeroPivotError,
    dense_lower,
    dense_upper,
    det_bareiss,
    det_cofactor,
    lu_generic,
    product_check,
)
from qlehmer.poly import ONE, ZERO, Poly2, RatFunc, ratfunc_eq


def tri_constant(diag, sup, sub):
    n = len(diag)
    return TriMatrix(n=n,
                     diag=tuple(Poly2.constant(d) for d in diag),
                     superdiag=tuple(Poly2.constant(s) for s in sup),
                     subdiag=tuple(Poly2.constant(s) for s in sub))


class TestLuGeneric:
    def test_lehmer_n2(self):
        f = lu_generic(lehmer_matrix(2))
        assert ratfunc_eq(f.u_diag[0], RatFunc(ONE))
        assert ratfunc_eq(f.u_diag[1], RatFunc(ONE - Poly2.monomial(1, 0, 2)))
        assert ratfunc_eq(f.l_sub[0], RatFunc(Poly2.monomial(1, 0, 1)))

    def test_identity_matrix(self):
        m = tri_constant([1, 1, 1], [0, 0], [0, 0])
        f = lu_generic(m)
        assert all(ratfunc_eq(d, RatFunc(ONE)) for d in f.u_diag)
        assert all(s.is_zero for s in f.u_super)
        assert all(l.is_zero for l in f.l_sub)

    def test_zero_pivot_reported(self):
        m = tri_constant([0, 1], [1], [1])
        with pytest.raises(ZeroPivotError):
            lu_generic(m)

    def test_rediscovers_closed_factors_up_to_10(self):
        for n in range(1, 11):
            assert lu_generic(lehmer_matrix(n)) == closed_factors(n), n


class TestProductCheck:
    def test_lehmer_up_to_10(self):
        for n in range(1, 11):
            assert bool(product_check(closed_factors(n), lehmer_matrix(n))), n

    def test_n1(self):
        assert bool(product_check(closed_factors(1), lehmer_matrix(1)))

    def test_perturbation_is_caught(self):
        f = closed_factors(4)
        bad_diag = list(f.u_diag)
        bad_diag[2] = bad_diag[2] + 1
        bad = type(f)(n=f.n, u_diag=tuple(bad_diag),
                      u_super=f.u_super, l_sub=f.l_sub)
        result = product_check(bad, lehmer_matrix(4))
        assert not result
        assert result.mismatch is not None

    def test_unit_lower_diagonal(self):
        dense = dense_lower(closed_factors(5))
        for i in range(5):
            assert ratfunc_eq(dense.entries[i][i], RatFunc(ONE))

    def test_off_band_products_are_exact_zeros(self):
        f = closed_factors(6)
        product = dense_lower(f).matmul(dense_upper(f))
        for i in range(6):
            for j in range(6):
                if abs(i - j) >= 2:
                    assert product.entries[i][j].is_zero, (i, j)

    def test_three_band_cases(self):
        # On-band products reproduce the matrix entries: 1 on the diagonal,
        # v*u^(j-1) above (1-based band j), v*u^(j-1) below.
        n = 8
        f = closed_factors(n)
        product = dense_lower(f).matmul(dense_upper(f))
        for j in range(n):
            assert ratfunc_eq(product.entries[j][j], RatFunc(ONE))
        for j in range(n - 1):
            assert ratfunc_eq(product.entries[j][j + 1], RatFunc(band_monomial(j + 1)))
            assert ratfunc_eq(product.entries[j + 1][j], RatFunc(band_monomial(j + 1)))


class TestDetCofactor:
    def test_lehmer_small(self):
        assert det_cofactor(lehmer_matrix(2)) == ONE - Poly2.monomial(1, 0, 2)
        assert det_cofactor(lehmer_matrix(3)) == det_closed(3)

    def test_matches_closed_form_up_to_14(self):
        for n in range(1, 15):
            assert det_cofactor(lehmer_matrix(n)) == det_closed(n), n


class TestDetBareiss:
    def test_identity(self):
        m = DenseMatrix.from_poly_rows(
            [[ONE if i == j else ZERO for j in range(3)] for i in range(3)])
        assert det_bareiss(m) == ONE

    def test_equal_rows(self):
        row = [ONE, ONE + Poly2.monomial(1, 1, 0)]
        assert det_bareiss(DenseMatrix.from_poly_rows([row, row])) == ZERO

    def test_row_swap_flips_sign(self):
        m = DenseMatrix.from_poly_rows([[ZERO, ONE], [ONE, ZERO]])
        assert det_bareiss(m) == Poly2.constant(-1)

    def test_lehmer_up_to_8(self):
        for n in range(1, 9):
            dense = DenseMatrix.from_tri(lehmer_matrix(n))
            assert det_bareiss(dense) == det_closed(n), n

    def test_rejects_fractional_entries(self):
        frac = RatFunc(ONE, ONE + Poly2.monomial(1, 1, 0))
        m = DenseMatrix(1, ((frac,),))
        with pytest.raises(ValueError):
            det_bareiss(m)


def test_det_oracles_agree_against_lambda_sum():
    for n in range(1, 11):
        assert det_cofactor(lehmer_matrix(n)) == lambda_sum(n), n


# -- oracle-vs-oracle on random tridiagonal matrices --------------------------

small_monomials = st.builds(
    Poly2.monomial,
    st.integers(-4, 4), st.integers(0, 2), st.integers(0, 2))


@st.composite
def random_tridiagonal(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    diag = tuple(draw(small_monomials) for _ in range(n))
    sup = tuple(draw(small_monomials) for _ in range(n - 1))
    sub = tuple(draw(small_monomials) for _ in range(n - 1))
    return TriMatrix(n=n, diag=diag, superdiag=sup, subdiag=sub)


@settings(deadline=None)
@given(random_tridiagonal())
def test_continuant_agrees_with_bareiss(m):
    assert det_cofactor(m) == det_bareiss(DenseMatrix.from_tri(m))


@settings(deadline=None)
@given(random_tridiagonal())
def test_lu_when_pivots_allow_reproduces_matrix(m):
    try:
        f = lu_generic(m)
    except ZeroPivotError:
        return
    assert bool(product_check(f, m))
