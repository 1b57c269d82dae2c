import pytest
from hypothesis import given, settings

from perichar.laurent import LaurentPolynomial, PolynomialError
from perichar.schur import (WeightError, alternant, is_symmetric, rho, schur_alternant_ratio,
                            schur_combination, schur_decompose, schur_laurent,
                            schur_ssyt_oracle, sort_with_sign)

from conftest import dominant, poly

x1, x2 = LaurentPolynomial.variables(2)


def test_alternant_examples():
    assert alternant((1, 0)) == x1 - x2
    assert alternant((1, 1)).is_zero()
    a = alternant((2, 1, 0))
    assert len(a.terms) == 6
    assert a.coefficient((2, 1, 0)) == 1 and a.coefficient((1, 2, 0)) == -1


def test_rho():
    assert rho(1) == (0,)
    assert rho(2) == (1, 0)
    assert rho(4) == (3, 2, 1, 0)


def test_schur_examples():
    assert schur_laurent((1, 0)) == x1 + x2
    assert schur_laurent((0, -1)) == (poly(2, {(-1, 0): 1, (0, -1): 1}))
    assert schur_laurent((2, 0)) == x1 ** 2 + x1 * x2 + x2 ** 2
    assert schur_laurent(()) == LaurentPolynomial.one(0)
    with pytest.raises(WeightError, match="weight not dominant"):
        schur_laurent((0, 1))


def test_ssyt_oracle_examples():
    assert schur_ssyt_oracle((1, 1)) == x1 * x2
    assert schur_ssyt_oracle((2, 0)) == x1 ** 2 + x1 * x2 + x2 ** 2
    s = schur_ssyt_oracle((2, 1, 0))
    assert len(s.terms) == 7  # 8 tableaux, two share the content (1,1,1)
    assert sum(s.terms.values()) == 8
    assert s.coefficient((1, 1, 1)) == 2


def test_ssyt_size_guard():
    with pytest.raises(WeightError, match="size guard"):
        schur_ssyt_oracle((13, 0))


@settings(max_examples=40)
@given(dominant(3, bound=3))
def test_three_routes_agree(lam):
    s = schur_laurent(lam)
    assert s == schur_ssyt_oracle(lam)
    assert s == schur_alternant_ratio(lam)


@given(dominant(3, bound=2), dominant(3, bound=2))
def test_products_decompose_with_nonnegative_coefficients(a, b):
    f = schur_laurent(a) * schur_laurent(b)
    coeffs = schur_decompose(f)
    assert all(c > 0 for c in coeffs.values())
    assert schur_combination(coeffs, 3) == f


def test_decompose_examples():
    assert schur_decompose((x1 + x2) ** 2) == {(2, 0): 1, (1, 1): 1}
    assert schur_decompose(schur_laurent((3, 1))) == {(3, 1): 1}
    assert schur_decompose(LaurentPolynomial.zero(2)) == {}
    with pytest.raises(PolynomialError, match="not symmetric"):
        schur_decompose(x1 - x2)


def test_is_symmetric():
    assert is_symmetric(x1 + x2)
    assert not is_symmetric(x1 - x2)
    assert is_symmetric(LaurentPolynomial.one(2) - x1 * x2)


def test_sort_with_sign():
    assert sort_with_sign((0, 2, 1)) == (1, (2, 1, 0))
    assert sort_with_sign((0, 1, 2)) == (-1, (2, 1, 0))
    assert sort_with_sign((1, 1, 0)) == (0, ())


def test_dimension_at_one():
    # Weyl dimension formula for gl(3)
    lam = (3, 1, -2)
    dim = sum(schur_laurent(lam).terms.values())
    l = [a + b for a, b in zip(lam, rho(3))]
    expect = (l[0] - l[1]) * (l[0] - l[2]) * (l[1] - l[2]) // 2
    assert dim == expect
