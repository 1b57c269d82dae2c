import json

import pytest
from hypothesis import given, strategies as st

from perichar import laurent
from perichar.laurent import LaurentPolynomial, NotDivisibleError, PolynomialError

from conftest import poly, polys

x1, x2 = LaurentPolynomial.variables(2)
one2 = LaurentPolynomial.one(2)


def test_add_cancellation():
    assert laurent.add(x1 + x2, -x2) == x1
    assert laurent.add((one2 - x1 * x2), x1 * x2) == one2
    f = x1 - 3 * x2
    assert f + LaurentPolynomial.zero(2) == f


def test_add_rank_mismatch():
    with pytest.raises(PolynomialError, match="variable count mismatch"):
        x1 + LaurentPolynomial.one(3)


def test_mul_examples():
    assert laurent.mul(x1 + x2, x1 - x2) == x1 ** 2 - x2 ** 2
    r = one2 - x1 * x2
    assert r * (one2 + x1 * x2) == one2 - x1 ** 2 * x2 ** 2
    assert r * one2 == r


def test_str_and_zero():
    assert str(x1 ** 2 - x2 ** 2) == "x1^2 - x2^2"
    assert str(LaurentPolynomial.zero(2)) == "0"
    assert LaurentPolynomial.monomial((-1, 0)) * x1 == one2


def test_exact_divide_examples():
    r = one2 - x1 * x2
    assert laurent.exact_divide(r * (x1 + x2), r) == x1 + x2
    assert (x1 + x2).exact_divide(one2) == x1 + x2
    with pytest.raises(NotDivisibleError, match="not divisible"):
        (x1 + x2).exact_divide(r)
    with pytest.raises(PolynomialError, match="division by zero"):
        r.exact_divide(LaurentPolynomial.zero(2))


def test_exact_divide_by_monomial_and_laurent_factor():
    f = (x1 + x2) * LaurentPolynomial.monomial((-2, 1))
    assert f.exact_divide(LaurentPolynomial.monomial((-2, 1))) == x1 + x2
    g = x1 - LaurentPolynomial.monomial((-1, 0))
    assert (g * (x2 + 3)).exact_divide(g) == x2 + 3


@given(polys(2), polys(2))
def test_divide_product_recovers_factor(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_divide(g) == f


@given(polys(3, max_terms=4, exp=2))
def test_ring_axioms(f):
    g = poly(3, {(1, 0, -1): 2, (0, 0, 0): -1})
    h = poly(3, {(0, 2, 0): 1, (-1, -1, -1): 1})
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == LaurentPolynomial.zero(3)


def test_permute_examples():
    assert laurent.permute_variables(x1 ** 2 * x2, [2, 1]) == x1 * x2 ** 2
    sym = x1 + x2
    assert sym.permute_variables([2, 1]) == sym
    y1, y2, y3 = LaurentPolynomial.variables(3)
    assert y1.permute_variables([2, 3, 1]) == y2
    with pytest.raises(PolynomialError):
        y1.permute_variables([1, 1, 2])


def test_pair_substitute_examples():
    r = one2 - x1 * x2
    assert laurent.pair_substitute(r, 1, 2) == LaurentPolynomial.zero(1)
    t = LaurentPolynomial.variables(1)[0]
    assert (x1 + x2).pair_substitute(1, 2) == t + LaurentPolynomial.monomial((-1,))
    f = LaurentPolynomial.monomial((1, 1, 1, 1))
    s = f.pair_substitute(3, 4)
    assert s == LaurentPolynomial.monomial((1, 1, 0))
    assert s.t_independent_part() == (True, LaurentPolynomial.monomial((1, 1)))


@given(polys(4, max_terms=6), st.permutations([1, 2, 3, 4]))
def test_pair_substitute_fast_path_matches_general(f, perm):
    # moving the pair (i, j) into the last two slots must not change the answer
    i, j = perm[0], perm[1]
    direct = f.pair_substitute(i, j)
    rest = [v for v in (1, 2, 3, 4) if v not in (i, j)]
    # the permutation sending i -> 3, j -> 4 and the others to 1, 2 in order
    target = {rest[0]: 1, rest[1]: 2, i: 3, j: 4}
    moved = f.permute_variables([target[v] for v in (1, 2, 3, 4)])
    assert moved.pair_substitute(3, 4) == direct


def test_t_independent_part():
    t = LaurentPolynomial.variables(1)[0]
    assert laurent.t_independent_part(LaurentPolynomial.zero(1)) == (True, LaurentPolynomial.zero(0))
    assert (t + LaurentPolynomial.monomial((-1,))).t_independent_part() == (False, None)


def test_serialize_schema():
    r = one2 - x1 * x2
    assert laurent.serialize(r) == '{"nvars":2,"terms":[[[0,0],"1"],[[1,1],"-1"]]}'
    assert laurent.deserialize(laurent.serialize(r)) == r


@given(polys(3, coef=10 ** 30))
def test_json_roundtrip(f):
    text = f.to_json()
    back = LaurentPolynomial.from_json(text)
    assert back == f and back.to_json() == text


@pytest.mark.parametrize("text, message", [
    ('{"nvars":2,"terms":[[[0],"1"]]}', "exponent length mismatch"),
    ('{"nvars":2,"terms":[[[0,0],"x"]]}', "bad coefficient"),
    ('{"nvars":2,"terms":[[[0,0],"1"],[[0,0],"2"]]}', "duplicate exponent"),
    ('{"nvars":2}', "needs 'nvars' and 'terms'"),
    ('{"nvars":2,\n "terms":[}', "line 2 column"),
])
def test_deserialize_errors(text, message):
    with pytest.raises(PolynomialError, match=message):
        LaurentPolynomial.from_json(text)


def test_zero_coefficients_dropped_and_hash():
    f = poly(2, {(1, 0): 0, (0, 1): 2})
    g = poly(2, {(0, 1): 2})
    assert f == g and hash(f) == hash(g)
    assert json.loads(f.to_json())["terms"] == [[[0, 1], "2"]]


def test_leading_term_is_lex_max():
    f = poly(3, {(0, 5, 0): 1, (1, -4, 0): 7, (1, -4, -1): 2})
    assert f.leading_term() == ((1, -4, 0), 7)


def test_big_integer_coefficients():
    big = 10 ** 40
    f = LaurentPolynomial.constant(2, big) * x1
    assert f.coefficient((1, 0)) == big
    assert (f * f).coefficient((2, 0)) == big * big
