import pytest
from hypothesis import given, settings, strategies as st

from perichar.euler import (OddRoot, ParabolicError, delta1_r, euler_characteristic,
                            euler_characteristic_direct, euler_schur_coefficients,
                            prop43_candidate, prop43_parameters, surjectivity_probe,
                            validate_levi_weight)
from perichar.laurent import LaurentPolynomial
from perichar.schur import schur_laurent
from perichar.superchar import ds_iterate, jn_membership, sch_thin_kac


def test_delta1_examples():
    assert delta1_r((0, 0, -1)) == [OddRoot(-1, 1, 3), OddRoot(-1, 2, 3)]
    assert delta1_r((0, 0)) == []
    assert delta1_r((1, 1)) == [OddRoot(1, 1, 1), OddRoot(1, 1, 2), OddRoot(1, 2, 2)]
    assert str(OddRoot(-1, 1, 3)) == "-(e1+e3)"
    assert OddRoot(1, 2, 2).vector(3) == (0, 2, 0)


def test_levi_examples():
    for a in range(-2, 3):
        assert validate_levi_weight((a, a, 0), (0, 0, -1))
    assert not validate_levi_weight((1, 0), (0, 0))
    assert validate_levi_weight((0, 0, 0), (1, 0, -1))
    # the odd pair +-(e1+e3) lies in the Levi when gamma_1 + gamma_3 = 0
    assert not validate_levi_weight((1, 0, 0), (1, 0, -1))
    assert validate_levi_weight((1, 0, 1), (1, 0, -1))


def test_trivial_parabolic():
    assert euler_characteristic((0, 0), (0, 0)).poly == LaurentPolynomial.one(2)


def test_rank_two_family():
    # two subsets: x^(lam+rho) and x^(lam+rho+e1+e2), i.e. s_(a,0) - s_(a+1,1)
    for a in range(0, 5):
        assert euler_schur_coefficients((a, 0), (0, -1)) == {(a, 0): 1, (a + 1, 1): -1}
    x1, x2 = LaurentPolynomial.variables(2)
    e = euler_characteristic((1, 0), (0, -1)).poly
    assert e == (x1 + x2) * (LaurentPolynomial.one(2) - x1 * x2)
    assert e == schur_laurent((1, 0)) - schur_laurent((2, 1))


def test_errors(monkeypatch):
    with pytest.raises(ParabolicError, match="weight not constant on Levi blocks"):
        euler_characteristic((1, 0), (0, 0))
    with pytest.raises(ParabolicError, match="gamma not dominant"):
        euler_characteristic((0, 0), (-1, 0))
    monkeypatch.setenv("PERICHAR_MAX_SUBSETS", "4")
    with pytest.raises(ParabolicError, match="parabolic too large for desk scale"):
        euler_characteristic((0, 0, 0), (1, 1, 1))


dominant_gamma = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(-1, 1), min_size=n, max_size=n)).map(
    lambda g: tuple(sorted(g, reverse=True)))


@settings(max_examples=40)
@given(dominant_gamma, st.lists(st.integers(-1, 2), min_size=2, max_size=2))
def test_routes_agree_and_land_in_jn(gamma, values):
    lam = tuple(values[0] if g else values[1] for g in gamma)
    if not validate_levi_weight(lam, gamma):
        lam = tuple(values[0] for _ in gamma)
    e = euler_characteristic(lam, gamma)
    assert e == euler_characteristic_direct(lam, gamma)
    assert jn_membership(e)


def test_prop43_parameters():
    assert prop43_parameters(5, 2, 3) == ((3, 3, 3, 3, 0), (0, 0, 0, 0, -1))
    with pytest.raises(ParabolicError):
        prop43_parameters(4, 2, 0)


def test_candidate_maps_to_trivial_class():
    for n, k in [(3, 1), (4, 1), (5, 2)]:
        target = sch_thin_kac((0,) * (n - 2 * k))
        for a in (-2, 0, 3):
            assert ds_iterate(prop43_candidate(n, k, a), k) == target


def test_probe_report_shape():
    rep = surjectivity_probe(3, 1, range(-3, 4))
    assert rep["n"] == 3 and rep["k"] == 1 and len(rep["rows"]) == 7
    for row in rep["rows"]:
        d = LaurentPolynomial.from_json_obj(row["ds_value"])
        assert d.nvars == 1
        assert row["equals_plus"] and not row["equals_minus"]
    rep = surjectivity_probe(4, 1, [0])
    assert LaurentPolynomial.from_json_obj(rep["rows"][0]["ds_value"]) == sch_thin_kac((0, 0)).poly


def test_rank_zero_target_is_one():
    assert sch_thin_kac(()).poly == LaurentPolynomial.one(0)
    # the determinant power lifts 1 from rank 0
    det = euler_characteristic((2, 2), (0, 0))
    assert ds_iterate(det, 1).poly == LaurentPolynomial.one(0)
