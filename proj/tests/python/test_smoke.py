import json
from fractions import Fraction

import pytest

import feuler
from feuler import LRat, XPoly

LAM = LRat.lam()
ONE = LRat(1)


def test_numbers_and_rendering():
    assert str(feuler.fe_number(2)) == "(λ+1)/(λ-1)^2"
    assert str(feuler.fe_number_higher(1, 2)) == "2/(λ-1)"
    assert feuler.fe_number(1).eval_at(-1) == Fraction(-1, 2)
    assert feuler.fe_numbers_via_series(12) == [feuler.fe_number(n) for n in range(13)]
    assert feuler.fe_poly(1).to_latex() == "x + \\frac{1}{\\lambda-1}"
    assert str(feuler.fe_poly_higher(3, 0)) == "x^3"


def test_lrat_field_and_parsing():
    h1 = LRat("1/(λ-1)")
    assert h1 == feuler.fe_number(1)
    assert (h1 * (LAM - ONE)) == ONE
    assert (h1 + LRat("1/(1-λ)")).is_zero()
    assert h1.invert_lambda().invert_lambda() == h1
    assert LRat.from_json(h1.to_json()) == h1
    with pytest.raises(feuler.PoleError):
        h1.eval_at(1)
    with pytest.raises(ZeroDivisionError):
        ONE / LRat(0)


def test_operators():
    for n in range(8):
        lhs = feuler.delta_lambda(feuler.fe_poly(n))
        assert lhs == XPoly.monomial(n) * (ONE - LAM)
    assert feuler.poly_derivative(feuler.fe_poly(3)) == feuler.fe_poly(2) * LRat(3)
    assert str(feuler.integral_01(feuler.fe_poly(1))) == "(λ+1)/(2(λ-1))"


def test_basis_roundtrip():
    p = XPoly.parse("3x^4 - (λ/2)x + 1/(λ+2)")
    for r in range(1, 5):
        e = feuler.to_fe_basis_higher(p, r)
        assert e.order == r
        assert feuler.from_fe_basis(e) == p
        assert feuler.FEExpansion.from_json(e.to_json()) == e
    e = feuler.to_fe_basis(XPoly.monomial(1))
    assert e.coeffs == [ONE / (ONE - LAM), ONE]
    assert feuler.fe_change_order(1, 2) == feuler.to_fe_basis_higher(feuler.fe_poly(1), 2)
    assert XPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


def test_identity_lab():
    ids = feuler.registry_list()
    assert len(ids) >= 11
    assert "thm2" in ids and "thm7-corrected" in ids

    ok = feuler.verify_identity("thm2", 4)
    assert ok["status"] == "verified"
    assert ok["residual"] == []

    bad = feuler.verify_identity("thm7-as-printed", 0, 2)
    assert bad["status"] == "refuted"
    assert bad["corrected_coefficients"]["order"] == 1

    screen = feuler.random_screen("thm7-as-printed", 0, 2, trials=1, seed=1)
    assert screen["result"] == "counterexample"
    assert Fraction(screen["lhs_value"]) == 1
    with pytest.raises(ValueError):
        feuler.verify_identity("no-such-id", 1)


def test_report_is_deterministic():
    a = feuler.report(max_n=3, max_r=2, seed=42, trials=2)
    b = feuler.report(max_n=3, max_r=2, seed=42, trials=2)
    assert json.dumps(a) == json.dumps(b)
    verdicts = {row["id"]: row["verdict"] for row in a["identities"]}
    assert verdicts["thm2"] == "verified"
    assert verdicts["thm7-as-printed"] == "refuted"
