import json
from fractions import Fraction

import pytest

import arcinv


def test_parse_and_normalize():
    f = arcinv.parse("-2*x1^3 + x2^2 - x3^2")
    assert str(arcinv.normalize(f)) == "x1^2 - x2^2 - x3^3"
    assert f.num_variables == 3
    with pytest.raises(arcinv.ParseError):
        arcinv.parse("x1^2 + x1^3")


def test_laurent():
    u = arcinv.LaurentPoly.power(1)
    p = (u - arcinv.LaurentPoly(1)) * (u + arcinv.LaurentPoly(1))
    assert str(p) == "u^2 - 1"
    assert p.pairs() == [(2, 1), (0, -1)]
    assert arcinv.LaurentPoly.from_pairs([(2, 1), (0, -1)]) == p
    assert p.evaluate(-1) == Fraction(0)
    assert arcinv.LaurentPoly().degree() is None


def test_classify():
    v = arcinv.classify(arcinv.parse("x1^2+x2^4+x3^4"), arcinv.parse("-x1^2-x2^4-x3^4"))
    assert not v["equivalent"]
    assert v["reason"] == "sign-mismatch"
    assert v["detail"] == 2
    assert arcinv.classify(arcinv.parse("x1^3+x2^6"), arcinv.parse("x1^3-x2^6"))["equivalent"]


def test_fibers():
    f = arcinv.parse("x1^4 - x2^4")
    assert str(arcinv.beta_closed(f, 0)) == "2*u - 1"
    assert arcinv.beta_recursive(f, 0) == arcinv.beta_closed(f, 0)
    assert arcinv.euler_fiber(f, 0) == -3
    assert arcinv.beta_closed(arcinv.parse("-x1^2 - x2^2"), 1).is_zero()


def test_zeta_and_recovery():
    f = arcinv.parse("x1^2 + x2^2")
    z = arcinv.modified_zeta(f, 2)
    assert [c["n"] for c in z] == [1, 2]
    assert str(z[1]["fminus"]) == "-u^-2"
    doc = json.loads(arcinv.zeta_json(f, 2))
    assert doc["kind"] == "modified"
    assert doc["coeffs"][1]["fminus"] == [[-2, -1]]
    plain = arcinv.plain_zeta(arcinv.parse("x1^2"), 2)
    assert str(plain[1]["fplus"]) == "2*u^-1"

    steps = arcinv.recover(arcinv.parse("x1^4 - x2^4"))
    assert [(s["k"], s["sigma_plus"], s["sigma_minus"], s["branch"]) for s in steps] == [(4, 1, 1, "negative")]
    assert arcinv.roundtrip_check(arcinv.parse("x1^2 + x2^4 + x3^4"), 8)
    assert arcinv.zeta_equal(arcinv.parse("x1^3 + x2^6"), arcinv.parse("x1^3 - x2^6"), 24)


def test_enumeration_counts():
    polys = arcinv.enumerate_normalized(1, 2, 3)
    assert [str(p) for p in polys] == ["x1^2", "-x1^2", "x1^3", "-x1^3"]
    assert arcinv.predicted_class_count(1, 3) == 3
    assert arcinv.predicted_class_count(2, 2) == 3
