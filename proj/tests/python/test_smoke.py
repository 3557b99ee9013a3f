import os
from fractions import Fraction

import pytest

import sncdp


def test_examples():
    assert sncdp.local_gw_genus0("f1f1") == Fraction(-2)
    assert sncdp.local_gw_genus0("p2f6") == Fraction(4)
    report = sncdp.example("p2f6", show_intermediates=True)
    assert report["schema"] == 1
    assert report["results"]["N0"] == "4"
    assert report["intermediates"]["e_dual_index"]["total"] == "3+10*f1+6*f2-6*f1*f2"
    assert report["intermediates"]["tangent_index"]["total"] == "3+6*f1+2*f2-6*f1*f2"
    f = sncdp.example("f1f1")
    assert (f["results"]["N0"], f["results"]["n0"], f["results"]["multiple_cover"]) == ("-2", "-2", "pass")


def test_classify():
    assert sncdp.classify(2)["results"]["count"] == 6
    rank3 = sncdp.classify(3)["results"]["configurations"]
    assert [c["description"] for c in rank3] == ["F2 u F2 u F2 (f ~ e, f ~ e, f ~ e)"]
    with pytest.raises(sncdp.DomainError):
        sncdp.classify(4)


def test_rings():
    p2 = sncdp.projective_space(2)
    assert str(p2.tangent_ch) == "2+3*h+3/2*h^2"
    assert p2.euler_number() == "3"
    m = sncdp.product(sncdp.projective_space(1, "f1"), sncdp.projective_space(1, "f2"))
    assert m.weighted_euler() == "4"
    assert str(sncdp.ch_to_chern(m.cls("-4*f1-4*f2"))) == "1-4*f1-4*f2+16*f1*f2"
    f6 = sncdp.hirzebruch(6)
    assert f6.cls("e+6*f") * f6.cls("e+3*f") == f6.cls("3*e*f")
    with pytest.raises(sncdp.ParseError):
        p2.cls("h + y")


def test_setup_roundtrip():
    text = sncdp.emit_setup("p2f6")
    report = sncdp.evaluate_setup(text, show_intermediates=True)
    assert report["results"] == sncdp.example("p2f6", show_intermediates=True)["results"]
    data = os.environ.get("SNCDP_DATA_DIR")
    if data:
        with open(os.path.join(data, "p2f6.setup")) as fh:
            assert sncdp.evaluate_setup(fh.read())["results"]["N0"] == "4"
    with pytest.raises(sncdp.DomainError):
        sncdp.evaluate_setup(text.replace("h=2*f1", "h=f1"))
