import json

import pytest

import nsarith
from nsarith import Element


def test_arithmetic():
    a = Element("t^2 + t")
    assert a + Element("t + 1") == Element("t^2 + 2*t + 1")
    assert str(Element("t") ** 3) == "t^3"
    assert Element("t") > Element("1000")
    q, r = nsarith.divmod(Element("t^2 + 1"), Element("t"))
    assert (q, r) == (Element("t"), Element("1"))
    assert nsarith.divmod_scalar(Element("3*t^2 + 5"), 3) == (Element("t^2 + 1"), 2)
    assert Element("t^(1,0) + t^(0,1)").dim == 2


def test_errors():
    with pytest.raises(nsarith.Underflow):
        Element("t") - Element("t^2")
    with pytest.raises(nsarith.CoefficientNotRepresentable):
        nsarith.root_floor(Element("2*t^2"), 2)
    with pytest.raises(nsarith.ParseError):
        Element("t +")
    with pytest.raises(nsarith.StandardInput):
        nsarith.decide(0, Element("3"), Element("t"))
    assert issubclass(nsarith.NotEquivalent, nsarith.Error)


def test_decide():
    v = nsarith.decide(2, Element("t"), Element("3*t + 5"))
    assert v["equivalent"] and v["witness"] == {"kind": "BoundN", "n": 4}
    v = nsarith.decide(3, Element("t^(1,0)"), Element("t^(1,5)"))
    assert v["witness"]["kind"] == "Companion"
    assert not nsarith.decide(2, Element("t"), Element("t^2"))["equivalent"]


def test_automorphism():
    a, b = Element("t"), Element("2*t + 1")
    d = nsarith.prove_e5(a, b)
    assert nsarith.apply(d, a) == b
    assert nsarith.apply(d, b, inverse=True) == a
    with pytest.raises(nsarith.CannotProve):
        nsarith.prove_e5(Element("t"), Element("t^2"))


def test_embed_and_suite():
    assert nsarith.real_embed(Element("t^(1,0)"), Element("t^(2,3)"))["value"] == "2"
    report = nsarith.run_suite("refinement", samples=30, seed=3, dim=2)
    assert report["ok"] and report["violations"] == 0


def test_cli():
    code, out, _ = nsarith.cli(["equiv", "--level", "2", "t", "3*t+5"])
    assert code == 0 and json.loads(out)["witness"]["n"] == 4
    code, _, _ = nsarith.cli(["arith", "root", "2*t^2", "2"])
    assert code == 3
