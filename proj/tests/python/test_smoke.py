import pytest

import cuspfol

F0 = "mero: (y^2 + x^3)/(x*y)"


def test_reduce_and_sigma():
    assert cuspfol.reduce(F0) == "CuspTypeAbsolutelyDicritical"
    assert cuspfol.sigma(F0, 18) == "z"


def test_schwarzian():
    assert cuspfol.schwarzian("exp(z) - 1", 12) == "-1/2"
    assert cuspfol.schwarzian("z/(1 + 3*z)", 12) == "0"


def test_normalize():
    d = cuspfol.normalize("(2*x^3*y - y^3) dx + (x*y^2 - x^4) dy", 12)
    assert (d["alpha"], d["a"], d["e5"]) == ("-1", "0", "0")


def test_parse_error():
    with pytest.raises(cuspfol.ParseError):
        cuspfol.parse_form("x^2 dx + w dy")


def test_command_json():
    code, out = cuspfol.command("reduce", F0)
    assert code == 0
    assert out["command"] == "reduce"
    assert out["verdict"] == "CuspTypeAbsolutelyDicritical"
    code, _ = cuspfol.command("reduce", "1.5 dx")
    assert code == 3
