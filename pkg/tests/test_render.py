from fractions import Fraction

import pytest

from qshuffle.algebra import Element, UNIT
from qshuffle.catalan import delta_element
from qshuffle.qlaurent import LaurentPoly, q_int, q_pow
from qshuffle.render import (
    dyck_svg,
    element_str,
    laurent_latex,
    laurent_str,
    qint_factorization,
    scalar_table,
    series_str,
    table_csv,
    table_human,
    table_json,
    table_latex,
)
from qshuffle.series import delta_series
from qshuffle.words import word

from conftest import P


def test_qint_factorization_products():
    assert qint_factorization(P("[2]^2[3]")) == (Fraction(1), {2: 2, 3: 1})
    assert qint_factorization(P("-[2][3]^2[4]")) == (Fraction(-1), {2: 1, 3: 2, 4: 1})
    assert qint_factorization(P("[2][3][4][5]")) == (Fraction(1), {2: 1, 3: 1, 4: 1, 5: 1})
    assert qint_factorization(LaurentPoly.one()) == (Fraction(1), {})
    assert qint_factorization(LaurentPoly.zero()) == (Fraction(0), {})
    assert qint_factorization(P("[2]").scale(Fraction(3, 2))) == (Fraction(3, 2), {2: 1})


def test_qint_factorization_rejects_non_products():
    assert qint_factorization(q_pow(1)) is None          # bare monomial q
    assert qint_factorization(q_int(2) + LaurentPoly.one()) is None
    assert qint_factorization(q_pow(2) - q_pow(-2)) is None  # [2](q - q^-1)


def test_laurent_str():
    assert laurent_str(P("[2]^2[3]")) == "[2]_q^2[3]_q"
    assert laurent_str(P("-[3]")) == "-[3]_q"
    assert laurent_str(LaurentPoly.zero()) == "0"
    assert laurent_str(LaurentPoly.one()) == "1"
    assert laurent_str(LaurentPoly.const(-1)) == "-1"
    assert laurent_str(P("[2]").scale(Fraction(1, 2))) == "(1/2)[2]_q"
    assert laurent_str(q_pow(1)) == "(q)"
    assert laurent_str(q_int(2), bracket=False) == "q^-1 + q"


def test_laurent_latex():
    assert laurent_latex(P("[2]^2[3]")) == "[2]_q^2[3]_q"
    assert laurent_latex(P("-[2]")) == "-[2]_q"
    assert laurent_latex(q_pow(-2) + LaurentPoly.one() * 0 + q_pow(2)) == "q^{-2}+q^{2}"


def test_element_str():
    assert element_str(Element.zero()) == "0"
    assert element_str(UNIT) == "1"
    assert element_str(-UNIT) == "-1"
    assert element_str(delta_element(2, 2)) == "[2]_q^2[3]_q xxyy + [2]_q^2 xyxy"
    assert element_str(Element.from_word("xy") - Element.from_word("yx")) == "xy - yx"


def test_series_str():
    s = delta_series(-1, 2)
    assert series_str(s) == "(1) + (-xy) t + (xyxy) t^2"


def test_scalar_table_rows():
    rows = scalar_table("delta", -1, 1, 1)
    assert [w.display() for w, _ in rows] == ["1", "xy"]
    rows_n = scalar_table("nabla", -1, 1, 1)
    assert [w.display() for w, _ in rows_n] == ["xy"]
    with pytest.raises(ValueError):
        scalar_table("other", 0, 0, 1)
    with pytest.raises(ValueError):
        scalar_table("delta", 1, 0, 1)


def test_table_formats_are_consistent():
    csv = table_csv("nabla", -2, 2, 2)
    human = table_human("nabla", -2, 2, 2)
    js = table_json("nabla", -2, 2, 2)
    latex = table_latex("nabla", -2, 2, 2)
    assert csv.splitlines()[1].startswith("xy,")
    assert "xy" in human
    assert js["rows"][0]["word"] == "xy"
    assert js["m_range"] == [-2, 2]
    assert LaurentPoly.from_json(js["rows"][1]["cells"][4]) == P("[2][3]")
    assert "\\begin{tabular}" in latex and "\\nabla" in latex


def test_dyck_svg_structure():
    svg = dyck_svg(word("xxyy"))
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 5
    assert svg.count("<text") == 4
    assert "polyline" in svg
    unit_svg = dyck_svg(word(""))
    assert unit_svg.count("<circle") == 1
    assert "<text" not in unit_svg
    single = dyck_svg(word("y"))
    assert single.count("<circle") == 2
    assert dyck_svg(word("xxyy")) == dyck_svg(word("xxyy"))
