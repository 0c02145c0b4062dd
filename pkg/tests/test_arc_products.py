import csv
import io
import json

import pytest
from hypothesis import given
import hypothesis.strategies as st

from skeinlab.arc_products import (
    expand_arc_poly,
    product_closed_form,
    product_in_Tbar_basis,
    rows_to_csv,
    structure_constant_rows,
    verify_odd_odd_display,
)
from skeinlab.chebyshev import cheb_T, cheb_Tbar, s_diff
from skeinlab.laurent import LaurentPoly
from skeinlab.polyx import PolyX, X

from conftest import polyx


def test_expand_x_squared():
    e = expand_arc_poly(X * X)
    assert e.even_part == X + 2
    assert e.odd_part == PolyX()


def test_expand_even_Tbar():
    e = expand_arc_poly(cheb_Tbar(6))
    assert e.even_part == cheb_T(3)
    assert e.odd_part == PolyX()


def test_expand_odd_Tbar():
    e = expand_arc_poly(cheb_Tbar(5))
    assert e.even_part == PolyX()
    assert e.odd_part == s_diff(2) == X * X - X - 1


@given(polyx(max_degree=10))
def test_expand_round_trip(p):
    assert expand_arc_poly(p).to_polyx() == p


def test_product_examples():
    one = LaurentPoly.const(1)
    assert product_in_Tbar_basis(3, 5) == {2: one, 8: one}
    assert product_in_Tbar_basis(0, 7) == {7: one}
    assert product_in_Tbar_basis(4, 4) == {0: LaurentPoly.const(2), 8: one}


@given(st.integers(0, 40), st.integers(0, 40))
def test_closed_matches_oracle(m, n):
    assert product_in_Tbar_basis(m, n, "closed") == product_in_Tbar_basis(m, n, "oracle")
    assert product_closed_form(m, n) == product_closed_form(n, m)


def test_product_errors():
    with pytest.raises(ValueError):
        product_in_Tbar_basis(-1, 0)
    with pytest.raises(ValueError):
        product_in_Tbar_basis(1, 1, "magic")


def test_odd_odd_examples():
    assert verify_odd_odd_display(0, 0)
    assert verify_odd_odd_display(1, 2)
    assert cheb_Tbar(3) * cheb_Tbar(5) == cheb_Tbar(8) + cheb_Tbar(2)
    assert verify_odd_odd_display(4, 4)
    assert cheb_Tbar(9) ** 2 == cheb_Tbar(18) + 2 * cheb_Tbar(0)


def test_csv_output():
    text = rows_to_csv(structure_constant_rows(2))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0] == {"m": "0", "n": "0", "k": "0", "coefficient_json": '{"v_exponents":[[0,"1"]]}'}
    # (1,1) -> T2 + 2 T0
    got = {(r["m"], r["n"], r["k"]): json.loads(r["coefficient_json"]) for r in rows}
    assert LaurentPoly.from_json(got[("1", "1", "0")]) == 2
    assert LaurentPoly.from_json(got[("1", "1", "2")]) == 1
    assert len(rows) == sum(len(product_in_Tbar_basis(m, n)) for m in range(3) for n in range(3))
