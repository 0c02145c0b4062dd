import pytest
from hypothesis import given
import hypothesis.strategies as st

from skeinlab.laurent import (
    ONE,
    ZERO,
    CyclotomicContext,
    LaurentPoly,
    divide_exact,
    q_pow,
    reduce_mod_order,
    v_pow,
)

from conftest import laurent

v = v_pow(1)
v_inv = v_pow(-1)
q, q_inv = q_pow(1), q_pow(-1)


def test_add_examples():
    assert v_pow(2) + (-v_pow(2)) == ZERO
    assert (v + v_inv) + (v + v_inv) == 2 * v + 2 * v_inv
    assert (v_pow(2) + 1) + (v_pow(-2) - 1) == v_pow(2) + v_pow(-2)


def test_mul_examples():
    assert (v + v_inv) * (v - v_inv) == v_pow(2) - v_pow(-2)
    assert q * q_inv == ONE
    # brute-force convolution over the dict representation
    a = q + q_inv
    conv = {}
    for i, x in a.items():
        for j, y in a.items():
            conv[i + j] = conv.get(i + j, 0) + x * y
    assert a * a == LaurentPoly(conv)
    assert a * a == q_pow(2) + 2 + q_pow(-2)


def test_nonneg_examples():
    assert (q + q_inv).is_nonneg()
    assert not (q_pow(2) - 2).is_nonneg()
    assert ZERO.is_nonneg()


def test_bar_examples():
    assert v_pow(3).bar() == v_pow(-3)
    assert (q + q_inv).bar() == q + q_inv
    assert (q_pow(2) - q).bar() == q_pow(-2) - q_inv


def test_reduce_examples():
    assert v_pow(5).reduce_mod(4) == v
    for n in range(1, 9):
        assert (v_pow(n) - v_pow(-n)).reduce_mod(2 * n) == ZERO
        ctx = CyclotomicContext.for_order(n)
        assert ctx.modulus == 4 * n
        assert reduce_mod_order(q_pow(n) - q_pow(-n), ctx) == ZERO


def test_cyclotomic_context_rejects_bad_modulus():
    with pytest.raises(ValueError):
        CyclotomicContext(0)
    with pytest.raises(ValueError):
        CyclotomicContext.for_order(0)


def test_str_uses_q_and_half_powers():
    assert str(q_pow(2) + 2 + q_pow(-2)) == "q^2 + 2 + q^-2"
    assert str(v_pow(3)) == "q^(3/2)"
    assert str(ZERO) == "0"


def test_negative_power_only_for_units():
    assert q ** -2 == q_pow(-2)
    with pytest.raises(ArithmeticError):
        (q + 1) ** -1


@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(laurent(), laurent())
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a + b).bar() == a.bar() + b.bar()
    assert (a * b).bar() == a.bar() * b.bar()


@given(laurent(nonneg=True), laurent(nonneg=True))
def test_cone_closed(a, b):
    assert (a + b).is_nonneg()
    assert (a * b).is_nonneg()
    assert a.bar().is_nonneg()


@given(laurent(), laurent(), st.integers(1, 30))
def test_reduce_is_ring_map(a, b, m):
    r = lambda x: x.reduce_mod(m)
    assert r(a + b) == r(r(a) + r(b))
    assert r(a * b) == r(r(a) * r(b))


@given(laurent(), laurent())
def test_divide_exact_inverts_mul(a, b):
    if b:
        assert divide_exact(a * b, b) == a


def test_divide_exact_errors():
    with pytest.raises(ZeroDivisionError):
        divide_exact(ONE, ZERO)
    with pytest.raises(ArithmeticError):
        divide_exact(ONE, q + 1)


@given(laurent(max_terms=8, exp=40, coeff=10**30))
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


def test_from_json_accepts_scalars():
    assert LaurentPoly.from_json(3) == 3
    assert LaurentPoly.from_json("-2") == -2
    with pytest.raises(ValueError):
        LaurentPoly.from_json(True)
    with pytest.raises(ValueError):
        LaurentPoly.from_json({"bad": 1})
