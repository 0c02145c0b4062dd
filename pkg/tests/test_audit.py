import pytest
from hypothesis import given
import hypothesis.strategies as st

from skeinlab.audit import (
    AuditReport,
    Rn,
    audit_R1_Rn,
    d_closed_form,
    expand_in_Tbar,
    lower_bound_check,
)
from skeinlab.chebyshev import NormalizedSequence, cheb_S, cheb_Tbar, family, seq_U
from skeinlab.laurent import LaurentPoly, q_pow, v_pow
from skeinlab.polyx import PolyX, X
from skeinlab.twist_models import Beta, D, beta_mul_Tbar

from conftest import laurent, polyx

ZERO = LaurentPoly()


def test_expand_in_Tbar_examples():
    assert expand_in_Tbar(X * X) == [2, 0, 1]
    assert expand_in_Tbar(cheb_S(3)) == [0, 1, 0, 1]
    assert expand_in_Tbar(seq_U(4)) == [2, 0, 0, 0, 1]


@given(polyx(max_degree=32))
def test_expand_in_Tbar_reassembles(p):
    coeffs = expand_in_Tbar(p)
    assert sum((cheb_Tbar(k) * c for k, c in enumerate(coeffs)), PolyX()) == p


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_single_Tbar_term(n):
    c = [0] * n + [1]
    report = audit_R1_Rn(0, c)
    assert report.d == 0
    # with a = 0 there is no R_n(α) row
    assert report.term_coefficients == dict(beta_mul_Tbar(n).items())


def test_single_Tbar_term_with_a():
    report = audit_R1_Rn(1, [0, 0, 1])
    assert report.term_coefficients[Rn(2)] == 1
    assert report.term_coefficients[Beta(1)] == q_pow(1)
    assert report.d == -(q_pow(1) + q_pow(-1))


def test_S3_coefficients():
    report = audit_R1_Rn(0, expand_in_Tbar(cheb_S(3)))
    assert report.d == 0
    assert report.terms_nonneg()
    assert report.term_coefficients == {
        D(1): v_pow(1), D(0): v_pow(-1), D(2): v_pow(3), D(-1): v_pow(-3),
    }


def test_constant_case():
    assert audit_R1_Rn(1, [1]).d == -1
    assert audit_R1_Rn(1, [1]).term_coefficients == {Beta(0): 1, Rn(0): 1}


def test_odd_weights_use_half_powers():
    # c_1 pairs with q^(1/2) + q^(-1/2), c_3 with q^(3/2) + q^(-3/2)
    assert d_closed_form(1, [0, 1]) == -(v_pow(1) + v_pow(-1))
    assert d_closed_form(1, [0, 0, 0, 1]) == -(v_pow(3) + v_pow(-3))


def test_report_rejects_zero_rows():
    with pytest.raises(ValueError):
        AuditReport(a=ZERO, c=(), term_coefficients={Beta(0): ZERO}, d=ZERO)


coeff_vectors = st.lists(laurent(nonneg=True), min_size=1, max_size=10)


@given(laurent(), st.lists(laurent(), min_size=1, max_size=10))
def test_d_matches_closed_form(a, c):
    assert audit_R1_Rn(a, c).d == d_closed_form(a, c)


@given(laurent(nonneg=True), coeff_vectors)
def test_d_zero_iff_a_zero(a, c):
    if all(not ck for ck in c):
        return
    d = audit_R1_Rn(a, c).d
    assert d.is_zero() == a.is_zero()
    assert (-d).is_nonneg()


@given(coeff_vectors)
def test_a_zero_terms_nonneg(c):
    assert audit_R1_Rn(0, c).terms_nonneg()


@pytest.mark.parametrize("name", ["S", "X", "U", "Tbar"])
def test_lower_bound_passes(name):
    assert lower_bound_check(family(name), 32)


def test_lower_bound_fails():
    shifted = NormalizedSequence("shift", lambda n: X + 1 if n == 1 else PolyX.x(n))
    assert not lower_bound_check(shifted, 0)
    assert not lower_bound_check(family("SD"), 4)
    with pytest.raises(ValueError):
        lower_bound_check(family("S"), -1)


@pytest.mark.parametrize("name", ["S", "X", "U", "Tbar"])
def test_passing_sequences_give_clean_audit(name):
    seq = family(name)
    for n in range(13):
        report = audit_R1_Rn(0, expand_in_Tbar(seq(n)))
        assert report.d == 0 and report.terms_nonneg()
