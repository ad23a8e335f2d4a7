"""Property-based checks on the exact arithmetic cores."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ftik.series import IntLaurent, TruncSeries

coeffs = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
laurents = st.dictionaries(
    st.integers(min_value=-6, max_value=6), coeffs, max_size=5
).map(IntLaurent.from_dict)
series = st.lists(coeffs, min_size=7, max_size=7).map(
    lambda cs: TruncSeries.from_coeffs(cs, 6)
)


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + (-p) == IntLaurent.zero()


@settings(max_examples=60, deadline=None)
@given(laurents, laurents)
def test_laurent_division_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_trunc_series_ring_axioms(a, b, c):
    assert (a * b).coeffs == (b * a).coeffs
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (a * (b + c)).coeffs == (a * b + a * c).coeffs


@settings(max_examples=60, deadline=None)
@given(series)
def test_trunc_series_invert_roundtrip(a):
    if a.coeff(0) == 0:
        return
    prod = a * a.invert()
    assert prod.coeff(0) == 1
    assert all(prod.coeff(k) == 0 for k in range(1, 7))
