"""Canonical-form arithmetic in Q(s)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdual.qfield import (
    HALF,
    ONE,
    ZERO,
    QFieldError,
    QScalar,
    SpecializationError,
    omega,
    qs_add,
    qs_inv,
    qs_mul,
    qs_qpow,
    qs_specialize,
)


def P(text: str) -> QScalar:
    return QScalar.parse(text)


# -- frozen from tests/oracles/qfield_oracle.py --------------------------------


def test_add_simple_poles():
    assert qs_add(P("1/(s-1)"), P("1/(s+1)")) == P("2*s/(s^2-1)")


def test_specialize_oracle_value():
    assert qs_specialize(P("(s+1)/(s-1)"), 2) == Fraction(3)


def test_omega_values_at_s0_2():
    # oracle: omega_int(1)=-5/6, omega_half(1)=-2/3, omega_int(2)=-17/30,
    # omega_half(2)=-4/15, omega_int(3)=-65/126, omega_half(3)=-8/63
    expect = {
        ("int", 1): Fraction(-5, 6),
        ("half", 1): Fraction(-2, 3),
        ("int", 2): Fraction(-17, 30),
        ("half", 2): Fraction(-4, 15),
        ("int", 3): Fraction(-65, 126),
        ("half", 3): Fraction(-8, 63),
    }
    for (flavor, b), v in expect.items():
        assert omega(flavor, b).specialize(2) == v


# -- direct contract cases ------------------------------------------------------


def test_add_identity_and_polys():
    x = P("(s^2+1)/(2*s^3)")
    assert qs_add(ZERO, x) == x
    assert qs_add(P("s-1"), P("s+1")) == P("2*s")


def test_mul_cases():
    assert qs_mul(P("(s^2-1)/(s-1)"), ONE) == P("s+1")
    assert qs_mul(P("s^-2"), P("s^5")) == P("s^3")
    assert qs_mul(P("(s+1)/(s-1)"), P("(s-1)/(s+1)")) == ONE


def test_inv_cases():
    assert qs_inv(ONE) == ONE
    assert qs_inv(P("s^2")) == P("s^-2")
    with pytest.raises(QFieldError):
        qs_inv(ZERO)


def test_qpow():
    assert qs_qpow(0) == ONE
    assert qs_qpow(1) == P("s^2")
    assert qs_qpow(Fraction(-3, 2)) == P("s^-3")
    with pytest.raises(QFieldError):
        qs_qpow(Fraction(1, 3))


def test_specialize_cases():
    assert qs_specialize(P("s^2"), 2) == 4
    with pytest.raises(SpecializationError):
        qs_specialize(P("1/(s-1)"), 1)
    with pytest.raises(SpecializationError):
        # pole at s0 even though s0 is admissible
        qs_specialize(P("1/(s-2)"), 2)


def test_half_is_exact():
    assert HALF + HALF == ONE
    assert str(HALF) == "(1)/(2)"


def test_canonical_denominator_normalization():
    # denominator must end with positive leading coefficient, lowest exponent 0
    x = QScalar.make((1,), 0, (-1, -1))  # 1/(-1 - s)
    assert x.den[-1] > 0
    assert x == P("-1/(s+1)")
    y = QScalar.make((1, 1), 0, (0, 0, 2))  # (1+s)/(2 s^2)
    assert y.den == (2,)
    assert y.shift == -2


def test_str_roundtrip_examples():
    for text in ["(s^2+1)/(2*s^3)", "2*s/(s^2-1)", "s^-1", "0", "-s+1", "(1)/(2)"]:
        x = P(text)
        assert P(str(x)) == x


# -- randomized field axioms ------------------------------------------------------

_coef = st.integers(min_value=-9, max_value=9)
_poly = st.lists(_coef, min_size=1, max_size=4)


@st.composite
def qscalars(draw):
    num = draw(_poly)
    den = draw(_poly.filter(lambda c: any(c)))
    shift = draw(st.integers(min_value=-3, max_value=3))
    return QScalar.make(num, shift, den)


@given(qscalars(), qscalars(), qscalars())
@settings(max_examples=150, deadline=None)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inv() == ONE


@given(qscalars())
@settings(max_examples=100, deadline=None)
def test_canonicalization_idempotent(a):
    again = QScalar.make(a.num, a.shift, a.den)
    assert again == a
    assert P(str(a)) == a


@given(qscalars(), qscalars())
@settings(max_examples=100, deadline=None)
def test_specialization_is_homomorphism(a, b):
    s0 = Fraction(2)
    try:
        va, vb = a.specialize(s0), b.specialize(s0)
    except SpecializationError:
        return
    assert (a + b).specialize(s0) == va + vb
    assert (a * b).specialize(s0) == va * vb


def test_omega_pole_free_at_2():
    for b in range(-20, 21):
        if b == 0:
            continue
        omega("int", b).specialize(2)
        omega("half", b).specialize(2)


def test_omega_zero_at_b0():
    assert omega("int", 0) == ZERO
    assert omega("half", 0) == ZERO


def test_omega_half_antisymmetry():
    # omega(b) - omega(-b) = 2*omega(b) for the half flavor, i.e. omega(-b) = -omega(b)
    for b in (1, 2, 3):
        w = omega("half", b)
        assert omega("half", -b) == -w
