"""Quantum torus arithmetic checked against hand-expanded products."""

from hypothesis import given, settings, strategies as st

from qdual.qfield import ONE, QScalar, qs_qpow
from qdual.torus import TorusElement, torus_add, torus_bar, torus_mul, torus_scale


def mono(a, b, coeff=ONE):
    return TorusElement.monomial(a, b, coeff)


def test_mul_twist():
    # (t0 t1^2)(t0^3 t1^4) = q^6 t0^4 t1^6
    assert torus_mul(mono(1, 2), mono(3, 4)) == mono(4, 6, qs_qpow(6))


def test_mul_unit():
    x = mono(2, -1, QScalar.parse("s+1")) + mono(0, 3)
    assert TorusElement.unit() * x == x
    assert x * TorusElement.unit() == x


def test_noncommutativity():
    assert mono(0, 1) * mono(1, 0) == mono(1, 1, qs_qpow(1))
    assert mono(1, 0) * mono(0, 1) == mono(1, 1)


def test_bar_monomial():
    assert torus_bar(mono(2, 3)) == mono(2, -3, qs_qpow(-6))


def test_bar_unit():
    assert torus_bar(TorusElement.unit()) == TorusElement.unit()


def test_bar_twice_is_identity():
    assert torus_bar(torus_bar(mono(2, 3))) == mono(2, 3)


def test_vector_ops():
    x = mono(1, 0)
    assert torus_add(x, TorusElement.zero()) == x
    assert (x + x.scale(-ONE)).is_zero()
    got = torus_add(mono(1, 1, QScalar.from_int(2)), mono(1, 1, QScalar.from_int(3)))
    assert got == mono(1, 1, QScalar.from_int(5))
    assert torus_scale(QScalar.from_int(2), mono(0, 1)).terms == {
        (0, 1): QScalar.from_int(2)
    }


def test_str_grammar():
    x = mono(1, 2) + mono(-1, 0, QScalar.from_int(3))
    assert str(x) == "3*t0^-1*t1^0+1*t0^1*t1^2"
    assert str(TorusElement.zero()) == "0"


def torus_elements():
    term = st.tuples(
        st.integers(-3, 3), st.integers(-3, 3),
        st.integers(-4, 4), st.integers(-2, 2),
    )

    def build(ts):
        out = TorusElement.zero()
        for (a, b, c, k) in ts:
            out = out + mono(a, b, QScalar.from_int(c) * QScalar.s_power(k))
        return out

    return st.lists(term, max_size=3).map(build)


@given(torus_elements(), torus_elements(), torus_elements())
@settings(max_examples=60, deadline=None)
def test_mul_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(torus_elements(), torus_elements())
@settings(max_examples=60, deadline=None)
def test_bar_antihomomorphism(x, y):
    assert torus_bar(x * y) == torus_bar(y) * torus_bar(x)


@given(torus_elements())
@settings(max_examples=60, deadline=None)
def test_bar_involution(x):
    assert torus_bar(torus_bar(x)) == x


@given(torus_elements())
@settings(max_examples=60, deadline=None)
def test_unit_laws(x):
    one = TorusElement.unit()
    assert one * x == x
    assert x * one == x
