from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from primehopf.scalars import (
    CyclotomicScalar,
    format_scalar,
    multiplicative_order,
    parse_scalar,
    primitive_root,
    qbinom,
    root_of_unity,
)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


@st.composite
def scalars(draw, conductor=None):
    n = conductor or draw(st.sampled_from(CONDUCTORS))
    out = CyclotomicScalar.zero(n)
    for _ in range(draw(st.integers(0, 3))):
        c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
        out = out + root_of_unity(n, draw(st.integers(0, n - 1))) * c
    return out


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_equal_values_hash_equal_across_conductors(a, b):
    s = a + b
    big = s.lift(s.conductor * 6)
    assert hash(s) == hash(big) and s == big


@pytest.mark.parametrize("n", range(1, 13))
def test_roots_of_unity(n):
    z = primitive_root(n)
    assert z ** n == 1
    assert multiplicative_order(z) == n
    assert sum((z ** k for k in range(n)), CyclotomicScalar.zero()) == (1 if n == 1 else 0)


def test_mixed_conductor_arithmetic():
    # i * i = -1, and zeta_6^3 = -1 = zeta_4^2
    assert root_of_unity(4) ** 2 == -1
    assert root_of_unity(6, 3) == root_of_unity(4, 2)
    assert root_of_unity(12, 3) == root_of_unity(4)
    assert root_of_unity(3) + root_of_unity(3, 2) == -1


@pytest.mark.parametrize("n", range(0, 11))
def test_qbinom_at_one_is_binomial(n):
    for s in range(n + 1):
        assert qbinom(n, s, CyclotomicScalar.one()) == comb(n, s)


@pytest.mark.parametrize("n", range(2, 13))
def test_qbinom_vanishes_at_primitive_root(n):
    q = primitive_root(n)
    for s in range(1, n):
        assert qbinom(n, s, q).is_zero()
    assert qbinom(n, 0, q) == 1 and qbinom(n, n, q) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_qbinom_pascal(n):
    q = root_of_unity(7, 3)
    for s in range(1, n):
        assert qbinom(n, s, q) == qbinom(n - 1, s - 1, q) + q ** s * qbinom(n - 1, s, q)


@settings(max_examples=80, deadline=None)
@given(scalars())
def test_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


@pytest.mark.parametrize("text", ["z(0)", "z(4", "foo", "1//2"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CyclotomicScalar.zero(5).inverse()
