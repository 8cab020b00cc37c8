import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from primehopf import FamilySpec, find_i0, make_family, root_of_unity
from primehopf.presentations import (
    PresentationError,
    check_associativity,
    find_i0_bruteforce,
    liu_generator_conversion,
    parse_word,
)


def sample(H, D, k, seed=0):
    mons = H.window_monomials(D)
    rng = random.Random(seed)
    return mons if len(mons) <= k else rng.sample(mons, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_taft_normal_form_is_associative(n):
    for t in range(n):
        H = make_family(FamilySpec.taft(n, t))
        assert check_associativity(H, sample(H, n, 14, seed=t)) == []


@pytest.mark.parametrize("n", range(2, 7))
def test_liu_normal_form_is_associative(n):
    for w in range(1, 7):
        H = make_family(FamilySpec.liu(n, w))
        assert check_associativity(H, sample(H, 1, 12, seed=w)) == [], (n, w)


def test_line_and_dihedral_associative():
    for spec in (FamilySpec.polynomial_line(), FamilySpec.laurent_line(), FamilySpec.dihedral()):
        H = make_family(spec)
        assert check_associativity(H, H.window_monomials(2)) == []


@pytest.mark.parametrize("spec", [
    FamilySpec.polynomial_line(), FamilySpec.laurent_line(), FamilySpec.dihedral(),
    FamilySpec.taft(5, 2), FamilySpec.liu(6, 4), FamilySpec.liu(5, 3), FamilySpec.liu(4, 8),
])
def test_defining_relations_hold(spec):
    H = make_family(spec)
    assert all(ok for _, ok in H.check_relations())


@pytest.mark.parametrize("n, w", [(n, w) for n in range(2, 9) for w in range(1, 9)])
def test_liu_aliases(n, w):
    H = make_family(FamilySpec.liu(n, w))
    x, g, y = H.generator("x"), H.generator("g"), H.generator("y")
    # x central, y g = xi g y, y^n = 1 - x^w = 1 - g^n
    assert x * y == y * x and x * g == g * x
    assert y * g == H.xi * (g * y)
    yn = H.generator_power("y", n)
    assert yn == H.one() - H.generator_power("x", w)
    assert yn == H.one() - H.generator_power("g", n)
    liu_generator_conversion(H)
    for a in range(-2, 3):
        for c in range(n):
            assert H.xg_from_hf(*H.hf_from_xg(a, c)) == (a, c)


def test_find_i0_examples():
    assert find_i0(6, 4) == 1
    assert find_i0(4, 2) == 0
    assert find_i0(12, 8) in find_i0_bruteforce(12, 8)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 60), st.integers(1, 60))
def test_find_i0_is_valid(n, w):
    i0 = find_i0(n, w)
    b = gcd(n, w)
    assert 0 <= i0 < b
    assert gcd(n, w // b + (n // b) * i0) == 1
    assert i0 in find_i0_bruteforce(n, w)


def test_liu_theta_or_xi():
    a = FamilySpec.liu(4, 2, xi=root_of_unity(4, 3))
    assert a.xi == root_of_unity(4, 3)
    b = FamilySpec.liu(4, 2, theta=a.theta, i0=a.i0)
    assert b == a
    with pytest.raises(PresentationError):
        FamilySpec.liu(4, 2, theta=a.theta, xi=root_of_unity(4))


@pytest.mark.parametrize("build", [
    lambda: FamilySpec.taft(4, 4),
    lambda: FamilySpec.taft(4, 1, root_of_unity(4, 2)),
    lambda: FamilySpec.taft(1, 0),
    lambda: FamilySpec.liu(1, 1),
    lambda: FamilySpec.liu(4, 2, i0=1, theta=root_of_unity(4)),  # w' + n' i0 = 3, gcd(4, 3) = 1 is fine
    lambda: FamilySpec.liu(6, 4, i0=0),  # gcd(6, 2) = 2
    lambda: FamilySpec.liu(4, 1, theta=root_of_unity(2)),
    lambda: FamilySpec("Quantum"),
])
def test_invalid_parameters(build):
    try:
        H = make_family(build())
    except PresentationError:
        return
    # only the valid alternative (i0 = 1 for n = 4, w = 2) may construct
    assert H.family == "Liu" and H.i0 == 1


def test_parse_word():
    assert parse_word("g^-1 x^2 y") == (("g", -1), ("x", 2), ("y", 1))
    with pytest.raises(PresentationError):
        parse_word("g^^2")


def test_normalize_rejects_unknown_generator():
    H = make_family(FamilySpec.taft(3, 1))
    with pytest.raises(PresentationError):
        H.normalize("z")
    with pytest.raises(PresentationError):
        H.normalize("x^-1")


def test_mixing_presentations_is_an_error():
    A = make_family(FamilySpec.taft(3, 1))
    B = make_family(FamilySpec.taft(3, 2))
    with pytest.raises(ValueError):
        A.generator("x") * B.generator("x")
