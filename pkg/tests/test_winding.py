import random
from math import gcd

import pytest

from primehopf import FamilySpec, TruncationWindow, make_family, root_of_unity
from primehopf.hopf import random_element
from primehopf.winding import (
    Character,
    Grading,
    WindingAuto,
    center_in_h0,
    character_inverse,
    character_order,
    check_winding_identities,
    convolution_power,
    convolve,
    counit_character,
    dichotomy,
    graded_decomposition,
    integral_character,
    invariant_report,
    io_im,
    jiq,
    pi_degree,
    strong_grading_witness,
    verify_fixed_rings,
    verify_jiq_ideal,
)


def test_characters_form_a_group():
    H = make_family(FamilySpec.liu(4, 2))
    pi = integral_character(H)
    e = counit_character(H)
    assert convolve(pi, character_inverse(pi)) == e
    assert convolve(e, pi) == pi
    assert convolution_power(pi, 4) == e and convolution_power(pi, -1) == character_inverse(pi)
    assert character_order(pi) == 4


def test_character_rejects_relation_violation():
    H = make_family(FamilySpec.taft(3, 1))
    with pytest.raises(ValueError):
        Character(H, {"g": 2, "x": 0})
    with pytest.raises(ValueError):
        Character(H, {"g": 1, "x": 1})  # x g = xi g x forces x -> 0


def test_winding_of_taft_generators():
    H = make_family(FamilySpec.taft(4, 1))
    pi = integral_character(H)
    L, R = WindingAuto(pi, "left"), WindingAuto(pi, "right")
    g, x = H.generator("g"), H.generator("x")
    xi = H.xi
    assert L(g) == xi.inverse() * g and L(x) == x
    assert R(g) == xi.inverse() * g and R(x) == xi.inverse() * x


@pytest.mark.parametrize("spec, want", [
    (FamilySpec.polynomial_line(), (1, 1, 1)),
    (FamilySpec.laurent_line(), (1, 1, 1)),
    (FamilySpec.dihedral(), (2, 1, 2)),
    (FamilySpec.taft(6, 2), (6, 3, 6)),
    (FamilySpec.taft(6, 0), (6, 1, 6)),
    (FamilySpec.taft(5, 3), (5, 5, 5)),
    (FamilySpec.liu(4, 2), (4, 4, 4)),
    (FamilySpec.liu(3, 5), (3, 3, 3)),
])
def test_invariants(spec, want):
    H = make_family(spec)
    assert io_im(H) + (pi_degree(H),) == want


@pytest.mark.parametrize("spec", [FamilySpec.taft(4, 2), FamilySpec.taft(3, 0), FamilySpec.liu(4, 6), FamilySpec.dihedral()])
def test_fixed_rings(spec):
    H = make_family(spec)
    assert verify_fixed_rings(H) == {"left": True, "right": True, "both": True}


def test_graded_decomposition_covers_window():
    H = make_family(FamilySpec.taft(4, 2))
    W = TruncationWindow(4)
    dec = graded_decomposition(H, W, "both")
    assert sum(len(v) for v in dec.values()) == len(W.monomials(H))
    # the right winding scales x by xi^-t and g by xi^-1, so x sits in (0, t)
    gr = Grading(H)
    assert gr.bi_index((0, 1)) == (0, 2)
    assert gr.bi_index((1, 0)) == (1, 1)


@pytest.mark.parametrize("spec", [FamilySpec.taft(5, 2), FamilySpec.liu(6, 4), FamilySpec.dihedral()])
def test_strong_grading_every_component(spec):
    H = make_family(spec)
    io, _ = io_im(H)
    for side in ("left", "right"):
        for chi in range(io):
            b, cert = strong_grading_witness(H, chi, side=side)
            assert cert["holds"], (side, chi, cert)


def test_strong_grading_missing_component():
    H = make_family(FamilySpec.taft(3, 1))
    with pytest.raises(LookupError):
        strong_grading_witness(H, 7)


@pytest.mark.parametrize("spec", [FamilySpec.taft(4, 1), FamilySpec.taft(4, 2), FamilySpec.liu(4, 2), FamilySpec.dihedral()])
def test_winding_identities(spec):
    H = make_family(spec)
    rng = random.Random(3)
    out = check_winding_identities(H, [random_element(H, rng) for _ in range(6)])
    assert all(out.values()), out


@pytest.mark.parametrize("n, t", [(3, 1), (4, 2), (4, 0)])
def test_jiq_taft(n, t):
    H = make_family(FamilySpec.taft(n, t))
    J = jiq(H)
    assert J.quotient_dimension == n and J.commutative_semisimple
    assert J.contains(H.generator("x"))
    assert not J.contains(H.one())
    assert verify_jiq_ideal(H, TruncationWindow(3))


def test_jiq_liu():
    H = make_family(FamilySpec.liu(3, 2))
    J = jiq(H, TruncationWindow(1))
    assert J.quotient_dimension == 3 and J.commutative_semisimple
    assert J.contains(H.generator("y")) and J.contains(H.generator("x") - H.one())
    assert verify_jiq_ideal(H, TruncationWindow(1))


@pytest.mark.parametrize("spec, want", [
    (FamilySpec.polynomial_line(), "primitive"),
    (FamilySpec.laurent_line(), "grouplike"),
    (FamilySpec.dihedral(), "grouplike"),
    (FamilySpec.taft(4, 1), "primitive"),
    (FamilySpec.liu(4, 1), "grouplike"),
])
def test_dichotomy(spec, want):
    assert dichotomy(make_family(spec)) == want


def test_center_lies_in_h0():
    for spec in (FamilySpec.taft(4, 2), FamilySpec.liu(3, 3), FamilySpec.dihedral()):
        assert center_in_h0(make_family(spec), TruncationWindow(2))


def test_report_field_order():
    rep = invariant_report(make_family(FamilySpec.taft(4, 2, root_of_unity(4, 3))))
    assert list(rep.to_dict()) == ["family", "params", "io", "im", "pi_degree", "h_l0_gens",
                                   "h_r0_gens", "h0_gens", "jiq_gens", "dichotomy"]
    assert (rep.io, rep.im, rep.pi_degree) == (4, 2, 4)
    assert rep.h0_gens == ["x^2"]
