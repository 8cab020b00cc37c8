import pytest

from primehopf import ClassificationQuery, FamilySpec, classify, family_iso, hopf_iso_check, make_family, root_of_unity
from primehopf.classify import run_suite, taft_iso_oracle


def test_query_validation():
    with pytest.raises(ValueError):
        ClassificationQuery(4, 3)
    with pytest.raises(ValueError):
        ClassificationQuery(0, 1)
    with pytest.raises(ValueError):
        ClassificationQuery(2, 1, "neither")


def test_io_one():
    res = classify(ClassificationQuery(1, 1))
    assert [t.family for t in res.templates] == ["PolynomialLine", "LaurentLine"]


def test_im_one():
    assert [t.family for t in classify(ClassificationQuery(2, 1)).templates] == ["Taft", "Dihedral"]
    assert [t.family for t in classify(ClassificationQuery(3, 1)).templates] == ["Taft"]
    assert classify(ClassificationQuery(2, 1, "grouplike")).templates[0].family == "Dihedral"


def test_im_equals_io():
    res = classify(ClassificationQuery(4, 4))
    assert res.status == "classified"
    assert {t.family for t in res.templates} == {"Taft", "Liu"}


def test_intermediate_is_open():
    res = classify(ClassificationQuery(6, 2))
    assert res.status == "open" and res.templates == [] and res.note


def test_taft_iso_by_root_change():
    # H(4,1,i) = H(4,3,-i) via g -> g^3
    z = root_of_unity(4)
    A = make_family(FamilySpec.taft(4, 1, z))
    B = make_family(FamilySpec.taft(4, 3, z ** 3))
    v = family_iso(A, B)
    assert v.verdict == "hopf-isomorphic"
    assert taft_iso_oracle(4, 1, z, 4, 3, z ** 3)
    C = make_family(FamilySpec.taft(4, 1, z ** 3))
    assert family_iso(A, C).verdict == "not-isomorphic"


def test_liu_iso_ignores_theta_choice():
    A = make_family(FamilySpec.liu(4, 2, xi=root_of_unity(4, 3)))
    B = make_family(FamilySpec.liu(4, 2, i0=1, xi=root_of_unity(4, 3)))
    assert A.i0 != B.i0
    assert family_iso(A, B).verdict == "hopf-isomorphic"
    C = make_family(FamilySpec.liu(4, 6, xi=root_of_unity(4, 3)))
    assert family_iso(A, C).verdict == "not-isomorphic"


def test_cross_family():
    A = make_family(FamilySpec.taft(2, 0))
    B = make_family(FamilySpec.dihedral())
    v = family_iso(A, B)
    assert v.verdict == "not-isomorphic" and "dichotomy" in v.violated


def test_bad_map_is_rejected():
    A = make_family(FamilySpec.taft(3, 1))
    images = {"g": A.generator("g"), "x": A.generator("x") * A.generator("x")}
    v = hopf_iso_check(A, A, images)
    assert v.verdict != "hopf-isomorphic" and v.violated


@pytest.mark.parametrize("spec", [FamilySpec.taft(3, 1), FamilySpec.liu(3, 2), FamilySpec.dihedral(), FamilySpec.laurent_line()])
def test_suite(spec):
    res = run_suite(make_family(spec), n_random=5)
    assert res.passed, {k: v for k, v in res.checks.items() if not v}
