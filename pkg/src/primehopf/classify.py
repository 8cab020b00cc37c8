"""Classification oracle, Hopf isomorphism checks and aggregated reports."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .elements import AlgebraElement, TensorElement
from .hopf import (
    TruncationWindow,
    coproduct,
    counit,
    antipode,
    grouplike_certificate,
    mutated_presentation,
    random_element,
    skew_primitives,
    verify_hopf_axioms,
)
from .linalg import Echelon
from .presentations import FamilySpec, HopfPresentation, make_family
from .scalars import multiplicative_order, primitive_root, root_of_unity
from .winding import (
    center_in_h0,
    check_winding_identities,
    character_order,
    dichotomy,
    integral_character,
    invariant_report,
    io_im,
    jiq,
    strong_grading_witness,
    verify_fixed_rings,
    verify_jiq_ideal,
)

DICHOTOMIES = ("primitive", "grouplike", "any")


@dataclass(frozen=True)
class ClassificationQuery:
    io: int
    im: int
    dichotomy: str = "any"

    def __post_init__(self):
        if self.io < 1 or self.im < 1:
            raise ValueError("io and im must be positive")
        if self.io % self.im:
            raise ValueError(f"im = {self.im} does not divide io = {self.io}")
        if self.dichotomy not in DICHOTOMIES:
            raise ValueError(f"dichotomy must be one of {DICHOTOMIES}")


@dataclass
class FamilyTemplate:
    """A parameterised family; ``free`` names the parameters left open."""

    family: str
    fixed: dict
    free: str
    dichotomy: str

    def instances(self, wmax: int = 4) -> list:
        n = self.fixed.get("n")
        if self.family == "PolynomialLine":
            return [FamilySpec.polynomial_line()]
        if self.family == "LaurentLine":
            return [FamilySpec.laurent_line()]
        if self.family == "Dihedral":
            return [FamilySpec.dihedral()]
        roots = [root_of_unity(n, k) for k in range(1, n) if gcd(k, n) == 1]
        if self.family == "Taft":
            ts = [self.fixed["t"]] if "t" in self.fixed else [t for t in range(1, n) if gcd(t, n) == 1]
            return [FamilySpec.taft(n, t, xi) for t in ts for xi in roots]
        return [FamilySpec.liu(n, w, xi=xi) for w in range(1, wmax + 1) for xi in roots]

    def __str__(self) -> str:
        fixed = ", ".join(f"{k}={v}" for k, v in self.fixed.items())
        return f"{self.family}({fixed}; {self.free})" if self.free else f"{self.family}({fixed})"


@dataclass
class Classification:
    status: str  # "classified" or "open"
    templates: list
    note: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "templates": [str(t) for t in self.templates], "note": self.note}


def classify(q: ClassificationQuery) -> Classification:
    """Prime regular Hopf algebras of GK-dimension one with the given io, im
    and dichotomy, when im is 1 or io."""
    io, im, d = q.io, q.im, q.dichotomy
    want = lambda kind: d in ("any", kind)
    out = []
    if io == 1:
        if want("primitive"):
            out.append(FamilyTemplate("PolynomialLine", {}, "", "primitive"))
        if want("grouplike"):
            out.append(FamilyTemplate("LaurentLine", {}, "", "grouplike"))
        return Classification("classified", out)
    if im == 1:
        if want("primitive"):
            out.append(FamilyTemplate("Taft", {"n": io, "t": 0}, "xi a primitive n-th root of 1", "primitive"))
        if want("grouplike") and io == 2:
            out.append(FamilyTemplate("Dihedral", {}, "", "grouplike"))
        return Classification("classified", out)
    if im == io:
        if want("primitive"):
            out.append(FamilyTemplate("Taft", {"n": io}, "gcd(t, n) = 1, xi a primitive n-th root of 1", "primitive"))
        if want("grouplike"):
            out.append(FamilyTemplate("Liu", {"n": io}, "w >= 1, xi a primitive n-th root of 1", "grouplike"))
        return Classification("classified", out)
    return Classification(
        "open",
        [],
        f"1 < im = {im} < io = {io}: no classification is known in this range "
        f"(Taft algebras H({io}, t, xi) with gcd(t, {io}) = {io // im} are examples, but completeness is open)",
    )


# isomorphisms --------------------------------------------------------------------------


@dataclass
class IsoVerdict:
    verdict: str  # hopf-isomorphic / not-isomorphic / undecided
    witness: Optional[dict] = None
    violated: str = ""

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = {g: str(v) for g, v in self.witness.items()}
        if self.violated:
            out["violated"] = self.violated
        return out


def _image_word(A: HopfPresentation, images: dict, word) -> AlgebraElement:
    B = next(iter(images.values())).H
    out = B.one()
    for gen, e in word:
        if gen in A.aliases:
            img = _image_word(A, images, A.aliases[gen])
        else:
            img = images[gen]
        if e < 0:
            img = B.invert_monomial_element(img)
        out = out * img ** abs(e)
    return out


def apply_map(A: HopfPresentation, images: dict, a: AlgebraElement) -> AlgebraElement:
    B = next(iter(images.values())).H
    out = B.zero()
    for m, c in a.terms.items():
        out = out + _image_word(A, images, A.monomial_word(m)).scale(c)
    return out


def hopf_iso_check(A: HopfPresentation, B: HopfPresentation, images: dict, window: Optional[TruncationWindow] = None) -> IsoVerdict:
    """Verify that generator images define a Hopf isomorphism A -> B."""
    images = {g: (B.normalize(v) if isinstance(v, str) else v) for g, v in images.items()}
    if set(images) != set(A.generators):
        return IsoVerdict("undecided", violated=f"images must be given for {A.generators}")
    for rel in A.relations:
        lhs = _image_word(A, images, rel.lhs)
        rhs = B.zero()
        for c, w in rel.rhs:
            rhs = rhs + _image_word(A, images, w).scale(c)
        if lhs != rhs:
            return IsoVerdict("undecided", violated=f"relation {rel.name} fails under the map")
    phi = lambda m: apply_map(A, images, A.monomial(m))
    for g in A.generators:
        a = A.generator(g)
        img = images[g]
        lhs = TensorElement(B, {}, 2)
        for (m1, m2), c in coproduct(a).terms.items():
            lhs = lhs + TensorElement.tensor(phi(m1), phi(m2)).scale(c)
        if lhs != coproduct(img):
            return IsoVerdict("undecided", violated=f"Delta({g}) not preserved")
        if counit(img) != counit(a):
            return IsoVerdict("undecided", violated=f"epsilon({g}) not preserved")
        if apply_map(A, images, antipode(a)) != antipode(img):
            return IsoVerdict("undecided", violated=f"S({g}) not preserved")
    # surjectivity: grow the window until every generator of B is hit
    D = window.D if window else (2 if A.family != "Taft" else A.n)
    cap = D if window else D + 4 * (A.n or 1)
    ech = Echelon()
    seen = set()
    while True:
        for m in TruncationWindow(D).monomials(A):
            if m not in seen:
                seen.add(m)
                ech.add(phi(m).terms)
        if ech.rank != len(seen):
            return IsoVerdict("undecided", violated=f"map is not injective on the window D={D}")
        missing = [g for g in B.generators if not ech.contains(B.generator(g).terms)]
        if not missing:
            return IsoVerdict("hopf-isomorphic", witness=images)
        if D >= cap:
            return IsoVerdict("undecided", violated=f"{missing[0]} is not in the image of the window D={D}")
        D += 1


def hopf_invariants(H: HopfPresentation) -> tuple:
    """Complete Hopf-isomorphism invariant within each family."""
    if H.family == "Taft":
        return ("Taft", H.n, H.xi ** H.t)
    if H.family == "Liu":
        return ("Liu", H.n, H.w, H.xi)
    return (H.family,)


def _witness(A: HopfPresentation, B: HopfPresentation) -> dict:
    if A.family == "Taft":
        # xi_A = xi_B^v; then g -> G^v, x -> X
        v = next(v for v in range(1, A.n) if B.xi ** v == A.xi)
        return {"g": B.generator_power("g", v), "x": B.generator("x")}
    if A.family == "Liu":
        conv = A.conversion()
        return {
            "h": B.normalize(conv.to_xg["h"]),
            "f": B.normalize(conv.to_xg["f"]),
            "y": B.generator("y"),
        }
    return {g: B.generator(g) for g in A.generators}


def family_iso(A: HopfPresentation, B: HopfPresentation) -> IsoVerdict:
    """Decide Hopf isomorphism by invariants; certify positives with a map."""
    ia, ib = hopf_invariants(A), hopf_invariants(B)
    if ia[0] != ib[0]:
        ra, rb = io_im(A) + (dichotomy(A),), io_im(B) + (dichotomy(B),)
        if ra != rb:
            return IsoVerdict("not-isomorphic", violated=f"(io, im, dichotomy) {ra} != {rb}")
        return IsoVerdict("not-isomorphic", violated=f"family {ia[0]} != {ib[0]}")
    if ia != ib:
        names = {"Taft": ("n", "xi^t"), "Liu": ("n", "w", "xi")}[ia[0]]
        for name, x, y in zip(names, ia[1:], ib[1:]):
            if x != y:
                return IsoVerdict("not-isomorphic", violated=f"{name}: {x} != {y}")
    verdict = hopf_iso_check(A, B, _witness(A, B))
    if verdict.verdict != "hopf-isomorphic":
        raise AssertionError(f"invariants agree but the witness map fails: {verdict.violated}")
    return verdict


def taft_iso_oracle(n1, t1, xi1, n2, t2, xi2) -> bool:
    """Reference criterion: H(n,t,xi) = H(n,vt,eta) when xi = eta^v."""
    if n1 != n2:
        return False
    return any(xi2 ** v == xi1 and (v * t1 - t2) % n1 == 0 for v in range(1, n1) if gcd(v, n1) == 1)


# report and suite -------------------------------------------------------------------------


def report(H: HopfPresentation):
    return invariant_report(H)


@dataclass
class SuiteResult:
    presentation: str
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"presentation": self.presentation, "passed": self.passed, "checks": self.checks}


def expected_invariants(H: HopfPresentation) -> tuple:
    if H.family in ("PolynomialLine", "LaurentLine"):
        return 1, 1, 1
    if H.family == "Dihedral":
        return 2, 1, 2
    if H.family == "Taft":
        return H.n, H.n // gcd(H.n, H.t), H.n
    return H.n, H.n, H.n


def run_suite(H: HopfPresentation, n_random: int = 20, seed: int = 0) -> SuiteResult:
    """Run every module check on H."""
    from .twistor import TwistorError, commutation_check, twistor, verify_section6

    res = SuiteResult(H.name)
    c = res.checks
    c["relations normalise"] = all(ok for _, ok in H.check_relations())
    c["hopf axioms"] = verify_hopf_axioms(H, n_random=n_random, seed=seed).passed
    c["mutated control fails"] = not verify_hopf_axioms(mutated_presentation(H), n_random=3, seed=seed).passed
    rep = invariant_report(H)
    c["io, im, PI-degree"] = (rep.io, rep.im, rep.pi_degree) == expected_invariants(H)
    c["group-like certificate"] = grouplike_certificate(H, TruncationWindow(2))["holds"]
    c["fixed rings"] = all(verify_fixed_rings(H).values())
    c["center in H_0"] = center_in_h0(H, TruncationWindow(2))
    c["strong grading"] = all(strong_grading_witness(H, i, side=s)[1]["holds"] for i in range(rep.io) for s in ("left", "right"))
    rng = random.Random(seed)
    c["winding identities"] = all(check_winding_identities(H, [random_element(H, rng) for _ in range(5)]).values())
    J = jiq(H, TruncationWindow(3))
    c["J_iq quotient"] = J.quotient_dimension == rep.io and J.commutative_semisimple
    c["J_iq = (ker eps cap H^l_0)H"] = verify_jiq_ideal(H, TruncationWindow(3))
    if H.family == "Liu":
        sp = skew_primitives(H, H.generator("g"), TruncationWindow(2))
        c["(g,1)-primitives = span{y, 1-g}"] = len(sp) == 2
    if H.family == "Taft" or H.family == "Liu":
        try:
            T = twistor(H)
        except TwistorError:
            T = None
        if T is not None:
            c["twistor identities"] = all(verify_section6(T).values())
            c["u_ij commutation"] = commutation_check(H)[0]
    return res
