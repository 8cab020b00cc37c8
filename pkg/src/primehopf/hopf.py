"""Coalgebra structure maps, Hopf-axiom checks, group-likes and skew-primitives."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .elements import AlgebraElement, TensorElement, _accumulate
from .linalg import nullspace
from .presentations import HopfPresentation, PresentationError
from .scalars import CyclotomicScalar, as_scalar


def coproduct(a: AlgebraElement) -> TensorElement:
    H = a.H
    acc: dict = {}
    for m, c in a.terms.items():
        for key, c2 in H.delta_monomial(m).terms.items():
            _accumulate(acc, key, c * c2)
    return TensorElement(H, acc, 2)


def counit(a: AlgebraElement) -> CyclotomicScalar:
    total = CyclotomicScalar.zero()
    for m, c in a.terms.items():
        total = total + c * a.H.counit_monomial(m)
    return total


def antipode(a: AlgebraElement) -> AlgebraElement:
    return a.map_monomials(a.H.antipode_monomial)


# tensor slot operations -----------------------------------------------------


def delta_slot(T: TensorElement, slot: int) -> TensorElement:
    """Apply Delta to one tensor factor, raising the arity by one."""
    H = T.H
    acc: dict = {}
    for key, c in T.terms.items():
        for (m1, m2), c2 in H.delta_monomial(key[slot]).terms.items():
            _accumulate(acc, key[:slot] + (m1, m2) + key[slot + 1:], c * c2)
    return TensorElement(H, acc, T.arity + 1)


def counit_slot(T: TensorElement, slot: int):
    """Apply epsilon to one factor; arity 2 collapses to an AlgebraElement."""
    H = T.H
    acc: dict = {}
    for key, c in T.terms.items():
        e = H.counit_monomial(key[slot])
        if not e.is_zero():
            _accumulate(acc, key[:slot] + key[slot + 1:], c * e)
    if T.arity == 2:
        return AlgebraElement(H, {k[0]: v for k, v in acc.items()})
    return TensorElement(H, acc, T.arity - 1)


def antipode_slot(T: TensorElement, slot: int) -> TensorElement:
    H = T.H
    acc: dict = {}
    for key, c in T.terms.items():
        for m, c2 in H.antipode_monomial(key[slot]).terms.items():
            _accumulate(acc, key[:slot] + (m,) + key[slot + 1:], c * c2)
    return TensorElement(H, acc, T.arity)


def multiply_slots(T: TensorElement) -> AlgebraElement:
    """m: a (x) b -> ab for a 2-tensor."""
    H = T.H
    acc: dict = {}
    for (m1, m2), c in T.terms.items():
        for m, s in H.mul_monomials(m1, m2):
            _accumulate(acc, m, c * s)
    return AlgebraElement(H, acc)


def tensor_map(T: TensorElement, maps) -> TensorElement:
    """Apply linear maps (monomial -> AlgebraElement, or None for id) slotwise."""
    H = T.H
    acc: dict = {}
    for key, c in T.terms.items():
        partial = [((), c)]
        for m, f in zip(key, maps):
            if f is None:
                partial = [(k + (m,), v) for k, v in partial]
            else:
                img = f(m).terms.items()
                partial = [(k + (m2,), v * c2) for k, v in partial for m2, c2 in img]
        for k, v in partial:
            _accumulate(acc, k, v)
    return TensorElement(H, acc, T.arity)


# windows and sampling ---------------------------------------------------------


@dataclass(frozen=True)
class TruncationWindow:
    """Degree bound D; the slice is the span of ``H.window_monomials(D)``.

    D bounds the x-degree for PolynomialLine and Taft, |x-exponent| for
    LaurentLine, Dihedral and Liu (where x is the central group-like)."""

    D: int

    def monomials(self, H: HopfPresentation) -> list:
        return H.window_monomials(self.D)

    @classmethod
    def default(cls, H: HopfPresentation) -> "TruncationWindow":
        return cls(H.default_window())


def random_scalar(rng: random.Random, conductor: int = 1) -> CyclotomicScalar:
    q = Fraction(rng.choice([1, -1, 2, -2, 3]), rng.choice([1, 1, 2, 3]))
    s = CyclotomicScalar.rational(q)
    if conductor > 2 and rng.random() < 0.4:
        from .scalars import root_of_unity

        s = s * root_of_unity(conductor, rng.randrange(conductor))
    return s


def random_element(H: HopfPresentation, rng: random.Random, D: int = 2, terms: int = 3) -> AlgebraElement:
    basis = H.window_monomials(D)
    picks = [rng.choice(basis) for _ in range(rng.randint(1, terms))]
    return H.element([(m, random_scalar(rng, H.conductor)) for m in picks])


def generator_samples(H: HopfPresentation) -> list:
    out = [H.one()]
    for g in H.generators:
        out.append(H.generator(g))
        if g in H.invertible:
            out.append(H.generator_power(g, -1))
    return out


# axioms -----------------------------------------------------------------------


@dataclass
class AxiomReport:
    presentation: str
    records: list = field(default_factory=list)

    def add(self, axiom: str, sample, ok: bool, diff) -> None:
        self.records.append(
            {"axiom": axiom, "sample": str(sample), "pass": bool(ok), "witness-difference": str(diff)}
        )

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not r["pass"]]

    def summary(self) -> dict:
        per: dict = {}
        for r in self.records:
            ok, total = per.get(r["axiom"], (0, 0))
            per[r["axiom"]] = (ok + r["pass"], total + 1)
        return per


def _diff(a, b):
    d = a - b
    return "0" if d.is_zero() else d


def check_element_axioms(a: AlgebraElement, report: AxiomReport) -> None:
    H = a.H
    d = coproduct(a)
    lhs, rhs = delta_slot(d, 0), delta_slot(d, 1)
    report.add("coassociativity", a, lhs == rhs, _diff(lhs, rhs))
    left = counit_slot(d, 0)
    report.add("left counit", a, left == a, _diff(left, a))
    right = counit_slot(d, 1)
    report.add("right counit", a, right == a, _diff(right, a))
    unit = H.scalar_element(counit(a))
    sl = multiply_slots(antipode_slot(d, 0))
    report.add("left antipode", a, sl == unit, _diff(sl, unit))
    sr = multiply_slots(antipode_slot(d, 1))
    report.add("right antipode", a, sr == unit, _diff(sr, unit))


def check_pair_axioms(a: AlgebraElement, b: AlgebraElement, report: AxiomReport) -> None:
    ab = a * b
    lhs, rhs = coproduct(ab), coproduct(a) * coproduct(b)
    tag = f"({a}) * ({b})"
    report.add("coproduct multiplicative", tag, lhs == rhs, _diff(lhs, rhs))
    e1, e2 = counit(ab), counit(a) * counit(b)
    report.add("counit multiplicative", tag, e1 == e2, e1 - e2)
    s1, s2 = antipode(ab), antipode(b) * antipode(a)
    report.add("antipode anti-multiplicative", tag, s1 == s2, _diff(s1, s2))


def check_relation_compatibility(H: HopfPresentation, report: AxiomReport) -> None:
    """Delta, epsilon and S applied letter by letter agree on both sides of
    each defining relation, so they descend to the quotient algebra."""
    for rel in H.relations:
        d_l = H.delta_word(rel.lhs)
        d_r = TensorElement(H, {}, 2)
        e_r = CyclotomicScalar.zero()
        s_r = H.zero()
        for c, w in rel.rhs:
            d_r = d_r + H.delta_word(w).scale(c)
            e_r = e_r + c * H.counit_word(w)
            s_r = s_r + H.antipode_word(w).scale(c)
        report.add("relation: Delta", rel.name, d_l == d_r, _diff(d_l, d_r))
        e_l = H.counit_word(rel.lhs)
        report.add("relation: epsilon", rel.name, e_l == e_r, e_l - e_r)
        s_l = H.antipode_word(rel.lhs)
        report.add("relation: S", rel.name, s_l == s_r, _diff(s_l, s_r))


def verify_hopf_axioms(
    H: HopfPresentation,
    samples: Optional[Iterable[AlgebraElement]] = None,
    n_random: int = 50,
    seed: int = 0,
    D: int = 2,
) -> AxiomReport:
    """Check the Hopf axioms on generators plus random truncated elements.

    One record per axiom per sample; failures are data, not exceptions."""
    report = AxiomReport(H.name)
    if samples is None:
        rng = random.Random(seed)
        samples = generator_samples(H) + [random_element(H, rng, D) for _ in range(n_random)]
    samples = list(samples)
    check_relation_compatibility(H, report)
    for a in samples:
        check_element_axioms(a, report)
    for a, b in zip(samples, samples[1:]):
        check_pair_axioms(a, b, report)
    return report


def mutated_presentation(H: HopfPresentation) -> HopfPresentation:
    """Negative control: drop one summand from the non-group-like generator's
    coproduct (for the all-group-like families, twist Delta(x) to x (x) 1)."""
    skew = [g for g in H.generators if g not in H.invertible]
    gen = skew[-1] if skew else "x"
    d = H.coproduct_data[gen]
    if len(d.terms) > 1:
        key = max(d.terms)
        image = TensorElement(H, {key: d.terms[key]}, 2)
    else:
        image = TensorElement.tensor(H.generator(gen), H.one())
    return H.with_coproduct(gen, image)


# group-likes and skew-primitives -----------------------------------------------


def is_grouplike(a: AlgebraElement) -> bool:
    return coproduct(a) == TensorElement.tensor(a, a) and counit(a) == 1


def grouplike_certificate(H: HopfPresentation, window: TruncationWindow) -> dict:
    """Certify that every group-like element of the slice is a monomial.

    Two facts are checked on every window monomial m:
      * Delta is graded for the skew degree: each term m1 (x) m2 of Delta(m)
        has deg m1 + deg m2 = deg m;
      * Delta(m) = m (x) m whenever deg m = 0.
    If a = a_0 + ... + a_d is group-like with a_d != 0 and d > 0, the
    bidegree (d, d) part of a (x) a is a_d (x) a_d != 0, while Delta(a) only
    reaches total degree d < 2d.  So a has degree 0, and there Delta is
    diagonal on monomials, which forces a to be one monomial with
    coefficient 1.
    """
    graded = True
    diagonal = True
    bad = None
    for m in window.monomials(H):
        deg = H.skew_degree(m)
        d = H.delta_monomial(m)
        for m1, m2 in d.terms:
            if H.skew_degree(m1) + H.skew_degree(m2) != deg:
                graded, bad = False, m
        if deg == 0 and d != TensorElement.tensor(H.monomial(m), H.monomial(m)):
            diagonal, bad = False, m
    return {"graded": graded, "diagonal_in_degree_0": diagonal, "holds": graded and diagonal,
            "offending_monomial": None if bad is None else H.format_monomial(bad)}


def grouplikes(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> list:
    """All group-like elements inside the window slice, certified exhaustive."""
    window = window or TruncationWindow.default(H)
    cert = grouplike_certificate(H, window)
    if not cert["holds"]:
        raise ArithmeticError(f"group-like certificate failed for {H.name}: {cert}")
    out = []
    for m in window.monomials(H):
        a = H.monomial(m)
        if H.skew_degree(m) == 0 and is_grouplike(a):
            out.append(a)
    return out


def skew_primitives(H: HopfPresentation, a: AlgebraElement, window: Optional[TruncationWindow] = None) -> list:
    """Basis of {z in slice : Delta(z) = z (x) a + 1 (x) z}."""
    if not is_grouplike(a):
        raise ValueError(f"{a} is not group-like")
    window = window or TruncationWindow.default(H)
    one = H.one()
    columns = []
    for m in window.monomials(H):
        z = H.monomial(m)
        image = H.delta_monomial(m) - TensorElement.tensor(z, a) - TensorElement.tensor(one, z)
        columns.append((m, image.terms))
    return [H.element(v) for v in nullspace(columns)]
