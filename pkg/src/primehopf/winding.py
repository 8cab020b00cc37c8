"""Characters, winding automorphisms and the invariants built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Optional

from .elements import AlgebraElement, TensorElement, _accumulate
from .hopf import (
    TruncationWindow,
    antipode,
    antipode_slot,
    coproduct,
    counit,
    is_grouplike,
    multiply_slots,
    tensor_map,
)
from .linalg import Echelon, nullspace, span_equal
from .presentations import HopfPresentation
from .scalars import CyclotomicScalar, as_scalar


class Character:
    """Algebra map H -> k given by its values on the generators."""

    def __init__(self, H: HopfPresentation, values: dict, check: bool = True):
        self.H = H
        self.values = {g: as_scalar(values[g]) for g in H.generators}
        if check:
            bad = self.violated_relations()
            if bad:
                raise ValueError(f"not a character of {H.name}: violates {bad}")

    def on_word(self, word) -> CyclotomicScalar:
        v = CyclotomicScalar.one()
        for gen, e in word:
            if gen in self.H.aliases:
                x = self.on_word(self.H.aliases[gen])
            else:
                x = self.values[gen]
            if e < 0:
                x = x.inverse()
            v = v * x ** abs(e)
        return v

    def on_monomial(self, m) -> CyclotomicScalar:
        return self.on_word(self.H.monomial_word(m))

    def __call__(self, a: AlgebraElement) -> CyclotomicScalar:
        total = CyclotomicScalar.zero()
        for m, c in a.terms.items():
            total = total + c * self.on_monomial(m)
        return total

    def violated_relations(self) -> list:
        bad = []
        for rel in self.H.relations:
            rhs = CyclotomicScalar.zero()
            for c, w in rel.rhs:
                rhs = rhs + c * self.on_word(w)
            if self.on_word(rel.lhs) != rhs:
                bad.append(rel.name)
        return bad

    def key(self) -> tuple:
        return tuple(self.values[g] for g in self.H.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.H is other.H and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        inner = ", ".join(f"{g}: {v}" for g, v in self.values.items())
        return f"Character({inner})"


def counit_character(H: HopfPresentation) -> Character:
    return Character(H, {g: H.counit_data[g] for g in H.generators})


def convolve(p: Character, q: Character) -> Character:
    """(p * q)(a) = sum p(a1) q(a2), read off the generator coproducts."""
    if p.H is not q.H:
        raise ValueError("characters of different presentations")
    H = p.H
    values = {}
    for g in H.generators:
        total = CyclotomicScalar.zero()
        for (m1, m2), c in H.coproduct_data[g].terms.items():
            total = total + c * p.on_monomial(m1) * q.on_monomial(m2)
        values[g] = total
    return Character(H, values, check=False)


def convolution_power(p: Character, k: int) -> Character:
    if k < 0:
        return convolution_power(character_inverse(p), -k)
    result = counit_character(p.H)
    for _ in range(k):
        result = convolve(result, p)
    return result


def character_inverse(p: Character) -> Character:
    """p o S."""
    H = p.H
    return Character(H, {g: p(H.antipode_data[g]) for g in H.generators}, check=False)


def character_order(p: Character, cap: int = 1000) -> int:
    e = counit_character(p.H)
    q = p
    for k in range(1, cap + 1):
        if q == e:
            return k
        q = convolve(q, p)
    raise ArithmeticError(f"character order exceeds {cap}")


def integral_character(H: HopfPresentation) -> Character:
    """The character pi through which H acts on its left integral."""
    fam = H.family
    if fam in ("PolynomialLine", "LaurentLine"):
        return counit_character(H)
    if fam == "Dihedral":
        return Character(H, {"x": 1, "g": -1})
    if fam == "Taft":
        return Character(H, {"g": H.xi.inverse(), "x": 0})
    if fam == "Liu":
        th = H.theta.inverse()
        return Character(H, {"h": th, "f": th ** H.n1, "y": 0})
    raise ValueError(f"unknown family {fam}")


# winding automorphisms ---------------------------------------------------------


class WindingAuto:
    """Xi^l_p(a) = sum p(a1) a2 or Xi^r_p(a) = sum a1 p(a2)."""

    def __init__(self, p: Character, side: str):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.p = p
        self.side = side
        self.H = p.H
        self._cache: dict = {}
        self.images = {g: self.apply(self.H.generator(g)) for g in self.H.generators}

    def apply_monomial(self, m) -> AlgebraElement:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        acc: dict = {}
        for (m1, m2), c in self.H.delta_monomial(m).terms.items():
            if self.side == "left":
                v, target = self.p.on_monomial(m1), m2
            else:
                v, target = self.p.on_monomial(m2), m1
            if not v.is_zero():
                _accumulate(acc, target, c * v)
        hit = AlgebraElement(self.H, acc)
        self._cache[m] = hit
        return hit

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        return a.map_monomials(self.apply_monomial)

    __call__ = apply

    def apply_multiplicative(self, a: AlgebraElement) -> AlgebraElement:
        """Same map, extended from generator images (cross-check)."""
        H = self.H

        def on_monomial(m):
            out = H.one()
            for gen, e in H.monomial_word(m):
                img = self.images[gen]
                if e < 0:
                    img = H.invert_monomial_element(img)
                out = out * img ** abs(e)
            return out

        return a.map_monomials(on_monomial)

    def table(self) -> tuple:
        return tuple(self.images[g] for g in self.H.generators)

    def eigenvalue(self, m) -> CyclotomicScalar:
        img = self.apply_monomial(m)
        if set(img.terms) != {m}:
            raise ArithmeticError(f"{self.H.format_monomial(m)} is not an eigenvector of {self}")
        return img.terms[m]

    def __eq__(self, other) -> bool:
        return isinstance(other, WindingAuto) and self.table() == other.table()

    def __hash__(self) -> int:
        return hash(self.table())

    def __repr__(self) -> str:
        inner = ", ".join(f"{g} -> {img}" for g, img in self.images.items())
        return f"Xi^{self.side[0]}({inner})"


def winding_auto(p: Character, side: str) -> WindingAuto:
    return WindingAuto(p, side)


def winding_group(H: HopfPresentation, side: str, pi: Optional[Character] = None) -> list:
    """[Xi_{pi^k} for k = 0 .. io-1] as winding automorphisms."""
    pi = pi or integral_character(H)
    io = character_order(pi)
    return [WindingAuto(convolution_power(pi, k), side) for k in range(io)]


def io_im(H: HopfPresentation) -> tuple[int, int]:
    pi = integral_character(H)
    io = character_order(pi)
    left = {a.table() for a in winding_group(H, "left", pi)}
    right = {a.table() for a in winding_group(H, "right", pi)}
    return io, len(left) // len(left & right)


# gradings -----------------------------------------------------------------------


def _discrete_log(value: CyclotomicScalar, base: CyclotomicScalar, order: int) -> int:
    p = CyclotomicScalar.one()
    for k in range(order):
        if p == value:
            return k
        p = p * base
    raise ArithmeticError(f"{value} is not a power of {base}")


class Grading:
    """Indices of normal monomials under the left and right winding actions.

    The index of m is the k with Xi(m) = zeta^k m, where zeta is the
    eigenvalue of the grading generator (g, or h for Liu)."""

    def __init__(self, H: HopfPresentation, pi: Optional[Character] = None):
        self.H = H
        self.pi = pi or integral_character(H)
        self.io = character_order(self.pi)
        self.autos = {s: WindingAuto(self.pi, s) for s in ("left", "right")}
        self.base = {}
        for s, auto in self.autos.items():
            gg = H.grading_generator
            if gg is None:
                self.base[s] = CyclotomicScalar.one()
            else:
                self.base[s] = auto.eigenvalue(H.generator_monomial(gg, 1))

    def index(self, m, side: str) -> int:
        lam = self.autos[side].eigenvalue(m)
        return _discrete_log(lam, self.base[side], self.io)

    def bi_index(self, m) -> tuple[int, int]:
        return self.index(m, "left"), self.index(m, "right")


def graded_decomposition(H: HopfPresentation, window: Optional[TruncationWindow] = None, side: str = "both") -> dict:
    """index -> list of window monomials; keys are (i, j) when side='both'."""
    window = window or TruncationWindow.default(H)
    gr = Grading(H)
    out: dict = {}
    for m in window.monomials(H):
        key = gr.bi_index(m) if side == "both" else gr.index(m, side)
        out.setdefault(key, []).append(m)
    return out


def component_is_nonzero(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> dict:
    """Left and right components 0 .. io-1 each meet the window."""
    io = character_order(integral_character(H))
    out = {}
    for side in ("left", "right"):
        dec = graded_decomposition(H, window, side)
        out[side] = all(dec.get(i) for i in range(io))
    return out


# fixed rings ----------------------------------------------------------------------


@dataclass
class RingDescription:
    label: str
    gens: list  # words as text, the subalgebra generators

    def __str__(self) -> str:
        return self.label


def fixed_ring_descriptions(H: HopfPresentation) -> dict:
    """Expected generators for H^l_0, H^r_0 and H_0."""
    fam = H.family
    if fam == "PolynomialLine":
        d = RingDescription("k[x]", ["x"])
        return {"left": d, "right": d, "both": d}
    if fam in ("LaurentLine", "Dihedral"):
        d = RingDescription("k[x^+-1]", ["x", "x^-1"])
        return {"left": d, "right": d, "both": d}
    if fam == "Taft":
        n, t = H.n, H.t
        m = n // gcd(n, t)
        right = "x" if t == 0 else f"x g^-{t}"
        return {
            "left": RingDescription("k[x]", ["x"]),
            "right": RingDescription(f"k[{right}]", [right]),
            "both": RingDescription(f"k[x^{m}]" if m > 1 else "k[x]", [f"x^{m}" if m > 1 else "x"]),
        }
    if fam == "Liu":
        return {
            "left": RingDescription("k<y, x^+-1>", ["y", "x", "x^-1"]),
            "right": RingDescription("k<y g^-1, x^+-1>", ["y g^-1", "x", "x^-1"]),
            "both": RingDescription("k[x^+-1]", ["x", "x^-1"]),
        }
    raise ValueError(fam)


def subalgebra_slice(H: HopfPresentation, gens: list, window_set: set) -> list:
    """Spanning vectors of the subalgebra generated by gens, restricted to
    products that never leave the window."""
    gen_elems = [H.normalize(w) if isinstance(w, str) else w for w in gens]
    ech = Echelon()
    found = []
    queue = [H.one()]
    while queue:
        a = queue.pop()
        if not set(a.terms) <= window_set:
            continue
        independent, _ = ech.add(a.terms)
        if not independent:
            continue
        found.append(a)
        for g in gen_elems:
            queue.append(a * g)
    return found


def fixed_monomials(H: HopfPresentation, window: TruncationWindow, side: str) -> list:
    gr = Grading(H)
    out = []
    for m in window.monomials(H):
        i, j = gr.bi_index(m)
        if (side == "left" and i == 0) or (side == "right" and j == 0) or (side == "both" and i == j == 0):
            out.append(m)
    return out


def verify_fixed_rings(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> dict:
    """For each side, the fixed monomials of the window span exactly the
    window slice of the described subalgebra."""
    window = window or TruncationWindow.default(H)
    wset = set(window.monomials(H))
    desc = fixed_ring_descriptions(H)
    out = {}
    for side in ("left", "right", "both"):
        fixed = fixed_monomials(H, window, side)
        sub = subalgebra_slice(H, desc[side].gens, wset)
        out[side] = span_equal([{m: CyclotomicScalar.one()} for m in fixed], [a.terms for a in sub])
    return out


# strong grading ---------------------------------------------------------------------


def strong_grading_witness(H: HopfPresentation, chi: int, window: Optional[TruncationWindow] = None, side: str = "left"):
    """b in component chi with epsilon(b) = 1 and sum b1 S(b2) = 1.

    Since the b1 also lie in component chi, this exhibits 1 in H_chi H."""
    window = window or TruncationWindow.default(H)
    gr = Grading(H)
    for m in sorted(window.monomials(H), key=lambda m: (H.monomial_size(m), m)):
        if gr.index(m, side) != chi:
            continue
        e = H.counit_monomial(m)
        if e.is_zero():
            continue
        b = H.monomial(m, e.inverse())
        d = coproduct(b)
        total = multiply_slots(antipode_slot(d, 1))
        firsts_ok = all(gr.index(m1, side) == chi for m1, _ in d.terms)
        cert = {
            "b": str(b),
            "expansion": [f"{c} * {H.format_monomial(m1)} * S({H.format_monomial(m2)})" for (m1, m2), c in d.terms.items()],
            "sum": str(total),
            "b1_in_component": firsts_ok,
            "holds": total == H.one() and firsts_ok,
        }
        return b, cert
    raise LookupError(f"no witness for component {chi} in window D={window.D}; enlarge the window")


# J_iq -------------------------------------------------------------------------------


@dataclass
class JiqResult:
    io: int
    quotient_dimension: int
    commutative_semisimple: bool
    kernel_slice: list  # basis of J_iq on the window, as term dicts
    powers: list = field(repr=False, default_factory=list)

    def contains(self, a: AlgebraElement) -> bool:
        return all(p(a).is_zero() for p in self.powers)


def jiq(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> JiqResult:
    """J_iq as the common kernel of the convolution powers of pi.

    The evaluation a -> (pi^i(a))_i is an algebra map to k^io with kernel
    J_iq; when it has rank io on the window, H/J_iq = k^io, which is
    commutative and semisimple."""
    window = window or TruncationWindow.default(H)
    pi = integral_character(H)
    io = character_order(pi)
    powers = [convolution_power(pi, i) for i in range(io)]
    distinct = len(set(powers)) == io
    columns = []
    for m in window.monomials(H):
        columns.append((m, {i: p.on_monomial(m) for i, p in enumerate(powers) if not p.on_monomial(m).is_zero()}))
    ech = Echelon()
    for _, v in columns:
        ech.add(v)
    kernel = nullspace(columns)
    return JiqResult(io, ech.rank, distinct and ech.rank == io, kernel, powers)


def right_ideal_slice(H: HopfPresentation, gens: list, window: TruncationWindow) -> list:
    """Span of k*m for k in gens and m a window monomial, keeping only the
    products that stay in the window."""
    wset = set(window.monomials(H))
    out = []
    for k in gens:
        for m in wset:
            p = k * H.monomial(m)
            if p.terms and set(p.terms) <= wset:
                out.append(p.terms)
    return out


def jiq_generators(H: HopfPresentation) -> list:
    """u - epsilon(u) for the generators u of H^l_0, minus repeats."""
    out = []
    seen = set()
    for w in fixed_ring_descriptions(H)["left"].gens:
        u = H.normalize(w)
        k = u - H.scalar_element(counit(u))
        if k.is_zero():
            continue
        if w.endswith("^-1") and w[:-3] in seen:
            continue  # x^-1 - 1 = -x^-1 (x - 1)
        seen.add(w)
        out.append(k)
    return out


def verify_jiq_ideal(H: HopfPresentation, window: Optional[TruncationWindow] = None, small: int = 1) -> bool:
    """J_iq = (ker epsilon cap H^l_0) H on the window slice."""
    window = window or TruncationWindow.default(H)
    res = jiq(H, window)
    small_w = TruncationWindow(small)
    fixed = fixed_monomials(H, small_w, "left")
    ker = nullspace([(m, {0: H.counit_monomial(m)} if not H.counit_monomial(m).is_zero() else {}) for m in fixed])
    gens = [H.element(v) for v in ker]
    return span_equal(res.kernel_slice, right_ideal_slice(H, gens, window))


# center and PI-degree ------------------------------------------------------------------


def center_truncated(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> list:
    """Basis of {z in slice : z u = u z for every generator u}."""
    window = window or TruncationWindow.default(H)
    gens = [H.generator(g) for g in H.generators]
    columns = []
    for m in window.monomials(H):
        z = H.monomial(m)
        image: dict = {}
        for k, u in enumerate(gens):
            for mm, c in (z * u - u * z).terms.items():
                image[(k, mm)] = c
        columns.append((m, image))
    return [H.element(v) for v in nullspace(columns)]


def _pi_windows(H: HopfPresentation) -> tuple[int, int]:
    if H.family == "Taft":
        return H.n, 2 * H.n  # the center k[x^n] grows in steps of n
    return 1, 2


def pi_degree(H: HopfPresentation) -> int:
    """sqrt of the rank of H over its center, from window growth:
    rank = (|W_D2| - |W_D1|) / (dim Z_D2 - dim Z_D1)."""
    d1, d2 = _pi_windows(H)
    w1, w2 = (TruncationWindow(d) for d in (d1, d2))
    z1, z2 = len(center_truncated(H, w1)), len(center_truncated(H, w2))
    b1, b2 = len(w1.monomials(H)), len(w2.monomials(H))
    if z2 == z1 or (b2 - b1) % (z2 - z1):
        raise ArithmeticError(f"center growth {z1}->{z2} does not divide basis growth {b1}->{b2}")
    rank = (b2 - b1) // (z2 - z1)
    r = isqrt(rank)
    if r * r != rank:
        raise ArithmeticError(f"rank over the center {rank} is not a perfect square")
    return r


def center_in_h0(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> bool:
    window = window or TruncationWindow.default(H)
    h0 = set(fixed_monomials(H, window, "both"))
    return all(set(z.terms) <= h0 for z in center_truncated(H, window))


# winding identities --------------------------------------------------------------------


def check_winding_identities(H: HopfPresentation, samples: list) -> dict:
    """The commutation rules between Delta, S and the two winding actions."""
    pi = integral_character(H)
    L, R = WindingAuto(pi, "left"), WindingAuto(pi, "right")
    Linv = WindingAuto(character_inverse(pi), "left")
    out = {"c": True, "d": True, "e": True, "f": True, "multiplicative": True}
    # d: the two actions commute, compared on generators
    out["d"] = all(L(R(H.generator(g))) == R(L(H.generator(g))) for g in H.generators)
    for a in samples:
        d = coproduct(a)
        if coproduct(L(a)) != tensor_map(d, [L.apply_monomial, None]):
            out["c"] = False
        if R(antipode(a)) != antipode(Linv(a)):
            out["e"] = False
        if tensor_map(d, [None, L.apply_monomial]) != tensor_map(d, [R.apply_monomial, None]):
            out["f"] = False
        if L(a) != L.apply_multiplicative(a) or R(a) != R.apply_multiplicative(a):
            out["multiplicative"] = False
    return out


# dichotomy and report ---------------------------------------------------------------------


def is_primitive(a: AlgebraElement) -> bool:
    one = a.H.one()
    return coproduct(a) == TensorElement.tensor(a, one) + TensorElement.tensor(one, a)


def dichotomy(H: HopfPresentation, window: Optional[TruncationWindow] = None) -> str:
    """'primitive' or 'grouplike', read off the lowest generator of H_0."""
    window = window or TruncationWindow.default(H)
    cands = [m for m in fixed_monomials(H, window, "both") if m != H._identity]
    if not cands:
        raise LookupError("H_0 is trivial on this window")
    z = H.monomial(min(cands, key=lambda m: (H.monomial_size(m), m)))
    if is_grouplike(z):
        return "grouplike"
    if is_primitive(z):
        return "primitive"
    return "neither"


@dataclass
class InvariantReport:
    family: str
    params: dict
    io: int
    im: int
    pi_degree: int
    h_l0_gens: list
    h_r0_gens: list
    h0_gens: list
    jiq_gens: list
    dichotomy: str
    integral_character: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "io": self.io,
            "im": self.im,
            "pi_degree": self.pi_degree,
            "h_l0_gens": self.h_l0_gens,
            "h_r0_gens": self.h_r0_gens,
            "h0_gens": self.h0_gens,
            "jiq_gens": self.jiq_gens,
            "dichotomy": self.dichotomy,
        }


def invariant_report(H: HopfPresentation) -> InvariantReport:
    io, im = io_im(H)
    desc = fixed_ring_descriptions(H)
    pi = integral_character(H)
    return InvariantReport(
        family=H.family,
        params=H.spec.params(),
        io=io,
        im=im,
        pi_degree=pi_degree(H),
        h_l0_gens=list(desc["left"].gens),
        h_r0_gens=list(desc["right"].gens),
        h0_gens=list(desc["both"].gens),
        jiq_gens=[str(k) for k in jiq_generators(H)],
        dichotomy=dichotomy(H),
        integral_character={g: str(v) for g, v in pi.values.items()},
    )
