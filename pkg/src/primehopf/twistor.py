"""The twistor H_tw = H/(ker eps cap H_0)H and its structure tables.

Basis labels are pairs (i, j), 0 <= i, j < n, standing for v_ij, the image
of u_ij = g^i y^((j - i) mod n).  For a Taft algebra y = x and g is replaced
by g^t (so xi becomes xi^t); for a Liu algebra g and y are the usual ones.
Tables are computed by multiplying the lifts in H and reducing:
Taft drops every monomial of x-degree >= n, Liu sends x to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .elements import AlgebraElement, _accumulate
from .hopf import coproduct, counit, antipode
from .linalg import Echelon, nullspace
from .presentations import HopfPresentation
from .scalars import CyclotomicScalar, qbinom


class TwistorError(ValueError):
    pass


def _check_applicable(H: HopfPresentation) -> None:
    if H.family == "Taft":
        if gcd(H.t, H.n) != 1:
            raise TwistorError(
                f"{H.name}: the twistor is only defined when io = im, i.e. gcd(t, n) = 1; "
                f"here gcd({H.t}, {H.n}) = {gcd(H.t, H.n)}"
            )
    elif H.family != "Liu":
        raise TwistorError(
            f"{H.name}: twistors are built for Taft algebras with gcd(t, n) = 1 and Liu algebras only"
        )


def twistor_q(H: HopfPresentation) -> CyclotomicScalar:
    """xi' with y g = xi' g y for the twistor generators."""
    return H.xi ** H.t if H.family == "Taft" else H.xi


def lift_monomial(H: HopfPresentation, i: int, j: int):
    """Normal monomial of u_ij = g^i y^((j - i) mod n) in H."""
    n = H.n
    l = (j - i) % n
    if H.family == "Taft":
        return ((H.t * i) % n, l)
    hi, fj = H.hf_from_xg(0, i % n)
    return (hi, fj, l)


def lift(H: HopfPresentation, i: int, j: int) -> AlgebraElement:
    return H.monomial(lift_monomial(H, i, j))


def reduce_monomial(H: HopfPresentation, m):
    """Label of the image of a monomial, or None when it maps to 0."""
    n = H.n
    if H.family == "Taft":
        a, b = m
        if b >= n:
            return None
        i = (a * pow(H.t, -1, n)) % n
        return (i, (i + b) % n)
    _, c = H.xg_from_hf(m[0], m[1])
    return (c, (c + m[2]) % n)


def reduce_element(H: HopfPresentation, a: AlgebraElement) -> dict:
    acc: dict = {}
    for m, c in a.terms.items():
        lab = reduce_monomial(H, m)
        if lab is not None:
            _accumulate(acc, lab, c)
    return acc


@dataclass
class TwistorAlgebra:
    source: str
    n: int
    q: CyclotomicScalar
    labels: list
    mult: dict  # (a, b) -> {c: coeff}
    counit: dict  # a -> scalar
    antipode: dict  # a -> {c: coeff}
    coproduct: dict  # a -> {(b, c): coeff}
    coeffs: dict = field(default_factory=dict)  # (i, j, s, t) -> c^{ij}_{st}

    @property
    def dimension(self) -> int:
        return len(self.labels)

    # table arithmetic

    def multiply(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for c, cc in self.mult[(a, b)].items():
                    _accumulate(acc, c, ca * cb * cc)
        return acc

    def basis(self, a) -> dict:
        return {a: CyclotomicScalar.one()}

    def power(self, u: dict, k: int) -> dict:
        out = self.basis((0, 0))
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def c(self, i, j, s, t) -> CyclotomicScalar:
        return self.coeffs.get((i % self.n, j % self.n, s % self.n, t % self.n), CyclotomicScalar.zero())

    def to_dict(self) -> dict:
        lab = lambda a: f"v{a[0]}{a[1]}" if self.n <= 10 else f"v{a[0]}_{a[1]}"
        return {
            "source": self.source,
            "dimension": self.dimension,
            "q": str(self.q),
            "multiplication": [[lab(a), lab(b), lab(c), str(v)] for (a, b), row in sorted(self.mult.items()) for c, v in sorted(row.items())],
            "coproduct": [[lab(a), lab(b), lab(c), str(v)] for a, row in sorted(self.coproduct.items()) for (b, c), v in sorted(row.items())],
            "counit": {lab(a): str(v) for a, v in sorted(self.counit.items())},
            "antipode": {lab(a): {lab(c): str(v) for c, v in sorted(row.items())} for a, row in sorted(self.antipode.items())},
        }


def twistor(H: HopfPresentation) -> TwistorAlgebra:
    _check_applicable(H)
    n = H.n
    labels = [(i, j) for i in range(n) for j in range(n)]
    lifts = {a: lift(H, *a) for a in labels}
    mult = {}
    for a in labels:
        for b in labels:
            mult[(a, b)] = reduce_element(H, lifts[a] * lifts[b])
    eps = {a: counit(lifts[a]) for a in labels}
    anti = {a: reduce_element(H, antipode(lifts[a])) for a in labels}
    cop = {}
    coeffs = {}
    for a in labels:
        acc: dict = {}
        for (m1, m2), c in coproduct(lifts[a]).terms.items():
            l1, l2 = reduce_monomial(H, m1), reduce_monomial(H, m2)
            if l1 is not None and l2 is not None:
                _accumulate(acc, (l1, l2), c)
        cop[a] = acc
        i, j = a
        for (l1, l2), c in acc.items():
            if l1[0] != i or l2[1] != j:
                raise TwistorError(f"Delta(v{i}{j}) has a term outside v_i* (x) v_*j: {l1} (x) {l2}")
            coeffs[(i, j, l1[1], l2[0])] = c
    return TwistorAlgebra(H.name, n, twistor_q(H), labels, mult, eps, anti, cop, coeffs)


def coproduct_table(T: TwistorAlgebra) -> dict:
    """(i, j, s) -> c^{ij}_{ss}; raises if any c^{ij}_{st} with s != t is
    nonzero or c^{0j}_{ss} differs from the q-binomial."""
    n = T.n
    for (i, j, s, t), c in T.coeffs.items():
        if s != t and not c.is_zero():
            raise TwistorError(f"c^{{{i}{j}}}_{{{s}{t}}} = {c} should vanish")
    table = {(i, j, s): T.c(i, j, s, s) for i in range(n) for j in range(n) for s in range(n)}
    for j in range(n):
        for s in range(n):
            want = qbinom(j, s, T.q) if s <= j else CyclotomicScalar.zero()
            if table[(0, j, s)] != want:
                raise TwistorError(f"c^{{0{j}}}_{{{s}{s}}} = {table[(0, j, s)]}, expected {want}")
    return table


# structural checks ------------------------------------------------------------------


def _eq(u: dict, v: dict) -> bool:
    return {k: c for k, c in u.items() if not c.is_zero()} == {k: c for k, c in v.items() if not c.is_zero()}


def _tensor_mult(T: TwistorAlgebra, u: dict, v: dict) -> dict:
    acc: dict = {}
    for (a1, a2), c in u.items():
        for (b1, b2), d in v.items():
            for p, cp in T.mult[(a1, b1)].items():
                for r, cr in T.mult[(a2, b2)].items():
                    _accumulate(acc, (p, r), c * d * cp * cr)
    return acc


def hopf_checks(T: TwistorAlgebra) -> dict:
    """Coassociativity, counit and antipode axioms from the tables."""
    one = (0, 0)
    coassoc = counit_ok = anti_ok = mult_ok = True
    for a in T.labels:
        d = T.coproduct[a]
        left: dict = {}
        right: dict = {}
        for (b, c), v in d.items():
            for (b1, b2), v2 in T.coproduct[b].items():
                _accumulate(left, (b1, b2, c), v * v2)
            for (c1, c2), v2 in T.coproduct[c].items():
                _accumulate(right, (b, c1, c2), v * v2)
        coassoc &= left == right
        l_eps: dict = {}
        r_eps: dict = {}
        sl: dict = {}
        sr: dict = {}
        for (b, c), v in d.items():
            _accumulate(l_eps, c, v * T.counit[b])
            _accumulate(r_eps, b, v * T.counit[c])
            for k, w in T.multiply(T.antipode[b], T.basis(c)).items():
                _accumulate(sl, k, v * w)
            for k, w in T.multiply(T.basis(b), T.antipode[c]).items():
                _accumulate(sr, k, v * w)
        counit_ok &= _eq(l_eps, T.basis(a)) and _eq(r_eps, T.basis(a))
        unit = {one: T.counit[a]} if not T.counit[a].is_zero() else {}
        anti_ok &= _eq(sl, unit) and _eq(sr, unit)
    for a in T.labels:
        for b in T.labels:
            lhs: dict = {}
            for k, v in T.mult[(a, b)].items():
                for key, w in T.coproduct[k].items():
                    _accumulate(lhs, key, v * w)
            if not _eq(lhs, _tensor_mult(T, T.coproduct[a], T.coproduct[b])):
                mult_ok = False
    return {"coassociative": coassoc, "counit": counit_ok, "antipode": anti_ok, "Delta multiplicative": mult_ok}


def verify_section6(T: TwistorAlgebra) -> dict:
    """Every structural identity of the twistor, checked over all indices."""
    n, q = T.n, T.q
    idx = range(n)
    one = T.basis((0, 0))
    g = T.basis((1, 1)) if n > 1 else one
    out: dict = {}
    out["dimension n^2"] = T.dimension == n * n
    out["epsilon(v_ij) = delta_ij"] = all(T.counit[(i, j)] == (1 if i == j else 0) for i in idx for j in idx)
    out["coproduct shape c^ij_st = 0 for s != t"] = all(
        c.is_zero() for (i, j, s, t), c in T.coeffs.items() if s != t
    )
    try:
        coproduct_table(T)
        out["c^0j_ss = q-binomial"] = True
    except TwistorError:
        out["c^0j_ss = q-binomial"] = False
    # g^n = 1 and v_ii = g^i
    out["g^n = 1, v_ii = g^i"] = _eq(T.power(g, n), one) and all(_eq(T.power(g, i), T.basis((i, i))) for i in idx)
    out["v_ij^n = 0 (i != j)"] = all(not T.power(T.basis((i, j)), n) for i in idx for j in idx if i != j)
    out["g v_ij = q^(i-j) v_ij g"] = all(
        _eq(T.multiply(g, T.basis((i, j))), {k: v * q ** (i - j) for k, v in T.multiply(T.basis((i, j)), g).items()})
        for i in idx for j in idx
    )
    gl = T.coproduct[(1, 1)] == {((1, 1), (1, 1)): CyclotomicScalar.one()} and T.counit[(1, 1)] == 1
    distinct3 = [(i, s, t) for i in idx for s in idx for t in idx if len({i, s, t}) == 3]
    out["g group-like"] = gl
    out["c^tt_ss = 0 and products vanish"] = all(
        T.c(t, t, s, s).is_zero()
        and (T.c(i, t, s, s) * T.c(i, s, t, t)).is_zero()
        and (T.c(t, i, s, s) * T.c(s, i, t, t)).is_zero()
        for i, s, t in distinct3
    )
    out["c^ij_ss translation invariant"] = all(
        T.c(i, j, s, s) == T.c(i - t, j - t, s - t, s - t)
        for i, j, s in distinct3 for t in idx
    )
    # k<v_01> contains every v_0i
    y = T.basis((0, 1))
    out["v_0i in k<v_01>"] = all(
        set(T.power(y, i)) == {(0, i)} for i in idx
    )
    # leading terms of Delta(v_ii), Delta(v_ij) and the coefficient relations
    out["Delta(v_ii) form, c^ii_ss = c^ss_ii"] = all(
        T.c(i, i, i, i) == 1 and all(T.c(i, i, s, s) == T.c(s, s, i, i) for s in idx if s != i) for i in idx
    )
    out["Delta(v_ij) leading terms"] = all(
        T.c(i, j, i, i) == 1 and T.c(i, j, j, j) == 1 for i in idx for j in idx if i != j
    )
    distinct4 = [(i, j, s, t) for i, j, s, t in product(idx, repeat=4) if len({i, j, s, t}) == 4]
    out["c^ij_tt c^it_ss = c^ij_ss c^sj_tt"] = all(
        T.c(i, j, t, t) * T.c(i, t, s, s) == T.c(i, j, s, s) * T.c(s, j, t, t) for i, j, s, t in distinct4
    )
    out["c^tt_ss = c^it_ss c^is_tt = c^ti_ss c^si_tt"] = all(
        T.c(t, t, s, s) == T.c(i, t, s, s) * T.c(i, s, t, t) == T.c(t, i, s, s) * T.c(s, i, t, t)
        for i, s, t in distinct3
    )
    out.update(hopf_checks(T))
    rad = jacobson_radical(T)
    out["Jac = span{v_ij : i != j}"] = _span_is(rad, [(i, j) for i in idx for j in idx if i != j])
    quo = quotient_info(T, rad)
    out["T/Jac commutative of dim n"] = quo["dimension"] == n and quo["commutative"]
    return out


def _span_is(vectors: list, labels: list) -> bool:
    e = Echelon()
    for v in vectors:
        e.add(v)
    if e.rank != len(labels):
        return False
    return all(e.contains({a: CyclotomicScalar.one()}) for a in labels)


def jacobson_radical(T: TwistorAlgebra) -> list:
    """Radical of the trace form (a, b) -> Tr(L_ab); equals Jac(T) in characteristic 0."""
    tr = {}
    for c in T.labels:
        total = CyclotomicScalar.zero()
        for k in T.labels:
            total = total + T.mult[(c, k)].get(k, CyclotomicScalar.zero())
        tr[c] = total
    columns = []
    for a in T.labels:
        image = {}
        for b in T.labels:
            v = CyclotomicScalar.zero()
            for c, w in T.mult[(a, b)].items():
                v = v + w * tr[c]
            if not v.is_zero():
                image[b] = v
        columns.append((a, image))
    return nullspace(columns)


def quotient_info(T: TwistorAlgebra, rad: list) -> dict:
    e = Echelon()
    for v in rad:
        e.add(v)
    dim = T.dimension - e.rank
    commutative = all(
        e.contains(_sub(T.mult[(a, b)], T.mult[(b, a)]))
        for a in T.labels for b in T.labels
    )
    return {"dimension": dim, "commutative": commutative}


def _sub(u: dict, v: dict) -> dict:
    acc = dict(u)
    for k, c in v.items():
        _accumulate(acc, k, -c)
    return acc


# comparisons --------------------------------------------------------------------------


@dataclass
class TwistorIso:
    isomorphic: bool
    mismatch: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def twistor_iso(A: TwistorAlgebra, B: TwistorAlgebra) -> TwistorIso:
    """Check that v_ij -> v_ij matches every table entry."""
    if A.n != B.n:
        return TwistorIso(False, f"dimensions {A.dimension} != {B.dimension}")
    for a in A.labels:
        if A.counit[a] != B.counit[a]:
            return TwistorIso(False, f"counit at v{a}: {A.counit[a]} != {B.counit[a]}")
        if not _eq(A.antipode[a], B.antipode[a]):
            return TwistorIso(False, f"antipode at v{a}")
        if not _eq(A.coproduct[a], B.coproduct[a]):
            return TwistorIso(False, f"coproduct at v{a}")
    for k in A.mult:
        if not _eq(A.mult[k], B.mult[k]):
            return TwistorIso(False, f"product v{k[0]} v{k[1]}: {A.mult[k]} != {B.mult[k]}")
    return TwistorIso(True)


def commutation_check(H: HopfPresentation) -> tuple[bool, list]:
    """u_ij u_i'j' = q^(i'j - ij') u_i'j' u_ij in H for all n^4 index tuples."""
    _check_applicable(H)
    n, q = H.n, twistor_q(H)
    u = {(i, j): lift(H, i, j) for i in range(n) for j in range(n)}
    bad = []
    for (i, j), (k, l) in product(u, repeat=2):
        lhs = u[(i, j)] * u[(k, l)]
        rhs = (u[(k, l)] * u[(i, j)]).scale(q ** ((k * j - i * l) % n))
        if lhs != rhs:
            bad.append((i, j, k, l))
    return not bad, bad
