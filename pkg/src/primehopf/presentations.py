"""The five families of prime regular Hopf algebras of GK-dimension one.

Each family is a skew-commutation plus power-relation rewriting system whose
normal words form an explicit basis:

=================  ==========================  ===============================
family             normal monomial             basis element
=================  ==========================  ===============================
PolynomialLine     (e,)          e >= 0        x^e
LaurentLine        (e,)          e in Z        x^e
Dihedral           (a, c)        a in Z, c<2   x^a g^c
Taft               (i, j)        i<n, j >= 0   g^i x^j
Liu                (i, j, l)     i in Z, j<b,  h^i f^j y^l
                                 l<n
=================  ==========================  ===============================

Multiplying two basis monomials produces at most two monomials, so the
rewriting engine is a per-family ``mul_monomials`` rule; every other
operation (normalising words, coproducts, antipodes) is built from it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterable, Optional, Sequence

from .elements import AlgebraElement, TensorElement
from .scalars import (
    CyclotomicScalar,
    as_scalar,
    multiplicative_order,
    primitive_root,
    root_of_unity,
)

FAMILIES = ("PolynomialLine", "LaurentLine", "Dihedral", "Taft", "Liu")

Word = tuple  # tuple of (generator, exponent)


class PresentationError(ValueError):
    """Invalid family parameters or an illegal word."""


# ---------------------------------------------------------------------------
# parameters


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def find_i0(n: int, w: int) -> int:
    """Smallest-formula choice of i with gcd(n, w' + n' i) = 1, reduced mod b.

    i0 is the product of the primes dividing b but not w' (1 if none);
    since w' + n'(i + b) = w' + n' i + n, only i mod b matters.
    """
    if n < 1 or w < 1:
        raise PresentationError("n and w must be positive")
    b = gcd(n, w)
    n1, w1 = n // b, w // b
    i0 = 1
    for p in _prime_factors(b):
        if w1 % p:
            i0 *= p
    i0 %= b
    assert gcd(n, w1 + n1 * i0) == 1
    return i0


def find_i0_bruteforce(n: int, w: int) -> list[int]:
    """All i in 0..b-1 with gcd(n, w' + n' i) = 1."""
    b = gcd(n, w)
    return [i for i in range(b) if gcd(n, w // b + (n // b) * i) == 1]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: Optional[int] = None
    t: Optional[int] = None
    w: Optional[int] = None
    xi: Optional[CyclotomicScalar] = None
    theta: Optional[CyclotomicScalar] = None
    i0: Optional[int] = None

    @classmethod
    def polynomial_line(cls) -> "FamilySpec":
        return cls("PolynomialLine")

    @classmethod
    def laurent_line(cls) -> "FamilySpec":
        return cls("LaurentLine")

    @classmethod
    def dihedral(cls) -> "FamilySpec":
        return cls("Dihedral")

    @classmethod
    def taft(cls, n: int, t: int, xi=None) -> "FamilySpec":
        xi = primitive_root(n) if xi is None else as_scalar(xi)
        return cls("Taft", n=n, t=t, xi=xi)

    @classmethod
    def liu(cls, n: int, w: int, theta=None, i0: Optional[int] = None, xi=None) -> "FamilySpec":
        """B(n, w, xi).  Either theta (with optional i0) or xi may be given;
        from xi alone theta is recovered as xi^(1/(w' + n' i0))."""
        if n < 2 or w < 1:
            raise PresentationError("Liu algebras need n >= 2 and w >= 1")
        b = gcd(n, w)
        if i0 is None:
            i0 = find_i0(n, w)
        if theta is None:
            if xi is None:
                theta = primitive_root(n)
            else:
                xi = as_scalar(xi)
                e = w // b + (n // b) * i0
                if gcd(e, n) != 1:
                    raise PresentationError(f"gcd(n, w' + n' i0) = {gcd(e, n)} != 1")
                theta = xi ** pow(e, -1, n)
        theta = as_scalar(theta)
        derived = theta ** (w // b + (n // b) * i0)
        if xi is not None and as_scalar(xi) != derived:
            raise PresentationError("xi is inconsistent with theta and i0")
        return cls("Liu", n=n, w=w, theta=theta, i0=i0, xi=derived)

    @property
    def b(self) -> int:
        return gcd(self.n, self.w)

    @property
    def n1(self) -> int:
        return self.n // self.b

    @property
    def w1(self) -> int:
        return self.w // self.b

    def params(self) -> dict:
        out: dict = {}
        for key in ("n", "t", "w", "i0"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        for key in ("xi", "theta"):
            v = getattr(self, key)
            if v is not None:
                out[key] = str(v)
        return out

    def label(self) -> str:
        if self.family == "Taft":
            return f"H({self.n},{self.t},{self.xi})"
        if self.family == "Liu":
            return f"B({self.n},{self.w},{self.xi})"
        return {"PolynomialLine": "k[x]", "LaurentLine": "k[x^+-1]", "Dihedral": "kD"}[self.family]


# ---------------------------------------------------------------------------
# presentations


@dataclass
class Relation:
    """lhs word = sum of coeff * word."""

    name: str
    lhs: Word
    rhs: list  # list of (CyclotomicScalar, Word)


_WORD_TOKEN = re.compile(r"\s*([A-Za-z]\w*)(?:\s*\^\s*(-?\d+))?\s*")


def parse_word(text: str) -> Word:
    """"g^2 x y^-1" -> (("g", 2), ("x", 1), ("y", -1)); "1" is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    pos, out = 0, []
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PresentationError(f"cannot parse word {text!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
        pos = m.end()
    return tuple(out)


def _fmt_power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


class HopfPresentation:
    """A family member: rewriting rules, basis, and generator coalgebra data.

    Subclasses supply ``mul_monomials``, ``monomial_word`` and the window
    enumeration; coproduct, counit and antipode on monomials are the
    multiplicative (anti-multiplicative for S) extensions of the generator
    data in ``coproduct_data``, ``counit_data`` and ``antipode_data``.
    """

    family = ""
    generators: tuple = ()
    invertible: frozenset = frozenset()
    grading_generator: Optional[str] = None

    def __init__(self, spec: FamilySpec):
        self.spec = spec
        self.name = spec.label()
        self.mutated = False
        self.aliases: dict = {}
        self._reset_caches()

    # subclass hooks --------------------------------------------------------

    conductor = 1

    def mul_monomials(self, m1, m2) -> list:  # pragma: no cover - abstract
        raise NotImplementedError

    def monomial_word(self, m) -> Word:  # pragma: no cover - abstract
        raise NotImplementedError

    def generator_monomial(self, gen: str, sign: int):  # pragma: no cover - abstract
        """Normal monomial of gen^(+-1)."""
        raise NotImplementedError

    def window_monomials(self, D: int) -> list:  # pragma: no cover - abstract
        raise NotImplementedError

    def skew_degree(self, m) -> int:
        """Degree in the non-group-like generator; Delta never raises it."""
        return 0

    def monomial_size(self, m) -> int:
        return sum(abs(e) for _, e in self.monomial_word(m))

    def default_window(self) -> int:
        return 2 * (self.spec.n or 2)

    # construction of elements ---------------------------------------------

    def _reset_caches(self) -> None:
        self._delta_cache: dict = {}
        self._delta_gen_cache: dict = {}
        self._antipode_cache: dict = {}
        self._power_cache: dict = {}

    _identity: tuple = ()

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {self._identity: CyclotomicScalar.one(self.conductor)})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def scalar_element(self, c) -> AlgebraElement:
        c = as_scalar(c)
        if c.is_zero():
            return self.zero()
        return AlgebraElement(self, {self._identity: c})

    def monomial(self, m, c=1) -> AlgebraElement:
        return AlgebraElement.from_terms(self, [(tuple(m), c)])

    def element(self, terms) -> AlgebraElement:
        if isinstance(terms, dict):
            terms = terms.items()
        return AlgebraElement.from_terms(self, terms)

    def generator(self, gen: str) -> AlgebraElement:
        return self.generator_power(gen, 1)

    def generator_power(self, gen: str, e: int) -> AlgebraElement:
        key = (gen, e)
        hit = self._power_cache.get(key)
        if hit is not None:
            return hit
        if e == 0:
            result = self.one()
        elif gen in self.aliases:
            base = self.normalize(self.aliases[gen])
            if e < 0:
                base = self.invert_monomial_element(base)
            result = self.generator_power(gen, e - 1 if e > 0 else e + 1) * base
        elif gen not in self.generators:
            raise PresentationError(f"{self.name} has no generator {gen!r}")
        else:
            if e < 0 and gen not in self.invertible:
                raise PresentationError(f"{gen} is not invertible in {self.name}")
            base = self.monomial(self.generator_monomial(gen, 1 if e > 0 else -1))
            # build up from the nearest cached power so long runs stay linear
            step = 1 if e > 0 else -1
            k = e - step
            while k and (gen, k) not in self._power_cache:
                k -= step
            result = self._power_cache.get((gen, k)) if k else self.one()
            while k != e:
                k += step
                result = result * base
                self._power_cache[(gen, k)] = result
        self._power_cache[key] = result
        return result

    def invert_monomial_element(self, a: AlgebraElement) -> AlgebraElement:
        """Inverse of c * (product of invertible generators)."""
        if not a.is_monomial():
            raise PresentationError("only scalar multiples of group elements are inverted here")
        (m, c), = a.terms.items()
        inv = self.one()
        for gen, e in reversed(self.monomial_word(m)):
            if e and gen not in self.invertible:
                raise PresentationError(f"{self.format_monomial(m)} is not invertible")
            inv = inv * self.generator_power(gen, -e)
        return inv.scale(c.inverse())

    def normalize(self, word) -> AlgebraElement:
        """Normal form of a product of generator powers (a word or its text)."""
        if isinstance(word, str):
            word = parse_word(word)
        result = self.one()
        for gen, e in word:
            result = result * self.generator_power(gen, e)
        return result

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if a.H is not self or b.H is not self:
            raise PresentationError("elements from a different presentation")
        return a * b

    def format_monomial(self, m) -> str:
        parts = [_fmt_power(g, e) for g, e in self.monomial_word(m)]
        text = " ".join(p for p in parts if p)
        return text or "1"

    # coalgebra on monomials ---------------------------------------------------

    coproduct_data: dict
    counit_data: dict
    antipode_data: dict

    def _delta_gen_power(self, gen: str, e: int) -> TensorElement:
        key = (gen, e)
        hit = self._delta_gen_cache.get(key)
        if hit is not None:
            return hit
        if e == 0:
            return TensorElement.one(self)
        if e > 0:
            base = self.coproduct_data[gen]
        else:
            inv = self.generator_power(gen, -1)
            base = TensorElement.tensor(inv, inv)  # invertible generators are group-like
        step = 1 if e > 0 else -1
        k = e - step
        while k and (gen, k) not in self._delta_gen_cache:
            k -= step
        result = self._delta_gen_cache.get((gen, k)) if k else TensorElement.one(self)
        while k != e:
            k += step
            result = result * base
            self._delta_gen_cache[(gen, k)] = result
        return result

    def delta_word(self, word) -> TensorElement:
        result = TensorElement.one(self)
        for gen, e in word:
            if gen in self.aliases:
                result = result * self._delta_alias(gen, e)
            else:
                result = result * self._delta_gen_power(gen, e)
        return result

    def _delta_alias(self, gen: str, e: int) -> TensorElement:
        word = self.aliases[gen]
        if e < 0:
            word = tuple((g, -k) for g, k in reversed(word))
        result = TensorElement.one(self)
        for _ in range(abs(e)):
            result = result * self.delta_word(word)
        return result

    def delta_monomial(self, m) -> TensorElement:
        hit = self._delta_cache.get(m)
        if hit is None:
            hit = self.delta_word(self.monomial_word(m))
            self._delta_cache[m] = hit
        return hit

    def counit_word(self, word) -> CyclotomicScalar:
        value = CyclotomicScalar.one(self.conductor)
        for gen, e in word:
            if gen in self.aliases:
                v = self.counit_word(self.aliases[gen])
            else:
                v = as_scalar(self.counit_data[gen])
            if e < 0:
                if v.is_zero():
                    raise PresentationError(f"counit of {gen}^{e} undefined")
                v = v.inverse()
            value = value * v ** abs(e)
        return value

    def counit_monomial(self, m) -> CyclotomicScalar:
        return self.counit_word(self.monomial_word(m))

    def antipode_word(self, word) -> AlgebraElement:
        result = self.one()
        for gen, e in word:
            if gen in self.aliases:
                img = self.antipode_word(self.aliases[gen])
                piece = img ** e if e >= 0 else self.invert_monomial_element(img) ** (-e)
            elif e >= 0:
                piece = self.antipode_data[gen] ** e
            else:
                piece = self.generator_power(gen, -e)  # S(g^-1) = g for group-like g
            result = piece * result
        return result

    def antipode_monomial(self, m) -> AlgebraElement:
        hit = self._antipode_cache.get(m)
        if hit is None:
            hit = self.antipode_word(self.monomial_word(m))
            self._antipode_cache[m] = hit
        return hit

    # misc -------------------------------------------------------------------

    relations: list

    def with_coproduct(self, gen: str, image: TensorElement) -> "HopfPresentation":
        """Fresh copy with one generator coproduct replaced (negative controls)."""
        other = type(self)(self.spec)
        other.coproduct_data[gen] = TensorElement(other, dict(image.terms), image.arity)
        other.mutated = True
        other.name = self.name + "[mutated]"
        return other

    def check_relations(self) -> list[tuple[str, bool]]:
        """Each defining relation holds after normalisation."""
        out = []
        for rel in self.relations:
            lhs = self.normalize(rel.lhs)
            rhs = self.zero()
            for c, w in rel.rhs:
                rhs = rhs + self.normalize(w).scale(c)
            out.append((rel.name, lhs == rhs))
        return out

    def __repr__(self) -> str:
        return f"<HopfPresentation {self.name}>"


def _rel(name: str, lhs: str, *rhs) -> Relation:
    return Relation(name, parse_word(lhs), [(as_scalar(c), parse_word(w)) for c, w in rhs])


class PolynomialLine(HopfPresentation):
    family = "PolynomialLine"
    generators = ("x",)
    _identity = (0,)

    def __init__(self, spec):
        super().__init__(spec)
        x = self.generator("x")
        one = self.one()
        self.coproduct_data = {"x": TensorElement.tensor(x, one) + TensorElement.tensor(one, x)}
        self.counit_data = {"x": 0}
        self.antipode_data = {"x": -x}
        self.relations = []

    def mul_monomials(self, m1, m2):
        return [((m1[0] + m2[0],), 1)]

    def monomial_word(self, m):
        return (("x", m[0]),)

    def generator_monomial(self, gen, sign):
        return (sign,)

    def window_monomials(self, D):
        return [(e,) for e in range(D + 1)]

    def skew_degree(self, m):
        return m[0]

    def default_window(self):
        return 4


class LaurentLine(HopfPresentation):
    family = "LaurentLine"
    generators = ("x",)
    invertible = frozenset({"x"})
    _identity = (0,)

    def __init__(self, spec):
        super().__init__(spec)
        x = self.generator("x")
        self.coproduct_data = {"x": TensorElement.tensor(x, x)}
        self.counit_data = {"x": 1}
        self.antipode_data = {"x": self.generator_power("x", -1)}
        self.relations = [_rel("x x^-1 = 1", "x x^-1", (1, "1"))]

    def mul_monomials(self, m1, m2):
        return [((m1[0] + m2[0],), 1)]

    def monomial_word(self, m):
        return (("x", m[0]),)

    def generator_monomial(self, gen, sign):
        return (sign,)

    def window_monomials(self, D):
        return [(e,) for e in range(-D, D + 1)]

    def default_window(self):
        return 4


class Dihedral(HopfPresentation):
    """k<g, x | g^2 = 1, g x g = x^-1>, basis x^a g^c."""

    family = "Dihedral"
    generators = ("x", "g")
    invertible = frozenset({"x", "g"})
    grading_generator = "g"
    _identity = (0, 0)

    def __init__(self, spec):
        super().__init__(spec)
        x, g = self.generator("x"), self.generator("g")
        self.coproduct_data = {"x": TensorElement.tensor(x, x), "g": TensorElement.tensor(g, g)}
        self.counit_data = {"x": 1, "g": 1}
        self.antipode_data = {"x": self.generator_power("x", -1), "g": g}
        self.relations = [
            _rel("g^2 = 1", "g^2", (1, "1")),
            _rel("g x g = x^-1", "g x g", (1, "x^-1")),
            _rel("x x^-1 = 1", "x x^-1", (1, "1")),
        ]

    def mul_monomials(self, m1, m2):
        a, c = m1
        b, d = m2
        return [((a - b if c else a + b, (c + d) & 1), 1)]

    def monomial_word(self, m):
        return (("x", m[0]), ("g", m[1]))

    def generator_monomial(self, gen, sign):
        return (sign, 0) if gen == "x" else (0, 1)

    def window_monomials(self, D):
        return [(a, c) for a in range(-D, D + 1) for c in (0, 1)]

    def default_window(self):
        return 4


class Taft(HopfPresentation):
    """H(n, t, xi): g^n = 1, x g = xi g x, Delta(x) = x (x) g^t + 1 (x) x."""

    family = "Taft"
    generators = ("g", "x")
    invertible = frozenset({"g"})
    grading_generator = "g"
    _identity = (0, 0)

    def __init__(self, spec):
        n, t, xi = spec.n, spec.t, spec.xi
        if n is None or n < 2:
            raise PresentationError("Taft algebras need n >= 2")
        if t is None or not 0 <= t < n:
            raise PresentationError(f"t = {t} out of range 0..{n - 1}")
        if multiplicative_order(xi) != n:
            raise PresentationError(f"xi = {xi} is not a primitive {n}-th root of unity")
        self.n, self.t, self.xi = n, t, xi
        self.conductor = xi.conductor
        self._xi_pow = [xi ** k for k in range(n)]
        super().__init__(spec)
        g, x, one = self.generator("g"), self.generator("x"), self.one()
        gt = self.generator_power("g", t)
        self.coproduct_data = {
            "g": TensorElement.tensor(g, g),
            "x": TensorElement.tensor(x, gt) + TensorElement.tensor(one, x),
        }
        self.counit_data = {"g": 1, "x": 0}
        self.antipode_data = {
            "g": self.generator_power("g", -1),
            "x": -(x * self.generator_power("g", -t)),
        }
        self.relations = [
            _rel("g^n = 1", f"g^{n}", (1, "1")),
            _rel("x g = xi g x", "x g", (xi, "g x")),
        ]

    def mul_monomials(self, m1, m2):
        a, b = m1
        c, d = m2
        s = self._xi_pow[(b * c) % self.n]
        return [(((a + c) % self.n, b + d), s)]

    def monomial_word(self, m):
        return (("g", m[0]), ("x", m[1]))

    def generator_monomial(self, gen, sign):
        if gen == "g":
            return (sign % self.n, 0)
        return (0, 1)

    def window_monomials(self, D):
        return [(i, j) for j in range(D + 1) for i in range(self.n)]

    def skew_degree(self, m):
        return m[1]


@dataclass
class LiuConversion:
    """Substitutions between the (h, f, y) and (x, g, y) generating sets."""

    to_hf: dict  # "x"/"g" -> word in h, f
    to_xg: dict  # "h"/"f" -> word in x, g
    bezout: tuple  # (u, v) with u (w' + n' i0) + v n = 1


class Liu(HopfPresentation):
    """B(n, w, xi) on generators h^+-1, f, y with f^b = 1, hf = fh,
    y h = theta h y, y f = theta^n' f y and y^n = 1 - h^(n w').

    x = h^n' f^-1 is central group-like, g = h^w' f^i0 is group-like and
    y is (g, 1)-primitive; both generating sets are accepted by
    :meth:`normalize`.
    """

    family = "Liu"
    generators = ("h", "f", "y")
    invertible = frozenset({"h", "f"})
    grading_generator = "h"
    _identity = (0, 0, 0)

    def __init__(self, spec):
        n, w, theta, i0 = spec.n, spec.w, spec.theta, spec.i0
        if multiplicative_order(theta) != n:
            raise PresentationError(f"theta = {theta} is not a primitive {n}-th root of unity")
        b = gcd(n, w)
        if not 0 <= i0 < b:
            raise PresentationError(f"i0 = {i0} out of range 0..{b - 1}")
        e = w // b + (n // b) * i0
        if gcd(n, e) != 1:
            raise PresentationError(f"gcd(n, w' + n' i0) = gcd({n}, {e}) != 1")
        self.n, self.w, self.b = n, w, b
        self.n1, self.w1, self.i0 = n // b, w // b, i0
        self.theta = theta
        self.xi = theta ** e
        self.conductor = theta.conductor
        self._theta_pow = [theta ** k for k in range(n)]
        self._xg_exponent = e
        u = pow(e, -1, n)
        v = (1 - u * e) // n
        self.bezout = (u, v)
        super().__init__(spec)
        self.aliases = {
            "x": (("h", self.n1), ("f", -1)),
            "g": (("h", self.w1), ("f", i0)),
        }
        h, f, y, one = self.generator("h"), self.generator("f"), self.generator("y"), self.one()
        g = self.generator("g")
        self.coproduct_data = {
            "h": TensorElement.tensor(h, h),
            "f": TensorElement.tensor(f, f),
            "y": TensorElement.tensor(y, g) + TensorElement.tensor(one, y),
        }
        self.counit_data = {"h": 1, "f": 1, "y": 0}
        self.antipode_data = {
            "h": self.generator_power("h", -1),
            "f": self.generator_power("f", -1),
            "y": -(y * self.generator_power("g", -1)),
        }
        self.relations = [
            _rel("h h^-1 = 1", "h h^-1", (1, "1")),
            _rel("f^b = 1", f"f^{b}", (1, "1")),
            _rel("h f = f h", "h f", (1, "f h")),
            _rel("y h = theta h y", "y h", (theta, "h y")),
            _rel("y f = theta^n' f y", "y f", (theta ** self.n1, "f y")),
            _rel("y^n = 1 - h^(n w')", f"y^{n}", (1, "1"), (-1, f"h^{n * self.w1}")),
        ]

    def mul_monomials(self, m1, m2):
        a, c, l = m1
        b, d, m = m2
        s = self._theta_pow[(l * (b + self.n1 * d)) % self.n]
        hexp, fexp, yexp = a + b, (c + d) % self.b, l + m
        if yexp < self.n:
            return [((hexp, fexp, yexp), s)]
        r = yexp - self.n
        return [((hexp, fexp, r), s), ((hexp + self.n * self.w1, fexp, r), -s)]

    def monomial_word(self, m):
        return (("h", m[0]), ("f", m[1]), ("y", m[2]))

    def generator_monomial(self, gen, sign):
        if gen == "h":
            return (sign, 0, 0)
        if gen == "f":
            return (0, sign % self.b, 0)
        return (0, 0, 1)

    def skew_degree(self, m):
        return m[2]

    # (h, f) <-> (x, g) coordinates on the group <h, f> = <x, g>

    def hf_from_xg(self, a: int, c: int) -> tuple[int, int]:
        """x^a g^c = h^i f^j."""
        return self.n1 * a + self.w1 * c, (-a + self.i0 * c) % self.b

    def xg_from_hf(self, i: int, j: int) -> tuple[int, int]:
        """h^i f^j = x^a g^c with 0 <= c < n."""
        u, v = self.bezout
        e_h = u * self.i0 - v * self.b * (self.w1 - 1)
        k = i + self.n1 * j  # h^i f^j = h^k x^-j
        big_c = (u + v * self.n) * k
        c, q = big_c % self.n, big_c // self.n
        a = e_h * k - j + self.w * q
        return a, c

    def window_monomials(self, D):
        out = []
        for a in range(-D, D + 1):
            for c in range(self.n):
                i, j = self.hf_from_xg(a, c)
                for l in range(self.n):
                    out.append((i, j, l))
        return out

    def format_monomial_xg(self, m) -> str:
        a, c = self.xg_from_hf(m[0], m[1])
        parts = [_fmt_power("x", a), _fmt_power("g", c), _fmt_power("y", m[2])]
        return " ".join(p for p in parts if p) or "1"

    def conversion(self) -> LiuConversion:
        u, v = self.bezout
        e_h = u * self.i0 - v * self.b * (self.w1 - 1)
        return LiuConversion(
            to_hf=dict(self.aliases),
            to_xg={
                "h": (("g", u + v * self.n), ("x", e_h)),
                "f": (("g", self.n1 * (u + v * self.n)), ("x", self.n1 * e_h - 1)),
            },
            bezout=(u, v),
        )


_CLASSES = {
    "PolynomialLine": PolynomialLine,
    "LaurentLine": LaurentLine,
    "Dihedral": Dihedral,
    "Taft": Taft,
    "Liu": Liu,
}


def make_family(spec: FamilySpec) -> HopfPresentation:
    """Build and validate the presentation for spec."""
    try:
        cls = _CLASSES[spec.family]
    except KeyError:
        raise PresentationError(f"unknown family {spec.family!r}; expected one of {FAMILIES}") from None
    return cls(spec)


def liu_generator_conversion(H: Liu) -> LiuConversion:
    """Conversion maps between (h, f, y) and (x^+-1, g, y), checked by
    normalising each round trip."""
    if not isinstance(H, Liu):
        raise PresentationError("generator conversion is only defined for Liu algebras")
    conv = H.conversion()
    u, v = conv.bezout
    assert u * H._xg_exponent + v * H.n == 1
    for gen, word in conv.to_xg.items():
        if H.normalize(word) != H.generator(gen):
            raise AssertionError(f"round trip for {gen} failed")
    return conv


def check_associativity(H: HopfPresentation, monomials: Sequence) -> list:
    """Triples (a, b, c) of basis monomials with (ab)c != a(bc).

    For these rewriting systems associativity of the induced product on
    normal words is equivalent to resolvability of all overlaps."""
    bad = []
    elems = [H.monomial(m) for m in monomials]
    for a in elems:
        for b in elems:
            ab = a * b
            for c in elems:
                if ab * c != a * (b * c):
                    bad.append((a, b, c))
    return bad
