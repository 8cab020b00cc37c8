"""Sparse elements of a presented algebra and of its tensor powers."""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Iterable, Union

from .scalars import CyclotomicScalar, as_scalar, format_scalar

if TYPE_CHECKING:  # pragma: no cover
    from .presentations import HopfPresentation

Monomial = tuple


def _scale(c: CyclotomicScalar, s) -> CyclotomicScalar:
    if type(s) is int:
        return c if s == 1 else (-c if s == -1 else c * s)
    return c * s


def _accumulate(target: dict, key, value: CyclotomicScalar) -> None:
    old = target.get(key)
    if old is None:
        if not value.is_zero():
            target[key] = value
        return
    new = old + value
    if new.is_zero():
        del target[key]
    else:
        target[key] = new


def format_coefficient(c: CyclotomicScalar, body: str) -> tuple[str, str]:
    """(sign, text) for the term c * body."""
    if c.is_rational():
        q = c.to_fraction()
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if body == "1":
            return sign, format_scalar(CyclotomicScalar.rational(q))
        if q == 1:
            return sign, body
        return sign, f"{format_scalar(CyclotomicScalar.rational(q))} * {body}"
    text = f"({format_scalar(c)})"
    return "+", text if body == "1" else f"{text} * {body}"


def join_terms(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class AlgebraElement:
    """Finite combination of normal monomials with no stored zero terms."""

    __slots__ = ("H", "terms")

    def __init__(self, H: "HopfPresentation", terms: dict):
        self.H = H
        self.terms = terms

    @classmethod
    def from_terms(cls, H, items: Iterable) -> "AlgebraElement":
        acc: dict = {}
        for m, c in items:
            _accumulate(acc, m, as_scalar(c))
        return cls(H, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return sorted(self.terms)

    def coefficient(self, m) -> CyclotomicScalar:
        return self.terms.get(m, CyclotomicScalar.zero())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _check(self, other) -> None:
        if other.H is not self.H:
            raise ValueError("elements belong to different presentations")

    def __add__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = self.H.scalar_element(other)
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(acc, m, c)
        return AlgebraElement(self.H, acc)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.H, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = self.H.scalar_element(other)
        return self + (-other)

    def __rsub__(self, other) -> "AlgebraElement":
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        c = as_scalar(c)
        if c.is_zero():
            return AlgebraElement(self.H, {})
        return AlgebraElement(self.H, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        mul = self.H.mul_monomials
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, s in mul(m1, m2):
                    _accumulate(acc, m, _scale(c, s))
        return AlgebraElement(self.H, acc)

    def __rmul__(self, other) -> "AlgebraElement":
        return self.scale(other)

    def __pow__(self, e: int) -> "AlgebraElement":
        if e < 0:
            raise ValueError("negative powers of general elements are not defined")
        result = self.H.one()
        for _ in range(e):
            result = result * self
        return result

    def map_monomials(self, f: Callable) -> "AlgebraElement":
        """Linear extension of f: monomial -> AlgebraElement."""
        acc: dict = {}
        for m, c in self.terms.items():
            for m2, c2 in f(m).terms.items():
                _accumulate(acc, m2, c * c2)
        return AlgebraElement(self.H, acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.H is other.H and self.terms == other.terms
        if isinstance(other, (int, CyclotomicScalar)):
            return self == self.H.scalar_element(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        fmt = self.H.format_monomial
        return join_terms([format_coefficient(self.terms[m], fmt(m)) for m in sorted(self.terms)])

    def __repr__(self) -> str:
        return f"<{self.H.name}: {self}>"


class TensorElement:
    """Finite combination of k-fold tensors of normal monomials.

    Multiplication is componentwise: (a (x) b)(c (x) d) = ac (x) bd.
    """

    __slots__ = ("H", "terms", "arity")

    def __init__(self, H, terms: dict, arity: int):
        self.H = H
        self.terms = terms
        self.arity = arity

    @classmethod
    def tensor(cls, *factors: AlgebraElement) -> "TensorElement":
        H = factors[0].H
        terms: dict = {(): CyclotomicScalar.one()}
        for f in factors:
            nxt: dict = {}
            for key, c in terms.items():
                for m, c2 in f.terms.items():
                    _accumulate(nxt, key + (m,), c * c2)
            terms = nxt
        return cls(H, terms, len(factors))

    @classmethod
    def one(cls, H, arity: int = 2) -> "TensorElement":
        return cls.tensor(*[H.one()] * arity)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, c)
        return TensorElement(self.H, acc, self.arity)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.H, {k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = as_scalar(c)
        if c.is_zero():
            return TensorElement(self.H, {}, self.arity)
        return TensorElement(self.H, {k: v * c for k, v in self.terms.items()}, self.arity)

    def __mul__(self, other) -> "TensorElement":
        if not isinstance(other, TensorElement):
            return self.scale(other)
        if other.arity != self.arity:
            raise ValueError("tensor arities differ")
        mul = self.H.mul_monomials
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for a, b in zip(k1, k2):
                    prod = mul(a, b)
                    partial = [(key + (m,), _scale(c, s)) for key, c in partial for m, s in prod]
                for key, c in partial:
                    _accumulate(acc, key, c)
        return TensorElement(self.H, acc, self.arity)

    __rmul__ = scale

    def __pow__(self, e: int) -> "TensorElement":
        result = TensorElement.one(self.H, self.arity)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        fmt = self.H.format_monomial
        parts = []
        for key in sorted(self.terms):
            body = " (x) ".join(fmt(m) for m in key)
            parts.append(format_coefficient(self.terms[key], f"[{body}]"))
        return join_terms(parts)

    def __repr__(self) -> str:
        return f"<{self.H.name} tensor^{self.arity}: {self}>"
