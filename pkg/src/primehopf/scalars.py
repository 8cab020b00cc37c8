"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as an integer numerator vector over the power basis
1, z, ..., z^(phi(N)-1) together with a positive common denominator.  The
vector is always reduced modulo the N-th cyclotomic polynomial and the
fraction is kept in lowest terms, so equal elements of the same field have
identical representations.  Elements of different fields are compared and
combined inside Q(zeta_L), L the lcm of the two conductors.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Optional, Union

__all__ = [
    "CyclotomicScalar",
    "primitive_root",
    "root_of_unity",
    "multiplicative_order",
    "qbinom",
    "parse_scalar",
    "as_scalar",
]

Number = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(_cyclotomic_poly(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        assert r == 0
        out[k] = q
        for i, c in enumerate(den):
            num[k + i] -= q * c
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _field(n: int):
    """Per-conductor tables: degree, z^k in the power basis for 0 <= k < n,
    and the Ramanujan sums used for hashing."""
    phi_poly = _cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    table = []
    vec = [0] * deg
    vec[0] = 1
    for _ in range(n):
        table.append(tuple(vec))
        # multiply by z and reduce z^deg = -sum c_i z^i
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(deg):
                vec[i] -= top * phi_poly[i]
    traces = tuple(_ramanujan_sum(n, k) for k in range(deg))
    return deg, tuple(table), traces


def _mobius(m: int) -> int:
    result, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def _totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _ramanujan_sum(n: int, k: int) -> int:
    # trace of zeta_n^k over Q
    d = gcd(n, k) if k else n
    q = n // d
    return _mobius(q) * _totient(n) // _totient(q)


def _canon(nums: Iterable[int], den: int) -> tuple[tuple[int, ...], int]:
    nums = tuple(nums)
    if den < 0:
        nums, den = tuple(-a for a in nums), -den
    g = reduce(gcd, nums, den)
    if g > 1:
        nums, den = tuple(a // g for a in nums), den // g
    if not any(nums):
        den = 1
    return nums, den


class CyclotomicScalar:
    """Element of Q(zeta_N); immutable."""

    __slots__ = ("conductor", "_num", "_den", "_hash")

    def __init__(self, conductor: int, nums: Iterable[int], den: int = 1, _canonical: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        if _canonical:
            self._num, self._den = tuple(nums), den
        else:
            deg, table, _ = _field(conductor)
            nums = list(nums)
            if len(nums) > deg:
                acc = [0] * deg
                for k, a in enumerate(nums):
                    if a:
                        row = table[k % conductor]
                        for i in range(deg):
                            acc[i] += a * row[i]
                nums = acc
            else:
                nums = nums + [0] * (deg - len(nums))
            self._num, self._den = _canon(nums, den)
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def rational(cls, value: Number, conductor: int = 1) -> "CyclotomicScalar":
        value = Fraction(value)
        deg = _field(conductor)[0]
        return cls(conductor, [value.numerator] + [0] * (deg - 1), value.denominator)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CyclotomicScalar":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "CyclotomicScalar":
        return cls.rational(1, conductor)

    @property
    def degree(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __complex__(self) -> complex:
        """Value under the embedding z(N) -> exp(2 pi i / N); for display and cross-checks only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(a * z ** k for k, a in enumerate(self._num)) / self._den

    def lift(self, conductor: int) -> "CyclotomicScalar":
        """Embed into Q(zeta_conductor); conductor must be a multiple of ours."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed Q(z{self.conductor}) into Q(z{conductor})")
        step = conductor // self.conductor
        deg, table, _ = _field(conductor)
        acc = [0] * deg
        for k, a in enumerate(self._num):
            if a:
                row = table[(k * step) % conductor]
                for i in range(deg):
                    acc[i] += a * row[i]
        return CyclotomicScalar(conductor, acc, self._den)

    def _coerce(self, other) -> tuple["CyclotomicScalar", "CyclotomicScalar"]:
        if not isinstance(other, CyclotomicScalar):
            other = CyclotomicScalar.rational(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        n = _lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "CyclotomicScalar":
        if isinstance(other, int) and other == 0:
            return self
        a, b = self._coerce(other)
        da, db = a._den, b._den
        if da == db:
            return CyclotomicScalar(a.conductor, [x + y for x, y in zip(a._num, b._num)], da)
        return CyclotomicScalar(a.conductor, [x * db + y * da for x, y in zip(a._num, b._num)], da * db)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicScalar":
        return CyclotomicScalar(self.conductor, tuple(-x for x in self._num), self._den, _canonical=True)

    def __sub__(self, other) -> "CyclotomicScalar":
        return self + (-other if isinstance(other, CyclotomicScalar) else -Fraction(other))

    def __rsub__(self, other) -> "CyclotomicScalar":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicScalar":
        if not isinstance(other, CyclotomicScalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            q = Fraction(other)
            return CyclotomicScalar(self.conductor, [x * q.numerator for x in self._num], self._den * q.denominator)
        if other.conductor == 1:
            return CyclotomicScalar(self.conductor, [x * other._num[0] for x in self._num], self._den * other._den)
        if self.conductor == 1:
            return other * self
        a, b = self._coerce(other)
        n = a.conductor
        deg, table, _ = _field(n)
        buckets = [0] * n
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        buckets[(i + j) % n] += x * y
        acc = buckets[:deg]
        for k in range(deg, n):
            c = buckets[k]
            if c:
                row = table[k]
                for i in range(deg):
                    acc[i] += c * row[i]
        return CyclotomicScalar(n, acc, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return _inverse(self.conductor, self._num, self._den)

    def __truediv__(self, other) -> "CyclotomicScalar":
        if not isinstance(other, CyclotomicScalar):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CyclotomicScalar":
        return self.inverse() * other

    def __pow__(self, e: int) -> "CyclotomicScalar":
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicScalar.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        if self.conductor == other.conductor:
            return self._num == other._num and self._den == other._den
        a, b = self._coerce(other)
        return a._num == b._num and a._den == b._den

    def __hash__(self) -> int:
        # normalised trace is invariant under field embeddings
        if self._hash is None:
            traces = _field(self.conductor)[2]
            t = sum(a * r for a, r in zip(self._num, traces))
            self._hash = hash(Fraction(t, self._den * len(self._num)))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CyclotomicScalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


@lru_cache(maxsize=4096)
def _inverse(n: int, nums: tuple[int, ...], den: int) -> CyclotomicScalar:
    # solve M c = e_0 where column j of M is (a * z^j)
    deg = len(nums)
    a = CyclotomicScalar(n, nums, 1, _canonical=True)
    cols = []
    z = root_of_unity(n, 1) if deg > 1 else None
    cur = a
    for j in range(deg):
        cols.append([Fraction(x) for x in cur._num])
        if j + 1 < deg:
            cur = cur * z
    rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    for c in range(deg):
        p = next(r for r in range(c, deg) if rows[r][c] != 0)
        rows[c], rows[p] = rows[p], rows[c]
        piv = rows[c][c]
        rows[c] = [v / piv for v in rows[c]]
        for r in range(deg):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
    sol = [rows[i][deg] * den for i in range(deg)]
    common = reduce(lambda x, y: x * y // gcd(x, y), (s.denominator for s in sol), 1)
    return CyclotomicScalar(n, [int(s * common) for s in sol], common)


@lru_cache(maxsize=None)
def root_of_unity(n: int, k: int = 1) -> CyclotomicScalar:
    """zeta_n^k, as an element of Q(zeta_n)."""
    deg, table, _ = _field(n)
    return CyclotomicScalar(n, table[k % n], 1, _canonical=True)


def primitive_root(n: int) -> CyclotomicScalar:
    """The distinguished primitive n-th root of unity zeta_n."""
    if n < 1:
        raise ValueError("n must be positive")
    z = root_of_unity(n, 1)
    if multiplicative_order(z) != n:  # pragma: no cover - structural guarantee
        raise AssertionError(f"zeta_{n} has wrong order")
    return z


def multiplicative_order(s: CyclotomicScalar, cap: Optional[int] = None) -> Optional[int]:
    """Least m >= 1 with s^m = 1, or None when s is not a root of unity.

    Roots of unity in Q(zeta_N) have order dividing lcm(2, N), so the search
    stops at 2N unless a larger cap is given.
    """
    if not isinstance(s, CyclotomicScalar):
        s = CyclotomicScalar.rational(s)
    if s.is_zero():
        raise ValueError("zero has no multiplicative order")
    if cap is None:
        cap = 2 * s.conductor
    p = s
    for m in range(1, cap + 1):
        if p == 1:
            return m
        p = p * s
    return None


def as_scalar(value, conductor: int = 1) -> CyclotomicScalar:
    if isinstance(value, CyclotomicScalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return CyclotomicScalar.rational(value, conductor)


def qbinom(n: int, s: int, q) -> CyclotomicScalar:
    """Gaussian binomial coefficient (n choose s)_q via the q-Pascal rule
    (n, s) = (n-1, s-1) + q^s (n-1, s); no division, so valid at roots of unity."""
    if n < 0 or s < 0:
        raise ValueError("qbinom needs nonnegative arguments")
    if s > n:
        raise ValueError(f"qbinom({n}, {s}): s exceeds n")
    q = as_scalar(q)
    one = CyclotomicScalar.one(q.conductor)
    zero = CyclotomicScalar.zero(q.conductor)
    qpow = [one]
    for _ in range(s):
        qpow.append(qpow[-1] * q)
    row = [one] + [zero] * s
    for m in range(1, n + 1):
        for k in range(min(m, s), 0, -1):
            row[k] = row[k - 1] + qpow[k] * row[k]
    return row[s]


# textual form -------------------------------------------------------------

def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(s: CyclotomicScalar) -> str:
    """Canonical text "a/b * z(N)^k + ...", terms in increasing power."""
    parts = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        if k == 0:
            body = _format_fraction(abs(c))
        else:
            root = f"z({s.conductor})" + (f"^{k}" if k > 1 else "")
            body = root if abs(c) == 1 else f"{_format_fraction(abs(c))} * {root}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
    (?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?)?\s*
    (?:(?P<star>\*)\s*)?
    (?:z\(\s*(?P<cond>\d+)\s*\)(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> CyclotomicScalar:
    """Inverse of :func:`format_scalar`; also accepts unreduced input such as
    "z(4)^2" or "3/2*z(5)^7" and mixed conductors."""
    pos, total, first = 0, None, True
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at {pos}")
        if not first and not m.group("sign"):
            raise ValueError(f"missing operator in {text!r} at {pos}")
        if m.group("num") is None and m.group("cond") is None:
            raise ValueError(f"empty term in {text!r} at {pos}")
        if m.group("star") and (m.group("num") is None or m.group("cond") is None):
            raise ValueError(f"dangling '*' in {text!r}")
        coeff = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("cond") is not None:
            cond = int(m.group("cond"))
            if cond < 1:
                raise ValueError("conductor must be positive")
            term = root_of_unity(cond, int(m.group("exp") or 1)) * coeff
        else:
            term = CyclotomicScalar.rational(coeff)
        total = term if total is None else total + term
        pos, first = m.end(), False
    return total
