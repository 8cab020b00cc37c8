"""Independent reference computations with floating complex coefficients.

Nothing here imports the package's rewriting engine: words are plain
strings, relations are string rewrite rules applied to the first match,
and scalars are Python complex numbers.  It is slow and approximate, which
is fine: it only produces reference values that the tests then freeze as
exact data.
"""

from __future__ import annotations

import cmath
from math import gcd

TOL = 1e-9


def root(n, k=1):
    return cmath.exp(2j * cmath.pi * k / n)


def close(a, b):
    return abs(a - b) < TOL


def qbinom_product(n, s, q):
    """Gaussian binomial via the product formula, at a complex q."""
    num = den = 1
    for i in range(s):
        num *= 1 - q ** (n - i)
        den *= 1 - q ** (i + 1)
    return num / den


def qbinom_poly(n, s):
    """Integer coefficients of the Gaussian binomial as a polynomial in q."""
    table = {(0, 0): [1]}

    def get(m, k):
        if k < 0 or k > m:
            return [0]
        if (m, k) not in table:
            a, b = get(m - 1, k - 1), get(m - 1, k)
            b = [0] * k + b
            out = [0] * max(len(a), len(b))
            for i, c in enumerate(a):
                out[i] += c
            for i, c in enumerate(b):
                out[i] += c
            table[(m, k)] = out
        return table[(m, k)]

    out = get(n, s)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def i0_bruteforce(n, w):
    b = gcd(n, w)
    return [i for i in range(b) if gcd(n, w // b + (n // b) * i) == 1]


class Rewriter:
    """Linear combinations of words modulo string rewrite rules.

    ``rules`` maps a pattern to a list of (coefficient, replacement)."""

    def __init__(self, rules):
        self.rules = sorted(rules.items(), key=lambda kv: -len(kv[0]))

    def normal(self, combo):
        todo = dict(combo)
        done = {}
        while todo:
            word, c = todo.popitem()
            if abs(c) < TOL:
                continue
            for pat, repl in self.rules:
                pos = word.find(pat)
                if pos >= 0:
                    for c2, r in repl:
                        w2 = word[:pos] + r + word[pos + len(pat):]
                        todo[w2] = todo.get(w2, 0) + c * c2
                    break
            else:
                done[word] = done.get(word, 0) + c
        return {w: c for w, c in done.items() if abs(c) > TOL}

    def mul(self, a, b):
        out = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return self.normal(out)

    def tensor_mul(self, A, B):
        out = {}
        for (a1, a2), c1 in A.items():
            for (b1, b2), c2 in B.items():
                for w1, d1 in self.normal({a1 + b1: 1}).items():
                    for w2, d2 in self.normal({a2 + b2: 1}).items():
                        out[(w1, w2)] = out.get((w1, w2), 0) + c1 * c2 * d1 * d2
        return {k: v for k, v in out.items() if abs(v) > TOL}


def taft(n, t, xi):
    """Letters g, x; normal words g^i x^j."""
    R = Rewriter({"xg": [(xi, "gx")], "g" * n: [(1, "")]})
    delta = {
        "g": {("g", "g"): 1},
        "x": {("x", "g" * t): 1, ("", "x"): 1},
    }
    return R, delta


def dihedral():
    """Letters x, X = x^-1, g; normal words x^a g^c."""
    R = Rewriter({"gx": [(1, "Xg")], "gX": [(1, "xg")], "gg": [(1, "")], "xX": [(1, "")], "Xx": [(1, "")]})
    return R


def liu(n, w, theta, i0):
    """Letters h, H = h^-1, f, y; normal words h^i f^j y^l."""
    b = gcd(n, w)
    n1, w1 = n // b, w // b
    rules = {
        "hH": [(1, "")],
        "Hh": [(1, "")],
        "fh": [(1, "hf")],
        "fH": [(1, "Hf")],
        "yh": [(theta, "hy")],
        "yH": [(theta ** -1, "Hy")],
        "yf": [(theta ** n1, "fy")],
        "f" * b: [(1, "")],
        "y" * n: [(1, ""), (-1, "h" * (n * w1))],
    }
    R = Rewriter(rules)
    g = "h" * w1 + "f" * i0
    delta = {"h": {("h", "h"): 1}, "f": {("f", "f"): 1}, "y": {("y", g): 1, ("", "y"): 1}}
    return R, delta, g


def coproduct_word(R, delta, word):
    out = {("", ""): 1}
    for letter in word:
        out = R.tensor_mul(out, delta[letter])
    return out


def taft_word(i, j):
    return "g" * i + "x" * j


def liu_word(i, j, l):
    return ("h" * i if i >= 0 else "H" * -i) + "f" * j + "y" * l


def dihedral_word(a, c):
    return ("x" * a if a >= 0 else "X" * -a) + "g" * c


def twistor_structure(n, xi):
    """Structure constants of k<g, y>/(y^n, g^n - 1, y g = xi g y) on
    v_ij = g^i y^((j - i) mod n), and the coproduct coefficients
    c^{ij}_{ss} with Delta(y) = y (x) g + 1 (x) y."""
    R = Rewriter({"yg": [(xi, "gy")], "g" * n: [(1, "")], "y" * n: []})
    word = lambda i, j: "g" * i + "y" * ((j - i) % n)
    label = {}
    for i in range(n):
        for j in range(n):
            label[word(i, j)] = (i, j)
    delta = {"g": {("g", "g"): 1}, "y": {("y", "g"): 1, ("", "y"): 1}}
    coeffs = {}
    for i in range(n):
        for j in range(n):
            d = coproduct_word(R, delta, word(i, j))
            for (w1, w2), c in d.items():
                a, b = label[w1], label[w2]
                coeffs[(i, j, a[1], b[0])] = c
    return coeffs
