"""Independent classical (q=1) reference: commutative polynomials and Cl_{0,n}.

Deliberately coded from scratch on plain Fractions, sharing nothing with the
package internals, so the s=1 degeneration checks compare two implementations.
"""

from __future__ import annotations

from fractions import Fraction


class C:
    """Complex number with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, o):
        return C(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return C(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return C(-self.re, -self.im)

    def __mul__(self, o):
        return C(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o):
        d = o.re * o.re + o.im * o.im
        return C((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __eq__(self, o):
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self):
        return not self.re and not self.im

    def __repr__(self):
        return f"C({self.re},{self.im})"


C0 = C(0)
C1 = C(1)
CI = C(0, 1)


class CPoly:
    """Commutative polynomial: exponent tuple -> C."""

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {a: c for a, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def one(n):
        return CPoly(n, {(0,) * n: C1})

    @staticmethod
    def monomial(n, alpha, coeff=C1):
        return CPoly(n, {tuple(alpha): coeff})

    @staticmethod
    def variable(n, i):
        return CPoly.monomial(n, tuple(1 if j == i - 1 else 0 for j in range(n)))

    def __add__(self, o):
        out = dict(self.terms)
        for a, c in o.terms.items():
            out[a] = out.get(a, C0) + c
        return CPoly(self.n, out)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return CPoly(self.n, {a: -c for a, c in self.terms.items()})

    def __mul__(self, o):
        out = {}
        for a, c1 in self.terms.items():
            for b, c2 in o.terms.items():
                g = tuple(x + y for x, y in zip(a, b))
                out[g] = out.get(g, C0) + c1 * c2
        return CPoly(self.n, out)

    def scale(self, c):
        return CPoly(self.n, {a: v * c for a, v in self.terms.items()})

    def __eq__(self, o):
        return self.n == o.n and self.terms == o.terms

    def is_zero(self):
        return not self.terms


def cdiff(i, p):
    """Classical partial derivative."""
    out = {}
    for a, c in p.terms.items():
        if a[i - 1] == 0:
            continue
        b = a[: i - 1] + (a[i - 1] - 1,) + a[i:]
        out[b] = out.get(b, C0) + c * C(a[i - 1])
    return CPoly(p.n, out)


def cmulx(i, p):
    out = {}
    for a, c in p.terms.items():
        b = a[: i - 1] + (a[i - 1] + 1,) + a[i:]
        out[b] = c
    return CPoly(p.n, out)


def claplacian(p):
    out = CPoly(p.n)
    for i in range(1, p.n + 1):
        out = out + cdiff(i, cdiff(i, p))
    return out


def ceuler(p):
    out = CPoly(p.n)
    for i in range(1, p.n + 1):
        out = out + cmulx(i, cdiff(i, p))
    return out


def cradius(n):
    out = CPoly(n)
    for i in range(1, n + 1):
        out = out + CPoly.monomial(n, tuple(2 if j == i - 1 else 0 for j in range(n)))
    return out


def cblade_mul(a, b):
    """Classical blade product: sign from inversions, e_i^2 = -1 collapses."""
    word = list(a) + list(b)
    sign = 1
    # bubble to sorted order counting swaps of distinct neighbours
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
    # collapse equal neighbours
    out = []
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            sign = -sign
            i += 2
        else:
            out.append(word[i])
            i += 1
    return sign, tuple(out)


class CCliffPoly:
    """Classical Clifford-valued polynomial: (alpha, blade) -> C."""

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {t: c for t, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def from_cpoly(p):
        return CCliffPoly(p.n, {(a, ()): c for a, c in p.terms.items()})

    def __add__(self, o):
        out = dict(self.terms)
        for t, c in o.terms.items():
            out[t] = out.get(t, C0) + c
        return CCliffPoly(self.n, out)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return CCliffPoly(self.n, {t: -c for t, c in self.terms.items()})

    def __eq__(self, o):
        return self.n == o.n and self.terms == o.terms

    def is_zero(self):
        return not self.terms


def cdiff_cl(i, p):
    out = {}
    for (a, bl), c in p.terms.items():
        if a[i - 1] == 0:
            continue
        b = a[: i - 1] + (a[i - 1] - 1,) + a[i:]
        out[(b, bl)] = out.get((b, bl), C0) + c * C(a[i - 1])
    return CCliffPoly(p.n, out)


def cmulx_cl(i, p):
    out = {}
    for (a, bl), c in p.terms.items():
        b = a[: i - 1] + (a[i - 1] + 1,) + a[i:]
        out[(b, bl)] = c
    return CCliffPoly(p.n, out)


def cblade_left(blade, p):
    out = {}
    for (a, bl), c in p.terms.items():
        sign, nb = cblade_mul(blade, bl)
        key = (a, nb)
        out[key] = out.get(key, C0) + (c if sign > 0 else -c)
    return CCliffPoly(p.n, out)


def cdirac(p):
    """Classical Dirac operator sum_i e_i d_i."""
    out = CCliffPoly(p.n)
    for i in range(1, p.n + 1):
        out = out + cblade_left((i,), cdiff_cl(i, p))
    return out


def cxvec(p):
    """Classical vector variable sum_i x_i e_i, acting by multiplication."""
    out = CCliffPoly(p.n)
    for i in range(1, p.n + 1):
        out = out + cblade_left((i,), cmulx_cl(i, p))
    return out


def claplacian_cl(p):
    out = CCliffPoly(p.n)
    for i in range(1, p.n + 1):
        out = out + cdiff_cl(i, cdiff_cl(i, p))
    return out
