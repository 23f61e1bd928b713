"""Exact arithmetic in the coefficient field F = Q(i)(s).

s is a formal square root of the deformation parameter, q = s**2.  Everything
here is exact: coefficients are Gaussian rationals (pairs of Fractions), and a
field element is a reduced ratio of Laurent polynomials in s.  No floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import PoleError

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "ScalarQ",
    "ZERO",
    "ONE",
    "I",
    "S",
    "qnum",
    "qnum_half",
    "qfactorial",
    "eval_at",
    "q_power",
    "s_power",
    "from_fraction",
    "from_int",
]


class GaussianRational:
    """Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def is_zero(self):
        return not self.re and not self.im

    def is_one(self):
        return self.re == 1 and not self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = GR_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        im = "+ i" if self.im == 1 else ("- i" if self.im == -1 else None)
        if im is None:
            im = f"- {-self.im}*i" if self.im < 0 else f"+ {self.im}*i"
        return f"{self.re} {im}"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


class LaurentPoly:
    """Laurent polynomial in s with Gaussian-rational coefficients.

    Stored sparsely as exponent -> coefficient; zero coefficients are never
    kept.  Instances are immutable by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs:
            self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}
        else:
            self.coeffs = {}

    @staticmethod
    def monomial(exp, coeff=GR_ONE):
        if coeff.is_zero():
            return LP_ZERO
        return LaurentPoly({exp: coeff})

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: GR_ONE} or (
            len(self.coeffs) == 1 and 0 in self.coeffs and self.coeffs[0].is_one()
        )

    def is_monomial(self):
        return len(self.coeffs) == 1

    def min_exp(self):
        return min(self.coeffs)

    def max_exp(self):
        return max(self.coeffs)

    def term_count(self):
        return len(self.coeffs)

    def shift(self, k):
        """Multiply by s**k."""
        if k == 0 or not self.coeffs:
            return self
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def scale(self, g):
        if g.is_zero():
            return LP_ZERO
        if g.is_one():
            return self
        return LaurentPoly({e: c * g for e, c in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = out
        return r

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v = v - c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
        r = LaurentPoly.__new__(LaurentPoly)
        r.coeffs = out
        return r

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LP_ZERO
        if len(a) == 1:
            (e1, c1), = a.items()
            return LaurentPoly({e1 + e2: c1 * c2 for e2, c2 in b.items()})
        if len(b) == 1:
            (e2, c2), = b.items()
            return LaurentPoly({e1 + e2: c1 * c2 for e1, c1 in a.items()})
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def conjugate_i(self):
        """Complex conjugation i -> -i, s fixed."""
        return LaurentPoly({e: c.conjugate() for e, c in self.coeffs.items()})

    def invert_s(self):
        """Substitution s -> 1/s."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def eval(self, value):
        """Evaluate at a nonzero GaussianRational s-value."""
        out = GR_ZERO
        for e, c in self.coeffs.items():
            out = out + c * value ** e
        return out

    def divexact(self, other):
        """Exact division; raises ValueError when the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LP_ZERO
        if len(other.coeffs) == 1:
            (e2, c2), = other.coeffs.items()
            inv = c2.inverse()
            return LaurentPoly({e1 - e2: c1 * inv for e1, c1 in self.coeffs.items()})
        shift = self.min_exp() - other.min_exp()
        num = _dense(self.shift(-self.min_exp()))
        den = _dense(other.shift(-other.min_exp()))
        quo, rem = _dense_divmod(num, den)
        if any(not c.is_zero() for c in rem):
            raise ValueError("division is not exact")
        return _from_dense(quo).shift(shift)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly({0: GR_ONE})


def _dense(p):
    """Dense coefficient list of a Laurent polynomial with min_exp 0."""
    deg = p.max_exp()
    out = [GR_ZERO] * (deg + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out


def _from_dense(lst):
    return LaurentPoly({e: c for e, c in enumerate(lst) if not c.is_zero()})


def _dense_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _dense_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    quo = [GR_ZERO] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c.is_zero():
            continue
        f = c * inv
        quo[i - db] = f
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - f * b[j]
    return _dense_trim(quo), _dense_trim(a[:db])


def _dense_gcd(a, b):
    """Monic gcd of dense polynomial coefficient lists."""
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    inv = a[-1].inverse()
    return [c * inv for c in a]


class ScalarQ:
    """Element of Q(i)(s): a reduced fraction of Laurent polynomials in s.

    Normal form: the denominator is an ordinary polynomial in s (minimal
    exponent 0) with constant coefficient 1, coprime to the numerator's
    polynomial part; any common s-power is shifted into the numerator.  Two
    values are equal iff their normal forms coincide.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=LP_ONE):
        n, d = _normalize(num, den)
        self.num = n
        self.den = d

    @staticmethod
    def _raw(num, den):
        """Internal: wrap an already-normalized pair."""
        out = ScalarQ.__new__(ScalarQ)
        out.num = num
        out.den = den
        return out

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def term_count(self):
        return self.num.term_count() + self.den.term_count()

    def __add__(self, other):
        if not isinstance(other, ScalarQ):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return ScalarQ._raw(self.num + other.num, LP_ONE)
        return ScalarQ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, ScalarQ):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return ScalarQ._raw(self.num - other.num, LP_ONE)
        return ScalarQ(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return ScalarQ._raw(-self.num, self.den)

    def __mul__(self, other):
        if not isinstance(other, ScalarQ):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return ScalarQ._raw(self.num * other.num, LP_ONE)
        return ScalarQ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return ScalarQ(self.num * other.den, self.den * other.num)

    def inverse(self):
        return ScalarQ(self.den, self.num)

    def __pow__(self, k):
        if k == 0:
            return ONE
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def conjugate_i(self):
        return ScalarQ(self.num.conjugate_i(), self.den.conjugate_i())

    def __repr__(self):
        from .render import render_scalar

        return render_scalar(self, "text")

    def __str__(self):
        return repr(self)


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return LP_ZERO, LP_ONE
    if den.is_one():
        return num, LP_ONE
    a = num.min_exp()
    b = den.min_exp()
    shifted_den = den.shift(-b)
    if len(shifted_den.coeffs) == 1:
        c = shifted_den.coeffs[0]
        return num.shift(-b).scale(c.inverse()), LP_ONE
    n_dense = _dense(num.shift(-a))
    d_dense = _dense(shifted_den)
    g = _dense_gcd(n_dense, d_dense)
    if len(g) > 1:
        n_dense, _ = _dense_divmod(n_dense, g)
        d_dense, _ = _dense_divmod(d_dense, g)
    c = d_dense[0]
    if len(d_dense) == 1:
        return _from_dense(n_dense).shift(a - b).scale(c.inverse()), LP_ONE
    if not c.is_one():
        inv = c.inverse()
        n_dense = [x * inv for x in n_dense]
        d_dense = [x * inv for x in d_dense]
    return _from_dense(n_dense).shift(a - b), _from_dense(d_dense)


ZERO = ScalarQ._raw(LP_ZERO, LP_ONE)
ONE = ScalarQ._raw(LP_ONE, LP_ONE)
I = ScalarQ._raw(LaurentPoly({0: GR_I}), LP_ONE)
S = ScalarQ._raw(LaurentPoly({1: GR_ONE}), LP_ONE)


def from_int(k):
    return ScalarQ._raw(LaurentPoly.monomial(0, GaussianRational(k)), LP_ONE)


def from_fraction(re, im=0):
    return ScalarQ._raw(
        LaurentPoly.monomial(0, GaussianRational(Fraction(re), Fraction(im))), LP_ONE
    )


@lru_cache(maxsize=None)
def s_power(k):
    """s**k as a field element."""
    return ScalarQ._raw(LaurentPoly.monomial(k), LP_ONE)


def q_power(k):
    """q**k = s**(2k) as a field element."""
    return s_power(2 * k)


@lru_cache(maxsize=None)
def qnum(m):
    """Symmetric q-number [m]_q = (q^m - q^-m)/(q - q^-1).

    Expands to the Laurent polynomial q^(m-1) + q^(m-3) + ... + q^(-m+1),
    so the denominator is always 1; [-m]_q = -[m]_q and [0]_q = 0.
    """
    if m == 0:
        return ZERO
    if m < 0:
        return -qnum(-m)
    return ScalarQ._raw(
        LaurentPoly({2 * (m - 1 - 2 * j): GR_ONE for j in range(m)}), LP_ONE
    )


def qnum_half():
    """The q-number [1/2]_q = (s - s^-1)/(s^2 - s^-2), reduced to 1/(s + s^-1)."""
    return ONE / (s_power(1) + s_power(-1))


def qfactorial(alpha):
    """Product of symmetric q-factorials [a]_q! over the entries of a multi-index."""
    out = ONE
    for a in alpha:
        if a < 0:
            raise ValueError("multi-index entries must be nonnegative")
        for m in range(2, a + 1):
            out = out * qnum(m)
    return out


def eval_at(x, s_value):
    """Specialize s to a nonzero Gaussian rational; the only numeric gate.

    Raises PoleError when the reduced denominator vanishes at s_value.
    """
    if isinstance(s_value, (int, Fraction)):
        s_value = GaussianRational(s_value)
    if s_value.is_zero():
        raise ValueError("s must be nonzero")
    den = x.den.eval(s_value)
    if den.is_zero():
        raise PoleError("denominator vanishes at the requested point")
    return x.num.eval(s_value) / den
