"""The q-commutative polynomial ring A = C[x_1,...,x_n], x_i x_j = q x_j x_i (i<j).

Polynomials are kept in normal order: every monomial is an exponent vector
alpha for the ascending word x_1^a1 ... x_n^an.  Reordering factors picks up
integer powers of q, which land in the ScalarQ coefficients.
"""

from __future__ import annotations

from .errors import DimensionMismatch, IndexOutOfRange
from .scalars import ONE, ScalarQ, q_power

__all__ = [
    "QPolynomial",
    "normal_order",
    "mul_left",
    "mul_right",
    "poly_mul",
    "q_radius",
    "zq_power",
    "monomial_basis",
    "dim_p",
]


class QPolynomial:
    """Linear combination of normal-ordered monomials over ScalarQ.

    terms maps exponent tuples (length n) to nonzero coefficients; the zero
    polynomial has an empty map but still carries its dimension.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        if terms:
            self.terms = {a: c for a, c in terms.items() if not c.is_zero()}
        else:
            self.terms = {}

    @staticmethod
    def zero(n):
        return QPolynomial(n)

    @staticmethod
    def one(n):
        return QPolynomial(n, {(0,) * n: ONE})

    @staticmethod
    def monomial(n, alpha, coeff=ONE):
        alpha = tuple(alpha)
        if len(alpha) != n or any(a < 0 for a in alpha):
            raise ValueError("bad exponent vector")
        return QPolynomial(n, {alpha: coeff})

    @staticmethod
    def variable(n, i):
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"variable index {i} outside 1..{n}")
        alpha = tuple(1 if j == i - 1 else 0 for j in range(n))
        return QPolynomial(n, {alpha: ONE})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def is_homogeneous(self):
        degs = {sum(a) for a in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, k):
        return QPolynomial(self.n, {a: c for a, c in self.terms.items() if sum(a) == k})

    def coefficient(self, alpha):
        from .scalars import ZERO

        return self.terms.get(tuple(alpha), ZERO)

    def scale(self, c):
        if c.is_zero():
            return QPolynomial(self.n)
        return QPolynomial(self.n, {a: c * v for a, v in self.terms.items()})

    def map_coeffs(self, f):
        return QPolynomial(self.n, {a: f(c) for a, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = out.get(a)
            if v is None:
                out[a] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[a]
                else:
                    out[a] = v
        r = QPolynomial(self.n)
        r.terms = out
        return r

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QPolynomial(self.n, {a: -c for a, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def specialize(self, s_value):
        """Coefficient-wise numeric evaluation; returns alpha -> GaussianRational."""
        from .scalars import eval_at

        return {a: eval_at(c, s_value) for a, c in self.terms.items()}

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")

    def __repr__(self):
        from .render import render_qpoly

        return render_qpoly(self, "text")


def normal_order(n, word):
    """Sort a word of variable indices into normal order, collecting the q-power.

    Each adjacent swap moving a smaller index leftward past a larger one uses
    x_j x_i = q^-1 x_i x_j (i<j), so the word contributes q^(-inversions).
    This is the oracle all closed-form products are checked against.
    """
    word = list(word)
    for i in word:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"variable index {i} outside 1..{n}")
    inversions = 0
    # insertion sort, counting inversions exactly
    for k in range(1, len(word)):
        j = k
        while j > 0 and word[j - 1] > word[j]:
            word[j - 1], word[j] = word[j], word[j - 1]
            inversions += 1
            j -= 1
    alpha = [0] * n
    for i in word:
        alpha[i - 1] += 1
    return q_power(-inversions), tuple(alpha)


def mul_left(i, p):
    """x_i * p in normal order: x_i x^alpha = q^(-sum_{j<i} alpha_j) x^(alpha+e_i)."""
    if not 1 <= i <= p.n:
        raise IndexOutOfRange(f"variable index {i} outside 1..{p.n}")
    out = QPolynomial(p.n)
    terms = out.terms
    for alpha, c in p.terms.items():
        k = sum(alpha[: i - 1])
        beta = alpha[: i - 1] + (alpha[i - 1] + 1,) + alpha[i:]
        v = c * q_power(-k)
        prev = terms.get(beta)
        terms[beta] = v if prev is None else prev + v
    out.terms = {a: c for a, c in terms.items() if not c.is_zero()}
    return out


def mul_right(i, p):
    """p * x_i in normal order: x^alpha x_i = q^(-sum_{j>i} alpha_j) x^(alpha+e_i)."""
    if not 1 <= i <= p.n:
        raise IndexOutOfRange(f"variable index {i} outside 1..{p.n}")
    out = QPolynomial(p.n)
    terms = out.terms
    for alpha, c in p.terms.items():
        k = sum(alpha[i:])
        beta = alpha[: i - 1] + (alpha[i - 1] + 1,) + alpha[i:]
        v = c * q_power(-k)
        prev = terms.get(beta)
        terms[beta] = v if prev is None else prev + v
    out.terms = {a: c for a, c in terms.items() if not c.is_zero()}
    return out


def monomial_qfactor(alpha, beta):
    """q-power exponent from concatenating x^alpha with x^beta and reordering.

    Inversions between the blocks: every letter pair (l from alpha, m from
    beta) with l > m is one inversion, so the factor is
    q^(-sum_{l>m} alpha_l beta_m).
    """
    inv = 0
    for m in range(len(beta)):
        if beta[m]:
            inv += sum(alpha[m + 1 :]) * beta[m]
    return -inv


def poly_mul(p, r):
    """Product in A, bilinear extension of monomial concatenation."""
    if p.n != r.n:
        raise DimensionMismatch(f"dimension {p.n} vs {r.n}")
    out = QPolynomial(p.n)
    terms = out.terms
    for alpha, c1 in p.terms.items():
        for beta, c2 in r.terms.items():
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            v = c1 * c2 * q_power(monomial_qfactor(alpha, beta))
            prev = terms.get(gamma)
            terms[gamma] = v if prev is None else prev + v
    out.terms = {a: c for a, c in terms.items() if not c.is_zero()}
    return out


def q_radius(n):
    """The Q-radius Q = x_1^2 + q^-1 x_2^2 + ... + q^(-n+1) x_n^2."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    out = QPolynomial(n)
    for i in range(1, n + 1):
        alpha = tuple(2 if j == i - 1 else 0 for j in range(n))
        out.terms[alpha] = q_power(-(i - 1))
    return out


def zq_power(m, conjugated=False):
    """The ordered product z_0 z_1 ... z_{m-1} with z_r = x_1 + i q^r x_2 (n=2).

    With conjugated=True the factors are x_1 - i q^r x_2 instead.
    """
    from .scalars import I

    if m < 0:
        raise ValueError("degree must be nonnegative")
    sign = -I if conjugated else I
    out = QPolynomial.one(2)
    for r in range(m):
        factor = QPolynomial(2, {(1, 0): ONE, (0, 1): sign * q_power(r)})
        out = poly_mul(out, factor)
    return out


def monomial_basis(n, k):
    """All degree-k exponent vectors in descending graded-lex order.

    The fixed enumeration every matrix in the package uses: x_1^k first.
    """
    if k < 0:
        return []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + (a,), remaining - a, slots - 1)

    rec((), k, n)
    return out


def dim_p(n, k):
    """Dimension of the space of homogeneous degree-k polynomials."""
    if k < 0:
        return 0
    from math import comb

    return comb(k + n - 1, n - 1)
