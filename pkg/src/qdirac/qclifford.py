"""The q-Clifford algebra Cl^q_{0,n} and Clifford-valued q-polynomials.

Two deformations share one implementation, selected by the sign sigma:
sigma=+1 is Cl^q (e_i e_j = -q e_j e_i for i<j), sigma=-1 is its q^-1 twin
hosting the e+ generators.  Blades are strictly increasing index tuples;
variables commute with all Clifford generators.
"""

from __future__ import annotations

from .errors import DeformationMismatch, DimensionMismatch, IndexOutOfRange
from .qpoly import QPolynomial, monomial_qfactor
from .scalars import ONE, ScalarQ, eval_at, q_power

__all__ = [
    "blade_mul",
    "blade_conjugation_factor",
    "Blade",
    "CliffordElement",
    "CliffordPolynomial",
    "blade_basis",
    "clifford_conjugate",
    "scalar_part",
    "cpoly_mul",
    "classical_norm",
]

Blade = tuple  # strictly increasing tuple of generator indices; () is e_0 = 1


def _check_blade(blade, n):
    last = 0
    for i in blade:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"generator index {i} outside 1..{n}")
        if i <= last:
            raise ValueError("blade indices must be strictly increasing")
        last = i


def blade_mul(a, b, sigma=1):
    """Multiply two blades, returning (ScalarQ factor, result blade).

    Concatenates the index words and normalizes: each swap of a strictly
    descending adjacent pair contributes -q^(-sigma), each equal adjacent
    pair collapses to the factor -1.  The result blade is the symmetric
    difference of the index sets.
    """
    word = list(a)
    exponent = 0  # power of q from swaps
    sign = 1
    for g in b:
        j = len(word)
        while j > 0 and word[j - 1] > g:
            j -= 1
            sign = -sign
            exponent -= sigma
        if j > 0 and word[j - 1] == g:
            del word[j - 1]
            sign = -sign
        else:
            word.insert(j, g)
    factor = q_power(exponent)
    if sign < 0:
        factor = -factor
    return factor, tuple(word)


def blade_conjugation_factor(grade, sigma=1):
    """Factor picked up by Clifford conjugation on a blade of the given grade.

    Conjugation reverses the word and negates every generator; the reversal
    undoes the braiding, so each of the r(r-1)/2 swaps contributes -q^(+sigma),
    giving (-1)^r (-q^sigma)^(r(r-1)/2) on a grade-r blade.  This is the unique
    scaling with bar(e_A) e_A = 1 for every blade, which makes left blade
    multiplication skew-adjoint for the Fischer pairing and hence the
    monogenic decomposition orthogonal.
    """
    swaps = grade * (grade - 1) // 2
    factor = q_power(sigma * swaps)
    if (grade + swaps) % 2:
        factor = -factor
    return factor


class CliffordElement:
    """Element of Cl^q_{0,n} (or its q^-1 twin): blade -> ScalarQ."""

    __slots__ = ("n", "sigma", "terms")

    def __init__(self, n, sigma=1, terms=None):
        if sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")
        self.n = n
        self.sigma = sigma
        if terms:
            self.terms = {b: c for b, c in terms.items() if not c.is_zero()}
        else:
            self.terms = {}

    @staticmethod
    def zero(n, sigma=1):
        return CliffordElement(n, sigma)

    @staticmethod
    def one(n, sigma=1):
        return CliffordElement(n, sigma, {(): ONE})

    @staticmethod
    def generator(n, i, sigma=1):
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"generator index {i} outside 1..{n}")
        return CliffordElement(n, sigma, {(i,): ONE})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")
        if self.sigma != other.sigma:
            raise DeformationMismatch(f"deformation {self.sigma} vs {other.sigma}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            v = out.get(b)
            if v is None:
                out[b] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[b]
                else:
                    out[b] = v
        r = CliffordElement(self.n, self.sigma)
        r.terms = out
        return r

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CliffordElement(self.n, self.sigma, {b: -c for b, c in self.terms.items()})

    def scale(self, c):
        if c.is_zero():
            return CliffordElement(self.n, self.sigma)
        return CliffordElement(self.n, self.sigma, {b: c * v for b, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        self._check(other)
        out = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                f, b = blade_mul(b1, b2, self.sigma)
                v = c1 * c2 * f
                prev = out.get(b)
                out[b] = v if prev is None else prev + v
        return CliffordElement(self.n, self.sigma, out)

    def __rmul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.sigma == other.sigma and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.sigma, tuple(sorted(self.terms.items()))))

    def conjugate(self):
        """Clifford conjugation, extended ScalarQ-antilinearly (i -> -i)."""
        out = {}
        for b, c in self.terms.items():
            out[b] = c.conjugate_i() * blade_conjugation_factor(len(b), self.sigma)
        return CliffordElement(self.n, self.sigma, out)

    def scalar_part(self):
        from .scalars import ZERO

        return self.terms.get((), ZERO)

    def __repr__(self):
        from .render import render_clifford_element

        return render_clifford_element(self, "text")


def clifford_conjugate(a):
    return a.conjugate()


def scalar_part(a):
    return a.scalar_part()


def blade_basis(n):
    """All blades on n generators, ordered by grade then lexicographically."""
    out = [()]
    from itertools import combinations

    for r in range(1, n + 1):
        out.extend(combinations(range(1, n + 1), r))
    return out


class CliffordPolynomial:
    """Clifford-valued q-polynomial: (monomial, blade) -> ScalarQ.

    Variables commute with blades, so these pairs form a basis.  The carried
    sigma selects which deformation the blade part multiplies in.
    """

    __slots__ = ("n", "sigma", "terms")

    def __init__(self, n, sigma=1, terms=None):
        if sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")
        self.n = n
        self.sigma = sigma
        if terms:
            self.terms = {k: c for k, c in terms.items() if not c.is_zero()}
        else:
            self.terms = {}

    @staticmethod
    def zero(n, sigma=1):
        return CliffordPolynomial(n, sigma)

    @staticmethod
    def one(n, sigma=1):
        return CliffordPolynomial(n, sigma, {((0,) * n, ()): ONE})

    @staticmethod
    def from_qpoly(p, sigma=1):
        return CliffordPolynomial(p.n, sigma, {(a, ()): c for a, c in p.terms.items()})

    @staticmethod
    def from_element(e, poly_dim=None):
        n = e.n if poly_dim is None else poly_dim
        zero = (0,) * n
        return CliffordPolynomial(n, e.sigma, {(zero, b): c for b, c in e.terms.items()})

    @staticmethod
    def basis_vector(n, alpha, blade, sigma=1):
        _check_blade(blade, n)
        return CliffordPolynomial(n, sigma, {(tuple(alpha), tuple(blade)): ONE})

    def is_zero(self):
        return not self.terms

    def is_scalar_valued(self):
        return all(not b for (_, b) in self.terms)

    def to_qpoly(self):
        """Extract the polynomial when no proper blades occur."""
        if not self.is_scalar_valued():
            raise ValueError("polynomial has non-scalar Clifford part")
        return QPolynomial(self.n, {a: c for (a, b), c in self.terms.items()})

    def with_sigma(self, sigma):
        if sigma == self.sigma:
            return self
        if not self.is_scalar_valued():
            raise DeformationMismatch("cannot move blades between deformations")
        return CliffordPolynomial(self.n, sigma, dict(self.terms))

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(a) for (a, _) in self.terms)

    def is_homogeneous(self):
        degs = {sum(a) for (a, _) in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, k):
        return CliffordPolynomial(
            self.n, self.sigma, {t: c for t, c in self.terms.items() if sum(t[0]) == k}
        )

    def coefficient(self, alpha, blade):
        from .scalars import ZERO

        return self.terms.get((tuple(alpha), tuple(blade)), ZERO)

    def clifford_coefficient(self, alpha):
        """The Clifford element multiplying the monomial x^alpha."""
        alpha = tuple(alpha)
        return CliffordElement(
            self.n, self.sigma, {b: c for (a, b), c in self.terms.items() if a == alpha}
        )

    def monomials(self):
        return sorted({a for (a, _) in self.terms}, reverse=True)

    def star(self):
        """Coefficient-wise complex conjugation (i -> -i); blades untouched."""
        return CliffordPolynomial(
            self.n, self.sigma, {t: c.conjugate_i() for t, c in self.terms.items()}
        )

    def scale(self, c):
        if c.is_zero():
            return CliffordPolynomial(self.n, self.sigma)
        return CliffordPolynomial(
            self.n, self.sigma, {t: c * v for t, v in self.terms.items()}
        )

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"dimension {self.n} vs {other.n}")
        if self.sigma != other.sigma:
            if self.is_scalar_valued() or other.is_scalar_valued():
                return
            raise DeformationMismatch(f"deformation {self.sigma} vs {other.sigma}")

    def __add__(self, other):
        self._check(other)
        sigma = self.sigma if not self.is_scalar_valued() else other.sigma
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t)
            if v is None:
                out[t] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[t]
                else:
                    out[t] = v
        r = CliffordPolynomial(self.n, sigma)
        r.terms = out
        return r

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CliffordPolynomial(
            self.n, self.sigma, {t: -c for t, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        return cpoly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, ScalarQ):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        if self.n != other.n or self.terms != other.terms:
            return False
        if self.sigma != other.sigma and not self.is_scalar_valued():
            return False
        return True

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        from .render import render_cpoly

        return render_cpoly(self, "text")


def cpoly_mul(p, r):
    """Product of Clifford-valued q-polynomials.

    (x^a e_A)(x^b e_B) combines the q-power from reordering the variables with
    the blade_mul factor; variables commute with blades throughout.
    """
    if p.n != r.n:
        raise DimensionMismatch(f"dimension {p.n} vs {r.n}")
    if p.sigma != r.sigma and not (p.is_scalar_valued() or r.is_scalar_valued()):
        raise DeformationMismatch(f"deformation {p.sigma} vs {r.sigma}")
    sigma = p.sigma if not p.is_scalar_valued() else r.sigma
    out = {}
    for (a, ba), c1 in p.terms.items():
        for (b, bb), c2 in r.terms.items():
            f, blade = blade_mul(ba, bb, sigma)
            gamma = tuple(x + y for x, y in zip(a, b))
            v = c1 * c2 * f * q_power(monomial_qfactor(a, b))
            key = (gamma, blade)
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return CliffordPolynomial(p.n, sigma, out)


def classical_norm(a, s_value):
    """Numeric diagnostic |lambda|_0 = 2^(n/2) (sum |lambda_A|^2)^(1/2).

    Purely a float check after specialization; plays no role in the exact core.
    """
    total = 0.0
    for _, c in a.terms.items():
        v = eval_at(c, s_value)
        total += float(v.re) ** 2 + float(v.im) ** 2
    return (2.0 ** (a.n / 2.0)) * total ** 0.5
