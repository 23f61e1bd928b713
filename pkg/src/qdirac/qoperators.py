"""Symbolic operators with exact actions on (Clifford-valued) q-polynomials.

Primitive operators act monomial-wise through closed forms derived from the
dilation operators gamma_i; expression trees combine them by sums, ordered
compositions and powers.  Composition is read right to left: in a*b the
factor b acts first.  Matrices on graded components realize any operator
exactly over ScalarQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DeformationMismatch,
    DegreeShiftMismatch,
    DegenerateBracket,
    DimensionMismatch,
    IndexOutOfRange,
    NotHarmonic,
    NotHomogeneous,
)
from .qclifford import CliffordPolynomial, blade_basis, blade_mul
from .qpoly import QPolynomial, monomial_basis, mul_right, poly_mul, q_radius
from .scalars import ONE, ZERO, ScalarQ, from_int, q_power, qnum, s_power

__all__ = [
    "OperatorExpr",
    "OpPrim",
    "OpSum",
    "OpCompose",
    "OpPower",
    "identity",
    "zero_op",
    "sc",
    "gamma",
    "omega",
    "gamma_all",
    "diff_r",
    "diff_l",
    "mul_var_l",
    "mul_var_r",
    "mul_blade_left",
    "mul_blade_right",
    "laplacian_r",
    "laplacian_l",
    "qhat_l",
    "qhat_r",
    "dirac_r",
    "dirac_l",
    "xvec_l",
    "xvec_r",
    "lx_q",
    "gamma_sq_brace",
    "q_comm_denominator",
    "commutator",
    "anticommutator",
    "apply",
    "GradedMatrix",
    "to_matrix",
    "scalar_basis",
    "clifford_basis",
    "basis_vector",
    "harmonic_raise",
    "harmonic_lower",
]


# ---------------------------------------------------------------------------
# primitive operators


@dataclass(frozen=True)
class Gamma:
    i: int
    exp: int = 1


@dataclass(frozen=True)
class Omega:
    i: int
    exp: int = 1


@dataclass(frozen=True)
class GammaAll:
    exp: int = 1


@dataclass(frozen=True)
class DiffR:
    i: int


@dataclass(frozen=True)
class DiffL:
    i: int


@dataclass(frozen=True)
class MulVarL:
    i: int


@dataclass(frozen=True)
class MulVarR:
    i: int


@dataclass(frozen=True)
class MulBladeLeft:
    blade: tuple
    sigma: int = 1


@dataclass(frozen=True)
class MulBladeRight:
    blade: tuple
    sigma: int = 1


@dataclass(frozen=True)
class ScalarMul:
    value: ScalarQ


_SHIFT = {DiffR: -1, DiffL: -1, MulVarL: 1, MulVarR: 1}


def _prim_shift(prim):
    return _SHIFT.get(type(prim), 0)


def _prim_sigma(prim):
    if isinstance(prim, (MulBladeLeft, MulBladeRight)):
        return prim.sigma
    return None


def _check_index(i, n):
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 1..{n}")


def _apply_prim(prim, p):
    """Exact action of one primitive on a CliffordPolynomial."""
    n = p.n
    out = {}

    def put(key, value):
        if value.is_zero():
            return
        prev = out.get(key)
        if prev is None:
            out[key] = value
        else:
            prev = prev + value
            if prev.is_zero():
                del out[key]
            else:
                out[key] = prev

    kind = type(prim)
    if kind is ScalarMul:
        return p.scale(prim.value)
    if kind in (MulBladeLeft, MulBladeRight):
        if not p.is_scalar_valued() and p.sigma != prim.sigma:
            raise DeformationMismatch(
                f"operator blades live in sigma={prim.sigma}, polynomial in {p.sigma}"
            )
        for (alpha, b), c in p.terms.items():
            if kind is MulBladeLeft:
                f, blade = blade_mul(prim.blade, b, prim.sigma)
            else:
                f, blade = blade_mul(b, prim.blade, prim.sigma)
            put((alpha, blade), c * f)
        return CliffordPolynomial(n, prim.sigma, out)

    sigma = p.sigma
    if kind is Gamma:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            put((alpha, b), c * q_power(prim.exp * alpha[i]))
    elif kind is GammaAll:
        for (alpha, b), c in p.terms.items():
            put((alpha, b), c * q_power(prim.exp * sum(alpha)))
    elif kind is Omega:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            w = sum(alpha[i + 1 :]) - sum(alpha[:i])
            put((alpha, b), c * q_power(prim.exp * w))
    elif kind is DiffR:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            a = alpha[i]
            if a == 0:
                continue
            beta = alpha[:i] + (a - 1,) + alpha[i + 1 :]
            put((beta, b), c * qnum(a) * q_power(sum(alpha[i + 1 :])))
    elif kind is DiffL:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            a = alpha[i]
            if a == 0:
                continue
            beta = alpha[:i] + (a - 1,) + alpha[i + 1 :]
            put((beta, b), c * qnum(a) * q_power(sum(alpha[:i])))
    elif kind is MulVarL:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1 :]
            put((beta, b), c * q_power(-sum(alpha[:i])))
    elif kind is MulVarR:
        _check_index(prim.i, n)
        i = prim.i - 1
        for (alpha, b), c in p.terms.items():
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1 :]
            put((beta, b), c * q_power(-sum(alpha[i + 1 :])))
    else:
        raise TypeError(f"unknown primitive {prim!r}")
    return CliffordPolynomial(n, sigma, out)


# ---------------------------------------------------------------------------
# expression trees


class OperatorExpr:
    """Base class; combine with +, -, * (ordered composition) and ** k."""

    def apply_cpoly(self, p):
        raise NotImplementedError

    def degree_shift(self):
        raise NotImplementedError

    def primitives(self):
        raise NotImplementedError

    def __add__(self, other):
        return OpSum((self, other))

    def __sub__(self, other):
        return OpSum((self, -other))

    def __neg__(self):
        return OpCompose((_MINUS_ONE, self))

    def __mul__(self, other):
        if isinstance(other, ScalarQ):
            return OpCompose((self, OpPrim(ScalarMul(other))))
        return OpCompose((self, other))

    def __rmul__(self, other):
        if isinstance(other, ScalarQ):
            return OpCompose((OpPrim(ScalarMul(other)), self))
        return NotImplemented

    def __pow__(self, k):
        return OpPower(self, k)

    def sigma_hint(self):
        for prim in self.primitives():
            s = _prim_sigma(prim)
            if s is not None:
                return s
        return None


@dataclass(frozen=True)
class OpPrim(OperatorExpr):
    prim: object

    def apply_cpoly(self, p):
        return _apply_prim(self.prim, p)

    def degree_shift(self):
        return _prim_shift(self.prim)

    def primitives(self):
        yield self.prim


@dataclass(frozen=True)
class OpSum(OperatorExpr):
    terms: tuple

    def apply_cpoly(self, p):
        out = None
        for t in self.terms:
            v = t.apply_cpoly(p)
            out = v if out is None else out + v
        if out is None:
            return CliffordPolynomial.zero(p.n, p.sigma)
        return out

    def degree_shift(self):
        shifts = {t.degree_shift() for t in self.terms}
        if not shifts:
            return 0
        if len(shifts) > 1:
            raise DegreeShiftMismatch(f"summands shift degree by {sorted(shifts)}")
        return shifts.pop()

    def primitives(self):
        for t in self.terms:
            yield from t.primitives()


@dataclass(frozen=True)
class OpCompose(OperatorExpr):
    factors: tuple  # rightmost acts first

    def apply_cpoly(self, p):
        for f in reversed(self.factors):
            p = f.apply_cpoly(p)
        return p

    def degree_shift(self):
        return sum(f.degree_shift() for f in self.factors)

    def primitives(self):
        for f in self.factors:
            yield from f.primitives()


@dataclass(frozen=True)
class OpPower(OperatorExpr):
    base: OperatorExpr
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("operator powers must be nonnegative")

    def apply_cpoly(self, p):
        for _ in range(self.k):
            p = self.base.apply_cpoly(p)
        return p

    def degree_shift(self):
        return self.base.degree_shift() * self.k

    def primitives(self):
        yield from self.base.primitives()


def identity():
    return OpCompose(())


def zero_op():
    return OpSum(())


def sc(value):
    """Scalar multiplication operator."""
    if isinstance(value, int):
        value = from_int(value)
    return OpPrim(ScalarMul(value))


def gamma(i, exp=1):
    return OpPrim(Gamma(i, exp))


def omega(i, exp=1):
    return OpPrim(Omega(i, exp))


def gamma_all(exp=1):
    return OpPrim(GammaAll(exp))


def diff_r(i):
    return OpPrim(DiffR(i))


def diff_l(i):
    return OpPrim(DiffL(i))


def mul_var_l(i):
    return OpPrim(MulVarL(i))


def mul_var_r(i):
    return OpPrim(MulVarR(i))


def mul_blade_left(blade, sigma=1):
    return OpPrim(MulBladeLeft(tuple(blade), sigma))


def mul_blade_right(blade, sigma=1):
    return OpPrim(MulBladeRight(tuple(blade), sigma))


_MINUS_ONE = OpPrim(ScalarMul(from_int(-1)))


# ---------------------------------------------------------------------------
# named operators of the theory


def laplacian_r(n):
    """Delta_q^R = sum_i q^(n-i) (d_i^R)^2, the U_q(o)-invariant Laplacian."""
    return OpSum(tuple(sc(q_power(n - i)) * diff_r(i) ** 2 for i in range(1, n + 1)))


def laplacian_l(n):
    """Left Laplacian sum_i q^(-(i-1)) (d_i^L)^2; the diagonal making D_q^L square to it."""
    return OpSum(tuple(sc(q_power(-(i - 1))) * diff_l(i) ** 2 for i in range(1, n + 1)))


def qhat_l(n):
    """Multiplication operator of the Q-radius from the left."""
    return OpSum(tuple(sc(q_power(-(i - 1))) * mul_var_l(i) ** 2 for i in range(1, n + 1)))


def qhat_r(n):
    """Right Q-radius operator sum_i q^(n-i) (x_i^R)^2; the diagonal squared by xvec_r."""
    return OpSum(tuple(sc(q_power(n - i)) * mul_var_r(i) ** 2 for i in range(1, n + 1)))


def dirac_r(n):
    """D_q^R = sum_i sqrt(q)^(n-i) e_i d_i^R in Cl^q (sigma=+1)."""
    return OpSum(
        tuple(
            sc(s_power(n - i)) * (mul_blade_left((i,), 1) * diff_r(i))
            for i in range(1, n + 1)
        )
    )


def dirac_l(n):
    """D_q^L = sum_i sqrt(q)^(-i+1) d_i^L e+_i in the q^-1 twin (sigma=-1)."""
    return OpSum(
        tuple(
            sc(s_power(-(i - 1))) * (mul_blade_left((i,), -1) * diff_l(i))
            for i in range(1, n + 1)
        )
    )


def xvec_r(n):
    """Vector variable x_q^R = sum_i sqrt(q)^(n-i) e_i x_i^R (sigma=+1)."""
    return OpSum(
        tuple(
            sc(s_power(n - i)) * (mul_blade_left((i,), 1) * mul_var_r(i))
            for i in range(1, n + 1)
        )
    )


def xvec_l(n):
    """Vector variable x_q^L = sum_i sqrt(q)^(-i+1) x_i^L e+_i (sigma=-1)."""
    return OpSum(
        tuple(
            sc(s_power(-(i - 1))) * (mul_blade_left((i,), -1) * mul_var_l(i))
            for i in range(1, n + 1)
        )
    )


def lx_q(n):
    """The left vector variable living in Cl^q: sum_i sqrt(q)^(-i+1) x_i^L e_i.

    It does not factorize the Q-radius; it is the Fischer partner of D_q^R.
    """
    return OpSum(
        tuple(
            sc(s_power(-(i - 1))) * (mul_blade_left((i,), 1) * mul_var_l(i))
            for i in range(1, n + 1)
        )
    )


@lru_cache(maxsize=None)
def q_comm_denominator():
    """The scalar q - q^-1."""
    return q_power(1) - q_power(-1)


def gamma_sq_brace(a):
    """The operator {q^a gamma^2}_q = (q^a gamma^2 - q^-a gamma^-2)/(q - q^-1)."""
    gsq = gamma_all(1) * gamma_all(1)
    gsq_inv = gamma_all(-1) * gamma_all(-1)
    inner = OpSum((sc(q_power(a)) * gsq, sc(-q_power(-a)) * gsq_inv))
    return sc(ONE / q_comm_denominator()) * inner


def commutator(a, b):
    return OpSum((a * b, -(b * a)))


def anticommutator(a, b):
    return OpSum((a * b, b * a))


# ---------------------------------------------------------------------------
# application and matrices


def apply(op, p):
    """Apply an operator expression; QPolynomial inputs come back scalar if possible."""
    if isinstance(p, QPolynomial):
        sigma = op.sigma_hint() or 1
        out = op.apply_cpoly(CliffordPolynomial.from_qpoly(p, sigma))
        if out.is_scalar_valued():
            return out.to_qpoly()
        return out
    return op.apply_cpoly(p)


def scalar_basis(n, k):
    """Basis keys of P_k: exponent tuples in the fixed graded-lex order."""
    return monomial_basis(n, k)


def clifford_basis(n, k):
    """Basis keys of P_k(Cl): (monomial, blade), monomial-major."""
    blades = blade_basis(n)
    return [(a, b) for a in monomial_basis(n, k) for b in blades]


def basis_vector(n, key, space="scalar", sigma=1):
    if space == "scalar":
        return QPolynomial.monomial(n, key)
    alpha, blade = key
    return CliffordPolynomial.basis_vector(n, alpha, blade, sigma)


def coordinates(p, basis_keys):
    """Coefficient vector of a polynomial in a graded basis (keys must cover it)."""
    if isinstance(p, QPolynomial):
        terms = p.terms
    else:
        terms = p.terms
    index = {key: r for r, key in enumerate(basis_keys)}
    out = [ZERO] * len(basis_keys)
    for t, c in terms.items():
        r = index.get(t)
        if r is None:
            raise ValueError(f"term {t} outside the given basis")
        out[r] = c
    return out


def from_coordinates(n, basis_keys, coords, space="scalar", sigma=1):
    """Rebuild a polynomial from its coefficient vector in a graded basis."""
    if space == "scalar":
        terms = {key: c for key, c in zip(basis_keys, coords) if not c.is_zero()}
        return QPolynomial(n, terms)
    terms = {key: c for key, c in zip(basis_keys, coords) if not c.is_zero()}
    return CliffordPolynomial(n, sigma, terms)


@dataclass(frozen=True)
class GradedMatrix:
    """Exact matrix of an operator between graded components.

    Entry (r, c) is the coefficient of target basis element r in the image of
    source basis element c.
    """

    source_basis: tuple
    target_basis: tuple
    entries: tuple

    @property
    def shape(self):
        return (len(self.target_basis), len(self.source_basis))

    def is_zero(self):
        return all(c.is_zero() for row in self.entries for c in row)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.source_basis == other.source_basis
            and self.target_basis == other.target_basis
            and self.entries == other.entries
        )

    def rows(self):
        return [list(r) for r in self.entries]


def to_matrix(op, k, n, space="scalar", sigma=1):
    """Exact matrix of op on the degree-k component, in the fixed basis order."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    shift = op.degree_shift()
    src = (
        scalar_basis(n, k) if space == "scalar" else clifford_basis(n, k)
    )
    tgt_deg = k + shift
    tgt = (
        (scalar_basis(n, tgt_deg) if space == "scalar" else clifford_basis(n, tgt_deg))
        if tgt_deg >= 0
        else []
    )
    index = {key: r for r, key in enumerate(tgt)}
    columns = []
    for key in src:
        v = basis_vector(n, key, space, sigma)
        img = apply(op, v)
        col = [ZERO] * len(tgt)
        if isinstance(img, QPolynomial):
            items = img.terms.items()
        else:
            if space == "scalar" and not img.is_scalar_valued():
                raise ValueError("operator leaves the scalar value space")
            items = img.terms.items()
        for t, c in items:
            if isinstance(img, QPolynomial):
                key_t = t
            else:
                key_t = t if space != "scalar" else t[0]
            r = index.get(key_t)
            if r is None:
                raise DegreeShiftMismatch(
                    f"image term {key_t} escapes the degree-{tgt_deg} component"
                )
            col[r] = c
        columns.append(col)
    entries = tuple(
        tuple(columns[c][r] for c in range(len(src))) for r in range(len(tgt))
    )
    return GradedMatrix(tuple(src), tuple(tgt), entries)


# ---------------------------------------------------------------------------
# harmonic recursion


def _require_harmonic(h, n):
    if not h.is_homogeneous():
        raise NotHomogeneous("input must be homogeneous")
    if not apply(laplacian_r(n), h).is_zero():
        raise NotHarmonic("input is not q-harmonic")


def harmonic_raise(h, n=None):
    """Send h in H_m to h*x_n - Q gamma_n^-1 d_n^R h / [n+2m-2]_q in H_{m+1}."""
    n = h.n if n is None else n
    if n != h.n:
        raise DimensionMismatch(f"dimension {h.n} vs {n}")
    _require_harmonic(h, n)
    m = max(h.degree(), 0)
    if n + 2 * m - 2 == 0:
        raise DegenerateBracket("[n+2m-2]_q vanishes at n=2, m=0")
    lowered = apply(gamma(n, -1) * diff_r(n), h)
    out = mul_right(n, h) - poly_mul(q_radius(n), lowered).scale(
        ONE / qnum(n + 2 * m - 2)
    )
    if not apply(laplacian_r(n), out).is_zero():
        raise NotHarmonic("raise left the harmonic kernel; recursion hypothesis violated")
    return out


def harmonic_lower(h, n=None):
    """Send h in H_m to gamma_n^-1 d_n^R h in H_{m-1}."""
    n = h.n if n is None else n
    if n != h.n:
        raise DimensionMismatch(f"dimension {h.n} vs {n}")
    _require_harmonic(h, n)
    out = apply(gamma(n, -1) * diff_r(n), h)
    if not apply(laplacian_r(n), out).is_zero():
        raise NotHarmonic("lower left the harmonic kernel; recursion hypothesis violated")
    return out
