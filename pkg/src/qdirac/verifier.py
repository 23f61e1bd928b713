"""Relation-suite engine: machine-checks operator identities on graded components.

Every named relation is instantiated over dimensions, indices and a degree
sweep, then verified by exact equality of images on the full monomial basis
(equivalently, matrix equality on the graded component).  Bilinear rules are
checked on seeded random polynomial pairs.  Negative-control mutants are part
of the suite and must fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import UnknownRelationName
from .qclifford import CliffordPolynomial
from .qpoly import QPolynomial, poly_mul
from .render import json_dumps, render
from .scalars import ONE, from_int, q_power, qnum, qnum_half, s_power
from .qoperators import (
    OperatorExpr,
    apply,
    basis_vector,
    clifford_basis,
    commutator,
    diff_l,
    diff_r,
    dirac_l,
    dirac_r,
    gamma,
    gamma_all,
    gamma_sq_brace,
    laplacian_l,
    laplacian_r,
    mul_blade_left,
    mul_var_l,
    mul_var_r,
    omega,
    qhat_l,
    qhat_r,
    sc,
    scalar_basis,
    xvec_l,
    xvec_r,
    zero_op,
)

__all__ = [
    "SuiteConfig",
    "CaseResult",
    "ConformanceReport",
    "RelationSpec",
    "relation_names",
    "run_suite",
    "check_identity",
]


@dataclass(frozen=True)
class SuiteConfig:
    """Sweep ranges and seeding; defaults match the acceptance envelope."""

    scalar_n_max: int = 4
    clifford_n_max: int = 3
    deg_min: int = 0
    deg_max: int = 5
    seed: int = 20240901
    bilinear_pairs: int = 200
    bilinear_deg_max: int = 4

    def as_dict(self):
        return {
            "scalar_n_max": self.scalar_n_max,
            "clifford_n_max": self.clifford_n_max,
            "deg_min": self.deg_min,
            "deg_max": self.deg_max,
            "seed": self.seed,
            "bilinear_pairs": self.bilinear_pairs,
            "bilinear_deg_max": self.bilinear_deg_max,
        }


@dataclass(frozen=True)
class CaseResult:
    relation: str
    n: int
    params: tuple
    passed: bool
    expected_pass: bool
    counterexample: str
    elapsed: float

    @property
    def ok(self):
        return self.passed == self.expected_pass

    def sort_key(self):
        return (self.relation, self.n, self.params)


@dataclass
class ConformanceReport:
    """Deterministic record of one suite run."""

    config: SuiteConfig
    names: tuple
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def counts(self):
        passed = sum(1 for r in self.results if r.passed)
        expected_failures = sum(
            1 for r in self.results if not r.expected_pass and not r.passed
        )
        return {
            "cases": len(self.results),
            "passed": passed,
            "failed": len(self.results) - passed,
            "expected_failures": expected_failures,
        }

    def to_json_obj(self):
        # wall-clock timing deliberately omitted: JSON must be byte-stable
        return {
            "config": self.config.as_dict(),
            "relations": list(self.names),
            "ok": self.ok,
            "counts": self.counts(),
            "results": [
                {
                    "relation": r.relation,
                    "n": r.n,
                    "params": {k: v for k, v in r.params},
                    "passed": r.passed,
                    "expected_pass": r.expected_pass,
                    "counterexample": r.counterexample,
                }
                for r in sorted(self.results, key=CaseResult.sort_key)
            ],
        }

    def to_json(self):
        return json_dumps(self.to_json_obj())

    def to_table(self):
        lines = []
        header = (
            f"relation suite: n<=({self.config.scalar_n_max} scalar, "
            f"{self.config.clifford_n_max} clifford), degrees "
            f"{self.config.deg_min}..{self.config.deg_max}, seed {self.config.seed}"
        )
        lines.append(header)
        width = max((len(r.relation) for r in self.results), default=8)
        for r in sorted(self.results, key=CaseResult.sort_key):
            params = " ".join(f"{k}={v}" for k, v in r.params)
            status = "pass" if r.passed else "FAIL"
            if not r.expected_pass:
                status += " (control)" if not r.passed else " (CONTROL UNEXPECTEDLY PASSED)"
            mark = "ok " if r.ok else "BAD"
            lines.append(
                f"  {mark} {r.relation:<{width}} n={r.n} {params:<14} {status:<28} {r.elapsed:7.3f}s"
            )
            if r.counterexample and not r.expected_pass is False:
                lines.append(f"        counterexample: {r.counterexample}")
        c = self.counts()
        lines.append(
            f"{c['cases']} cases: {c['passed']} passed, {c['failed']} failed "
            f"({c['expected_failures']} negative controls failing as required) -> "
            + ("SUITE OK" if self.ok else "SUITE FAILED")
        )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# case machinery


@dataclass(frozen=True)
class _OperatorCase:
    params: tuple
    lhs: OperatorExpr
    rhs: OperatorExpr
    space: str = "scalar"
    sigma: int = 1


@dataclass(frozen=True)
class RelationSpec:
    """One named identity family: a builder yielding cases per dimension."""

    name: str
    kind: str  # "operator" | "bilinear"
    clifford_ops: bool
    expect_pass: bool
    build: object
    note: str = ""
    n_min: int = 1


def _compare_on_basis(lhs, rhs, n, degrees, space, sigma):
    """First basis counterexample of lhs == rhs on the degree sweep, or None."""
    for k in degrees:
        keys = scalar_basis(n, k) if space == "scalar" else clifford_basis(n, k)
        for key in keys:
            v = basis_vector(n, key, space, sigma)
            a = apply(lhs, v)
            b = apply(rhs, v)
            if isinstance(a, QPolynomial):
                a = CliffordPolynomial.from_qpoly(a, sigma)
            if isinstance(b, QPolynomial):
                b = CliffordPolynomial.from_qpoly(b, sigma)
            if a != b:
                return (
                    f"degree {k}, basis vector {render(basis_vector(n, key, space, sigma))}: "
                    f"lhs -> {render(a)}, rhs -> {render(b)}"
                )
    return None


def _random_qpoly(rng, n, deg):
    """Random inhomogeneous polynomial, coefficients small Laurent monomials in s."""
    p = QPolynomial.zero(n)
    for _ in range(rng.randint(1, 4)):
        alpha = [0] * n
        for _ in range(rng.randint(0, deg)):
            alpha[rng.randrange(n)] += 1
        c = from_int(rng.choice([-3, -2, -1, 1, 2, 3])) * s_power(rng.randint(-2, 2))
        p = p + QPolynomial.monomial(n, tuple(alpha), c)
    return p


# ---------------------------------------------------------------------------
# the built-in catalog


def _pairs_lt(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _rel1_l(n):
    q1 = q_power(1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            mul_var_l(i) * mul_var_l(j),
            sc(q1) * (mul_var_l(j) * mul_var_l(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel1_r(n):
    qm = q_power(-1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            mul_var_r(i) * mul_var_r(j),
            sc(qm) * (mul_var_r(j) * mul_var_r(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel2_l(n):
    q1 = q_power(1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_l(i) * diff_l(j),
            sc(q1) * (diff_l(j) * diff_l(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel2_r(n):
    qm = q_power(-1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_r(i) * diff_r(j),
            sc(qm) * (diff_r(j) * diff_r(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel3_r(n):
    q1 = q_power(1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_r(i) * mul_var_r(j),
            sc(q1) * (mul_var_r(j) * diff_r(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel3_l(n):
    qm = q_power(-1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_l(i) * mul_var_l(j),
            sc(qm) * (mul_var_l(j) * diff_l(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _rel4_rl(n):
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_r(i) * mul_var_l(j),
            mul_var_l(j) * diff_r(i),
        )
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]


def _rel4_lr(n):
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            diff_l(i) * mul_var_r(j),
            mul_var_r(j) * diff_l(i),
        )
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]


def _rel5(n, side):
    var = mul_var_r if side == "R" else mul_var_l
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = 1 if i == j else 0
            out.append(
                _OperatorCase(
                    (("i", i), ("j", j)),
                    gamma(i) * var(j),
                    sc(q_power(d)) * (var(j) * gamma(i)),
                )
            )
    return out


def _rel6(n, side):
    dd = diff_r if side == "R" else diff_l
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = 1 if i == j else 0
            out.append(
                _OperatorCase(
                    (("i", i), ("j", j)),
                    gamma(i) * dd(j),
                    sc(q_power(-d)) * (dd(j) * gamma(i)),
                )
            )
    return out


def _rel7(n):
    out = []
    for i in range(1, n + 1):
        out.append(_OperatorCase((("i", i), ("form", "R")), mul_var_r(i), mul_var_l(i) * omega(i, -1)))
        out.append(_OperatorCase((("i", i), ("form", "L")), mul_var_l(i), mul_var_r(i) * omega(i, 1)))
    return out


def _rel8(n):
    out = []
    for i in range(1, n + 1):
        out.append(_OperatorCase((("i", i), ("form", "R")), diff_r(i), diff_l(i) * omega(i, 1)))
        out.append(_OperatorCase((("i", i), ("form", "L")), diff_l(i), diff_r(i) * omega(i, -1)))
    return out


def _weyl_l(n):
    qm = q_power(-1)
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lhs = mul_var_l(i) * diff_l(j) - sc(qm) * (diff_l(j) * mul_var_l(i))
            rhs = sc(-qm) * gamma(i, -1) if i == j else zero_op()
            out.append(_OperatorCase((("i", i), ("j", j)), lhs, rhs))
    return out


def _weyl_r(n):
    # the paper prints +q gamma_i at i=j; the derivable sign is -q gamma_i
    q1 = q_power(1)
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lhs = mul_var_r(i) * diff_r(j) - sc(q1) * (diff_r(j) * mul_var_r(i))
            rhs = sc(-q1) * gamma(i, 1) if i == j else zero_op()
            out.append(_OperatorCase((("i", i), ("j", j)), lhs, rhs))
    return out


def _mixed_weyl(n, order):
    half = qnum_half()
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if order == "LR":
                lhs = mul_var_l(i) * diff_r(j) - diff_r(j) * mul_var_l(i)
                w = omega(i, 1)
            else:
                lhs = mul_var_r(i) * diff_l(j) - diff_l(j) * mul_var_r(i)
                w = omega(i, -1)
            if i == j:
                rhs = sc(-half) * (
                    (sc(s_power(1)) * gamma(i, 1) + sc(s_power(-1)) * gamma(i, -1)) * w
                )
            else:
                rhs = zero_op()
            out.append(_OperatorCase((("i", i), ("j", j)), lhs, rhs))
    return out


def _sl2_conj_q(n):
    g, gi = gamma_all(1), gamma_all(-1)
    return [_OperatorCase((), g * qhat_l(n) * gi, sc(q_power(2)) * qhat_l(n))]


def _sl2_conj_lap(n):
    g, gi = gamma_all(1), gamma_all(-1)
    return [_OperatorCase((), g * laplacian_r(n) * gi, sc(q_power(-2)) * laplacian_r(n))]


def _sl2_conj_q_sq(n):
    g, gi = gamma_all(1), gamma_all(-1)
    return [
        _OperatorCase((), g * g * qhat_l(n) * gi * gi, sc(q_power(4)) * qhat_l(n))
    ]


def _sl2_commutator(n):
    lhs = sc(ONE / qnum(2)) * commutator(laplacian_r(n), qhat_l(n))
    return [_OperatorCase((), lhs, gamma_sq_brace(n))]


def _comm_k(n):
    out = []
    for k in (1, 2, 3):
        lhs = laplacian_r(n) * (qhat_l(n) ** k) - (qhat_l(n) ** k) * laplacian_r(n)
        rhs = (qhat_l(n) ** (k - 1)) * (sc(qnum(2 * k)) * gamma_sq_brace(2 * k + n - 2))
        out.append(_OperatorCase((("k", k),), lhs, rhs))
    return out


def _factor_dirac_r(n):
    return [_OperatorCase((), dirac_r(n) * dirac_r(n), sc(from_int(-1)) * laplacian_r(n), "scalar", 1)]


def _factor_dirac_l(n):
    return [_OperatorCase((), dirac_l(n) * dirac_l(n), sc(from_int(-1)) * laplacian_l(n), "scalar", -1)]


def _factor_xvec_l(n):
    return [_OperatorCase((), xvec_l(n) * xvec_l(n), sc(from_int(-1)) * qhat_l(n), "scalar", -1)]


def _factor_xvec_r(n):
    return [_OperatorCase((), xvec_r(n) * xvec_r(n), sc(from_int(-1)) * qhat_r(n), "scalar", 1)]


def _osp_cases(n, variant):
    """K E K^-1 = qE, K F K^-1 = q^-1 F, [1/2]_q (EF + FE) = (K - K^-1)/(q - q^-1).

    The EF relation carries the [1/2]_q scaling so everything stays in the
    field (the paper normalizes E and F by 1/sqrt(sqrt q + 1/sqrt q) instead).
    """
    half = qnum_half()
    brace = sc(ONE / (q_power(1) - q_power(-1)))
    out = []
    for i in range(1, n + 1):
        if variant == "clifford-L":
            e_op = diff_l(i) * mul_blade_left((i,), 1)
            f_op = mul_var_l(i) * mul_blade_left((i,), 1)
            k_op, k_inv = sc(s_power(-1)) * gamma(i, -1), sc(s_power(1)) * gamma(i, 1)
        elif variant == "clifford-R":
            e_op = diff_r(i) * mul_blade_left((i,), 1)
            f_op = mul_var_r(i) * mul_blade_left((i,), 1)
            k_op, k_inv = sc(s_power(-1)) * gamma(i, -1), sc(s_power(1)) * gamma(i, 1)
        elif variant == "plain-L":
            e_op, f_op = mul_var_l(i), diff_l(i)
            k_op, k_inv = sc(s_power(1)) * gamma(i, 1), sc(s_power(-1)) * gamma(i, -1)
        else:
            e_op, f_op = mul_var_r(i), diff_r(i)
            k_op, k_inv = sc(s_power(1)) * gamma(i, 1), sc(s_power(-1)) * gamma(i, -1)
        out.append(
            _OperatorCase(
                (("i", i), ("part", "KE")), k_op * e_op * k_inv, sc(q_power(1)) * e_op
            )
        )
        out.append(
            _OperatorCase(
                (("i", i), ("part", "KF")), k_op * f_op * k_inv, sc(q_power(-1)) * f_op
            )
        )
        out.append(
            _OperatorCase(
                (("i", i), ("part", "EF")),
                sc(half) * (e_op * f_op + f_op * e_op),
                brace * (k_op - k_inv),
            )
        )
    return out


def _example3(n):
    if n != 2:
        return []
    e2 = mul_blade_left((2,), 1)
    lhs = (sc(q_power(1)) * diff_r(1) - e2 * diff_r(2)) * (diff_r(1) + e2 * diff_r(2))
    return [_OperatorCase((), lhs, laplacian_r(2), "scalar", 1)]


# --- negative controls: one mutant per family, must fail somewhere in range


def _neg_rel1_l(n):
    qm = q_power(-1)
    return [
        _OperatorCase(
            (("i", i), ("j", j)),
            mul_var_l(i) * mul_var_l(j),
            sc(qm) * (mul_var_l(j) * mul_var_l(i)),
        )
        for i, j in _pairs_lt(n)
    ]


def _neg_weyl_r(n):
    # the paper's literal display: +q gamma_i
    q1 = q_power(1)
    return [
        _OperatorCase(
            (("i", i),),
            mul_var_r(i) * diff_r(i) - sc(q1) * (diff_r(i) * mul_var_r(i)),
            sc(q1) * gamma(i, 1),
        )
        for i in range(1, n + 1)
    ]


def _neg_mixed_weyl(n):
    half = qnum_half()
    out = []
    for i in range(1, n + 1):
        lhs = mul_var_l(i) * diff_r(i) - diff_r(i) * mul_var_l(i)
        rhs = sc(-half) * (
            sc(s_power(1)) * gamma(i, 1) + sc(s_power(-1)) * gamma(i, -1)
        )  # omega_i dropped
        out.append(_OperatorCase((("i", i),), lhs, rhs))
    return out


def _neg_sl2_conj(n):
    # the literal display: gamma^2 Qhat gamma^-2 = q^2 Qhat (true value is q^4)
    g, gi = gamma_all(1), gamma_all(-1)
    return [_OperatorCase((), g * g * qhat_l(n) * gi * gi, sc(q_power(2)) * qhat_l(n))]


def _neg_comm(n):
    out = []
    for k in (1, 2):
        lhs = laplacian_r(n) * (qhat_l(n) ** k) - (qhat_l(n) ** k) * laplacian_r(n)
        rhs = (qhat_l(n) ** (k - 1)) * (sc(qnum(2 * k)) * gamma_sq_brace(2 * k + n))
        out.append(_OperatorCase((("k", k),), lhs, rhs))
    return out


def _neg_factor_dirac(n):
    # Dirac built with the e+ generators: the -q factor of Cl^q is dropped
    bad = None
    for i in range(1, n + 1):
        term = sc(s_power(n - i)) * (mul_blade_left((i,), -1) * diff_r(i))
        bad = term if bad is None else bad + term
    return [_OperatorCase((), bad * bad, sc(from_int(-1)) * laplacian_r(n), "scalar", -1)]


def _neg_osp(n):
    out = []
    for i in range(1, n + 1):
        e_op = diff_l(i) * mul_blade_left((i,), 1)
        k_op, k_inv = sc(s_power(1)) * gamma(i, 1), sc(s_power(-1)) * gamma(i, -1)
        out.append(
            _OperatorCase(
                (("i", i),), k_op * e_op * k_inv, sc(q_power(1)) * e_op
            )
        )
    return out


def _neg_example3(n):
    if n != 2:
        return []
    e2 = mul_blade_left((2,), 1)
    lhs = (diff_r(1) - e2 * diff_r(2)) * (diff_r(1) + e2 * diff_r(2))
    return [_OperatorCase((), lhs, laplacian_r(2), "scalar", 1)]


# --- bilinear product rules


def _product_rule(variant):
    def check(n, config, rng):
        deg = config.bilinear_deg_max
        per_case = max(1, config.bilinear_pairs // max(1, n))
        failures = []
        for i in range(1, n + 1):
            for _ in range(per_case):
                f = _random_qpoly(rng, n, deg)
                g = _random_qpoly(rng, n, deg)
                lhs = apply(diff_r(i), poly_mul(f, g))
                if variant == 1:
                    rhs = poly_mul(apply(gamma(i, -1), f), apply(diff_r(i), g)) + poly_mul(
                        apply(diff_r(i), f), apply(omega(i, 1) * gamma(i, 1), g)
                    )
                elif variant == 2:
                    rhs = poly_mul(apply(gamma(i, 1), f), apply(diff_r(i), g)) + poly_mul(
                        apply(diff_r(i), f), apply(omega(i, 1) * gamma(i, -1), g)
                    )
                else:  # the paper's literal rule 2, a negative control
                    rhs = poly_mul(apply(gamma(i, 1), f), apply(diff_r(i), g)) + poly_mul(
                        apply(diff_r(i), f), apply(gamma_all(-1), g)
                    )
                if lhs != rhs:
                    failures.append((i, f, g, lhs, rhs))
                    break
        return failures

    return check


_CATALOG = {}


def _register(name, kind, clifford_ops, expect_pass, build, note="", n_min=1):
    _CATALOG[name] = RelationSpec(name, kind, clifford_ops, expect_pass, build, note, n_min)


_register("rel1-L", "operator", False, True, _rel1_l, "x_i^L x_j^L = q x_j^L x_i^L, i<j")
_register("rel1-R", "operator", False, True, _rel1_r, "x_i^R x_j^R = q^-1 x_j^R x_i^R, i<j")
_register("rel2-L", "operator", False, True, _rel2_l, "d_i^L d_j^L = q d_j^L d_i^L, i<j")
_register("rel2-R", "operator", False, True, _rel2_r, "d_i^R d_j^R = q^-1 d_j^R d_i^R, i<j")
_register("rel3-R", "operator", False, True, _rel3_r, "d_i^R x_j^R = q x_j^R d_i^R, i<j")
_register("rel3-L", "operator", False, True, _rel3_l, "d_i^L x_j^L = q^-1 x_j^L d_i^L, i<j")
_register("rel4-RL", "operator", False, True, _rel4_rl, "d_i^R x_j^L = x_j^L d_i^R, i != j")
_register("rel4-LR", "operator", False, True, _rel4_lr, "d_i^L x_j^R = x_j^R d_i^L, i != j")
_register("rel5-R", "operator", False, True, lambda n: _rel5(n, "R"), "gamma_i x_j^R")
_register("rel5-L", "operator", False, True, lambda n: _rel5(n, "L"), "gamma_i x_j^L")
_register("rel6-R", "operator", False, True, lambda n: _rel6(n, "R"), "gamma_i d_j^R")
_register("rel6-L", "operator", False, True, lambda n: _rel6(n, "L"), "gamma_i d_j^L")
_register("rel7", "operator", False, True, _rel7, "x_i^R = x_i^L w_i^-1")
_register("rel8", "operator", False, True, _rel8, "d_i^R = d_i^L w_i")
_register("weyl-L", "operator", False, True, _weyl_l, "left Weyl relations")
_register("weyl-R", "operator", False, True, _weyl_r, "right Weyl relations (sign -q gamma_i)")
_register("mixed-weyl-LR", "operator", False, True, lambda n: _mixed_weyl(n, "LR"))
_register("mixed-weyl-RL", "operator", False, True, lambda n: _mixed_weyl(n, "RL"))
_register("product-rule-1", "bilinear", False, True, _product_rule(1))
_register("product-rule-2", "bilinear", False, True, _product_rule(2))
_register("sl2-conj-Q", "operator", False, True, _sl2_conj_q, "gamma Qhat gamma^-1 = q^2 Qhat")
_register("sl2-conj-Lap", "operator", False, True, _sl2_conj_lap, "gamma Lap gamma^-1 = q^-2 Lap")
_register("sl2-conj-Q-sq", "operator", False, True, _sl2_conj_q_sq, "gamma^2 Qhat gamma^-2 = q^4 Qhat")
_register("sl2-commutator", "operator", False, True, _sl2_commutator, "[Lap,Qhat]/[2] = {q^n g^2}")
_register("comm-k", "operator", False, True, _comm_k, "Eq. (Comm), k = 1..3")
_register("factor-dirac-R", "operator", True, True, _factor_dirac_r, "D_R^2 = -Lap_R")
_register("factor-dirac-L", "operator", True, True, _factor_dirac_l, "D_L^2 = -Lap_L")
_register("factor-xvec-L", "operator", True, True, _factor_xvec_l, "xvec_L^2 = -Qhat_L")
_register("factor-xvec-R", "operator", True, True, _factor_xvec_r, "xvec_R^2 = -Qhat_R")
_register("osp-clifford-L", "operator", True, True, lambda n: _osp_cases(n, "clifford-L"))
_register("osp-clifford-R", "operator", True, True, lambda n: _osp_cases(n, "clifford-R"))
_register("osp-plain-L", "operator", False, True, lambda n: _osp_cases(n, "plain-L"))
_register("osp-plain-R", "operator", False, True, lambda n: _osp_cases(n, "plain-R"))
_register("example3-n2", "operator", True, True, _example3, "n=2 Laplacian factorization")
_register("neg-rel1-L", "operator", False, False, _neg_rel1_l, "control: q flipped")
_register("neg-weyl-R", "operator", False, False, _neg_weyl_r, "control: paper's +q gamma_i")
_register("neg-mixed-weyl", "operator", False, False, _neg_mixed_weyl, "control: omega dropped", n_min=2)
_register("neg-product-rule", "bilinear", False, False, _product_rule(0), "control: literal rule 2", n_min=2)
_register("neg-sl2-conj", "operator", False, False, _neg_sl2_conj, "control: literal gamma^2 display")
_register("neg-comm", "operator", False, False, _neg_comm, "control: bracket exponent off by 2")
_register("neg-factor-dirac", "operator", True, False, _neg_factor_dirac, "control: wrong deformation", n_min=2)
_register("neg-osp", "operator", True, False, _neg_osp, "control: K inverted")
_register("neg-example3", "operator", True, False, _neg_example3, "control: q dropped")


def relation_names():
    return sorted(_CATALOG)


def _run_operator_case(spec, n, case, config):
    degrees = range(config.deg_min, config.deg_max + 1)
    start = time.perf_counter()
    ce = _compare_on_basis(case.lhs, case.rhs, n, degrees, case.space, case.sigma)
    elapsed = time.perf_counter() - start
    return CaseResult(
        spec.name, n, case.params, ce is None, spec.expect_pass, ce or "", elapsed
    )


def _run_bilinear(spec, n, config):
    rng = random.Random(f"{config.seed}:{spec.name}:{n}")
    start = time.perf_counter()
    failures = spec.build(n, config, rng)
    elapsed = time.perf_counter() - start
    if failures:
        i, f, g, lhs, rhs = failures[0]
        ce = f"i={i}, f={render(f)}, g={render(g)}: lhs -> {render(lhs)}, rhs -> {render(rhs)}"
    else:
        ce = ""
    return CaseResult(
        spec.name, n, (), not failures, spec.expect_pass, ce, elapsed
    )


def run_suite(names="all", config=None):
    """Check the named relations (or all of them) across the configured sweep."""
    config = config or SuiteConfig()
    if names == "all" or names is None:
        selected = relation_names()
    else:
        selected = list(names)
        for name in selected:
            if name not in _CATALOG:
                raise UnknownRelationName(name)
    report = ConformanceReport(config, tuple(selected))
    for name in selected:
        spec = _CATALOG[name]
        n_max = config.clifford_n_max if spec.clifford_ops else config.scalar_n_max
        for n in range(spec.n_min, n_max + 1):
            if spec.kind == "bilinear":
                report.results.append(_run_bilinear(spec, n, config))
                continue
            for case in spec.build(n):
                report.results.append(_run_operator_case(spec, n, case, config))
    report.results.sort(key=CaseResult.sort_key)
    return report


def check_identity(lhs, rhs, n, degrees=None, space="scalar", sigma=1, config=None):
    """Generic matrix-equality check of two operator expressions.

    Raises DegreeShiftMismatch (via degree_shift) when the two sides cannot
    agree structurally.
    """
    from .errors import DegreeShiftMismatch

    if lhs.degree_shift() != rhs.degree_shift():
        raise DegreeShiftMismatch(
            f"lhs shifts by {lhs.degree_shift()}, rhs by {rhs.degree_shift()}"
        )
    config = config or SuiteConfig()
    degrees = range(config.deg_min, config.deg_max + 1) if degrees is None else degrees
    report = ConformanceReport(config, ("custom",))
    start = time.perf_counter()
    ce = _compare_on_basis(lhs, rhs, n, degrees, space, sigma)
    elapsed = time.perf_counter() - start
    report.results.append(
        CaseResult("custom", n, (), ce is None, True, ce or "", elapsed)
    )
    return report
