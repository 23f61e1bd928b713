"""Exact q-Clifford analysis on quantum Euclidean space.

Core layers: scalars (the field Q(i)(s)), qpoly (q-commutative polynomials),
qclifford (the q-Clifford algebras), qoperators (symbolic operators with exact
graded matrices), fischer (inner product and decompositions), verifier (the
relation suite), and a CLI front end.
"""

from .scalars import (
    GaussianRational,
    LaurentPoly,
    ScalarQ,
    eval_at,
    q_power,
    qfactorial,
    qnum,
    qnum_half,
    s_power,
)
from .qpoly import (
    QPolynomial,
    mul_left,
    mul_right,
    normal_order,
    poly_mul,
    q_radius,
    zq_power,
)
from .qclifford import (
    CliffordElement,
    CliffordPolynomial,
    blade_mul,
    clifford_conjugate,
    cpoly_mul,
    scalar_part,
)
from .qoperators import (
    GradedMatrix,
    apply,
    anticommutator,
    commutator,
    diff_l,
    diff_r,
    dirac_l,
    dirac_r,
    gamma,
    gamma_all,
    harmonic_lower,
    harmonic_raise,
    laplacian_l,
    laplacian_r,
    lx_q,
    mul_var_l,
    mul_var_r,
    omega,
    qhat_l,
    qhat_r,
    to_matrix,
    xvec_l,
    xvec_r,
)
from .fischer import (
    DecompositionResult,
    FischerValue,
    adjoint_check,
    fischer_inner,
    fischer_inner_operational,
    fischer_orthogonality_check,
    harmonic_decompose,
    monogenic_decompose,
)
from .render import render

__version__ = "0.1.0"
