import random

import pytest

from qdirac.qclifford import CliffordPolynomial, blade_basis
from qdirac.qpoly import QPolynomial, monomial_basis
from qdirac.scalars import from_fraction, from_int, s_power


def make_rng(name):
    """Deterministic RNG per test site; string seeding is hash-stable."""
    return random.Random(f"qdirac-tests:{name}")


def random_scalar(rng, complex_ok=False):
    c = from_int(rng.choice([-3, -2, -1, 1, 2, 3])) * s_power(rng.randint(-2, 2))
    if complex_ok and rng.random() < 0.5:
        c = c + from_fraction(0, rng.randint(-2, 2)) * s_power(rng.randint(-1, 1))
    return c


def random_qpoly(rng, n, deg, terms=4, complex_ok=False, homogeneous=None):
    p = QPolynomial.zero(n)
    for _ in range(terms):
        if homogeneous is None:
            total = rng.randint(0, deg)
        else:
            total = homogeneous
        alpha = [0] * n
        for _ in range(total):
            alpha[rng.randrange(n)] += 1
        p = p + QPolynomial.monomial(n, tuple(alpha), random_scalar(rng, complex_ok))
    return p


def random_cpoly(rng, n, k, sigma=1, density=0.4, complex_ok=True):
    terms = {}
    for alpha in monomial_basis(n, k):
        for b in blade_basis(n):
            if rng.random() < density:
                c = random_scalar(rng, complex_ok)
                if not c.is_zero():
                    terms[(alpha, b)] = c
    return CliffordPolynomial(n, sigma, terms)


@pytest.fixture
def rng(request):
    return make_rng(request.node.nodeid)
