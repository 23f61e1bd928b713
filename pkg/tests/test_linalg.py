"""Exact elimination: kernels, solves, replayable factorizations."""

import pytest

from conftest import make_rng, random_scalar
from qdirac.errors import SingularSystem
from qdirac.linalg import CachedSolver, kernel_basis, rank, solve_square
from qdirac.scalars import ONE, ZERO, from_int, q_power, qnum, qnum_half, s_power


def matvec(m, v):
    out = []
    for row in m:
        s = ZERO
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                s = s + a * b
        out.append(s)
    return out


def random_matrix(rng, rows, cols, density=0.7, with_denominators=False):
    m = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.random() < density:
                c = random_scalar(rng)
                if with_denominators and rng.random() < 0.3:
                    c = c / (qnum(2) + from_int(rng.choice([1, 2])))
                row.append(c)
            else:
                row.append(ZERO)
        m.append(row)
    return m


def test_kernel_of_known_matrix():
    # rows: [1, q, 0], [0, 0, 1] -> kernel spanned by (q, -1, 0) direction
    m = [[ONE, q_power(1), ZERO], [ZERO, ZERO, ONE]]
    basis = kernel_basis(m, 3)
    assert len(basis) == 1
    v = basis[0]
    assert matvec(m, v) == [ZERO, ZERO]
    assert not v[0].is_zero() or not v[1].is_zero()


def test_kernel_rank_nullity_random():
    rng = make_rng("rank-nullity")
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = random_matrix(rng, rows, cols, with_denominators=True)
        r = rank(m, cols)
        basis = kernel_basis(m, cols)
        assert r + len(basis) == cols
        for v in basis:
            assert all(x.is_zero() for x in matvec(m, v))


def test_solve_square_roundtrip():
    rng = make_rng("solve")
    solved = 0
    while solved < 15:
        ncols = rng.randint(1, 5)
        m = random_matrix(rng, ncols, ncols, density=0.8, with_denominators=True)
        if rank(m, ncols) < ncols:
            continue
        x = [random_scalar(rng) for _ in range(ncols)]
        b = matvec(m, x)
        got = solve_square(m, b)
        assert got == x
        solved += 1


def test_singular_detection():
    m = [[ONE, ONE], [ONE, ONE]]
    with pytest.raises(SingularSystem):
        solve_square(m, [ONE, ONE])
    # inconsistent overdetermined replay
    solver = CachedSolver([[ONE], [ONE]])
    assert solver.solve([qnum(2), qnum(2)]) == [qnum(2)]
    with pytest.raises(SingularSystem):
        solver.solve([ONE, qnum(2)])


def test_cached_solver_many_rhs():
    rng = make_rng("cached")
    n = 4
    while True:
        m = random_matrix(rng, n, n, density=0.9)
        if rank(m, n) == n:
            break
    solver = CachedSolver(m)
    for _ in range(10):
        x = [random_scalar(rng) for _ in range(n)]
        assert solver.solve(matvec(m, x)) == x


def test_denominator_heavy_entries():
    half = qnum_half()
    m = [[half, ONE], [ONE, half]]
    x = [qnum(3), s_power(-1)]
    assert solve_square(m, matvec(m, x)) == x
