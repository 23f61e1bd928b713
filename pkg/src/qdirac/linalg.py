"""Exact linear algebra over the scalar field.

Sparse Gaussian elimination over ScalarQ.  Every arithmetic step renormalizes
through the field's gcd reduction, which is what keeps entries small here:
the graded operator matrices have monomial-like entries whose ratios stay
monomial-like, whereas fraction-free minors of such matrices swell into dense
polynomials.  Rows are cleared of denominators and stripped of content up
front; pivots are chosen sparsest-row-first to limit fill-in.  Eliminations
are recorded so one factorization replays over many right-hand sides.
"""

from __future__ import annotations

from .errors import SingularSystem
from .scalars import LP_ONE, LaurentPoly, ONE, ScalarQ, ZERO, _dense, _dense_gcd, _from_dense

__all__ = ["kernel_basis", "solve_square", "rank", "CachedSolver"]


def _poly_gcd_lp(a, b):
    """gcd of two Laurent polynomials up to units (s-powers and constants)."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return LP_ONE
    da = _dense(a.shift(-a.min_exp()))
    db = _dense(b.shift(-b.min_exp()))
    return _from_dense(_dense_gcd(da, db))


def _clear_and_strip(row):
    """Denominator-free, content-free copy of a sparse row; returns (row, factor).

    factor is the ScalarQ the row was multiplied by.
    """
    if not row:
        return {}, ONE
    dens = [x.den for x in row.values() if not x.den.is_one()]
    lcm = LP_ONE
    for d in dens:
        g = _poly_gcd_lp(lcm, d)
        lcm = lcm.divexact(g) * d
    nums = {}
    for j, x in row.items():
        nums[j] = x.num * lcm.divexact(x.den) if not lcm.is_one() else x.num
    content = None
    for p in nums.values():
        content = p if content is None else _poly_gcd_lp(content, p)
        if content is not None and len(content.coeffs) == 1:
            break
    shift = min(p.min_exp() for p in nums.values())
    if len(content.coeffs) == 1:
        c = next(iter(content.coeffs.values()))
        content = LaurentPoly.monomial(shift, c)
    else:
        content = content.shift(shift - content.min_exp())
    out = {}
    for j, p in nums.items():
        out[j] = ScalarQ._raw(p.divexact(content), LP_ONE)
    factor = ScalarQ(lcm, content)
    return out, factor


class _Elimination:
    """Sparse row echelon with recorded operations for right-hand-side replay.

    Ops: ("swap", r1, r2); ("scale", r, f) for row_r := f * row_r;
    ("axpy", i, r, f) for row_i := row_i - f * row_r.  Pivot entries are
    normalized to 1, so back-substitution divides by nothing.
    """

    def __init__(self, matrix, ncols):
        self.ncols = ncols
        self.nrows = len(matrix)
        self.ops = []
        rows = []
        for i, raw in enumerate(matrix):
            if isinstance(raw, dict):
                sparse = {j: v for j, v in raw.items() if not v.is_zero()}
            else:
                sparse = {j: v for j, v in enumerate(raw) if not v.is_zero()}
            sparse, factor = _clear_and_strip(sparse)
            if not factor.is_one():
                self.ops.append(("scale", i, factor))
            rows.append(sparse)
        self.rows = rows
        self.pivots = self._echelon()

    def _echelon(self):
        rows = self.rows
        pivots = []
        r = 0
        for c in range(self.ncols):
            best = -1
            best_cost = None
            for i in range(r, self.nrows):
                e = rows[i].get(c)
                if e is None:
                    continue
                cost = (len(rows[i]), e.term_count(), i)
                if best_cost is None or cost < best_cost:
                    best, best_cost = i, cost
            if best < 0:
                continue
            if best != r:
                rows[best], rows[r] = rows[r], rows[best]
                self.ops.append(("swap", r, best))
            prow = rows[r]
            piv = prow[c]
            if not piv.is_one():
                inv = piv.inverse()
                for j in list(prow):
                    prow[j] = inv * prow[j]
                self.ops.append(("scale", r, inv))
            for i in range(r + 1, self.nrows):
                f = rows[i].get(c)
                if f is None:
                    continue
                row = rows[i]
                for j, v in prow.items():
                    cur = row.get(j)
                    nv = -f * v if cur is None else cur - f * v
                    if nv.is_zero():
                        row.pop(j, None)
                    else:
                        row[j] = nv
                row.pop(c, None)
                self.ops.append(("axpy", i, r, f))
            pivots.append((r, c))
            r += 1
            if r == self.nrows:
                break
        return pivots

    def replay(self, rhs):
        b = list(rhs)
        for op in self.ops:
            kind = op[0]
            if kind == "swap":
                _, r1, r2 = op
                b[r1], b[r2] = b[r2], b[r1]
            elif kind == "scale":
                _, r, f = op
                if not b[r].is_zero():
                    b[r] = f * b[r]
            else:
                _, i, r, f = op
                if not b[r].is_zero():
                    b[i] = b[i] - f * b[r]
        return b


def kernel_basis(matrix, ncols=None):
    """Basis of the right kernel of a rows x cols matrix over ScalarQ."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix or ncols == 0:
        basis = []
        for f in range(ncols):
            v = [ZERO] * ncols
            v[f] = ONE
            basis.append(v)
        return basis
    elim = _Elimination(matrix, ncols)
    rows, pivots = elim.rows, elim.pivots
    pivot_cols = {c for (_, c) in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, c in reversed(pivots):
            if c > free:
                continue
            s = ZERO
            for j, entry in rows[r].items():
                if j > c and not v[j].is_zero():
                    s = s + entry * v[j]
            if not s.is_zero():
                v[c] = -s  # pivot entries are normalized to 1
        basis.append(v)
    return basis


def rank(matrix, ncols=None):
    if not matrix:
        return 0
    if ncols is None:
        ncols = len(matrix[0])
    return len(_Elimination(matrix, ncols).pivots)


class CachedSolver:
    """Echelon form of a fixed matrix, replayable on many right-hand sides.

    Built for the decomposition solves, where the graded system is fixed and
    the right-hand side runs over inputs.
    """

    def __init__(self, matrix):
        self.nrows = len(matrix)
        self.ncols = len(matrix[0]) if matrix else 0
        self._elim = _Elimination(matrix, self.ncols)

    def solve(self, rhs):
        """Solve M x = rhs exactly; raises SingularSystem when not unique."""
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        elim = self._elim
        if len(elim.pivots) < self.ncols:
            raise SingularSystem("system is underdetermined")
        b = elim.replay(rhs)
        pivot_rows = {r for (r, _) in elim.pivots}
        for r in range(self.nrows):
            if r not in pivot_rows and not b[r].is_zero():
                raise SingularSystem("system is inconsistent")
        x = [ZERO] * self.ncols
        for r, c in reversed(elim.pivots):
            s = b[r]
            for j, entry in elim.rows[r].items():
                if j > c and not x[j].is_zero():
                    s = s - entry * x[j]
            x[c] = s
        return x


def solve_square(matrix, rhs):
    """One-shot exact solve of a uniquely solvable system."""
    return CachedSolver(matrix).solve(rhs)
