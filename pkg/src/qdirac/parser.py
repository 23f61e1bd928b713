"""Expression language for polynomials, Clifford elements and operators.

Grammar (non-commutative * keeps the written order; normal ordering happens
only when lowering, so every q-factor is auditable):

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | factor
    factor := atom ("^" int)?
    atom   := int | "i" | "q" | "s" | var | gen | qnum | call | name | "(" expr ")"
    var    := "x" int                      e.g. x1, x12
    gen    := ("e" | "ep") "[" ints "]"    e.g. e[1,3], ep[2], e[]
    qnum   := "[" int "]"                  the symmetric q-number
    call   := name "(" args ")"            dR(1), g(2,-1), e(1,3), zq(4)

Division is only by values that lower to nonzero scalars.  Every well-typed
tree lowers to exactly one of ScalarQ, QPolynomial, CliffordPolynomial or
OperatorExpr; mixings are LoweringError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExprSyntaxError, LoweringError
from .qclifford import CliffordPolynomial
from .qpoly import QPolynomial, q_radius, zq_power
from .scalars import I, ONE, ScalarQ, from_int, qnum, s_power
from .qoperators import (
    OperatorExpr,
    diff_l,
    diff_r,
    dirac_l,
    dirac_r,
    gamma,
    laplacian_l,
    laplacian_r,
    lx_q,
    mul_blade_left,
    mul_var_l,
    mul_var_r,
    omega,
    qhat_l,
    qhat_r,
    sc,
    xvec_l,
    xvec_r,
)

__all__ = ["parse", "lower", "parse_and_lower", "Ast"]


# ---------------------------------------------------------------------------
# tokens


@dataclass(frozen=True)
class _Tok:
    kind: str  # int, name, op
    text: str
    line: int
    col: int


_PUNCT = set("+-*/^()[],")


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(_Tok("op", ch, line, col))
            col += 1
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("end", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Ast:
    kind: str  # int, imag, qsym, ssym, var, gen, qnumlit, call, name, neg, pow, bin
    value: object = None
    children: tuple = ()


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def _err_pos(self, t):
        """Report end-of-input errors at the last real token."""
        if t.kind == "end" and self.pos > 0:
            prev = self.toks[self.pos - 1]
            return prev.line, prev.col
        return t.line, t.col

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text):
        t = self.peek()
        if t.kind == "op" and t.text == text:
            return self.next()
        found = repr(t.text) if t.text else "end of input"
        line, col = self._err_pos(t)
        raise ExprSyntaxError(
            f"expected {text!r}, found {found}",
            line,
            col,
            expected=(text,),
        )

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExprSyntaxError(
                f"unexpected trailing input {t.text!r}", t.line, t.col
            )
        return node

    def expr(self):
        node = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.next()
                rhs = self.term()
                node = Ast("bin", t.text, (node, rhs))
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "*/":
                self.next()
                rhs = self.unary()
                node = Ast("bin", t.text, (node, rhs))
            else:
                return node

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.next()
            return Ast("neg", None, (self.unary(),))
        return self.factor()

    def factor(self):
        node = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.next()
            node = Ast("pow", self.signed_int(), (node,))
        return node

    def signed_int(self):
        t = self.peek()
        sign = 1
        if t.kind == "op" and t.text == "-":
            self.next()
            sign = -1
            t = self.peek()
        if t.kind != "int":
            raise ExprSyntaxError(
                f"expected integer exponent, found {t.text!r}",
                t.line,
                t.col,
                expected=("int",),
            )
        self.next()
        return sign * int(t.text)

    def int_list(self, closing="]"):
        out = []
        t = self.peek()
        if t.kind == "op" and t.text == closing:
            return out
        out.append(self.signed_int())
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == ",":
                self.next()
                out.append(self.signed_int())
            else:
                return out

    def atom(self):
        t = self.peek()
        if t.kind == "int":
            self.next()
            return Ast("int", int(t.text))
        if t.kind == "op" and t.text == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "op" and t.text == "[":
            self.next()
            m = self.signed_int()
            self.expect("]")
            return Ast("qnumlit", m)
        if t.kind == "name":
            self.next()
            name = t.text
            nxt = self.peek()
            if name in ("e", "ep") and nxt.kind == "op" and nxt.text == "[":
                self.next()
                idx = self.int_list()
                self.expect("]")
                return Ast("gen", (name, tuple(idx)))
            if nxt.kind == "op" and nxt.text == "(":
                self.next()
                args = self.int_list(closing=")")
                self.expect(")")
                return Ast("call", (name, tuple(args)))
            if name == "i":
                return Ast("imag")
            if name == "q":
                return Ast("qsym")
            if name == "s":
                return Ast("ssym")
            if name.startswith("x") and name[1:].isdigit():
                return Ast("var", int(name[1:]))
            return Ast("name", name)
        found = repr(t.text) if t.text else "end of input"
        line, col = self._err_pos(t)
        raise ExprSyntaxError(
            f"expected an expression atom, found {found}",
            line,
            col,
            expected=("int", "name", "("),
        )


def parse(text):
    """Parse to an AST; raises ExprSyntaxError with line/column on failure."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# lowering


_NAMED_OPS = {
    "Lap_R": laplacian_r,
    "Lap_L": laplacian_l,
    "Qhat_L": qhat_l,
    "Qhat_R": qhat_r,
    "Dirac_R": dirac_r,
    "Dirac_L": dirac_l,
    "xvec_L": xvec_l,
    "xvec_R": xvec_r,
    "LxQ": lx_q,
}

_INDEXED_OPS = {
    "dR": lambda n, i: diff_r(i),
    "dL": lambda n, i: diff_l(i),
    "xL": lambda n, i: mul_var_l(i),
    "xR": lambda n, i: mul_var_r(i),
}


def _check_index(i, n, what):
    if not 1 <= i <= n:
        raise LoweringError(f"{what} index {i} outside 1..{n}")


def _lower_call(name, args, n):
    if name in _INDEXED_OPS:
        if len(args) != 1:
            raise LoweringError(f"{name}() takes one index")
        _check_index(args[0], n, name)
        return _INDEXED_OPS[name](n, args[0])
    if name == "g":
        if len(args) not in (1, 2):
            raise LoweringError("g() takes an index and an optional exponent +-1")
        i = args[0]
        e = args[1] if len(args) == 2 else 1
        if e not in (1, -1):
            raise LoweringError("g() exponent must be 1 or -1")
        _check_index(i, n, "g")
        return gamma(i, e)
    if name == "w":
        if len(args) not in (1, 2):
            raise LoweringError("w() takes an index and an optional exponent +-1")
        i = args[0]
        e = args[1] if len(args) == 2 else 1
        if e not in (1, -1):
            raise LoweringError("w() exponent must be 1 or -1")
        _check_index(i, n, "w")
        return omega(i, e)
    if name in ("e", "ep"):
        sigma = 1 if name == "e" else -1
        blade = tuple(args)
        for i in blade:
            _check_index(i, n, "generator")
        return mul_blade_left(blade, sigma)
    if name in ("zq", "zqbar"):
        if n != 2:
            raise LoweringError("zq()/zqbar() require dimension 2")
        if len(args) != 1 or args[0] < 0:
            raise LoweringError("zq()/zqbar() take a nonnegative degree")
        return zq_power(args[0], conjugated=(name == "zqbar"))
    raise LoweringError(f"unknown function {name!r}")


def _to_cpoly(v, n):
    if isinstance(v, ScalarQ):
        return CliffordPolynomial.from_qpoly(QPolynomial.one(n), 1).scale(v)
    if isinstance(v, QPolynomial):
        return CliffordPolynomial.from_qpoly(v, 1)
    return v


def _mul_values(a, b, n):
    if isinstance(a, OperatorExpr) or isinstance(b, OperatorExpr):
        if isinstance(a, ScalarQ):
            a = sc(a)
        if isinstance(b, ScalarQ):
            b = sc(b)
        if not (isinstance(a, OperatorExpr) and isinstance(b, OperatorExpr)):
            raise LoweringError("cannot mix operators with polynomial values in *")
        return a * b
    if isinstance(a, ScalarQ) and isinstance(b, ScalarQ):
        return a * b
    if isinstance(a, ScalarQ):
        return b.scale(a)
    if isinstance(b, ScalarQ):
        return a.scale(b)
    if isinstance(a, QPolynomial) and isinstance(b, QPolynomial):
        from .qpoly import poly_mul

        return poly_mul(a, b)
    from .qclifford import cpoly_mul

    return cpoly_mul(_to_cpoly(a, n), _to_cpoly(b, n))


def _add_values(a, b, n, sub=False):
    if isinstance(a, OperatorExpr) or isinstance(b, OperatorExpr):
        if isinstance(a, ScalarQ):
            a = sc(a)
        if isinstance(b, ScalarQ):
            b = sc(b)
        if not (isinstance(a, OperatorExpr) and isinstance(b, OperatorExpr)):
            raise LoweringError("cannot mix operators with polynomial values in +/-")
        return a - b if sub else a + b
    if isinstance(a, ScalarQ) and isinstance(b, ScalarQ):
        return a - b if sub else a + b
    if isinstance(a, ScalarQ):
        a = QPolynomial.one(n).scale(a)
    if isinstance(b, ScalarQ):
        b = QPolynomial.one(n).scale(b)
    if isinstance(a, QPolynomial) and isinstance(b, QPolynomial):
        return a - b if sub else a + b
    a = _to_cpoly(a, n)
    b = _to_cpoly(b, n)
    return a - b if sub else a + b


def _neg_value(a):
    if isinstance(a, OperatorExpr):
        return -a
    if isinstance(a, ScalarQ):
        return -a
    return -a


def _pow_value(a, k, n):
    if isinstance(a, ScalarQ):
        return a**k
    if k < 0:
        raise LoweringError("negative powers only apply to scalars")
    if isinstance(a, OperatorExpr):
        return a**k
    out = None
    for _ in range(k):
        out = a if out is None else _mul_values(out, a, n)
    if out is None:
        if isinstance(a, QPolynomial):
            return QPolynomial.one(n)
        return CliffordPolynomial.one(n, a.sigma)
    return out


def lower(ast, n):
    """Lower an AST to ScalarQ, QPolynomial, CliffordPolynomial or OperatorExpr."""
    kind = ast.kind
    if kind == "int":
        return from_int(ast.value)
    if kind == "imag":
        return I
    if kind == "qsym":
        return s_power(2)
    if kind == "ssym":
        return s_power(1)
    if kind == "qnumlit":
        return qnum(ast.value)
    if kind == "var":
        _check_index(ast.value, n, "variable")
        return QPolynomial.variable(n, ast.value)
    if kind == "gen":
        name, idx = ast.value
        sigma = 1 if name == "e" else -1
        for i in idx:
            _check_index(i, n, "generator")
        blade = tuple(idx)
        if list(blade) != sorted(set(blade)):
            # non-canonical word: multiply the generators out left to right
            out = CliffordPolynomial.one(n, sigma)
            from .qclifford import cpoly_mul

            for i in blade:
                out = cpoly_mul(
                    out, CliffordPolynomial.basis_vector(n, (0,) * n, (i,), sigma)
                )
            return out
        return CliffordPolynomial.basis_vector(n, (0,) * n, blade, sigma)
    if kind == "name":
        if ast.value == "Q":
            return q_radius(n)
        if ast.value in _NAMED_OPS:
            return _NAMED_OPS[ast.value](n)
        raise LoweringError(f"unknown name {ast.value!r}")
    if kind == "call":
        return _lower_call(ast.value[0], ast.value[1], n)
    if kind == "neg":
        return _neg_value(lower(ast.children[0], n))
    if kind == "pow":
        return _pow_value(lower(ast.children[0], n), ast.value, n)
    if kind == "bin":
        a = lower(ast.children[0], n)
        b = lower(ast.children[1], n)
        if ast.value == "+":
            return _add_values(a, b, n)
        if ast.value == "-":
            return _add_values(a, b, n, sub=True)
        if ast.value == "*":
            return _mul_values(a, b, n)
        # division: divisor must be a nonzero scalar
        if not isinstance(b, ScalarQ):
            if isinstance(b, QPolynomial) and not b.is_zero():
                terms = list(b.terms.items())
                if len(terms) == 1 and sum(terms[0][0]) == 0:
                    b = terms[0][1]
            if not isinstance(b, ScalarQ):
                raise LoweringError("division is only defined by nonzero scalars")
        if b.is_zero():
            raise LoweringError("division by zero")
        if isinstance(a, OperatorExpr):
            return sc(ONE / b) * a
        if isinstance(a, ScalarQ):
            return a / b
        return a.scale(ONE / b)
    raise LoweringError(f"cannot lower node kind {kind!r}")


def parse_and_lower(text, n):
    return lower(parse(text), n)
