"""Text, LaTeX and JSON rendering of scalars, polynomials and results.

Text output is canonical and re-parseable: Laurent terms print in descending
s-exponent, with q used whenever every exponent is even (q = s^2), monomials
in descending graded-lex order.  JSON is deterministic: sorted term lists,
rationals as "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

__all__ = [
    "render",
    "render_scalar",
    "render_qpoly",
    "render_cpoly",
    "render_clifford_element",
    "scalar_to_json",
    "qpoly_to_json",
    "cpoly_to_json",
    "decomposition_to_json",
    "json_dumps",
]


def json_dumps(obj):
    """Deterministic JSON encoding shared by every command."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _frac_latex(fr):
    if fr.denominator == 1:
        return str(fr.numerator)
    sign = "-" if fr < 0 else ""
    return f"{sign}\\frac{{{abs(fr.numerator)}}}{{{fr.denominator}}}"


def _gauss_text(c):
    """Full, parseable text of a Gaussian rational (no outer sign splitting)."""
    if not c.im:
        return str(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}*i"
    if c.im == 1:
        tail = "+ i"
    elif c.im == -1:
        tail = "- i"
    elif c.im < 0:
        tail = f"- {-c.im}*i"
    else:
        tail = f"+ {c.im}*i"
    return f"{c.re} {tail}"


def _gauss_latex(c):
    if not c.im:
        return _frac_latex(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_frac_latex(c.im)}i"
    tail = "+ i" if c.im == 1 else ("- i" if c.im == -1 else None)
    if tail is None:
        tail = f"- {_frac_latex(-c.im)}i" if c.im < 0 else f"+ {_frac_latex(c.im)}i"
    return f"{_frac_latex(c.re)} {tail}"


def _gauss_parts(c, latex=False):
    """(sign, magnitude text or None); None means the factor 1."""
    if not c.im:
        sign = -1 if c.re < 0 else 1
        mag = abs(c.re)
        if mag == 1:
            return sign, None
        return sign, _frac_latex(mag) if latex else str(mag)
    if not c.re:
        sign = -1 if c.im < 0 else 1
        mag = abs(c.im)
        if mag == 1:
            return sign, "i"
        if latex:
            return sign, f"{_frac_latex(mag)}i"
        return sign, f"{mag}*i"
    text = _gauss_latex(c) if latex else _gauss_text(c)
    return 1, f"({text})"


def _power_text(sym, exp, latex=False):
    if exp == 0:
        return None
    if latex:
        return sym if exp == 1 else f"{sym}^{{{exp}}}"
    return sym if exp == 1 else f"{sym}^{exp}"


def _laurent_symbol(poly):
    """Use q when every live exponent is even, else s."""
    if all(e % 2 == 0 for e in poly.coeffs):
        return "q", 2
    return "s", 1


def _laurent_terms(poly, latex=False, symbol=None):
    """List of (sign, text) for the terms of a Laurent polynomial, desc exponent."""
    sym, step = _laurent_symbol(poly) if symbol is None else symbol
    out = []
    for e in sorted(poly.coeffs, reverse=True):
        c = poly.coeffs[e]
        sign, mag = _gauss_parts(c, latex)
        power = _power_text(sym, e // step, latex)
        if mag is None and power is None:
            out.append((sign, "1"))
        elif mag is None:
            out.append((sign, power))
        elif power is None:
            out.append((sign, mag))
        elif latex:
            out.append((sign, f"{mag}{power}"))
        else:
            out.append((sign, f"{mag}*{power}"))
    return out


def _join_terms(terms):
    if not terms:
        return "0"
    parts = []
    for idx, (sign, text) in enumerate(terms):
        if idx == 0:
            parts.append(f"-{text}" if sign < 0 else text)
        else:
            parts.append(f"- {text}" if sign < 0 else f"+ {text}")
    return " ".join(parts)


def _laurent_text(poly, latex=False, symbol=None):
    return _join_terms(_laurent_terms(poly, latex, symbol))


def render_scalar(x, fmt="text"):
    if fmt == "json":
        return json_dumps(scalar_to_json(x))
    latex = fmt == "latex"
    if x.den.is_one():
        return _laurent_text(x.num, latex)
    # one symbol for both sides: q only when every exponent anywhere is even
    if all(e % 2 == 0 for e in x.num.coeffs) and all(e % 2 == 0 for e in x.den.coeffs):
        symbol = ("q", 2)
    else:
        symbol = ("s", 1)
    num = _laurent_text(x.num, latex, symbol)
    den = _laurent_text(x.den, latex, symbol)
    if latex:
        return f"\\frac{{{num}}}{{{den}}}"
    if len(x.num.coeffs) > 1:
        num = f"({num})"
    return f"{num}/({den})"


def _coeff_prefix(x, latex=False):
    """(sign, text or None) for a coefficient in multiplicative position."""
    if x.den.is_one() and len(x.num.coeffs) == 1:
        (sign, text), = _laurent_terms(x.num, latex)
        return sign, (None if text == "1" else text)
    return 1, f"({render_scalar(x, 'latex' if latex else 'text')})"


def _monomial_text(alpha, latex=False):
    parts = []
    for i, a in enumerate(alpha, start=1):
        if a == 0:
            continue
        if latex:
            parts.append(f"x_{i}" if a == 1 else f"x_{i}^{{{a}}}")
        else:
            parts.append(f"x{i}" if a == 1 else f"x{i}^{a}")
    if not parts:
        return None
    return ("" if latex else "*").join(parts)


def _blade_text(blade, sigma, latex=False):
    if not blade:
        return None
    if latex:
        name = "e" if sigma > 0 else "e^{+}"
        return f"{name}_{{{''.join(str(i) for i in blade)}}}"
    name = "e" if sigma > 0 else "ep"
    return f"{name}[{','.join(str(i) for i in blade)}]"


def _term_order_key(alpha):
    return (sum(alpha), alpha)


def render_qpoly(p, fmt="text"):
    if fmt == "json":
        return json_dumps(qpoly_to_json(p))
    latex = fmt == "latex"
    terms = []
    for alpha in sorted(p.terms, key=_term_order_key, reverse=True):
        sign, coeff = _coeff_prefix(p.terms[alpha], latex)
        mono = _monomial_text(alpha, latex)
        pieces = [t for t in (coeff, mono) if t is not None]
        if not pieces:
            text = "1"
        elif latex:
            text = "".join(pieces)
        else:
            text = "*".join(pieces)
        terms.append((sign, text))
    return _join_terms(terms)


def render_cpoly(p, fmt="text"):
    if fmt == "json":
        return json_dumps(cpoly_to_json(p))
    latex = fmt == "latex"
    terms = []
    keys = sorted(p.terms, key=lambda t: (_term_order_key(t[0]), (len(t[1]), t[1])), reverse=True)
    for alpha, blade in keys:
        sign, coeff = _coeff_prefix(p.terms[(alpha, blade)], latex)
        mono = _monomial_text(alpha, latex)
        bl = _blade_text(blade, p.sigma, latex)
        pieces = [t for t in (coeff, mono, bl) if t is not None]
        if not pieces:
            text = "1"
        elif latex:
            text = "".join(pieces[:-1]) + (" " + pieces[-1] if bl and len(pieces) > 1 else pieces[-1])
        else:
            text = "*".join(pieces)
        terms.append((sign, text))
    return _join_terms(terms)


def render_clifford_element(a, fmt="text"):
    if fmt == "json":
        return json_dumps(clifford_element_to_json(a))
    latex = fmt == "latex"
    terms = []
    for blade in sorted(a.terms, key=lambda b: (len(b), b)):
        sign, coeff = _coeff_prefix(a.terms[blade], latex)
        bl = _blade_text(blade, a.sigma, latex)
        pieces = [t for t in (coeff, bl) if t is not None]
        if not pieces:
            text = "1"
        elif latex:
            text = "".join(pieces)
        else:
            text = "*".join(pieces)
        terms.append((sign, text))
    return _join_terms(terms)


# ---------------------------------------------------------------------------
# JSON forms


def _frac_json(fr):
    return str(fr)


def scalar_to_json(x):
    def side(poly):
        return [
            [e, _frac_json(poly.coeffs[e].re), _frac_json(poly.coeffs[e].im)]
            for e in sorted(poly.coeffs, reverse=True)
        ]

    return {"num": side(x.num), "den": side(x.den)}


def qpoly_to_json(p):
    terms = [
        {"alpha": list(alpha), "coeff": scalar_to_json(c)}
        for alpha, c in sorted(p.terms.items(), key=lambda t: _term_order_key(t[0]), reverse=True)
    ]
    return {"n": p.n, "terms": terms}


def cpoly_to_json(p):
    keys = sorted(
        p.terms.items(),
        key=lambda t: (_term_order_key(t[0][0]), (len(t[0][1]), t[0][1])),
        reverse=True,
    )
    terms = [
        {
            "alpha": list(alpha),
            "blade": list(blade),
            "coeff": scalar_to_json(c),
        }
        for (alpha, blade), c in keys
    ]
    return {"n": p.n, "sigma": p.sigma, "terms": terms}


def clifford_element_to_json(a):
    terms = [
        {"blade": list(b), "coeff": scalar_to_json(c)}
        for b, c in sorted(a.terms.items(), key=lambda t: (len(t[0]), t[0]))
    ]
    return {"n": a.n, "sigma": a.sigma, "terms": terms}


def decomposition_to_json(result):
    from .qpoly import QPolynomial

    level_key = "j" if result.kind == "harmonic" else "s"
    degree_key = "m" if result.kind == "harmonic" else "k"
    levels = []
    for s, poly in result.levels:
        body = (
            qpoly_to_json(poly)
            if isinstance(poly, QPolynomial)
            else cpoly_to_json(poly)
        )
        levels.append({level_key: s, "poly": body})
    return {
        "type": result.kind,
        degree_key: result.degree,
        "levels": levels,
        "verified": result.verified,
    }


def render(value, fmt="text"):
    """Render any public value in the requested format."""
    from .fischer import DecompositionResult, FischerValue
    from .qclifford import CliffordElement, CliffordPolynomial
    from .qpoly import QPolynomial
    from .scalars import ScalarQ

    if isinstance(value, ScalarQ):
        return render_scalar(value, fmt)
    if isinstance(value, QPolynomial):
        return render_qpoly(value, fmt)
    if isinstance(value, CliffordPolynomial):
        return render_cpoly(value, fmt)
    if isinstance(value, CliffordElement):
        return render_clifford_element(value, fmt)
    if isinstance(value, FischerValue):
        if fmt == "json":
            return json_dumps(
                {
                    "clifford": clifford_element_to_json(value.clifford_value),
                    "scalar": scalar_to_json(value.scalar_value),
                }
            )
        return (
            f"clifford: {render_clifford_element(value.clifford_value, fmt)}\n"
            f"scalar:   {render_scalar(value.scalar_value, fmt)}"
        )
    if isinstance(value, DecompositionResult):
        if fmt == "json":
            return json_dumps(decomposition_to_json(value))
        lines = [f"{value.kind} decomposition, degree {value.degree}, verified={value.verified}"]
        for s, poly in value.levels:
            body = render(poly, fmt)
            lines.append(f"  level {s}: {body}")
        return "\n".join(lines)
    raise TypeError(f"cannot render {type(value).__name__}")
