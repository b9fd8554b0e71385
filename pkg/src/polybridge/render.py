"""LaTeX rendering of exact polynomials and the objects built from them."""
from __future__ import annotations

from fractions import Fraction

from .exact_core import BiPoly, PiecewiseBiPoly, UniPoly


def _latex_coeff(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else rf"\frac{{{a.numerator}}}{{{a.denominator}}}"


def _latex_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (powers, c) in enumerate(terms):
        mono = " ".join(v if k == 1 else f"{v}^{{{k}}}" for v, k in powers if k)
        a = abs(c)
        body = mono if (a == 1 and mono) else " ".join(x for x in (_latex_coeff(a), mono) if x)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def latex_unipoly(p: UniPoly, var: str = "t") -> str:
    terms = [(((var, k),), c) for k, c in reversed(list(enumerate(p.coeffs))) if c]
    return _latex_terms(terms)


def latex_bipoly(p: BiPoly, vars: tuple[str, str] = ("s", "t")) -> str:
    """Monomials in pure lexicographic order in (s, t), highest first."""
    keys = sorted(p.terms, reverse=True)
    return _latex_terms([(((vars[0], i), (vars[1], j)), p.terms[(i, j)]) for i, j in keys])


def latex_piecewise(p: PiecewiseBiPoly, name: str = "c") -> str:
    return (
        rf"{name}(s,t) = \begin{{cases}} {latex_bipoly(p.lower)} & s \le t \\ "
        rf"{latex_bipoly(p.upper)} & s > t \end{{cases}}"
    )


def latex_set(elems) -> str:
    elems = list(elems)
    return r"\varnothing" if not elems else r"\{" + ",".join(str(e) for e in elems) + r"\}"
