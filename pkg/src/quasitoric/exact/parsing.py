import io
import tokenize
import typing
from fractions import Fraction

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..core.errors import InputParseError
from .polynomial import MultiPoly

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_OPERATORS = frozenset({"+", "-", "*", "/", "^", "**", "(", ")"})
_SKIPPED = frozenset({tokenize.NEWLINE, tokenize.NL, tokenize.ENDMARKER, tokenize.INDENT, tokenize.DEDENT})


def _to_fraction(value: typing.Any, text: str) -> Fraction:
    if not getattr(value, "is_Rational", False):
        raise InputParseError("Polynomial coefficients must be rational", body=f"{text!r}: {value}")
    return Fraction(int(value.p), int(value.q))


def _check_tokens(text: str, variables: typing.AbstractSet[str]) -> None:
    # parse_expr evaluates its input; only integers, the variables and arithmetic reach it
    unknown = []
    try:
        for token in tokenize.generate_tokens(io.StringIO(text).readline):
            if token.type in _SKIPPED:
                continue
            if token.type == tokenize.NAME:
                if token.string not in variables:
                    unknown.append(token.string)
            elif token.type == tokenize.NUMBER:
                if not (token.string.isascii() and token.string.isdigit()):
                    raise InputParseError("Polynomial coefficients must be rational", body=text)
            elif token.type != tokenize.OP or token.string not in _OPERATORS:
                raise InputParseError("Unexpected token in polynomial", body=f"{text!r}: {token.string!r}")
    except (tokenize.TokenError, SyntaxError) as e:
        raise InputParseError("Could not parse polynomial", body=text) from e
    if unknown:
        raise InputParseError("Unknown variables in polynomial", body=sorted(set(unknown)))


def parse_polynomial(text: str, variables: typing.Sequence[str]) -> MultiPoly:
    """
    Parse a polynomial such as ``"x1^2*x2 + 3/2*x1"`` over the given variable names.

    Coefficients must be exact rationals: decimal literals, symbolic constants
    and unknown names are rejected.

    Raises:
        InputParseError: if the text is not a rational polynomial in ``variables``.
    """
    text = text.strip()
    symbols = {name: sp.Symbol(name) for name in variables}
    _check_tokens(text, symbols.keys())
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMATIONS, evaluate=True)
    except (sp.SympifyError, SyntaxError, tokenize.TokenError, TypeError, ValueError) as e:
        raise InputParseError("Could not parse polynomial", body=text) from e
    if not isinstance(expr, sp.Expr):
        raise InputParseError("Not a polynomial expression", body=text)
    unknown = sorted(str(s) for s in expr.free_symbols if str(s) not in symbols)
    if unknown:
        raise InputParseError("Unknown variables in polynomial", body=unknown)
    if not variables:
        if not expr.is_Rational:
            raise InputParseError("Expected a rational constant", body=text)
        return MultiPoly.constant((), _to_fraction(expr, text))
    try:
        poly = sp.Poly(sp.expand(expr), *[symbols[name] for name in variables])
    except sp.PolynomialError as e:
        raise InputParseError("Not a polynomial in the given variables", body=text) from e
    terms = {tuple(int(k) for k in exponent): _to_fraction(c, text) for exponent, c in poly.terms()}
    return MultiPoly(variables, terms)


def to_sympy(p: MultiPoly) -> sp.Expr:
    """The polynomial as a sympy expression, used for display and by tests as an independent oracle."""
    symbols = [sp.Symbol(name) for name in p.variables]
    expr: sp.Expr = sp.Integer(0)
    for exponent, c in p.items():
        term: sp.Expr = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, exponent):
            term *= s**k
        expr += term
    return expr
