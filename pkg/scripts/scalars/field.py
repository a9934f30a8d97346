"""
Exact scalars: the fraction field of Z[a, q].

The variable a stands for the square root of p, so p = a**2 and every
structure constant of the engine is a polynomial in a and q. Elements are
sympy FracElements; the canonical text form is the contract for golden files:

- monomials render as ``a^i*q^j`` (exponent 1 written bare, zero exponents dropped)
- terms appear in graded-lex order, leading term first
- a fraction renders as ``num/den`` with parentheses around multi-term parts
"""

from typing import Dict, Optional, Union

from sympy import Symbol
from sympy.parsing.sympy_parser import (
    parse_expr,
    standard_transformations,
    convert_xor,
)
from sympy.polys.domains import ZZ
from sympy.polys.fields import field
from sympy.polys.orderings import grlex

from errors import ParseError, ScalarDivisionError

SCALAR_FIELD, A, Q = field("a,q", ZZ, grlex)
POLY_RING = SCALAR_FIELD.ring
P = A ** 2

Scalar = type(A)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_LOCALS = {'a': Symbol('a'), 'q': Symbol('q'), 'p': Symbol('a') ** 2}

_OPS = {
    'add': lambda x, y: x + y,
    'sub': lambda x, y: x - y,
    'mul': lambda x, y: x * y,
    'div': lambda x, y: x / y,
}


def scalar(value: Union[int, 'Scalar']) -> 'Scalar':
    """Coerce an integer (or scalar) into the scalar field."""
    if isinstance(value, Scalar):
        return value
    return SCALAR_FIELD(value)


def canonical(x: 'Scalar') -> 'Scalar':
    """Reduced fraction with positive leading coefficient in the denominator."""
    numer, denom = x.numer.cancel(x.denom)
    if denom.LC < 0:
        numer, denom = -numer, -denom
    return SCALAR_FIELD.raw_new(numer, denom)


def scalar_arith(x: 'Scalar', y: 'Scalar', op: str) -> 'Scalar':
    """
    Exact field arithmetic in canonical form.

    Args:
        x: Left operand
        y: Right operand
        op: One of 'add', 'sub', 'mul', 'div'

    Returns:
        Canonical result

    Raises:
        ScalarDivisionError: op is 'div' and y is zero
    """
    if op not in _OPS:
        raise ValueError(f"Unknown scalar operation: {op}")
    x, y = scalar(x), scalar(y)
    if op == 'div' and not y:
        raise ScalarDivisionError("Division by the zero scalar", details={'numerator': format_scalar(x)})
    return canonical(_OPS[op](x, y))


def _format_monomial(exponents) -> str:
    parts = []
    for name, power in zip(('a', 'q'), exponents):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return '*'.join(parts)


def format_polynomial(poly) -> str:
    """Render a polynomial of POLY_RING in canonical text form."""
    if not poly:
        return '0'

    pieces = []
    for index, (exponents, coeff) in enumerate(poly.terms()):
        coeff = int(coeff)
        monomial = _format_monomial(exponents)
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"

        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return ''.join(pieces)


def format_scalar(x: 'Scalar') -> str:
    """
    Canonical text form of a scalar.

    Example:
        format_scalar(P * Q**2 + P * (P - 1))  # 'a^4 + a^2*q^2 - a^2'
    """
    x = canonical(scalar(x))
    numer = format_polynomial(x.numer)
    if x.denom == POLY_RING.one:
        return numer
    denom = format_polynomial(x.denom)
    if len(x.numer.terms()) > 1:
        numer = f"({numer})"
    if len(x.denom.terms()) > 1:
        denom = f"({denom})"
    return f"{numer}/{denom}"


def parse_scalar(text: str, bindings: Optional[Dict[str, 'Scalar']] = None) -> 'Scalar':
    """
    Parse a scalar from text.

    Accepts the canonical form plus ``p`` as shorthand for ``a^2`` and
    ``**`` for powers. Extra names (e.g. ``alpha``) resolve through bindings.

    Raises:
        ParseError: text is not a rational expression in a, q, p and the bound names
    """
    if not text or not text.strip():
        raise ParseError("Empty scalar text")
    local_dict = dict(_LOCALS)
    for name, value in (bindings or {}).items():
        local_dict[name] = scalar(value).as_expr()
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
        return canonical(SCALAR_FIELD.from_expr(expr))
    except ZeroDivisionError as exc:
        raise ParseError(f"Scalar text divides by zero: {text!r}") from exc
    except (SyntaxError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"Cannot parse scalar: {text!r}", details={'reason': str(exc)}) from exc
