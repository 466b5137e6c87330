"""Closed-form expressions over complex scalars.

Expressions are plain sympy objects in the variables ``x``, ``v`` (the
Riccati plane) and ``t`` (time). This module only adds the handful of
helpers the rest of the package needs: exact conversion of numeric inputs,
cached numeric evaluation, partial derivatives, pole discovery and a
deterministic text rendering.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Number

import numpy as np
import sympy as sp
from sympy.core.sorting import default_sort_key

x, v, t, y = sp.symbols("x v t y")

Expression = sp.Expr


def to_sympy(value) -> sp.Expr:
    """Exact sympy number for an int, Fraction, float or complex input.

    Floats are read through their shortest decimal representation, so
    ``0.3`` becomes ``3/10`` rather than the binary neighbour.
    """
    if isinstance(value, sp.Basic):
        return value
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not numeric parameters")
    if isinstance(value, (int, np.integer)):
        return sp.Integer(int(value))
    if isinstance(value, (complex, np.complexfloating)):
        re, im = to_sympy(float(value.real)), to_sympy(float(value.imag))
        return re + sp.I * im
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return sp.Rational(repr(float(value)))
    if isinstance(value, Number):
        return sp.nsimplify(value, rational=True)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact number")


@lru_cache(maxsize=512)
def compiled(expr: sp.Expr, variables: tuple[sp.Symbol, ...]):
    return sp.lambdify(variables, expr, modules="numpy")


def evaluate(expr: sp.Expr, **values):
    """Evaluate ``expr`` numerically, over complex numbers.

    Keyword names are variable names (``x=``, ``v=``, ``t=``); values may be
    scalars or numpy arrays of a common shape.
    """
    variables = tuple(sorted(expr.free_symbols, key=lambda s: s.name))
    missing = [s.name for s in variables if s.name not in values]
    if missing:
        raise KeyError(f"no value for {missing}")
    args = [np.asarray(values[s.name], dtype=complex) for s in variables]
    shape = np.broadcast(*args).shape if args else ()
    out = np.asarray(compiled(expr, variables)(*args), dtype=complex)
    return np.broadcast_to(out, shape).copy()[()]


def partial(expr: sp.Expr, var: sp.Symbol) -> sp.Expr:
    return sp.diff(expr, var)


def denominators(expr: sp.Expr) -> list[sp.Expr]:
    """Bases raised to a negative real power anywhere inside ``expr``."""
    found = set()
    for node in sp.preorder_traversal(expr):
        if node.is_Pow:
            e = node.exp
            if e.is_real and e.is_negative:
                found.add(node.base)
    return sorted(found, key=default_sort_key)


def render(expr: sp.Expr) -> str:
    """Canonical infix string (sympy's sorted operand order)."""
    return sp.sstr(expr, order="lex")
