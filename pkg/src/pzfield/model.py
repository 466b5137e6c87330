"""The Polyanin-Zaitsev field and its reduction to linear families.

The general system is

    x' = y
    y' = (alpha x^(m+k-1) + beta x^(m-k-1)) y - gamma(x) x^(2m-2k-1)

with alpha = a(2m+k), beta = b(2m-k) and
gamma(x) = a^2 m x^(4k) + c x^(2k) + b^2 m.  For each zero pattern of
(a, b, c) only a few exponent choices make the right-hand side linear; those
choices give the nine families F1..F9 below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from numbers import Rational, Real

from pzfield.errors import AllZeroParams, DomainError

Scalar = Fraction | float


def exact(value) -> Scalar:
    """Coerce a user value: ints and rationals stay exact, floats stay floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not parameters")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return parse_literal(value)
    if isinstance(value, Real):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"non-finite parameter {value!r}")
        return value
    raise TypeError(f"unsupported parameter type {type(value).__name__}")


def parse_literal(text: str) -> Scalar:
    """``"3"``, ``"-1/2"`` -> Fraction; ``"0.25"``, ``"1e-3"`` -> float."""
    text = text.strip()
    try:
        if any(ch in text for ch in ".eEnN") and "/" not in text:
            value = float(text)
            if not math.isfinite(value):
                raise ValueError
            return value
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a decimal or rational literal: {text!r}") from None


def _exponent(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(repr(value))
    value = exact(value)
    return value if isinstance(value, Fraction) else Fraction(repr(value))


@dataclass(frozen=True)
class Params:
    """Raw parameters (a, b, c, m, k) of the field; m, k are exact rationals."""

    a: Scalar
    b: Scalar
    c: Scalar
    m: Fraction = Fraction(1)
    k: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, exact(getattr(self, name)))
        object.__setattr__(self, "m", _exponent(self.m))
        object.__setattr__(self, "k", _exponent(self.k))

    @property
    def zero_pattern(self) -> tuple[bool, bool, bool]:
        """(a != 0, b != 0, c != 0), decided by exact comparison."""
        return (self.a != 0, self.b != 0, self.c != 0)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(getattr(self, n), Fraction) for n in "abc")

    def with_exponents(self, m, k) -> Params:
        return replace(self, m=Fraction(m), k=Fraction(k))


@dataclass(frozen=True)
class PZField:
    params: Params

    @property
    def alpha(self) -> Scalar:
        p = self.params
        return p.a * (2 * p.m + p.k)

    @property
    def beta(self) -> Scalar:
        p = self.params
        return p.b * (2 * p.m - p.k)

    @property
    def gamma(self) -> tuple[tuple[Scalar, Fraction], ...]:
        """gamma(x) as (coefficient, power) pairs."""
        p = self.params
        return ((p.a * p.a * p.m, 4 * p.k), (p.c, 2 * p.k), (p.b * p.b * p.m, Fraction(0)))

    def monomials(self) -> tuple[list, list]:
        """Expanded y' as (coefficient, power) lists for the y-terms and the x-terms."""
        p = self.params
        y_terms = [(self.alpha, p.m + p.k - 1), (self.beta, p.m - p.k - 1)]
        shift = 2 * p.m - 2 * p.k - 1
        x_terms = [(-coef, power + shift) for coef, power in self.gamma]
        return y_terms, x_terms

    def __call__(self, x, y):
        return eval_pz_field(self, x, y)


def _power(x, e: Fraction):
    if e.denominator == 1:
        if x == 0 and e < 0:
            raise DomainError(f"x = 0 raised to negative power {e}")
        return x ** int(e)
    if x <= 0:
        raise DomainError(f"x = {x} raised to fractional power {e}")
    return float(x) ** float(e)


def eval_pz_field(field: PZField, x, y) -> tuple:
    """(x', y') of the general Polyanin-Zaitsev system at a point.

    Terms with a zero coefficient are skipped, so only the powers that are
    actually present restrict the domain.
    """
    y_terms, x_terms = field.monomials()
    ydot = 0
    for coef, e in y_terms:
        if coef != 0:
            ydot += coef * _power(x, e) * y
    for coef, e in x_terms:
        if coef != 0:
            ydot += coef * _power(x, e)
    return y, ydot


class Family(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    F7 = "F7"
    F8 = "F8"
    F9 = "F9"


@dataclass(frozen=True)
class LinearFamily:
    """x' = y, y' = p y + q x + r, plus the exponents that produced it."""

    tag: Family
    p: Scalar
    q: Scalar
    r: Scalar
    source: Params
    m: Fraction = Fraction(1)
    k: Fraction = Fraction(0)
    constraint: str = field(default="", compare=False)

    @property
    def is_homogeneous(self) -> bool:
        return self.r == 0

    @property
    def pz_params(self) -> Params:
        """Source parameters with the exponents this family requires."""
        return self.source.with_exponents(self.m, self.k)

    def __call__(self, x, y):
        return eval_linear(self, x, y)


def eval_linear(fam: LinearFamily, x, y) -> tuple:
    return y, fam.p * y + fam.q * x + fam.r


HALF = Fraction(1, 2)


def reduce_to_linear(params: Params) -> list[LinearFamily]:
    """All linear families reachable from the zero pattern of (a, b, c).

    Patterns with a = 0, b, c != 0 (and symmetrically b = 0) admit two
    exponent choices and return two families; every other pattern returns
    one. Exponents left free by the reduction (k for F1..F3) are taken from
    ``params``.
    """
    a, b, c, k = params.a, params.b, params.c, params.k
    pattern = params.zero_pattern
    if pattern == (False, False, False):
        raise AllZeroParams("a = b = c = 0 leaves the null polynomial")

    def fam(tag, p, q, r, m, kk, constraint):
        return LinearFamily(Family(tag), p, q, r, params, Fraction(m), Fraction(kk), constraint)

    if pattern == (False, False, True):
        return [fam("F1", 0 * c, -c, 0 * c, 1, k, "2m-1=1")]
    if pattern == (False, True, False):
        return [fam("F2", b * (k + 2), -b * b * (k + 1), 0 * b, k + 1, k, "m-k-1=0")]
    if pattern == (True, False, False):
        return [fam("F3", a * (2 - k), -a * a * (1 - k), 0 * a, 1 - k, k, "m+k-1=0")]
    if pattern == (False, True, True):
        return [
            fam("F4", 2 * b, -(b * b + c), 0 * b, 1, 0, "m-k-1=0, 2m-1=1"),
            fam("F5", 3 * b * HALF, -b * b * HALF, -c, HALF, -HALF, "m-k-1=0, 2m-1=0"),
        ]
    if pattern == (True, False, True):
        return [
            fam("F6", 2 * a, -(a * a + c), 0 * a, 1, 0, "m+k-1=0, 2m-1=1"),
            fam("F7", 3 * a * HALF, -a * a * HALF, -c, HALF, HALF, "m+k-1=0, 2m-1=0"),
        ]
    if pattern == (True, True, False):
        return [fam("F8", 2 * (a + b), -(a * a + b * b), 0 * a, 1, 0, "m+k-1=0, m-k-1=0")]
    return [fam("F9", 2 * (a + b), -(a * a + b * b + c), 0 * a, 1, 0, "m+k-1=0, m-k-1=0")]


def full_family(a, b, c) -> LinearFamily:
    """The full-parameter family y' = 2(a+b) y - (a^2+b^2+c) x, for any (a, b, c).

    F1, F4, F6, F8 (and F2, F3 at k = 0) are specialisations of it.
    """
    params = Params(a, b, c)
    if params.zero_pattern == (False, False, False):
        raise AllZeroParams("a = b = c = 0 leaves the null polynomial")
    a, b, c = params.a, params.b, params.c
    return LinearFamily(Family.F9, 2 * (a + b), -(a * a + b * b + c), 0 * a, params,
                        constraint="m+k-1=0, m-k-1=0")
