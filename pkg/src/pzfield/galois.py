"""Lienard reduction, the rho table and the differential Galois group.

A family x' = y, y' = p y + q x + r is the second order equation
x'' + damping x' + stiffness x = 0 (after moving the equilibrium to the
origin), with damping = -p and stiffness = -q.  The substitution
x = exp(rate t) y, rate = -damping/2, removes the first derivative and
leaves y'' = rho y with rho = damping^2/4 - stiffness.  Over the constants
C the Galois group of y'' = rho y is the additive group when rho = 0
(basis 1, t) and the multiplicative group otherwise (basis exp(+-sqrt(rho) t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import sympy as sp

from pzfield.errors import AllZeroParams
from pzfield.expression import evaluate, t, to_sympy
from pzfield.model import LinearFamily, Params, Scalar, full_family

A, B, C = sp.symbols("a b c")

# keyed by (a != 0, b != 0, c != 0)
RHO_TABLE = {
    (False, False, True): -C,
    (False, True, False): sp.Integer(0),
    (True, False, False): sp.Integer(0),
    (True, True, False): 2 * A * B,
    (True, False, True): -C,
    (False, True, True): -C,
    (True, True, True): 2 * A * B - C,
}


class Group(str, Enum):
    ADDITIVE = "AdditiveGa"
    MULTIPLICATIVE = "MultiplicativeGm"


class GeneratorForm(str, Enum):
    UNIPOTENT = "UnipotentLowerTriangular"  # [[1, 0], [c, 1]]
    TORUS = "DiagonalTorus"  # [[c, 0], [0, 1/c]]


@dataclass(frozen=True)
class LienardForm:
    """x'' + damping x' + stiffness x = 0, in the coordinate x - shift."""

    damping: Scalar
    stiffness: Scalar
    shift: Scalar = 0

    @property
    def rate(self) -> Scalar:
        return -self.damping / 2

    @property
    def rho(self) -> Scalar:
        return self.damping * self.damping / 4 - self.stiffness

    def residual(self, expr: sp.Expr) -> sp.Expr:
        return (sp.diff(expr, t, 2) + to_sympy(self.damping) * sp.diff(expr, t)
                + to_sympy(self.stiffness) * expr)


@dataclass(frozen=True)
class RhoValue:
    rho: Scalar | complex
    zero_pattern: tuple[bool, bool, bool] = (True, True, True)

    @property
    def is_zero(self) -> bool:
        return self.rho == 0


@dataclass(frozen=True)
class GaloisResult:
    rho: RhoValue
    group: Group
    generator_matrix_form: GeneratorForm
    reduced_basis: tuple[sp.Expr, sp.Expr]
    lienard_basis: tuple[sp.Expr, sp.Expr]
    rate: Scalar = 0

    def generator_matrix(self, c) -> np.ndarray:
        """Matrix of the automorphism sigma_c acting on the reduced basis."""
        if self.group is Group.ADDITIVE:
            return np.array([[1, 0], [c, 1]], dtype=complex)
        return np.array([[c, 0], [0, 1 / c]], dtype=complex)

    def real_basis(self) -> tuple[sp.Expr, sp.Expr]:
        """Real solutions exp(at) cos(bt), exp(at) sin(bt) when rho < 0."""
        rho = to_sympy(self.rho.rho)
        if not (rho.is_real and rho < 0):
            return self.lienard_basis
        beta = sp.sqrt(-rho)
        grow = sp.exp(to_sympy(self.rate) * t)
        return (grow * sp.cos(beta * t), grow * sp.sin(beta * t))


def lienard_reduce(fam: LinearFamily) -> LienardForm:
    shift = -fam.r / fam.q if fam.r != 0 else 0 * fam.p
    return LienardForm(-fam.p, -fam.q, shift)


def rho_formula(pattern: tuple[bool, bool, bool]) -> sp.Expr:
    if pattern not in RHO_TABLE:
        raise AllZeroParams("a = b = c = 0 has no rho")
    return RHO_TABLE[pattern]


def compute_rho(params: Params) -> RhoValue:
    """rho from the table row selected by the zero pattern of (a, b, c)."""
    pattern = params.zero_pattern
    formula = rho_formula(pattern)
    a, b, c = params.a, params.b, params.c
    value = sp.lambdify((A, B, C), formula, modules="math")(a, b, c)
    if formula.is_zero:
        value = 0 * (a + b + c)
    return RhoValue(value, pattern)


def galois_group(rho: RhoValue, rate=0) -> GaloisResult:
    """Group, generator shape and solution bases for y'' = rho y.

    ``rate`` is the exponent of the change of variables x = exp(rate t) y
    back to the Lienard equation (a + b for the full-parameter family).
    """
    r = to_sympy(rho.rho)
    if r == 0:
        group, form = Group.ADDITIVE, GeneratorForm.UNIPOTENT
        basis = (sp.Integer(1), t)
    else:
        group, form = Group.MULTIPLICATIVE, GeneratorForm.TORUS
        root = sp.sqrt(r)
        basis = (sp.exp(root * t), sp.exp(-root * t))
    lift = sp.exp(to_sympy(rate) * t)
    return GaloisResult(rho, group, form, basis, tuple(lift * y for y in basis), rate)


def params_galois(params: Params) -> GaloisResult:
    """Table rho with the Lienard basis of y' = 2(a+b) y - (a^2+b^2+c) x."""
    return galois_group(compute_rho(params), params.a + params.b)


def family_galois(fam: LinearFamily) -> GaloisResult:
    """Galois data computed from a family's own Lienard equation."""
    form = lienard_reduce(fam)
    return galois_group(RhoValue(form.rho, fam.source.zero_pattern), form.rate)


def lienard_residual(result: GaloisResult, form: LienardForm, ts) -> float:
    """max |x'' + damping x' + stiffness x| / max(1, |x|) over the basis and ``ts``.

    Derivatives are exact (symbolic), not finite differences.
    """
    ts = np.asarray(ts, dtype=float)
    worst = 0.0
    for member in result.lienard_basis:
        xs = np.abs(_at(member, ts))
        res = np.abs(_at(form.residual(member), ts))
        worst = max(worst, float(np.max(res / np.maximum(1.0, xs))))
    return worst


def _at(expr, ts):
    if expr.free_symbols:
        return evaluate(expr, t=ts)
    return np.full(ts.shape, complex(expr))


def full_lienard(a, b, c) -> LienardForm:
    return lienard_reduce(full_family(a, b, c))
