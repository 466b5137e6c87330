"""Darboux integrability of the Riccati field X = d/dx + (rho - v^2) d/dv.

With s = sqrt(rho) (complex allowed) the elements are

* invariant curves f1 = -v + s, f2 = -v - s, cofactors K1 = -(v + s),
  K2 = -(v - s);
* exponential factors F1 = exp(s x + c0), F2 = exp(-s x + c0), cofactors
  L1 = s, L2 = -s;
* integrating factors R1 = exp(-2 s x) / f1^2, R2 = exp(2 s x) / f2^2;
* first integrals built from a particular solution v1 of the Riccati
  equation and the second solution

      v2 = v1 + exp(-2 int v1) / (int exp(-2 int v1) dx + C)

  as I = (-v + v2) / (-v + v1) * exp(int (v2 - v1) dx), times the constant
  exp(1/(4 rho)).

The first integrals use the curve -v + v_i in both numerator and
denominator; the variant with -v - v_i is not conserved (see
``sign_flipped_first_integrals`` and the tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import sympy as sp

from pzfield.errors import PoleEncountered, RhoZero
from pzfield.expression import compiled, denominators, evaluate, to_sympy, v, x
from pzfield.numerics import PlanarField, grid_points, rk4, sample_points


def riccati_system(rho) -> PlanarField:
    """x' = 1, v' = rho - v^2."""
    return PlanarField(sp.Integer(1), to_sympy(rho) - v**2, (x, v))


@dataclass(frozen=True)
class DarbouxSet:
    rho: complex
    C: complex
    sqrt_rho: sp.Expr
    f: tuple[sp.Expr, sp.Expr]
    K: tuple[sp.Expr, sp.Expr]
    F: tuple[sp.Expr, sp.Expr]
    L: tuple[sp.Expr, sp.Expr]
    R: tuple[sp.Expr, sp.Expr]
    I: tuple[sp.Expr, sp.Expr]
    v_first: tuple[sp.Expr, sp.Expr]
    v_second: tuple[sp.Expr, sp.Expr]
    W: tuple[sp.Expr, sp.Expr]
    field: PlanarField = field(compare=False)

    def expressions(self) -> dict[str, sp.Expr]:
        out = {}
        for name in ("f", "K", "F", "L", "R", "I"):
            for i, expr in enumerate(getattr(self, name), start=1):
                out[f"{name}{i}"] = expr
        for i, (a, b) in enumerate(zip(self.v_first, self.v_second), start=1):
            out[f"v{i}1"], out[f"v{i}2"] = a, b
        return out

    def pole_functions(self):
        """Callables whose zeros are poles of some element, for sample exclusion."""
        s = complex(self.sqrt_rho)
        w1, w2 = (compiled(w, (x,)) for w in self.W)
        return [
            lambda xx, vv: vv - s,
            lambda xx, vv: vv + s,
            lambda xx, vv: w1(np.asarray(xx, dtype=complex)),
            lambda xx, vv: w2(np.asarray(xx, dtype=complex)),
        ]


def build_darboux_set(rho, C=1, factor_constant=0) -> DarbouxSet:
    """All Darboux elements of the Riccati field for a nonzero ``rho``."""
    r = to_sympy(rho)
    if r == 0:
        raise RhoZero("rho = 0 divides by sqrt(rho); handled by the additive Galois case")
    s = sp.sqrt(r)
    c0 = to_sympy(factor_constant)
    cc = to_sympy(C)

    f = (-v + s, -v - s)
    K = (-(v + s), -(v - s))
    F = (sp.exp(s * x + c0), sp.exp(-s * x + c0))
    L = (s, -s)
    R = (sp.exp(-2 * s * x) / (-v + s) ** 2, sp.exp(2 * s * x) / (-v - s) ** 2)

    scale = sp.exp(1 / (4 * r))
    first, second, ws, integrals = [], [], [], []
    for v1 in (s, -s):
        weight = sp.exp(sp.integrate(-2 * v1, x))
        w = sp.integrate(weight, x) + cc
        v2 = v1 + weight / w
        growth = sp.expand(sp.exp(sp.integrate(sp.cancel(v2 - v1), x)))
        first.append(v1)
        second.append(v2)
        ws.append(w)
        integrals.append(scale * (-v + v2) / (-v + v1) * growth)

    return DarbouxSet(complex(r), complex(cc), s, f, K, F, L, R, tuple(integrals),
                      tuple(first), tuple(second), tuple(ws), riccati_system(r))


def sign_flipped_first_integrals(rho, C=1) -> tuple[sp.Expr, sp.Expr]:
    """Variants with -v - v_i in place of -v + v_i; not conserved, used as controls."""
    r, cc = to_sympy(rho), to_sympy(C)
    s = sp.sqrt(r)
    e1, e2 = sp.exp(-2 * s * x), sp.exp(2 * s * x)
    scale = sp.exp(1 / (4 * r))
    i1 = (-v - s - e1 / (-2 * s * e1 + cc)) / (-v - s) * (-2 * s * e1) * scale
    i2 = (-v + s - e2 / (2 * s * e2 + cc)) / (-v + s) * (2 * s * e2) * scale
    return i1, i2


def darboux_product(curves, factors, lam, mu) -> sp.Expr:
    """H = prod f_i^lam_i * prod F_j^mu_j (multi-valued for complex weights)."""
    out = sp.Integer(1)
    for f, w in zip(curves, lam):
        if w != 0:
            out *= f ** to_sympy(w)
    for g, w in zip(factors, mu):
        if w != 0:
            out *= g ** to_sympy(w)
    return out


def default_samples(ds: DarbouxSet, *, radius=1e-3) -> np.ndarray:
    """21 x 21 grid on [-1, 1] x [-2, 2] minus the pole neighbourhoods."""
    return grid_points(((-1.0, 1.0), (-2.0, 2.0)), avoid=ds.pole_functions(), radius=radius)


def random_samples(ds: DarbouxSet, rng, n=100, box=((-2.0, 2.0), (-2.0, 2.0)), *, radius=1e-3):
    return sample_points(rng, n, box, avoid=ds.pole_functions(), radius=radius)


def _eval(expr, pts):
    xs, vs = pts[:, 0], pts[:, 1]
    env = {"x": xs, "v": vs}
    names = {s.name for s in expr.free_symbols}
    if not names:
        return np.full(len(pts), complex(expr))
    return evaluate(expr, **{k: env[k] for k in names})


def _residual(lhs, rhs, relative) -> float:
    gap = np.abs(lhs - rhs)
    if relative:
        # scale by the size of the terms that cancel
        gap = gap / np.maximum(1.0, np.abs(lhs) + np.abs(rhs))
    return float(np.max(gap))


def check_cofactor(field: PlanarField, f, K, samples, *, quotient=False, relative=False) -> float:
    """max |X(f) - K f| over ``samples``; with ``quotient``, max |X(f)/f - K|."""
    xf = _eval(field.apply(f), samples)
    if quotient:
        return _residual(xf / _eval(f, samples), _eval(K, samples), relative)
    return _residual(xf, _eval(K * f, samples), relative)


def check_integrating_factor(R, field: PlanarField, samples, *, relative=False) -> float:
    """max |d(R P)/du + d(R Q)/dw| over ``samples``."""
    u, w = field.variables
    du = _eval(sp.diff(R * field.P, u), samples)
    dw = _eval(sp.diff(R * field.Q, w), samples)
    return _residual(du, -dw, relative)


def combination(K, L, lam, mu, divergence=None) -> sp.Expr:
    total = sum((to_sympy(a) * k for a, k in zip(lam, K)), sp.Integer(0))
    total += sum((to_sympy(b) * l for b, l in zip(mu, L)), sp.Integer(0))
    if divergence is not None:
        total += divergence
    return total


def check_darboux_condition(K, L, lam, mu, divergence=None, samples=None, *, tol=1e-10) -> bool:
    """sum lam_i K_i + sum mu_j L_j (+ div) == 0 on the samples.

    Without ``divergence`` this is the first-integral condition; with it,
    the integrating-factor one. Weights must not all vanish.
    """
    if not any(w != 0 for w in list(lam) + list(mu)):
        raise ValueError("the weights lambda, mu must not all be zero")
    if samples is None:
        samples = grid_points(((-1.0, 1.0), (-2.0, 2.0)))
    values = _eval(combination(K, L, lam, mu, divergence), samples)
    return bool(np.max(np.abs(values)) < tol)


@dataclass(frozen=True)
class WeightSolution:
    particular: np.ndarray | None
    kernel: list[np.ndarray]


def solve_darboux_weights(K, L, divergence=None, samples=None, *, tol=1e-9) -> WeightSolution:
    """Weights (lam, mu) solving the Darboux condition, by least squares on samples.

    The homogeneous condition returns only a kernel basis; with a
    divergence term a particular solution of sum = -div is returned too.
    """
    if samples is None:
        samples = grid_points(((-1.0, 1.0), (-2.0, 2.0)))
    cols = [_eval(e, samples) for e in list(K) + list(L)]
    A = np.column_stack(cols)
    _, sing, vh = np.linalg.svd(A)
    rank = int(np.sum(sing > tol * max(1.0, sing[0])))
    kernel = [row.conj() for row in vh[rank:]]
    particular = None
    if divergence is not None:
        rhs = -_eval(divergence, samples)
        particular, *_ = np.linalg.lstsq(A, rhs, rcond=None)
        if np.max(np.abs(A @ particular - rhs)) > 1e-8:
            particular = None
    return WeightSolution(particular, kernel)


def _trajectory_values(expr, traj):
    xs, vs = traj.states[:, 0], traj.states[:, 1]
    return _eval(expr, np.column_stack([xs, vs]))


def check_first_integral(I, field: PlanarField, starts, *, t_end=1.0, h=1e-3, pole_tol=1e-6) -> float:
    """Largest relative drift max_t |I(t) - I(0)| / max(1, |I(0)|) over RK4 trajectories.

    Raises
    ------
    PoleEncountered
        If a trajectory comes within ``pole_tol`` of a zero of a denominator of I.
    """
    dens = denominators(I)
    worst = 0.0
    for start in starts:
        traj = rk4(field, np.asarray(start, dtype=complex), (0.0, t_end), h)
        for den in dens:
            if np.min(np.abs(_trajectory_values(den, traj))) < pole_tol:
                raise PoleEncountered(f"trajectory from {start} meets {den} = 0")
        values = _trajectory_values(I, traj)
        drift = np.max(np.abs(values - values[0])) / max(1.0, abs(values[0]))
        worst = max(worst, float(drift))
    return worst


def first_integral_grid_residual(I, field: PlanarField, samples) -> float:
    """max |X(I)| / max(1, |I|) over ``samples``."""
    xi = _eval(field.apply(I), samples)
    return float(np.max(np.abs(xi) / np.maximum(1.0, np.abs(_eval(I, samples)))))


def riccati_from_linear(rho, v0, ts) -> np.ndarray:
    """v = y'/y for the solution of y'' = rho y with y(0) = 1, y'(0) = v0.

    Built on the exponential basis exp(+-sqrt(rho) t), so it is independent
    of any integration of the Riccati equation.
    """
    s = np.sqrt(complex(rho))
    ts = np.asarray(ts, dtype=float)
    alpha = 0.5 * (1 + v0 / s)
    beta = 0.5 * (1 - v0 / s)
    y = alpha * np.exp(s * ts) + beta * np.exp(-s * ts)
    dy = s * (alpha * np.exp(s * ts) - beta * np.exp(-s * ts))
    return dy / y


def riccati_linear_gap(rho, v0=0.5, *, t_end=1.0, h=1e-3) -> float:
    """max |v_RK4(t) - y'(t)/y(t)| on [0, t_end] for v' = rho - v^2."""
    rho_c = complex(rho)

    def vdot(vv):
        return (rho_c - vv * vv,)

    traj = rk4(vdot, np.array([v0], dtype=complex), (0.0, t_end), h)
    exact = riccati_from_linear(rho_c, v0, traj.times)
    return float(np.max(np.abs(traj.states[:, 0] - exact)))
