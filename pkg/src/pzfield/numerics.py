"""Numeric kernels shared by the verification suites.

Fixed-step classical RK4, symbolic directional derivatives of expressions
along a planar field, a central-difference fallback, sampling helpers and
the trajectory CSV format.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy as sp

from pzfield.errors import PoleEncountered
from pzfield.expression import compiled, denominators, evaluate

OVERFLOW_CAP = 1e12


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled solution; ``states[i]`` is the state at ``times[i]``.

    ``states`` has shape ``(n, dim)`` or ``(n, dim, batch)`` when several
    initial conditions were integrated together.
    """

    t0: float
    h: float
    times: np.ndarray
    states: np.ndarray
    overflowed: bool = False

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def __len__(self):
        return len(self.times)


def rk4(field, state0, t_span, h, *, cap=OVERFLOW_CAP) -> Trajectory:
    """Integrate ``state' = field(*state)`` with the classical RK4 scheme.

    ``field`` receives the state components as separate arguments and returns
    a sequence of derivatives; it may be vectorised over a trailing batch
    axis. Integration stops (and the trajectory is flagged) as soon as a
    component exceeds ``cap`` in modulus or stops being finite.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    t0, t1 = map(float, t_span)
    n_steps = int(round((t1 - t0) / h))
    if n_steps < 0 or abs(n_steps * h - (t1 - t0)) > 1e-9 * max(1.0, abs(t1 - t0)):
        raise ValueError(f"t_span {t_span} is not a non-negative multiple of h={h}")

    z = np.array(state0)
    z = z.astype(np.result_type(z.dtype, float))

    def f(state):
        return np.asarray(field(*state), dtype=z.dtype)

    states = np.empty((n_steps + 1,) + z.shape, dtype=z.dtype)
    states[0] = z
    overflowed = False
    last = n_steps
    for i in range(n_steps):
        k1 = f(z)
        k2 = f(z + 0.5 * h * k1)
        k3 = f(z + 0.5 * h * k2)
        k4 = f(z + h * k3)
        z = z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(z)) or np.max(np.abs(z)) > cap:
            overflowed = True
            last = i
            break
        states[i + 1] = z
    times = t0 + h * np.arange(last + 1)
    return Trajectory(t0, h, times, states[: last + 1], overflowed)


@dataclass(frozen=True)
class PlanarField:
    """Polynomial (or rational) planar field X = P d/du + Q d/dw, held symbolically."""

    P: sp.Expr
    Q: sp.Expr
    variables: tuple[sp.Symbol, sp.Symbol]

    @cached_property
    def _numeric(self):
        return (compiled(sp.sympify(self.P), self.variables),
                compiled(sp.sympify(self.Q), self.variables))

    def __call__(self, u, w):
        fp, fq = self._numeric
        shape = np.broadcast(np.asarray(u), np.asarray(w)).shape
        return (np.broadcast_to(fp(u, w), shape), np.broadcast_to(fq(u, w), shape))

    def apply(self, expr: sp.Expr) -> sp.Expr:
        """X(expr) as an expression."""
        u, w = self.variables
        return sp.diff(expr, u) * self.P + sp.diff(expr, w) * self.Q

    @property
    def divergence(self) -> sp.Expr:
        u, w = self.variables
        return sp.expand(sp.diff(self.P, u) + sp.diff(self.Q, w))


def check_poles(expr: sp.Expr, point: dict, tol: float) -> None:
    for den in denominators(expr):
        if np.any(np.abs(evaluate(den, **_restrict(den, point))) < tol):
            raise PoleEncountered(f"|{den}| < {tol:g} at {point}")


def _restrict(expr, point):
    names = {s.name for s in expr.free_symbols}
    return {k: val for k, val in point.items() if k in names}


def directional_derivative(expr: sp.Expr, field: PlanarField, point, *, pole_tol=1e-12):
    """X(expr) at ``point`` = (u, w), using exact partial derivatives."""
    u, w = field.variables
    env = {u.name: point[0], w.name: point[1]}
    check_poles(expr, env, pole_tol)
    derivative = field.apply(expr)
    return evaluate(derivative, **_restrict(derivative, env))


def central_difference(expr: sp.Expr, var: sp.Symbol, point: dict, step=1e-6):
    """Two-sided finite-difference partial derivative, the fallback path."""
    lo, hi = dict(point), dict(point)
    lo[var.name] = point[var.name] - step
    hi[var.name] = point[var.name] + step
    return (evaluate(expr, **_restrict(expr, hi)) - evaluate(expr, **_restrict(expr, lo))) / (2 * step)


def sample_points(rng: np.random.Generator, n: int, box, *, avoid=(), radius=1e-3) -> np.ndarray:
    """``n`` uniform points in ``box = ((u0, u1), (w0, w1))``.

    ``avoid`` is a list of callables ``g(u, w) -> distance-like value``;
    points where any ``|g| < radius`` are resampled.
    """
    (u0, u1), (w0, w1) = box
    out = []
    while len(out) < n:
        u, w = rng.uniform(u0, u1), rng.uniform(w0, w1)
        if all(abs(g(u, w)) >= radius for g in avoid):
            out.append((u, w))
    return np.array(out)


def grid_points(box, shape=(21, 21), *, avoid=(), radius=1e-3) -> np.ndarray:
    """Regular grid over ``box`` minus the points within ``radius`` of a pole."""
    (u0, u1), (w0, w1) = box
    uu, ww = np.meshgrid(np.linspace(u0, u1, shape[0]), np.linspace(w0, w1, shape[1]), indexing="ij")
    pts = np.column_stack([uu.ravel(), ww.ravel()])
    keep = np.ones(len(pts), dtype=bool)
    for g in avoid:
        keep &= np.abs(g(pts[:, 0], pts[:, 1])) >= radius
    return pts[keep]


def trajectory_csv(traj: Trajectory, names=("t", "x", "y")) -> str:
    """CSV with a ``t,x,y`` style header and 17 significant digits."""
    buf = io.StringIO()
    write_trajectory_csv(buf, [traj], names)
    return buf.getvalue()


def write_trajectory_csv(stream, trajectories, names=("t", "x", "y")) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(names)
    for traj in trajectories:
        for tt, state in zip(traj.times, traj.states):
            writer.writerow([_fmt(tt)] + [_fmt(c) for c in np.ravel(state)])


def _fmt(value) -> str:
    value = complex(value)
    if value.imag == 0:
        return f"{value.real:.17g}"
    return f"{value.real:.17g}{value.imag:+.17g}j"
