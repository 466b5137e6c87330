"""Finite critical points of a linear family and their qualitative type.

Eigenvalues come from the closed form p/2 +- sqrt(p^2/4 + q) of the
characteristic polynomial lambda^2 - p lambda - q.  For F9 this is
(a+b) +- sqrt(2ab - c).  The classification never looks at the floating
eigenvalues: it reads the signs of the exact quantities p, -q and
p^2/4 + q, so parameters sitting on a bifurcation boundary are classified as
boundary points.

Focus stability always follows the sign of Re(lambda): the region
2ab - c < 0, a + b > 0 is an unstable focus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from pzfield.errors import LineOfEquilibria
from pzfield.model import LinearFamily, Scalar, full_family
from pzfield.numerics import rk4


class Kind(str, Enum):
    UNSTABLE_NODE = "UnstableNode"
    STABLE_NODE = "StableNode"
    SADDLE = "Saddle"
    UNSTABLE_FOCUS = "UnstableFocus"
    STABLE_FOCUS = "StableFocus"
    CENTER = "Center"
    DEGENERATE_ZERO_EIGEN = "DegenerateZeroEigen"


class Stability(str, Enum):
    REPULSOR = "Repulsor"
    ATTRACTOR = "Attractor"
    SADDLE = "Saddle"
    NEUTRAL = "Neutral"


STABILITY = {
    Kind.UNSTABLE_NODE: Stability.REPULSOR,
    Kind.UNSTABLE_FOCUS: Stability.REPULSOR,
    Kind.STABLE_NODE: Stability.ATTRACTOR,
    Kind.STABLE_FOCUS: Stability.ATTRACTOR,
    Kind.SADDLE: Stability.SADDLE,
    Kind.CENTER: Stability.NEUTRAL,
    Kind.DEGENERATE_ZERO_EIGEN: Stability.NEUTRAL,
}


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the linear part together with the exact data that fixes them.

    ``trace`` = p, ``det`` = -q and ``delta`` = p^2/4 + q, the quantity under
    the radical (2ab - c for F9).
    """

    lambda1: complex
    lambda2: complex
    trace: Scalar
    det: Scalar
    delta: Scalar

    @property
    def half_trace(self) -> Scalar:
        return self.trace / 2

    @property
    def repeated(self) -> bool:
        return self.delta == 0


def spectrum(fam: LinearFamily) -> Spectrum:
    trace, det = fam.p, -fam.q
    half = trace / 2
    delta = half * half + fam.q
    root = math.sqrt(delta) if delta >= 0 else 1j * math.sqrt(-delta)
    return Spectrum(complex(half + root), complex(half - root), trace, det, delta)


def spectrum_from_params(a, b, c) -> Spectrum:
    """Spectrum of y' = 2(a+b) y - (a^2+b^2+c) x."""
    return spectrum(full_family(a, b, c))


def classify_spectrum(s: Spectrum) -> Kind:
    half, det, delta = s.half_trace, s.det, s.delta
    if det == 0:
        return Kind.DEGENERATE_ZERO_EIGEN
    if det < 0:
        return Kind.SADDLE
    if delta < 0:
        if half > 0:
            return Kind.UNSTABLE_FOCUS
        if half < 0:
            return Kind.STABLE_FOCUS
        return Kind.CENTER
    # real eigenvalues of equal sign (det > 0), so half != 0
    return Kind.UNSTABLE_NODE if half > 0 else Kind.STABLE_NODE


@dataclass(frozen=True)
class EquilibriumReport:
    location: tuple[Scalar, Scalar]
    spectrum: Spectrum
    kind: Kind
    stability: Stability


def finite_equilibria(fam: LinearFamily) -> list[EquilibriumReport]:
    """Critical points in the finite plane: at most one, at (-r/q, 0).

    Raises
    ------
    LineOfEquilibria
        When q = r = 0: every point of y = 0 is critical.
    """
    if fam.q == 0:
        if fam.r == 0:
            raise LineOfEquilibria(f"{fam.tag.value}: q = r = 0, the line y = 0 is critical")
        return []
    s = spectrum(fam)
    kind = classify_spectrum(s)
    return [EquilibriumReport((-fam.r / fam.q, 0 * fam.q), s, kind, STABILITY[kind])]


@dataclass(frozen=True)
class OracleConfig:
    """Brute-force classification by integrating seeds around the equilibrium."""

    n_seeds: int = 16
    radius: float = 1e-3
    t_end: float = 5.0
    h: float = 0.01
    window: float = 0.2  # fraction of each trajectory used to measure the radius
    center_band: float = 2.0


def is_hyperbolic(fam: LinearFamily, margin: float = 1.0) -> bool:
    """Whether the linear part is safely away from every bifurcation boundary.

    Uses a generic eigensolver so the sample filter shares nothing with the
    closed form it is used to test: |Re lambda| >= margin for both
    eigenvalues, and complex pairs must also turn at |Im lambda| >= 1.5 margin.
    """
    jac = np.array([[0.0, 1.0], [float(fam.q), float(fam.p)]])
    lam = np.linalg.eigvals(jac)
    if np.any(np.abs(lam.real) < margin):
        return False
    return bool(np.all((lam.imag == 0) | (np.abs(lam.imag) >= 1.5 * margin)))


def trajectory_oracle(fam: LinearFamily, config: OracleConfig = OracleConfig()) -> Kind:
    """Classify the equilibrium of ``fam`` from RK4 trajectories alone.

    Seeds on a small circle are integrated forward and backward in time.
    Growth in one direction and decay in the other gives a node or focus;
    growth both ways (or disagreement between seeds) is a saddle; bounded
    motion both ways is a center. A focus is told apart from a node by the
    angle swept around the equilibrium: trajectories of a node turn by less
    than pi.
    """
    p, q, r = float(fam.p), float(fam.q), float(fam.r)
    x0 = -r / q
    angles = 2 * np.pi * np.arange(config.n_seeds) / config.n_seeds
    seeds = np.stack([x0 + config.radius * np.cos(angles), config.radius * np.sin(angles)])

    def forward(x, y):
        return y, p * y + q * x + r

    def backward(x, y):
        return -y, -(p * y + q * x + r)

    runs = [rk4(f, seeds, (0.0, config.t_end), config.h) for f in (forward, backward)]
    growth, turning = [], []
    for traj in runs:
        dx, dy = traj.states[:, 0, :] - x0, traj.states[:, 1, :]
        radius = np.hypot(dx, dy)
        w = max(1, int(config.window * len(traj)))
        growth.append(np.log(radius[-w:].max(axis=0)) - np.log(radius[:w].max(axis=0)))
        theta = np.unwrap(np.arctan2(dy, dx), axis=0)
        turning.append(np.abs(theta[-1] - theta[0]).max())
    fwd, bwd = growth

    band = math.log(config.center_band)
    if np.all(np.abs(fwd) < band) and np.all(np.abs(bwd) < band):
        return Kind.CENTER
    if np.all(fwd > 0) and np.all(bwd < 0):
        return Kind.UNSTABLE_FOCUS if turning[1] > math.pi else Kind.UNSTABLE_NODE
    if np.all(fwd < 0) and np.all(bwd > 0):
        return Kind.STABLE_FOCUS if turning[0] > math.pi else Kind.STABLE_NODE
    return Kind.SADDLE

