"""Critical points at infinity through the chart x = 1/z, y -> y/z.

For a homogeneous family x' = y, y' = p y + q x the chart system reads

    +-y' = y^2 - p y - q
    +-z' = z y

so the equator points are (y*, 0) with y* a real root of the quadratic,
which coincides with the characteristic polynomial of the finite point.
The Jacobian there is diag(2 y* - p, y*).

``kind`` is read from that Jacobian with the + sign, and ``antipode_kind``
is its reverse. In forward time the chart flow carries the - sign
(u' = -(u^2 - p u - q), z' = -u z for u = y/x, z = 1/x), and a linear
field is symmetric under (x, y) -> (-x, -y), so both antipodes share
``forward_kind``, which is what trajectories of the field actually do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from pzfield.errors import AffineFamilyUnsupported
from pzfield.model import LinearFamily, Scalar


class InfinityKind(str, Enum):
    REPULSOR = "Repulsor"
    ATTRACTOR = "Attractor"
    SADDLE = "Saddle"
    DEGENERATE = "Degenerate"


ANTIPODE = {
    InfinityKind.REPULSOR: InfinityKind.ATTRACTOR,
    InfinityKind.ATTRACTOR: InfinityKind.REPULSOR,
    InfinityKind.SADDLE: InfinityKind.SADDLE,
    InfinityKind.DEGENERATE: InfinityKind.DEGENERATE,
}


@dataclass(frozen=True)
class ChartSystem:
    """Coefficients of y' = y_poly[0] y^2 + y_poly[1] y + y_poly[2], z' = z_coeff z y."""

    y_poly: tuple[Scalar, Scalar, Scalar]
    z_coeff: Scalar = 1

    def __call__(self, y, z):
        c2, c1, c0 = self.y_poly
        return c2 * y * y + c1 * y + c0, self.z_coeff * z * y


@dataclass(frozen=True)
class InfinityPoint:
    chart_y: float
    equator_point: tuple[float, float, float]
    jacobian_diag: tuple[float, float]
    kind: InfinityKind
    antipode_kind: InfinityKind

    @property
    def forward_kind(self) -> InfinityKind:
        """Kind under the forward-time flow, the same at both antipodes."""
        return ANTIPODE[self.kind]

    @property
    def antipode(self) -> tuple[float, float, float]:
        x, y, z = self.equator_point
        return (-x, -y, -z)


def infinity_system(fam: LinearFamily) -> ChartSystem:
    if not fam.is_homogeneous:
        raise AffineFamilyUnsupported(f"{fam.tag.value} has a constant term; no chart system")
    one = fam.p * 0 + 1
    return ChartSystem((one, -fam.p, -fam.q), one)


def _sign_kind(d1: float, d2: float) -> InfinityKind:
    if d1 == 0 or d2 == 0:
        return InfinityKind.DEGENERATE
    if d1 > 0 and d2 > 0:
        return InfinityKind.REPULSOR
    if d1 < 0 and d2 < 0:
        return InfinityKind.ATTRACTOR
    return InfinityKind.SADDLE


def infinity_points(fam: LinearFamily) -> list[InfinityPoint]:
    """Equator critical points, ordered by decreasing chart coordinate.

    Two points when p^2/4 + q > 0, one degenerate double root when it
    vanishes, none otherwise. The sign of the discriminant is decided on the
    exact coefficients.
    """
    chart = infinity_system(fam)
    _, c1, c0 = chart.y_poly
    half = -c1 / 2
    disc = half * half - c0
    if disc < 0:
        return []
    if disc == 0:
        roots = [(float(half), 0.0)]
    else:
        s = math.sqrt(disc)
        roots = [(float(half) + s, 2 * s), (float(half) - s, -2 * s)]
    points = []
    for y_star, d1 in roots:
        norm = math.hypot(1.0, y_star)
        d2 = y_star
        kind = _sign_kind(d1, d2)
        points.append(InfinityPoint(y_star, (1 / norm, y_star / norm, 0.0), (d1, d2), kind, ANTIPODE[kind]))
    return points
