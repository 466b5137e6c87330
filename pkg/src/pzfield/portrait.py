"""Global phase portraits on the Poincare disk, written as SVG 1.1."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from pzfield.equilibria import finite_equilibria
from pzfield.errors import LineOfEquilibria
from pzfield.infinity import InfinityKind, infinity_points
from pzfield.model import LinearFamily, full_family
from pzfield.numerics import Trajectory, rk4


@dataclass(frozen=True)
class PortraitConfig:
    n_seeds: int = 24
    ring: float = 0.9  # seed radius on the disk
    t_end: float = 8.0
    h: float = 0.01
    cap: float = 1e8
    digits: int = 5


def to_disk(x, y):
    """(x, y) -> (x, y) / (1 + |(x, y)|)."""
    scale = 1.0 / (1.0 + np.hypot(x, y))
    return x * scale, y * scale


def from_disk(u, w):
    rho = math.hypot(u, w)
    scale = 1.0 / (1.0 - rho)
    return u * scale, w * scale


def seed_trajectories(fam: LinearFamily, config: PortraitConfig = PortraitConfig()) -> list[Trajectory]:
    """One trajectory per ring seed, running from t = -t_end to t = t_end."""
    p, q, r = float(fam.p), float(fam.q), float(fam.r)

    def forward(x, y):
        return y, p * y + q * x + r

    def backward(x, y):
        return -y, -(p * y + q * x + r)

    out = []
    for i in range(config.n_seeds):
        theta = 2 * math.pi * i / config.n_seeds
        start = from_disk(config.ring * math.cos(theta), config.ring * math.sin(theta))
        fwd = rk4(forward, start, (0.0, config.t_end), config.h, cap=config.cap)
        bwd = rk4(backward, start, (0.0, config.t_end), config.h, cap=config.cap)
        times = np.concatenate([-bwd.times[:0:-1], fwd.times])
        states = np.concatenate([bwd.states[:0:-1], fwd.states])
        out.append(Trajectory(float(times[0]), config.h, times, states,
                              fwd.overflowed or bwd.overflowed))
    return out


GLYPH_STYLE = {
    InfinityKind.REPULSOR: 'fill="white" stroke="#c0392b"',
    InfinityKind.ATTRACTOR: 'fill="#2c6fbb" stroke="#2c6fbb"',
    InfinityKind.SADDLE: 'fill="#27ae60" stroke="#27ae60"',
    InfinityKind.DEGENERATE: 'fill="#e67e22" stroke="#e67e22"',
}


def _glyph(kind: InfinityKind, chart_kind: InfinityKind, u: float, w: float, f) -> str:
    size = 0.035
    style = GLYPH_STYLE[kind]
    tags = f'class="{kind.value}" data-chart-kind="{chart_kind.value}"'
    if kind in (InfinityKind.REPULSOR, InfinityKind.ATTRACTOR):
        return f'<circle cx="{f(u)}" cy="{f(w)}" r="{f(size)}" {style} stroke-width="0.01" {tags}/>'
    if kind is InfinityKind.SADDLE:
        return (f'<rect x="{f(u - size)}" y="{f(w - size)}" width="{f(2 * size)}" '
                f'height="{f(2 * size)}" {style} {tags}/>')
    pts = [(u + size, w), (u, w + size), (u - size, w), (u, w - size)]
    coords = " ".join(f"{f(a)},{f(b)}" for a, b in pts)
    return f'<polygon points="{coords}" {style} {tags}/>'


def render_svg(fam: LinearFamily, trajectories, config: PortraitConfig = PortraitConfig()) -> str:
    def f(value):
        text = f"{value:.{config.digits}f}"
        return "0." + "0" * config.digits if text.strip("-0.") == "" else text

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="-1.1 -1.1 2.2 2.2" '
        'width="600" height="600">',
        f"<title>Poincare disk portrait of y' = {fam.p} y + {fam.q} x + {fam.r}</title>",
        '<g transform="scale(1,-1)">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.006"/>',
        '<g fill="none" stroke="#555555" stroke-width="0.004">',
    ]
    for traj in trajectories:
        u, w = to_disk(traj.states[:, 0], traj.states[:, 1])
        pts = " ".join(f"{f(a)},{f(b)}" for a, b in zip(u, w))
        lines.append(f'<polyline points="{pts}"/>')
    lines.append("</g>")

    try:
        for eq in finite_equilibria(fam):
            u, w = to_disk(float(eq.location[0]), float(eq.location[1]))
            lines.append(f'<circle cx="{f(u)}" cy="{f(w)}" r="0.025" fill="black" '
                         f'class="finite {eq.kind.value}"/>')
    except LineOfEquilibria:
        lines.append('<line x1="-1" y1="0" x2="1" y2="0" stroke="black" stroke-width="0.012" '
                     'class="finite line"/>')

    if fam.is_homogeneous:
        for pt in infinity_points(fam):
            X, Y, _ = pt.equator_point
            # glyphs follow the forward-time flow drawn by the trajectories
            for sign, chart_kind in ((1, pt.kind), (-1, pt.antipode_kind)):
                u, w = sign * X, sign * Y
                lines.append(f'<line x1="{f(0.94 * u)}" y1="{f(0.94 * w)}" x2="{f(1.06 * u)}" '
                             f'y2="{f(1.06 * w)}" stroke="black" stroke-width="0.01"/>')
                lines.append(_glyph(pt.forward_kind, chart_kind, u, w, f))
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def portrait(a, b, c, config: PortraitConfig = PortraitConfig()):
    """SVG text and seed trajectories for y' = 2(a+b) y - (a^2+b^2+c) x."""
    fam = full_family(a, b, c)
    trajectories = seed_trajectories(fam, config)
    return render_svg(fam, trajectories, config), trajectories
