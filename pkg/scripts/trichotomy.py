"""Finite and infinite critical points for (a, b, c) = (1, 1, c), c in {1, 2, 3}."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from pzfield.equilibria import finite_equilibria
from pzfield.infinity import infinity_points
from pzfield.model import full_family


@dataclass(frozen=True)
class TrichotomyConfig:
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    cs: tuple[Fraction, ...] = field(default=(Fraction(1), Fraction(2), Fraction(3)))


def run(config: TrichotomyConfig) -> list[str]:
    rows = []
    for c in config.cs:
        fam = full_family(config.a, config.b, c)
        (eq,) = finite_equilibria(fam)
        pts = infinity_points(fam)
        boundary = ", ".join(f"y*={p.chart_y:g}: {p.kind.value}/{p.antipode_kind.value}" for p in pts) or "none"
        rows.append(f"c={c}: origin {eq.kind.value} (lambda = {eq.spectrum.lambda1:.4g}, "
                    f"{eq.spectrum.lambda2:.4g}); infinity {boundary}")
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=Fraction, default=Fraction(1))
    parser.add_argument("--b", type=Fraction, default=Fraction(1))
    args = parser.parse_args()
    a, b = args.a, args.b
    # c = 2ab - 1, 2ab, 2ab + 1 straddles the repeated-root case
    cfg = TrichotomyConfig(a, b, (2 * a * b - 1, 2 * a * b, 2 * a * b + 1))
    print("\n".join(run(cfg)))


if __name__ == "__main__":
    main()
