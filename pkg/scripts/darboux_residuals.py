"""Darboux residual table for a list of rho values, with the sign-flipped first integrals as controls."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from pzfield import darboux


@dataclass(frozen=True)
class ResidualConfig:
    rhos: tuple[complex, ...] = (1, 4, -1, 2 + 1j)
    t_end: float = 1.0
    h: float = 1e-3


def row(rho, cfg: ResidualConfig) -> dict[str, float]:
    ds = darboux.build_darboux_set(rho)
    fld, grid = ds.field, darboux.default_samples(ds)
    return {
        "cofactor": max(darboux.check_cofactor(fld, f, k, grid) for f, k in zip(ds.f, ds.K)),
        "exp_factor": max(darboux.check_cofactor(fld, g, l, grid, quotient=True) for g, l in zip(ds.F, ds.L)),
        "integrating": max(darboux.check_integrating_factor(r, fld, grid) for r in ds.R),
        "drift": max(darboux.check_first_integral(i, fld, [(0.0, 0.0), (0.0, 0.3)], t_end=cfg.t_end, h=cfg.h)
                     for i in ds.I),
        "control": min(darboux.first_integral_grid_residual(i, fld, grid)
                       for i in darboux.sign_flipped_first_integrals(rho)),
        "riccati_gap": darboux.riccati_linear_gap(rho, 0.5, t_end=cfg.t_end, h=cfg.h),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("rhos", nargs="*", type=complex)
    args = parser.parse_args()
    cfg = ResidualConfig(tuple(args.rhos) or ResidualConfig.rhos)
    header = None
    for rho in cfg.rhos:
        values = row(rho, cfg)
        if header is None:
            header = ["rho"] + list(values)
            print("  ".join(f"{h:>12}" for h in header))
        print("  ".join([f"{str(rho):>12}"] + [f"{v:12.3e}" for v in values.values()]))


if __name__ == "__main__":
    main()
