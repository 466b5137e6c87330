"""Region census over a rational grid and agreement with the trajectory oracle."""

from __future__ import annotations

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from pzfield.bifurcation import classify_region
from pzfield.equilibria import classify_spectrum, is_hyperbolic, spectrum, spectrum_from_params, trajectory_oracle
from pzfield.model import full_family


@dataclass(frozen=True)
class RegionMapConfig:
    half_width: int = 5
    denominator: int = 2
    oracle_samples: int = 200
    seed: int = 0


def grid_census(cfg: RegionMapConfig) -> tuple[Counter, int]:
    n = cfg.half_width * cfg.denominator
    axis = [Fraction(i, cfg.denominator) for i in range(-n, n + 1)]
    census, mismatches = Counter(), 0
    for a, b, c in itertools.product(axis, repeat=3):
        label = classify_region(a, b, c)
        census[label.tag.value] += 1
        if (a, b, c) != (0, 0, 0) and label.predicted_kind is not classify_spectrum(spectrum_from_params(a, b, c)):
            mismatches += 1
    return census, mismatches


def oracle_agreement(cfg: RegionMapConfig) -> tuple[int, int]:
    rng = np.random.default_rng(cfg.seed)
    used = agree = 0
    for a, b, c in rng.uniform(-cfg.half_width, cfg.half_width, size=(cfg.oracle_samples, 3)):
        fam = full_family(a, b, c)
        if not is_hyperbolic(fam):
            continue
        used += 1
        agree += trajectory_oracle(fam) is classify_spectrum(spectrum(fam))
    return agree, used


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--half-width", type=int, default=5)
    parser.add_argument("--denominator", type=int, default=2)
    parser.add_argument("--oracle-samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    cfg = RegionMapConfig(args.half_width, args.denominator, args.oracle_samples, args.seed)
    census, mismatches = grid_census(cfg)
    for tag, count in sorted(census.items()):
        print(f"{tag:>20}: {count}")
    print(f"region/spectrum mismatches: {mismatches}")
    agree, used = oracle_agreement(cfg)
    print(f"trajectory oracle: {agree}/{used} agree ({cfg.oracle_samples - used} near-boundary samples skipped)")


if __name__ == "__main__":
    main()
