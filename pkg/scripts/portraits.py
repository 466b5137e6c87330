"""Write Poincare-disk portraits for a list of (a, b, c) triples."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from pzfield.model import parse_literal
from pzfield.numerics import write_trajectory_csv
from pzfield.portrait import PortraitConfig, portrait


@dataclass(frozen=True)
class PortraitsConfig:
    triples: tuple[tuple[str, str, str], ...] = (("1", "1", "1"), ("1", "1", "2"), ("1", "1", "3"))
    out_dir: Path = Path("portraits")
    render: PortraitConfig = field(default_factory=PortraitConfig)


def run(cfg: PortraitsConfig) -> list[Path]:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for triple in cfg.triples:
        a, b, c = map(parse_literal, triple)
        svg, trajectories = portrait(a, b, c, cfg.render)
        stem = "portrait_" + "_".join(s.replace("/", "over").replace("-", "m") for s in triple)
        svg_path, csv_path = cfg.out_dir / f"{stem}.svg", cfg.out_dir / f"{stem}.csv"
        svg_path.write_text(svg, encoding="utf-8")
        with csv_path.open("w", encoding="utf-8", newline="") as fh:
            write_trajectory_csv(fh, trajectories)
        written += [svg_path, csv_path]
    return written


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("triples", nargs="*", help="a,b,c triples such as 1,1,1 or -1/2,1,3")
    parser.add_argument("--out-dir", type=Path, default=Path("portraits"))
    args = parser.parse_args()
    triples = tuple(tuple(t.split(",")) for t in args.triples) or PortraitsConfig.triples
    for path in run(PortraitsConfig(triples, args.out_dir)):
        print(path)


if __name__ == "__main__":
    main()
