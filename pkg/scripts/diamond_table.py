"""Index and coset structure of the diamond packing for every primitive quaternion up to a norm bound."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from csl import diamond
from csl.quat import enumerate_primitive


@dataclass
class Config:
    max_norm: int = 50
    check_engine: bool = True
    count_up_to: int = 17


def run(cfg: Config, out=sys.stdout) -> None:
    w = csv.writer(out)
    w.writerow(["q", "norm", "improper", "norm_class", "index", "cosets", "engine_agrees", "shifted_fcc_member"])
    for q in enumerate_primitive(cfg.max_norm):
        for improper in (False, True):
            iso = diamond.DiamondIsometry(q, improper)
            res = diamond.diamond_coincidence(iso)
            agrees = ""
            if cfg.check_engine:
                gen = diamond.diamond_coincidence_engine(iso)
                agrees = gen.index == res.index and gen.cosets == res.cosets.cosets
            w.writerow([str(q), q.norm(), improper, res.norm_class.value, res.index, len(res.cosets.cosets), agrees, diamond.shifted_fcc_member(q, improper)])
    counts = diamond.csml_counts(cfg.count_up_to)
    w.writerow([])
    w.writerow(["m", "f_enumerated", "f_closed"])
    for m, v in counts.items():
        w.writerow([m, v, diamond.f_diamond(m)])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-norm", type=int, default=Config.max_norm)
    p.add_argument("--no-engine", action="store_true")
    args = p.parse_args()
    run(Config(max_norm=args.max_norm, check_engine=not args.no_engine))


if __name__ == "__main__":
    main()
