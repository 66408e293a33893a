"""Coefficient tables for shifted square lattices, by enumeration and by closed form where one is known."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

from csl import series, shifted
from csl.gaussian import parse_gaussian_rational
from csl.series import CountingFunction


@dataclass
class Config:
    shifts: list[str] = field(default_factory=lambda: ["(1+1i)/2", "1/2", "(1+1i)/3", "1/5", "(2+1i)/5", "1/3,1/6"])
    max_index: int = 250
    closure_bound: int = 25


def run(cfg: Config, out=sys.stdout) -> None:
    w = csv.writer(out)
    w.writerow(["shift", "m", "csl", "rotations", "closed_form", "reflection_symmetry", "closed_up_to_bound"])
    for text in cfg.shifts:
        x = parse_gaussian_rational(text)
        csl = shifted.csl_counts(x, cfg.max_index)
        rot = shifted.rotation_counts(x, cfg.max_index)
        rule = series.closed_form_rule(CountingFunction("shifted-square", x))
        closed = series.coefficients(CountingFunction("shifted-square", x), cfg.max_index, "closed") if rule else None
        eps = shifted.reflection_symmetry_generator(x)
        group = shifted.group_closure_check(x, cfg.closure_bound).closed
        for m in range(1, cfg.max_index + 1):
            if csl[m] or rot[m]:
                w.writerow([text, m, csl[m], rot[m], "" if closed is None else closed[m], eps or "", group])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-index", type=int, default=Config.max_index)
    p.add_argument("--shift", action="append", help="repeatable; defaults to the worked examples")
    args = p.parse_args()
    cfg = Config(max_index=args.max_index)
    if args.shift:
        cfg.shifts = args.shift
    run(cfg)


if __name__ == "__main__":
    main()
