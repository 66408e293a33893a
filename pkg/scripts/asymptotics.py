"""Summatory counting functions against their predicted leading terms."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field

from csl import series
from csl.series import CountingFunction


@dataclass
class Config:
    # (counting function, growth key) pairs
    targets: list[tuple[str, str]] = field(
        default_factory=lambda: [
            ("z2", "N/pi"),
            ("shift:1/5", "2N/(3pi)"),
            ("shift:(2+1i)/5", "4N/(3pi)"),
            ("z3", "3N^2/pi^2"),
            ("d3p", "9N^2/(2pi^2)"),
            ("d3p", "15N^2/(4pi^2)"),
        ]
    )
    checkpoints: list[int] = field(default_factory=lambda: [10**2, 10**3, 10**4, 10**5, 10**6])
    quadratic_limit: int = 10**5


def run(cfg: Config) -> list[dict]:
    rows = []
    for which, growth in cfg.targets:
        f = CountingFunction.parse(which)
        quadratic = series.GROWTH[growth].power == 2
        for n in cfg.checkpoints:
            if quadratic and n > cfg.quadratic_limit:
                continue
            ratio = series.summatory_ratio(f, n, growth)
            rows.append({"which": which, "growth": growth, "N": n, "sum": series.summatory(f, n), "ratio": round(float(ratio), 6)})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-exponent", type=int, default=6)
    args = p.parse_args()
    cfg = Config(checkpoints=[10**k for k in range(2, args.max_exponent + 1)])
    print(json.dumps({"config": asdict(cfg)}))
    for row in run(cfg):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
