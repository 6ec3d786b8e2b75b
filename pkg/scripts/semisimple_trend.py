"""Exhaustive semisimple proportions in Mat(n, q) next to the two candidate
limiting products."""

import argparse
from dataclasses import dataclass, field

from rrgl.glnq import semisimple_census, semisimple_limit_candidates
from rrgl.report import decimal_str


@dataclass
class Config:
    cases: list = field(default_factory=lambda: [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 5), (2, 5)])
    threads: int = 1


def main(cfg: Config):
    limits = {}
    for n, q in cfg.cases:
        if q not in limits:
            limits[q] = semisimple_limit_candidates(q)
        res = semisimple_census(n, q, threads=cfg.threads)
        c = limits[q]
        print(f"Mat({n},{q}): {res.by_partitions}/{res.total} = {decimal_str(res.proportion)}"
              f"  criteria agree={res.agree}"
              f"  shifted {decimal_str(c['shifted'])}  unshifted {decimal_str(c['unshifted'])}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    main(Config(threads=ap.parse_args().threads))
