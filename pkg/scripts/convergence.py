"""Finite-n probability that the z-1 block has all parts < k, against the
bracketed n -> infinity limit. Prints one row per n."""

import argparse
from dataclasses import dataclass, fields
from fractions import Fraction

from rrgl.glnq import limit_probability, probability_by_cycle_index
from rrgl.report import decimal_str


@dataclass
class Config:
    q: int = 3
    k: int = 2
    m: int = 1
    n_max: int = 12
    tol: str = "1/10000000000"


def main(cfg: Config):
    iv = limit_probability(cfg.q, cfg.k, cfg.m, Fraction(cfg.tol))
    print(f"q={cfg.q} k={cfg.k} m={cfg.m}  limit in [{decimal_str(iv.lo)}, {decimal_str(iv.hi)}]")
    print(f"{'n':>3}  {'P_n':>16}  {'|P_n - L| <=':>16}")
    for n in range(1, cfg.n_max + 1):
        p = probability_by_cycle_index(n, cfg.q, cfg.k, cfg.m)
        print(f"{n:>3}  {decimal_str(p):>16}  {decimal_str(iv.distance_bounds(p)[1]):>16}")


def parse() -> Config:
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(Config):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return Config(**vars(ap.parse_args()))


if __name__ == "__main__":
    main(parse())
