"""Principal specialization of P_lambda at x_i = q^-i for growing N,
compared with the closed form."""

import argparse
from dataclasses import dataclass

from rrgl.hall_littlewood import closed_form_specialization, principal_specialization
from rrgl.partitions import enumerate_partitions
from rrgl.report import decimal_str


@dataclass
class Config:
    q: int = 2
    max_size: int = 3
    extra_vars: int = 6


def main(cfg: Config):
    for lam in enumerate_partitions(cfg.max_size):
        if not lam.size:
            continue
        target = closed_form_specialization(lam, cfg.q)
        errs = [abs(target - principal_specialization(lam, cfg.q, N))
                for N in range(len(lam), len(lam) + cfg.extra_vars)]
        print(f"{str(list(lam.parts)):>10}  closed {decimal_str(target):>14}  errors "
              + " ".join(decimal_str(e) for e in errs))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--extra-vars", type=int, default=6)
    main(Config(**vars(ap.parse_args())))
