"""Ehrhart coefficients of base-r simplices from brute-force lattice-point counts.

Prints the interpolated Ehrhart polynomial for each (r, n) and flags any
nonpositive coefficient. Counting cost grows fast; use --budget to cap it.
"""

import argparse
from dataclasses import dataclass
from typing import Optional

from numsimplex.baser import BaseRSimplex
from numsimplex.oracle import ehrhart_table, is_ehrhart_positive
from numsimplex.simplex import hstar


@dataclass
class Config:
    r_max: int = 4
    n_max: int = 3
    budget: Optional[int] = None


def run(cfg: Config) -> bool:
    ok = True
    for r in range(2, cfg.r_max + 1):
        for n in range(1, cfg.n_max + 1):
            s = BaseRSimplex(r, n).q
            try:
                table = ehrhart_table(s, budget=cfg.budget)
            except ValueError as exc:
                print(f"r={r} n={n}: skipped ({exc})")
                continue
            positive = is_ehrhart_positive(table)
            ok &= positive and table.hstar == hstar(s)
            coeffs = ", ".join(str(c) for c in table.ehrhart_coeffs)
            print(f"r={r} n={n} q={s.q}: positive={positive}  L(t) coeffs [{coeffs}]")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()
    raise SystemExit(0 if run(Config(args.r_max, args.n_max, args.budget)) else 1)


if __name__ == "__main__":
    main()
