"""Compare the three h* routes for base-r simplices and time each one.

    python scripts/triple_agreement.py --r-max 6 --n-max 8 --limit 2000000
"""

import argparse
import time
from dataclasses import dataclass

from numsimplex.baser import BaseRSimplex, hstar_nasc, hstar_sections
from numsimplex.poly import is_real_rooted
from numsimplex.simplex import hstar


@dataclass
class Config:
    r_max: int = 6
    n_max: int = 8
    limit: int = 2 * 10**6


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def run(cfg: Config) -> bool:
    print(f"{'r':>2} {'n':>2} {'omega s':>8} {'nasc s':>8} {'sect s':>8}  agree  real-rooted  h*")
    all_ok = True
    for r in range(2, cfg.r_max + 1):
        for n in range(1, cfg.n_max + 1):
            if r**n > cfg.limit:
                continue
            h_w, t_w = timed(hstar, BaseRSimplex(r, n).q)
            h_n, t_n = timed(hstar_nasc, r, n)
            h_s, t_s = timed(hstar_sections, r, n)
            ok = h_w == h_n == h_s
            all_ok &= ok
            print(f"{r:>2} {n:>2} {t_w:8.3f} {t_n:8.3f} {t_s:8.3f}  {str(ok):5}  {str(is_real_rooted(h_s)):11}  {h_s}")
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=Config.r_max)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--limit", type=int, default=Config.limit, help="skip (r, n) with r^n above this")
    args = ap.parse_args()
    ok = run(Config(args.r_max, args.n_max, args.limit))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
