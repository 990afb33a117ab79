#!/usr/bin/env python3
"""Exhaustive isolation scan: for each SO_0(p,q) catalog, the minimum
strongly primitive degree among non-isolated modules, against the
rank-dependent lower bound and its witness."""

import argparse

from cohomrep import isolation as iso


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-sum", type=int, default=12, help="largest p+q")
    args = ap.parse_args()

    print(f"{'group':>10} {'rank':>4} {'bound':>5} {'scan min':>8} {'attained':>8}  witness / argmin")
    for p in range(2, args.max_sum - 1):
        for q in range(2, args.max_sum - 1):
            if p + q > args.max_sum:
                continue
            th = iso.min_degree_nonisolated("O", p, q)
            _, best, argmin = iso.nonisolated_degree_scan(p, q)
            attained = th.bound is not None and best == th.bound
            wit = list(th.witness) if th.witness else None
            print(f"  O({p},{q}) {th.rank:>4} {str(th.bound):>5} {best:>8} {str(attained):>8}  "
                  f"{wit} / {[list(a) for a in argmin[:3]]}")


if __name__ == "__main__":
    main()
