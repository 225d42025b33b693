"""Table of max N_sigma over W_{n,r} against the closed form, with witnesses."""

import argparse
import time

from krstrata.reports import perm0_bijection_check, prank0_dimension


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--perm0", type=int, default=5, help="also run the Perm^(0) check up to this n")
    args = ap.parse_args()
    print(f"{'n':>3} {'r':>3} {'max N':>6} {'closed':>7}  witness")
    for n in range(2, args.max_n + 1):
        for r in range(1, n):
            res = prank0_dimension(n, r)
            flag = "" if res.consistent else "  MISMATCH"
            print(f"{n:>3} {r:>3} {res.dimension:>6} {res.closed_form:>7}  {list(res.witness)}{flag}")
    for n in range(2, args.perm0 + 1):
        for r in range(1, n):
            t0 = time.perf_counter()
            rep = perm0_bijection_check(n, r)
            status = "ok" if rep.ok else "; ".join(rep.problems)
            print(f"perm0 n={n} r={r}: |Perm0|={rep.size} |W|={rep.wnr_size} max l={rep.max_length} "
                  f"{status} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
