"""Print the inert Hilbert-Blumenthal stratum table for a range of g."""

import argparse

from krstrata.bruhat import word_label
from krstrata.reports import hb_report
from krstrata.weyl import GSp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--strata", action="store_true", help="also list every stratum")
    args = ap.parse_args()
    flavor = GSp(1)
    for g in args.g:
        rep = hb_report(g)
        print(f"g={g}: {len(rep.strata)} strata, p-ranks {rep.prank_values}")
        print(f"  ordinary: {len(rep.ordinary)}  maximal: {len(rep.maximal)} of length {rep.maximal_lengths}")
        print(f"  p-rank 0 covered by other maxima: {rep.prank0_covered}")
        print(f"  closure intersection: {[str(t) for t in rep.intersection]}")
        if args.strata:
            for s in rep.strata:
                words = ", ".join(word_label(x, flavor) for x in s.index)
                print(f"    ({words})  l={s.length} p={s.prank}{'  max' if s.is_maximal else ''}")


if __name__ == "__main__":
    main()
