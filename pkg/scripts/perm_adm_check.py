"""Compare Perm with Adm(mu) and the two length functions on a window of data."""

import argparse
import time

from krstrata.alcove import PermDatum, enumerate_perm
from krstrata.bruhat import admissible_set, length_im, length_word
from krstrata.weyl import GL, GSp


def window(max_n_gsp, max_n_gl, max_e):
    for n in range(1, max_n_gsp + 1):
        for e in range(1, max_e + 1):
            yield PermDatum(GSp(n), e)
    for n in range(1, max_n_gl + 1):
        for e in range(1, max_e + 1):
            for r in range(n * e + 1):
                yield PermDatum(GL(n), e, r)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gsp", type=int, default=2, help="largest n for GSp_2n")
    ap.add_argument("--gl", type=int, default=4, help="largest n for GL_n")
    ap.add_argument("--e", type=int, default=2)
    args = ap.parse_args()
    bad = 0
    for d in window(args.gsp, args.gl, args.e):
        t0 = time.perf_counter()
        perm = enumerate_perm(d)
        adm = admissible_set(d.mu, d.flavor)
        lengths_ok = all(length_im(x, d.flavor) == length_word(x, d.flavor) for x in perm)
        same = perm == adm
        bad += not (same and lengths_ok)
        print(f"{d.flavor.kind}{d.flavor.rank} e={d.e} r={d.r}: |Perm|={len(perm)} |Adm|={len(adm)} "
              f"equal={same} lengths={lengths_ok} ({time.perf_counter() - t0:.2f}s)")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
