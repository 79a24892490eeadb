"""Recover the five transform relations among the bicubic-map and Av(2413) family.

By default the search runs on catalog prefixes.  With ``--brute N`` the two
Av(2413, 3412) sequences are replaced by brute-force permutation counts.
"""
import argparse

from belltransform.discovery import reproduce_paper_diagram
from belltransform.oracles import av_perms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=12, help="prefix length")
    ap.add_argument("--brute", type=int, default=0, metavar="N",
                    help="use brute-force Av(2413,3412) counts up to N (at most 8)")
    args = ap.parse_args()

    overrides = None
    n = args.n
    if args.brute:
        pats = ["2413", "3412"]
        overrides = {
            "av_2413_3412": [av_perms(pats, k) for k in range(1, args.brute + 1)],
            "av_ind_2413_3412": [av_perms(pats, k, indecomposable=True)
                                 for k in range(1, args.brute + 1)],
        }
        n = min(n, args.brute)
    for h in reproduce_paper_diagram(N=n, overrides=overrides):
        print(h.describe())


if __name__ == "__main__":
    main()
