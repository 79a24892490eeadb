"""Rational Dyck paths: path counts, primitive paths and factor-free words.

For each slope the lattice-path counts are rebuilt from their primitive
pieces through the invert transform and from Bizley's blocks through exp.
"""
import argparse

from belltransform.catalog import bizley_blocks
from belltransform.oracles import factor_free_words, rational_dyck
from belltransform.transform import bell_inverse, bell_transform


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--slopes", default="1:1,1:2,2:3,3:4", help="alpha:beta pairs")
    args = ap.parse_args()
    for pair in args.slopes.split(","):
        alpha, beta = (int(v) for v in pair.split(":"))
        phi = tuple(rational_dyck(alpha, beta, k) for k in range(1, args.n + 1))
        psi = tuple(rational_dyck(alpha, beta, k, strict=True) for k in range(1, args.n + 1))
        f = tuple(bizley_blocks(alpha, beta)(j) for j in range(1, args.n + 1))
        theta = bell_inverse((alpha + beta, 0, -1, 1), phi)
        print(f"alpha={alpha} beta={beta}")
        print(f"  paths            {list(map(str, phi))}")
        print(f"  primitive paths  {list(map(str, psi))}")
        print(f"  invert route ok  {bell_transform((0, 1, -1, 1), psi) == phi}")
        print(f"  exp route ok     {bell_transform((0, 0, 0, 1), f) == phi}")
        print(f"  theta            {list(map(str, theta))}")
        small = min(args.n, 3)
        print(f"  factor-free      {[factor_free_words(alpha, beta, k) for k in range(1, small + 1)]}")


if __name__ == "__main__":
    main()
