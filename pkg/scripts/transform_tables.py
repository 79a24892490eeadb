"""Print the named transforms applied to a few standard inputs."""
import argparse

from belltransform.catalog import default_catalog
from belltransform.transform import named_transform

ROWS = [("invert", 1), ("invert", 2), ("exp", None), ("conv", 2), ("ncp", 1), ("ncp", 2),
        ("dissection", None), ("revert", None), ("binomial", 1)]


def fmt(seq):
    return ",".join(str(v) for v in seq)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--inputs", default="ones,factorials,catalan",
                    help="comma separated catalog keys")
    args = ap.parse_args()
    cat = default_catalog()
    for key in args.inputs.split(","):
        x = cat.get_prefix(key, args.n)
        print(f"# input {key}: {fmt(x)}")
        for name, m in ROWS:
            label = name if m is None else f"{name}({m})"
            print(f"{label:>14}  {fmt(named_transform(name, x, m))}")
        print()


if __name__ == "__main__":
    main()
