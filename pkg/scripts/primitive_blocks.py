"""Inverse transforms as primitive-structure counters, checked against brute force.

Each row inverts a known sequence and compares the result with a direct
enumeration of the primitive objects.
"""
from math import factorial

from belltransform.catalog import default_catalog
from belltransform.oracles import av_perms, indecomposable_perms, sif_perms
from belltransform.transform import bell_inverse


def row(label, got, want):
    ok = "ok" if tuple(got) == tuple(want) else "MISMATCH"
    print(f"{label:<36} {','.join(map(str, got)):<40} {ok}")


def main():
    cat = default_catalog()
    facts = [factorial(n) for n in range(1, 8)]
    row("SIF permutations", bell_inverse((1, 0, -1, 1), facts[:6]),
        [sif_perms(n) for n in range(1, 7)])
    row("indecomposable permutations", bell_inverse((0, 1, -1, 1), facts),
        [indecomposable_perms(n) for n in range(1, 8)])
    av = [av_perms(["2413"], n) for n in range(1, 8)]
    row("indecomposable Av(2413)", bell_inverse((0, 1, -1, 1), av),
        [av_perms(["2413"], n, indecomposable=True) for n in range(1, 8)])
    av2 = [av_perms(["2413", "3412"], n) for n in range(1, 8)]
    row("indecomposable Av(2413,3412)", bell_inverse((0, 1, -1, 1), av2),
        [av_perms(["2413", "3412"], n, indecomposable=True) for n in range(1, 8)])
    large = cat.get_prefix("large_schroeder", 7)
    for pair in (["4321", "4312"], ["3142", "2413"]):
        row(f"indecomposable Av({','.join(pair)})", bell_inverse((0, 1, -1, 1), large),
            [av_perms(pair, n, indecomposable=True) for n in range(1, 8)])
    bell = cat.get_prefix("bell_numbers", 8)
    row("irreducible set partitions", bell_inverse((0, 1, -1, 1), bell),
        cat.get_prefix("A074664", 8))


if __name__ == "__main__":
    main()
