"""Brute-force enumerators used to cross-check transform results.

Each counter builds the objects (or walks the lattice) directly and shares
no code with the transform machinery.  Size limits are hard; asking for
more raises instead of silently truncating.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from belltransform.errors import DomainError

LIMITS = {
    "rational_dyck": 12,
    "factor_free": 3,
    "sif_perms": 7,
    "indecomposable_perms": 8,
    "av_perms": 8,
    "set_partitions": 10,
    "noncrossing_partitions": 10,
    "compositions_colored": 10,
    "r_fold_convolution": 12,
}


def _bound(kind: str, n: int) -> None:
    if n < 1:
        raise DomainError(f"{kind}: n must be positive, got {n}")
    if n > LIMITS[kind]:
        raise DomainError(f"{kind}: n={n} exceeds the brute-force limit {LIMITS[kind]}")


def rational_dyck(alpha: int, beta: int, n: int, strict: bool = False) -> int:
    """Lattice paths (0,0) -> (alpha n, beta n) with unit east/north steps
    staying weakly (or, with ``strict``, strictly except at the endpoints)
    below the line ``alpha y = beta x``."""
    _bound("rational_dyck", n)
    W, H = alpha * n, beta * n

    def allowed(x: int, y: int) -> bool:
        h = beta * x - alpha * y
        if strict and (x, y) not in ((0, 0), (W, H)):
            return h > 0
        return h >= 0

    ways = [[0] * (H + 1) for _ in range(W + 1)]
    ways[0][0] = 1
    for x in range(W + 1):
        for y in range(H + 1):
            if (x, y) == (0, 0) or not allowed(x, y):
                continue
            ways[x][y] = (ways[x - 1][y] if x else 0) + (ways[x][y - 1] if y else 0)
    return ways[W][H]


def _in_language(word: Sequence[int]) -> bool:
    height = 0
    for step in word:
        height += step
        if height < 0:
            return False
    return height == 0


def factor_free_words(alpha: int, beta: int, n: int) -> int:
    """Words of the rational Dyck language of size ``n`` with no proper
    nonempty factor in the language (letter east = +beta, north = -alpha)."""
    _bound("factor_free", n)
    L = (alpha + beta) * n
    count = 0
    for east in combinations(range(L), alpha * n):
        east = set(east)
        word = [beta if i in east else -alpha for i in range(L)]
        if not _in_language(word):
            continue
        proper = any(
            _in_language(word[i:j])
            for i in range(L)
            for j in range(i + 1, L + 1)
            if (i, j) != (0, L)
        )
        if not proper:
            count += 1
    return count


def _stabilizes(perm: Sequence[int], lo: int, hi: int) -> bool:
    return sorted(perm[lo:hi]) == list(range(lo, hi))


def sif_perms(n: int) -> int:
    """Permutations of [n] that map no proper subinterval onto itself."""
    _bound("sif_perms", n)
    count = 0
    for perm in permutations(range(n)):
        if not any(
            _stabilizes(perm, lo, hi)
            for lo in range(n)
            for hi in range(lo + 1, n + 1)
            if (lo, hi) != (0, n)
        ):
            count += 1
    return count


def indecomposable_perms(n: int) -> int:
    """Permutations of [n] with no proper prefix [1..j] mapped onto itself."""
    _bound("indecomposable_perms", n)
    count = 0
    for perm in permutations(range(n)):
        top = -1
        for j, v in enumerate(perm[:-1]):
            top = max(top, v)
            if top == j:
                break
        else:
            count += 1
    return count


def _standardize(values: Sequence[int]) -> tuple:
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def contains(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """Classical containment by testing every subsequence."""
    pattern = tuple(pattern)
    return any(
        _standardize(sub) == pattern for sub in combinations(perm, len(pattern))
    )


def _parse_pattern(p) -> tuple:
    if isinstance(p, str):
        return tuple(int(ch) for ch in p)
    return tuple(p)


def av_perms(patterns: Iterable, n: int, indecomposable: bool = False) -> int:
    """Permutations of [n] avoiding every pattern in ``patterns``."""
    _bound("av_perms", n)
    patterns = [_parse_pattern(p) for p in patterns]
    count = 0
    for perm in permutations(range(1, n + 1)):
        if indecomposable and any(max(perm[: j + 1]) == j + 1 for j in range(n - 1)):
            continue
        if not any(contains(perm, pat) for pat in patterns):
            count += 1
    return count


def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    def grow(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    yield from grow([0], 0) if n else iter([[]])


def set_partitions(n: int) -> int:
    _bound("set_partitions", n)
    return sum(1 for _ in _set_partitions(n))


def _is_noncrossing(rgs: Sequence[int]) -> bool:
    n = len(rgs)
    for i, j, k, l in combinations(range(n), 4):
        if rgs[i] == rgs[k] and rgs[j] == rgs[l] and rgs[i] != rgs[j]:
            return False
    return True


def noncrossing_partitions(n: int, blocks: int = None) -> int:
    """Noncrossing set partitions of [n], optionally with a fixed block count."""
    _bound("noncrossing_partitions", n)
    count = 0
    for rgs in _set_partitions(n):
        if blocks is not None and max(rgs) + 1 != blocks:
            continue
        if _is_noncrossing(rgs):
            count += 1
    return count


def compositions_colored(x: Sequence[int], n: int, parts: int = None) -> int:
    """Compositions of n where a part of size j comes in ``x_j`` colors."""
    _bound("compositions_colored", n)
    total = 0
    for cuts in product((0, 1), repeat=n - 1):
        sizes, run = [], 1
        for c in cuts:
            if c:
                sizes.append(run)
                run = 1
            else:
                run += 1
        sizes.append(run)
        if parts is not None and len(sizes) != parts:
            continue
        weight = 1
        for s in sizes:
            weight *= x[s - 1]
        total += weight
    return total


def r_fold_convolution(seq0: Sequence, r: int, n: int) -> Fraction:
    """``sum_{m_1 + ... + m_r = n} s_{m_1} ... s_{m_r}`` with ``seq0[0] = s_0``."""
    _bound("r_fold_convolution", n)
    total = Fraction(0)
    for ms in product(range(n + 1), repeat=r):
        if sum(ms) != n:
            continue
        term = Fraction(1)
        for m in ms:
            term *= seq0[m]
        total += term
    return total


ORACLES = {
    "rational_dyck": rational_dyck,
    "factor_free": factor_free_words,
    "sif_perms": sif_perms,
    "indecomposable_perms": indecomposable_perms,
    "av_perms": av_perms,
    "set_partitions": set_partitions,
    "noncrossing_partitions": noncrossing_partitions,
    "compositions_colored": compositions_colored,
}


def oracle_count(kind: str, n: int, **params) -> int:
    """Dispatch to a brute-force counter by name."""
    if kind not in ORACLES:
        raise DomainError(f"unknown oracle {kind!r}; choose from {sorted(ORACLES)}")
    return ORACLES[kind](n=n, **params)
