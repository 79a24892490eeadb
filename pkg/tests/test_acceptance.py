"""Acceptance suite: thirteen criteria, all exact.

Run under pytest (the PASS/FAIL lines appear in the terminal summary) or
directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
from fractions import Fraction
from math import comb, factorial

import pytest

from belltransform.bell_core import (
    BellTable,
    a000257_term,
    closed_form_f_bell,
    factorial_weight,
)
from belltransform.catalog import bizley_blocks, default_catalog
from belltransform.discovery import VERIFIED, reproduce_paper_diagram
from belltransform.identities import (
    ALGEBRAIC,
    ab_recurrence,
    av_2413_3412_transform_route,
    check_algebraic_gf,
    check_appendix_interp,
    check_gf,
    check_interpolation,
    convolve_bell,
    gf_case,
)
from belltransform.oracles import (
    av_perms,
    indecomposable_perms,
    r_fold_convolution,
    rational_dyck,
    sif_perms,
)
from belltransform.transform import I, L, BellParams, apply_word, bell_inverse, bell_transform

RESULTS = []


def q(rng, lo=-4, hi=4, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def xs(rng, n):
    return tuple(q(rng) for _ in range(n))


def first_mismatch(got, want):
    for i, (g, w) in enumerate(zip(got, want), 1):
        if g != w:
            return f"index {i}: got {g}, expected {w}"
    if len(got) != len(want):
        return f"length {len(got)} vs {len(want)}"
    return None


def c1():
    got = bell_transform((1, 0, -1, 1), (1,) * 8)
    want = tuple(Fraction(comb(2 * n, n), n + 1) for n in range(1, 9))
    assert want == (1, 2, 5, 14, 42, 132, 429, 1430)
    bad = first_mismatch(got, want)
    return bad is None, bad or "Y[1,0,-1,1](ones) = 1,2,5,14,42,132,429,1430"


def c2():
    got = bell_transform((1, 0, 1, 1), (1,) * 8)
    bad = first_mismatch(got, (1, 3, 11, 45, 197, 903, 4279, 20793))
    return bad is None, bad or "Y[1,0,1,1](ones) = 1,3,11,45,197,903,4279,20793"


def c3():
    for m in (1, 2, 3):
        got = bell_transform((m, 0, -1, 1), (1,) * 8)
        want = tuple(Fraction(comb((m + 1) * n, n), m * n + 1) for n in range(1, 9))
        bad = first_mismatch(got, want)
        if bad:
            return False, f"T_{m}: {bad}"
    rng = random.Random(3)
    for trial in range(20):
        m, m2 = rng.randint(-3, 3), rng.randint(-3, 3)
        x = xs(rng, 8)
        lhs = bell_transform((m2, 0, -1, 1), bell_transform((m, 0, -1, 1), x))
        bad = first_mismatch(lhs, bell_transform((m + m2, 0, -1, 1), x))
        if bad:
            return False, f"semigroup m={m}, m'={m2}: {bad}"
    return True, "Fuss-Catalan for m=1,2,3 and 20 random semigroup checks"


def c4():
    rng = random.Random(4)
    zero_c = 0
    for trial in range(50):
        a, b, d = (q(rng, -3, 3, 2) for _ in range(3))
        c = Fraction(0) if trial % 3 == 0 else Fraction(rng.choice((-3, -2, -1, 1, 2, 3)),
                                                        rng.choice((1, 2)))
        zero_c += c == 0
        p, x = BellParams(a, b, c, d), xs(rng, 8)
        bad = first_mismatch(bell_inverse(p, bell_transform(p, x)), x)
        if bad:
            return False, f"trial {trial} {p}: {bad}"
    return True, f"50 round trips at N=8 ({zero_c} with c=0)"


def c5():
    rng = random.Random(5)
    for trial in range(30):
        c = Fraction(rng.choice((-2, -1, 1, 2, 3)), rng.choice((1, 2)))
        p = BellParams(q(rng), q(rng), c, q(rng))
        n = rng.randint(1, 6)
        rep = check_interpolation(p, xs(rng, n), q(rng, -6, 6), n, seed=trial)
        if not rep:
            return False, rep.summary()
    for kind in ("lemma", "minus1", "gamma"):
        for trial in range(30):
            n = rng.randint(1, 6)
            gamma = (q(rng, 1, 4) * rng.choice((-1, 1))) if kind == "gamma" else None
            rep = check_appendix_interp(kind, q(rng), q(rng), xs(rng, n), q(rng, -6, 6), n,
                                        gamma=gamma, seed=trial)
            if not rep:
                return False, rep.summary()
    return True, "interpolation 30 random cases, appendix lemma and propositions 30 each"


GF_INSTANCES = {
    "invert": (0, 1, -1, 1),
    "invert(3)": (0, 0, 3, 3),
    "exp": (0, 0, 0, 1),
    "ncp(2)": (2, 0, -1, 1),
    "conv(3)": (0, 0, -1, 3),
    "dissection": (1, 0, 1, 1),
    "case ii": (2, 1, 0, -1),
    "case iii": (1, 2, -1, 0),
    "case iv": (1, 1, 0, 0),
}


def c6():
    rng = random.Random(6)
    for name, p in GF_INSTANCES.items():
        for x in ((1,) * 12, xs(rng, 12)):
            rep = check_gf(p, x, 12)
            if not rep:
                return False, f"{name}: {rep.summary()}"
    cases = {gf_case(p) for p in GF_INSTANCES.values()}
    if cases != {"i", "ii", "iii", "iv"}:
        return False, f"cases covered: {sorted(cases)}"
    # revert = R o Y[1,0,1,1] o I o L, so the equation is checked on I(L(a))
    a = (Fraction(1),) + xs(rng, 12)
    rep = check_gf((1, 0, 1, 1), apply_word([I, L], a), 12)
    if not rep:
        return False, f"revert: {rep.summary()}"
    cat = default_catalog()
    b, m = cat.get_prefix("A000139", 14), cat.get_prefix("A000168", 14)
    rep = check_gf((2, 0, -1, 1), b, 14, y=m)
    if not rep:
        return False, f"Tutte: {rep.summary()}"
    return True, "all four cases on named instances, revert, and Tutte at N=14"


def c7():
    rng = random.Random(7)
    for p in [(1, 0, -1, 1), (0, 1, -1, 1), (2, -1, 1, 3), (-1, 2, 1, Fraction(1, 2))]:
        x = xs(rng, 8)
        yhat = (Fraction(1),) + tuple(Fraction(p[3]) * v for v in bell_transform(p, x))
        for r in range(1, 5):
            got = convolve_bell(p, x, r, 8)
            want = tuple(r_fold_convolution(yhat, r, n) for n in range(1, 9))
            bad = first_mismatch(got, want)
            if bad:
                return False, f"convolution p={p} r={r}: {bad}"
    for a in range(4):
        for b in range(4):
            if a == b == 0:
                continue
            for x in ((1,) * 10, xs(rng, 10)):
                bad = first_mismatch(ab_recurrence(a, b, x), bell_transform((a, b, -1, 1), x))
                if bad:
                    return False, f"recurrence a={a} b={b}: {bad}"
    return True, "convolution r<=4 n<=8 and (a,b) recurrence for 15 pairs at n<=10"


def c8():
    f = tuple(a000257_term(j) for j in range(1, 15))
    got = bell_transform((-3, 0, -1, 1), f)
    bad = first_mismatch(got, (1, 0, 0, 1, 0, 3, 7, 15, 63, 168, 561, 1881, 6110, 21087))
    return bad is None, bad or "Y[-3,0,-1,1](f) = 1,0,0,1,0,3,7,15,63,168,561,1881,6110,21087"


def c9():
    facts = tuple(factorial(n) for n in range(1, 8))
    bad = first_mismatch(bell_inverse((1, 0, -1, 1), facts[:6]),
                         tuple(sif_perms(n) for n in range(1, 7)))
    if bad:
        return False, f"SIF: {bad}"
    bad = first_mismatch(bell_inverse((0, 1, -1, 1), facts),
                         tuple(indecomposable_perms(n) for n in range(1, 8)))
    if bad:
        return False, f"indecomposable: {bad}"
    av = tuple(av_perms(["2413"], n) for n in range(1, 8))
    f = tuple(a000257_term(j) for j in range(1, 7))
    bad = first_mismatch(bell_inverse((0, 1, -1, 1), av), (1,) + f)
    if bad:
        return False, f"Av(2413): {bad}"
    return True, "SIF n<=6, indecomposable n<=7, Av(2413) indecomposables n<=7"


def c10():
    counts = tuple(av_perms(["2413", "3412"], n) for n in range(1, 8))
    bad = first_mismatch(counts, av_2413_3412_transform_route(7))
    if bad:
        return False, f"dual route: {bad}"
    for name in ALGEBRAIC:
        rep = check_algebraic_gf(name, 12)
        if not rep:
            return False, rep.summary()
    return True, f"brute force n<=7 matches transform route; {len(ALGEBRAIC)} equations to order 12"


def c11():
    alpha, beta, n = 2, 3, 3
    phi = tuple(rational_dyck(alpha, beta, k) for k in range(1, n + 1))
    psi = tuple(rational_dyck(alpha, beta, k, strict=True) for k in range(1, n + 1))
    bad = first_mismatch(bell_transform((0, 1, -1, 1), psi), phi)
    if bad:
        return False, f"invert of psi: {bad}"
    f = tuple(bizley_blocks(alpha, beta)(j) for j in range(1, n + 1))
    bad = first_mismatch(bell_transform((0, 0, 0, 1), f), phi)
    if bad:
        return False, f"exp of Bizley f: {bad}"
    return True, f"lattice paths {','.join(map(str, phi))} via invert and exp routes"


def c12():
    f = tuple(a000257_term(j) for j in range(1, 9))
    t = BellTable(factorial_weight(f), 8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            want = Fraction(factorial(k), factorial(n)) * t(n, k)
            if closed_form_f_bell(n, k) != want:
                return False, f"(n,k)=({n},{k}): got {closed_form_f_bell(n, k)}, expected {want}"
    return True, "closed form equals k!/n! B_{n,k}(!f) for all n<=8"


def c13():
    hyps = reproduce_paper_diagram()
    if len(hyps) != 5:
        return False, f"{len(hyps)} edges"
    for h in hyps:
        if h.status != VERIFIED or h.matched < 8:
            return False, f"{h.source} -> {h.target}: {h.status} on {h.matched} terms"
    return True, "; ".join(f"{h.source} -> {h.target} by {h.word.encode()}" for h in hyps)


CRITERIA = [
    (1, "Catalan", c1),
    (2, "little Schroeder", c2),
    (3, "Fuss-Catalan and semigroup", c3),
    (4, "inverse round trip", c4),
    (5, "interpolation", c5),
    (6, "generating-function equations", c6),
    (7, "convolution and recurrence", c7),
    (8, "A298358 reproduction", c8),
    (9, "permutation oracles", c9),
    (10, "Av(2413,3412) dual route", c10),
    (11, "rational Dyck paths", c11),
    (12, "closed form", c12),
    (13, "discovery diagram", c13),
]


def run_one(num, title, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported with its type
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}: {detail}"
    print(line)
    RESULTS.append(line)
    return ok, line


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    ok, line = run_one(num, title, fn)
    assert ok, line


if __name__ == "__main__":
    outcomes = [run_one(*c)[0] for c in CRITERIA]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria passed")
    sys.exit(0 if all(outcomes) else 1)
