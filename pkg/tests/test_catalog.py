from fractions import Fraction
from math import factorial

import pytest

from belltransform.catalog import (
    PinnedRecord,
    bell_numbers,
    bizley_blocks,
    default_catalog,
    get_prefix,
    load_pinned,
    parse_record,
    parse_records,
    primes,
)
from belltransform.errors import DataError, DomainError, LengthError
from belltransform.oracles import (
    LIMITS,
    av_perms,
    compositions_colored,
    contains,
    factor_free_words,
    indecomposable_perms,
    noncrossing_partitions,
    oracle_count,
    rational_dyck,
    set_partitions,
    sif_perms,
)
from belltransform.transform import bell_inverse, bell_transform

CAT = default_catalog()
A298358_PRINTED = (1, 0, 0, 1, 0, 3, 7, 15, 63, 168, 561, 1881, 6110, 21087)


# registry


def test_spec_prefixes():
    assert get_prefix("catalan", 5) == (1, 2, 5, 14, 42)
    assert get_prefix("A000257", 6) == (1, 3, 12, 56, 288, 1584)
    assert get_prefix("A298358", 14) == A298358_PRINTED


def test_minimum_entries_registered():
    for key in ["ones", "factorials", "catalan", "fuss_catalan_2", "fuss_catalan_3",
                "little_schroeder", "large_schroeder", "A000257", "A000168", "A000139",
                "A069728", "A298358", "A003319", "A075834", "A022558", "A001519",
                "bell_numbers", "bizley(2,3)", "fuss_catalan(4)"]:
        assert key in CAT, key
    assert "no_such_key" not in CAT
    with pytest.raises(DomainError):
        CAT.entry("no_such_key")


def test_pinned_have_provenance():
    for rec in load_pinned().values():
        assert rec.provenance.strip()
        assert rec.terms
    for key in CAT.keys():
        e = CAT.entry(key)
        if e.pinned is not None:
            assert e.provenance.strip(), key


def test_pinned_formulas():
    # A000139(n) = 2 (3n)! / ((2n+1)! (n+1)!), offset 0
    b = CAT.get_prefix("A000139", 14)
    assert b == tuple(Fraction(2 * factorial(3 * n), factorial(2 * n + 1) * factorial(n + 1))
                      for n in range(14))
    # A000168(n) = 2 3^n (2n)! / (n! (n+2)!), listed from n = 1
    a = CAT.get_prefix("A000168", 14)
    assert a == tuple(Fraction(2 * 3 ** n * factorial(2 * n), factorial(n) * factorial(n + 2))
                      for n in range(1, 15))
    # large Schroeder numbers are twice the little ones after the first term
    large = CAT.get_prefix("large_schroeder", 10)
    little = CAT.get_prefix("little_schroeder", 11)
    assert large[0] == 1 and little[:2] == (1, 1)
    assert large[1:] == tuple(2 * v for v in little[1:10])


def test_transform_entries_match_pinned():
    assert CAT.get_prefix("A298358", 14) == CAT.entry("A298358").pinned
    f = CAT.get_prefix("A000257", 14)
    assert bell_transform((-3, 0, -1, 1), f) == A298358_PRINTED
    # the generated A022558 route agrees with the pinned prefix
    pinned = CAT.entry("A022558").pinned
    assert CAT.get_prefix("av_2413", len(pinned)) == pinned


def test_pinned_only_refuses_long_prefix():
    with pytest.raises(LengthError):
        CAT.get_prefix("A000168", 40)
    with pytest.raises(DomainError):
        CAT.get_prefix("catalan", 0)
    assert CAT.capacity("A000168") == 14
    assert CAT.capacity("catalan") is None


def test_little_schroeder_and_fuss():
    assert CAT.get_prefix("little_schroeder", 8) == (1, 1, 3, 11, 45, 197, 903, 4279)
    assert CAT.get_prefix("fuss_catalan_2", 5) == (1, 3, 12, 55, 273)
    assert CAT.get_prefix("fuss_catalan(3)", 3) == CAT.get_prefix("fuss_catalan_3", 3)


def test_generators():
    assert bell_numbers(7) == (1, 2, 5, 15, 52, 203, 877)
    assert primes(8) == (2, 3, 5, 7, 11, 13, 17, 19)
    assert CAT.get_prefix("A001519", 6) == (1, 2, 5, 13, 34, 89)
    assert CAT.get_prefix("A069728", 10) == (1, 1, 1, 2, 6, 19, 64, 230, 865, 3364)


def test_record_round_trip(tmp_path):
    rec = PinnedRecord("k", "A000001", 0, (Fraction(1), Fraction(-2, 3)), "typed by hand")
    line = rec.render()
    assert line == "k\tA000001\t0\t1,-2/3\ttyped by hand"
    assert parse_record(line) == rec
    with pytest.raises(DataError):
        parse_record("k\tA1\t0\t1,2")
    with pytest.raises(DataError):
        parse_record("k\tA1\tx\t1,2\tp")
    with pytest.raises(DataError):
        parse_record("k\tA1\t0\t1,2/0\tp")
    with pytest.raises(DataError):
        parse_record("k\tA1\t0\t1\t ")
    text = "# comment\n\n" + line + "\n"
    assert parse_records(text) == {"k": rec}


# oracles


def test_oracle_examples():
    assert rational_dyck(2, 3, 1) == 2 == bizley_blocks(2, 3)(1)
    assert noncrossing_partitions(4) == 14
    assert [set_partitions(n) for n in range(1, 8)] == list(bell_numbers(7))
    assert [rational_dyck(1, 1, n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert compositions_colored((1, 1, 1, 1), 4) == 8
    assert compositions_colored((1, 1, 1), 3, parts=2) == 2
    assert contains((3, 1, 4, 2), (2, 4, 1, 3)) is False
    assert contains((2, 4, 1, 3), (2, 4, 1, 3)) is True
    assert oracle_count("sif_perms", 4) == sif_perms(4)


def test_oracle_bounds():
    for kind, limit in LIMITS.items():
        if kind in ("r_fold_convolution",):
            continue
        kw = {"rational_dyck": {"alpha": 1, "beta": 1}, "factor_free": {"alpha": 1, "beta": 1},
              "av_perms": {"patterns": ["12"]}, "compositions_colored": {"x": [1] * 20}}
        with pytest.raises(DomainError):
            oracle_count(kind, limit + 1, **kw.get(kind, {}))
    with pytest.raises(DomainError):
        oracle_count("unknown", 3)


def test_compositions_match_invert_slices():
    x = (2, 1, 3, 1, 2, 1)
    y = bell_transform((0, 1, -1, 1), x)
    for n in range(1, 7):
        assert y[n - 1] == compositions_colored(x, n)


# applications


@pytest.mark.parametrize("alpha,beta", [(1, 1), (2, 3), (1, 2)])
def test_rational_dyck_routes(alpha, beta):
    n = 4
    phi = tuple(rational_dyck(alpha, beta, k) for k in range(1, n + 1))
    psi = tuple(rational_dyck(alpha, beta, k, strict=True) for k in range(1, n + 1))
    assert bell_transform((0, 1, -1, 1), psi) == phi
    assert CAT.get_prefix(f"bizley({alpha},{beta})", n) == phi


def test_rational_dyck_23_values():
    assert [rational_dyck(2, 3, n) for n in range(1, 5)] == [2, 23, 377, 7229]
    assert [rational_dyck(2, 3, n, strict=True) for n in range(1, 5)] == [2, 19, 293, 5452]


@pytest.mark.parametrize("alpha,beta", [(2, 3), (1, 1), (1, 2)])
def test_duchon_theta(alpha, beta):
    phi = tuple(rational_dyck(alpha, beta, k) for k in range(1, 7))
    theta = bell_inverse((alpha + beta, 0, -1, 1), phi)
    assert all(t.denominator == 1 and t >= 0 for t in theta)
    assert theta[:3] == tuple(factor_free_words(alpha, beta, n) for n in range(1, 4))


def test_duchon_theta_values():
    assert [factor_free_words(2, 3, n) for n in range(1, 4)] == [2, 3, 7]
    assert [factor_free_words(1, 1, n) for n in range(1, 4)] == [1, 0, 0]


def test_permutation_inverses():
    facts = CAT.get_prefix("factorials", 7)
    sif = bell_inverse((1, 0, -1, 1), facts[:6])
    assert sif == tuple(sif_perms(n) for n in range(1, 7))
    ind = bell_inverse((0, 1, -1, 1), facts)
    assert ind == tuple(indecomposable_perms(n) for n in range(1, 8))
    assert CAT.get_prefix("A075834", 6) == sif
    assert CAT.get_prefix("A003319", 7) == ind


def test_av_2413_indecomposable():
    counts = tuple(av_perms(["2413"], n) for n in range(1, 8))
    assert counts == (1, 2, 6, 23, 103, 512, 2740)
    assert counts == CAT.entry("A022558").pinned[:7]
    ind = bell_inverse((0, 1, -1, 1), counts)
    f = CAT.get_prefix("A000257", 6)
    assert ind == (1,) + f
    assert ind == tuple(av_perms(["2413"], n, indecomposable=True) for n in range(1, 8))


def test_av_2413_3412_route():
    counts = tuple(av_perms(["2413", "3412"], n) for n in range(1, 8))
    assert CAT.get_prefix("av_2413_3412", 7) == counts
    assert CAT.get_prefix("av_ind_2413_3412", 6) == tuple(
        av_perms(["2413", "3412"], n, indecomposable=True) for n in range(1, 7))


def test_a001519_indecomposable_powers_of_two():
    ind = bell_inverse((0, 1, -1, 1), CAT.get_prefix("A001519", 8))
    assert ind[0] == 1
    assert ind[1:] == tuple(2 ** (n - 2) for n in range(2, 9))
    counts = tuple(av_perms(["321", "3412"], n) for n in range(1, 7))
    assert counts == CAT.get_prefix("A001519", 6)


def test_kremer_pairs():
    large = CAT.get_prefix("large_schroeder", 10)
    ind = bell_inverse((0, 1, -1, 1), large)
    assert ind == CAT.get_prefix("little_schroeder", 10)
    # two of the sum-closed Kremer classes, checked by brute force
    for pair in (["4321", "4312"], ["3142", "2413"]):
        assert tuple(av_perms(pair, n) for n in range(1, 7)) == large[:6]
        assert tuple(av_perms(pair, n, indecomposable=True) for n in range(1, 7)) == ind[:6]
    # a class that is not sum-closed has the same counts, but the relation fails
    assert tuple(av_perms(["1234", "2134"], n) for n in range(1, 7)) == large[:6]
    assert av_perms(["1234", "2134"], 4, indecomposable=True) == 13 != ind[3]


def _irreducible(rgs):
    # no proper prefix [1..j] is a union of blocks
    n = len(rgs)
    for j in range(1, n):
        if not set(rgs[:j]) & set(rgs[j:]):
            return False
    return True


def _rgs(n):
    def grow(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))
    yield from grow([0], 0)


def test_bell_number_routes():
    b = CAT.get_prefix("bell_numbers", 8)
    assert bell_transform((1, 0, -1, 1), CAT.get_prefix("A099947", 8)) == b
    assert bell_transform((0, 1, -1, 1), CAT.get_prefix("A074664", 8)) == b
    irr = tuple(sum(1 for r in _rgs(n) if _irreducible(r)) for n in range(1, 8))
    assert CAT.get_prefix("A074664", 7) == irr
    assert all(v.denominator == 1 and v >= 0 for v in CAT.get_prefix("A099947", 8))
