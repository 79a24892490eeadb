"""Partial Bell polynomials over exact rationals.

Sequences are plain tuples of :class:`~fractions.Fraction`.  They are
1-indexed in the mathematical sense: position ``i`` of the tuple holds
``z_{i+1}``.  Every function in this module is pure and exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

from belltransform.errors import DomainError, LengthError

Number = Union[int, Fraction, str]
Seq = tuple  # tuple[Fraction, ...]


def to_fraction(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q'")
    return Fraction(value)


def as_sequence(values: Iterable[Number]) -> Seq:
    """Freeze ``values`` into an immutable tuple of Fractions."""
    return tuple(to_fraction(v) for v in values)


def falling_factorial(r: Number, k: int) -> Fraction:
    """``(r)_k = r (r-1) ... (r-k+1)``; the empty product is 1."""
    r = to_fraction(r)
    out = Fraction(1)
    for j in range(k):
        out *= r - j
    return out


def binom(n: int, k: int) -> int:
    """Integer binomial that is 0 outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def factorial_weight(x: Sequence[Number]) -> Seq:
    """Return ``(1! x_1, 2! x_2, ..., N! x_N)``."""
    return tuple(factorial(i) * to_fraction(v) for i, v in enumerate(x, start=1))


class BellTable:
    """Triangle of partial Bell polynomials ``B_{n,k}(z)`` for ``n <= N``.

    Built once with the recurrence
    ``B_{n,k} = sum_i C(n-1, i-1) z_i B_{n-i,k-1}`` seeded by ``B_{0,0} = 1``,
    then read-only.  Row 0 and column 0 are kept so that the recurrence and
    the convolution identities can index them directly.
    """

    __slots__ = ("input", "N", "_rows")

    def __init__(self, z: Sequence[Number], N: int):
        z = as_sequence(z)
        if N < 0:
            raise DomainError(f"table order must be nonnegative, got {N}")
        if len(z) < N:
            raise LengthError(f"need {N} input terms, got {len(z)}")
        self.input = z[:N]
        self.N = N
        rows = [[Fraction(1)]]
        for n in range(1, N + 1):
            row = [Fraction(0)] * (n + 1)
            for k in range(1, n + 1):
                acc = Fraction(0)
                for i in range(1, n - k + 2):
                    prev = rows[n - i][k - 1] if k - 1 <= n - i else 0
                    if prev and z[i - 1]:
                        acc += comb(n - 1, i - 1) * z[i - 1] * prev
                row[k] = acc
            rows.append(row)
        self._rows = tuple(tuple(r) for r in rows)

    def __call__(self, n: int, k: int) -> Fraction:
        if not 0 <= n <= self.N:
            raise LengthError(f"row {n} outside table of order {self.N}")
        if not 0 <= k <= n:
            return Fraction(0)
        return self._rows[n][k]

    def row(self, n: int) -> tuple:
        """``(B_{n,1}, ..., B_{n,n})``."""
        return self._rows[n][1:]


@lru_cache(maxsize=512)
def _cached_table(z: tuple, N: int) -> BellTable:
    return BellTable(z, N)


def bell_table(z: Sequence[Number], N: int) -> BellTable:
    """Memoized :class:`BellTable` for the first ``N`` terms of ``z``."""
    z = as_sequence(z)
    if len(z) < N:
        raise LengthError(f"need {N} input terms, got {len(z)}")
    return _cached_table(z[:N], N)


def _check_nk(n: int, k: int, z: Sequence) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= n, got n={n}, k={k}")
    if len(z) < n - k + 1:
        raise LengthError(f"B_{{{n},{k}}} needs {n - k + 1} terms, got {len(z)}")


def partial_bell(n: int, k: int, z: Sequence[Number]) -> Fraction:
    """``B_{n,k}(z_1, ..., z_{n-k+1})`` via the triangular recurrence."""
    _check_nk(n, k, z)
    z = as_sequence(z)[: n - k + 1]
    # B_{n,k} ignores z_j for j > n-k+1, so zero padding is exact here.
    padded = z + (Fraction(0),) * (n - len(z))
    return bell_table(padded, n)(n, k)


def _partitions(n: int, k: int, largest: int):
    """Partitions of ``n`` into exactly ``k`` parts, each part <= ``largest``."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for part in range(min(largest, n - k + 1), 0, -1):
        if part * k < n:
            break
        for rest in _partitions(n - part, k - 1, part):
            yield (part,) + rest


def partial_bell_direct(n: int, k: int, z: Sequence[Number]) -> Fraction:
    """Explicit multi-index sum over ``pi(n, k)``.

    Exponential cost; only meant as an independent check on
    :func:`partial_bell`.
    """
    _check_nk(n, k, z)
    z = as_sequence(z)
    total = Fraction(0)
    for parts in _partitions(n, k, n):
        alpha: dict = {}
        for p in parts:
            alpha[p] = alpha.get(p, 0) + 1
        term = Fraction(factorial(n))
        for i, a in alpha.items():
            term *= (z[i - 1] / factorial(i)) ** a / factorial(a)
        total += term
    return total


def log_polynomial(n: int, g: Sequence[Number]) -> Fraction:
    """Logarithmic polynomial ``L_n(g) = sum_k (-1)^(k-1) (k-1)! B_{n,k}(g)``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if len(g) < n:
        raise LengthError(f"L_{n} needs {n} terms, got {len(g)}")
    table = bell_table(g, n)
    return sum(
        ((-1) ** (k - 1) * factorial(k - 1) * table(n, k) for k in range(1, n + 1)),
        Fraction(0),
    )


def potential_polynomial(n: int, r: Number, g: Sequence[Number]) -> Fraction:
    """Potential polynomial ``P_n^{(r)}(g) = sum_k (r)_k B_{n,k}(g)``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if len(g) < n:
        raise LengthError(f"P_{n} needs {n} terms, got {len(g)}")
    table = bell_table(g, n)
    return sum(
        (falling_factorial(r, k) * table(n, k) for k in range(1, n + 1)), Fraction(0)
    )


def faa_di_bruno_compose(f: Sequence[Number], g: Sequence[Number], N: int) -> Seq:
    """Exponential coefficients of ``f(g(t))`` up to ``t^N / N!``.

    ``f`` carries its constant term (``f_0, f_1, ...``), ``g`` does not
    (``g_1, g_2, ...``).  Returns ``(h_0, ..., h_N)``.
    """
    f = as_sequence(f)
    if len(f) < N + 1:
        raise LengthError(f"need f_0..f_{N}, got {len(f)} terms")
    table = bell_table(g, N)
    h = [f[0]]
    for n in range(1, N + 1):
        h.append(sum((f[k] * table(n, k) for k in range(1, n + 1)), Fraction(0)))
    return tuple(h)


def a000257_term(j: int) -> Fraction:
    """``3 (2j-1)! 2^j / ((j-1)! (j+2)!)`` for ``j >= 1``."""
    if j < 1:
        raise DomainError(f"j must be positive, got {j}")
    return Fraction(
        3 * factorial(2 * j - 1) * 2**j, factorial(j - 1) * factorial(j + 2)
    )


def _pow2(e: int) -> Fraction:
    return Fraction(2) ** e


def closed_form_f_bell(n: int, k: int) -> Fraction:
    """Closed form of ``(k!/n!) B_{n,k}(1! f_1, 2! f_2, ...)`` for the
    bicubic-map sequence ``f_j = 3 (2j-1)! 2^j / ((j-1)! (j+2)!)``.

    Three binomial summands; evaluated term by term without touching
    partial Bell polynomials.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    lead = _pow2(n + 1) * binom(2 * n - 1, n - k) * Fraction(k, n + k)

    single = Fraction(0)
    for i in range(k + 1):
        single += (-1) ** i * binom(2 * n + 2 * i - 1, n - 1) * binom(k - 1, k - i)
    single *= _pow2(n + 1 - 2 * k) * Fraction(k, n)

    triple = Fraction(0)
    for j in range(1, n):
        for i in range(1, k):
            for ell in range(i + 1):
                c = binom(i - 1, i - ell) * binom(2 * n - 2 * j - 1, n - j - k + i)
                if not c:
                    continue
                triple += (
                    (-1) ** ell
                    * _pow2(n + 1 - 2 * i)
                    * binom(k, i)
                    * c
                    * binom(2 * j + 2 * ell, j)
                    * Fraction(i * (k - i), (j + ell) * (n - j + k - i))
                )
    return lead + single + triple
