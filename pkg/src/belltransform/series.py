"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores ordinary coefficients ``c_0 .. c_N`` and is exact
up to and including ``t^N``.  Binary operations between series of
different orders truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from belltransform.bell_core import Number, as_sequence, bell_table, to_fraction
from belltransform.errors import (
    CompositionError,
    DomainError,
    NotInvertibleError,
    ShapeError,
)


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __init__(self, coeffs: Iterable[Number]):
        coeffs = as_sequence(coeffs)
        if not coeffs:
            raise DomainError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    # construction helpers

    @classmethod
    def zero(cls, N: int) -> "Series":
        return cls([0] * (N + 1))

    @classmethod
    def one(cls, N: int) -> "Series":
        return cls([1] + [0] * N)

    @classmethod
    def t(cls, N: int) -> "Series":
        """The series ``t`` truncated at order ``N``."""
        return cls.monomial(1, N)

    @classmethod
    def monomial(cls, power: int, N: int, coeff: Number = 1) -> "Series":
        c = [Fraction(0)] * (N + 1)
        if power <= N:
            c[power] = to_fraction(coeff)
        return cls(c)

    @classmethod
    def polynomial(cls, coeffs: Sequence[Number], N: int) -> "Series":
        """Polynomial ``sum coeffs[i] t^i`` truncated or zero-padded to order ``N``."""
        c = list(as_sequence(coeffs))[: N + 1]
        return cls(c + [Fraction(0)] * (N + 1 - len(c)))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i <= self.N:
            raise IndexError(f"coefficient {i} outside order {self.N}")
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t^{i}")
        body = " + ".join(terms) or "0"
        return f"Series({body} + O(t^{self.N + 1}))"

    def truncate(self, N: int) -> "Series":
        if N > self.N:
            raise DomainError(f"cannot extend a series of order {self.N} to {N}")
        return Series(self.coeffs[: N + 1])

    # ring operations

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series([other] + [0] * self.N)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.N, other.N)
        return Series(a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        N = min(self.N, other.N)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            if not a[i]:
                continue
            for j in range(N + 1 - i):
                if b[j]:
                    out[i + j] += a[i] * b[j]
        return Series(out)

    __rmul__ = __mul__

    def scale(self, c: Number) -> "Series":
        c = to_fraction(c)
        return Series(c * x for x in self.coeffs)

    def __pow__(self, r):
        return power(self, r)

    def shift_down(self, k: int) -> "Series":
        """Divide by ``t^k``; the first ``k`` coefficients must vanish.

        The result has order ``N - k``.
        """
        if any(self.coeffs[:k]):
            raise ShapeError(f"series is not divisible by t^{k}")
        return Series(self.coeffs[k:])

    def shift_up(self, k: int) -> "Series":
        """Multiply by ``t^k``, keeping order ``N``."""
        return Series([0] * k + list(self.coeffs[: self.N + 1 - k]))

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ShapeError("reciprocal needs a nonzero constant term")
        out = [1 / c0]
        for n in range(1, self.N + 1):
            acc = sum((self.coeffs[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out.append(-acc / c0)
        return Series(out)

    def derivative(self) -> "Series":
        """Formal derivative; the result has order ``N - 1``."""
        return Series(i * c for i, c in enumerate(self.coeffs) if i) if self.N else Series([0])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        N = min(self.N, other.N)
        return self.coeffs[: N + 1] == other.coeffs[: N + 1]

    # equality ignores terms beyond the common order, so no consistent hash exists
    __hash__ = None


def from_sequence(x: Sequence[Number]) -> Series:
    """``X(t) = sum_{n>=1} x_n t^n`` of order ``len(x)``."""
    return Series([0] + list(as_sequence(x)))


def to_sequence(s: Series) -> tuple:
    """Inverse of :func:`from_sequence`; the constant term must vanish."""
    if s.coeffs[0]:
        raise ShapeError(f"constant term is {s.coeffs[0]}, expected 0")
    return s.coeffs[1:]


def mul(a: Series, b: Series) -> Series:
    return a * b


def add(a: Series, b: Series) -> Series:
    return a + b


def sub(a: Series, b: Series) -> Series:
    return a - b


def scale(a: Series, c: Number) -> Series:
    return a.scale(c)


def compose(f: Series, g: Series) -> Series:
    """``f(g(t))`` to order ``min(f.N, g.N)``; ``g`` must have ``g(0) = 0``."""
    if g.coeffs[0]:
        raise CompositionError(f"inner series has constant term {g.coeffs[0]}")
    N = min(f.N, g.N)
    g = g.truncate(N)
    # Horner: f_0 + g (f_1 + g (f_2 + ...)); each factor of g raises the valuation.
    acc = Series.zero(N)
    for c in reversed(f.coeffs[: N + 1]):
        acc = acc * g + c
    return acc


def log1p(s: Series) -> Series:
    """``log(S)`` for ``S = 1 + ...``, i.e. ``log(1 + (S - 1))``."""
    if s.coeffs[0] != 1:
        raise ShapeError(f"log1p needs constant term 1, got {s.coeffs[0]}")
    # (log S)' = S' / S
    N = s.N
    c = s.coeffs
    out = [Fraction(0)] * (N + 1)
    # n L_n = n c_n - sum_{i=1}^{n-1} i L_i c_{n-i}
    for n in range(1, N + 1):
        acc = n * c[n]
        for i in range(1, n):
            acc -= i * out[i] * c[n - i]
        out[n] = acc / n
    return Series(out)


def exp0(s: Series) -> Series:
    """``exp(S)`` for ``S`` with zero constant term."""
    if s.coeffs[0]:
        raise ShapeError(f"exp0 needs constant term 0, got {s.coeffs[0]}")
    N = s.N
    c = s.coeffs
    out = [Fraction(1)] + [Fraction(0)] * N
    # E' = S' E  =>  n e_n = sum_{i=1}^n i c_i e_{n-i}
    for n in range(1, N + 1):
        out[n] = sum((i * c[i] * out[n - i] for i in range(1, n + 1)), Fraction(0)) / n
    return Series(out)


def power(s: Series, r: Number) -> Series:
    """``S^r`` for rational ``r`` and ``S = 1 + ...``.

    Nonnegative integer exponents also accept any constant term and are
    computed by repeated squaring.
    """
    r = to_fraction(r)
    if r.denominator == 1 and r >= 0 and s.coeffs[0] != 1:
        out = Series.one(s.N)
        base, e = s, int(r)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out
    if s.coeffs[0] != 1:
        raise ShapeError(f"rational power needs constant term 1, got {s.coeffs[0]}")
    return exp0(log1p(s).scale(r))


pow = power  # noqa: A001 - mirrors the operation name used by callers


def revert(s: Series) -> Series:
    """Compositional inverse ``T`` with ``S(T(t)) = t + O(t^{N+1})``.

    For ``S = t (1 + sum alpha_r t^r / r!)`` the inverse is
    ``t (1 + sum beta_n t^n / n!)`` with
    ``beta_n = sum_k (-1)^k (n+k)!/(n+1)! B_{n,k}(alpha)``.
    A leading coefficient other than 1 is removed by a linear rescaling.
    """
    if s.coeffs[0]:
        raise NotInvertibleError(f"constant term is {s.coeffs[0]}, expected 0")
    if s.N < 1 or not s.coeffs[1]:
        raise NotInvertibleError("linear coefficient vanishes")
    lead = s.coeffs[1]
    N = s.N
    # S(t) = lead * U(t) with U monic; U^{-1}(u) = S^{-1}(lead * u)
    monic = s.scale(1 / lead)
    alpha = [factorial(r) * monic.coeffs[r + 1] for r in range(1, N)]
    table = bell_table(alpha, N - 1)
    out = [Fraction(0), Fraction(1)]
    for n in range(1, N):
        beta = sum(
            (
                (-1) ** k * Fraction(factorial(n + k), factorial(n + 1)) * table(n, k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        out.append(beta / factorial(n))
    inv_monic = Series(out)
    # T(t) = U^{-1}(t / lead)
    return Series(c / lead**i for i, c in enumerate(inv_monic.coeffs))


def revert_iterative(s: Series) -> Series:
    """Compositional inverse by solving ``S(T(t)) = t`` one coefficient at a time."""
    if s.coeffs[0]:
        raise NotInvertibleError(f"constant term is {s.coeffs[0]}, expected 0")
    if s.N < 1 or not s.coeffs[1]:
        raise NotInvertibleError("linear coefficient vanishes")
    N = s.N
    lead = s.coeffs[1]
    t = [Fraction(0)] * (N + 1)
    t[1] = 1 / lead
    for n in range(2, N + 1):
        # with t_n still 0 the t^n coefficient of S(T) misses exactly lead * t_n
        residual = compose(s, Series(t))[n]
        t[n] = -residual / lead
    return Series(t)
