"""Exact verification of the identities satisfied by Bell transforms.

Each ``check_*`` function computes both sides of an identity with exact
arithmetic and returns a :class:`CheckReport`.  A failing report carries
the first index where the sides differ, so a caller can show the witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Optional, Sequence

from belltransform import series as S
from belltransform.bell_core import (
    Number,
    a000257_term,
    as_sequence,
    bell_table,
    factorial_weight,
    falling_factorial,
    to_fraction,
)
from belltransform.errors import DomainError, LengthError
from belltransform.series import Series
from belltransform.transform import BellParams, _params, bell_transform


@dataclass(frozen=True)
class CheckReport:
    name: str
    params: dict
    order: int
    passed: bool
    index: Optional[int] = None
    lhs: Any = None
    rhs: Any = None
    seed: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        args = ", ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        head = f"{self.name}({args}) to order {self.order}"
        if self.seed is not None:
            head += f" [seed {self.seed}]"
        if self.passed:
            return f"PASS {head}"
        return f"FAIL {head}: index {self.index}: lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)}"


def _fmt(v) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_fmt(u) for u in v) + ")"
    return str(v)


def compare(name: str, params: dict, lhs: Sequence, rhs: Sequence, *, start: int = 0,
            seed: Optional[int] = None) -> CheckReport:
    """Coefficient-wise comparison; ``start`` is the index of the first entry."""
    order = start + min(len(lhs), len(rhs)) - 1
    for i, (u, v) in enumerate(zip(lhs, rhs), start=start):
        if u != v:
            return CheckReport(name, params, order, False, i, u, v, seed)
    return CheckReport(name, params, order, True, seed=seed)


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


# Interpolation identities.


def check_interpolation(p, x: Sequence[Number], lam: Number, n: int,
                        seed: Optional[int] = None) -> CheckReport:
    """Both sides of the lambda-interpolation identity for ``y = Y_p(x)`` at row ``n``.

    sum_k prod_j (lam - d j + d) B_{n,k}(!y)
        == sum_k prod_j (a n + b k + c j + d + lam) B_{n,k}(!x)
    """
    p = _params(p)
    if p.c == 0:
        raise DomainError("interpolation identity needs c != 0; use check_appendix_interp")
    x = as_sequence(x)
    if len(x) < n:
        raise LengthError(f"need {n} terms of x, got {len(x)}")
    lam = to_fraction(lam)
    x = x[:n]
    y = bell_transform(p, x)
    bx = bell_table(factorial_weight(x), n)
    by = bell_table(factorial_weight(y), n)
    lhs = sum((_prod(lam - p.d * j + p.d for j in range(1, k)) * by(n, k)
               for k in range(1, n + 1)), Fraction(0))
    shifted = BellParams(p.a, p.b, p.c, p.d + lam)
    rhs = sum((shifted.factor(n, k) * bx(n, k) for k in range(1, n + 1)), Fraction(0))
    params = {"p": p.astuple(), "x": x, "lambda": lam}
    return compare("interpolation", params, [lhs], [rhs], start=n, seed=seed)


def _appendix_y(alpha, beta, shift, x: tuple, n: int) -> tuple:
    """``y_m = sum_k (alpha m + beta k + shift)_{k-1} B_{m,k}(x)`` for ``m <= n``."""
    bx = bell_table(x, n)
    return tuple(
        sum((falling_factorial(alpha * m + beta * k + shift, k - 1) * bx(m, k)
             for k in range(1, m + 1)), Fraction(0))
        for m in range(1, n + 1)
    )


def check_appendix_interp(kind: str, alpha: Number, beta: Number, x: Sequence[Number],
                          lam: Number, n: int, gamma: Optional[Number] = None,
                          seed: Optional[int] = None) -> CheckReport:
    """Interpolation lemma (``kind="lemma"``) and its two extensions.

    ``lemma``:  y from (alpha m + beta k)_{k-1}; left weight (lam)_{k-1}.
    ``minus1``: y from (alpha m + beta k - 1)_{k-1}; left weight lam^{k-1}.
    ``gamma``:  y from (alpha m + beta k + gamma - 1)_{k-1};
                left weight gamma^{k-1} (lam/gamma)_{k-1}.
    In every case the right side uses the y-weight with ``lam`` added.
    """
    alpha, beta, lam = map(to_fraction, (alpha, beta, lam))
    x = as_sequence(x)
    if len(x) < n:
        raise LengthError(f"need {n} terms of x, got {len(x)}")
    x = x[:n]
    if kind == "lemma":
        shift = Fraction(0)
        left = lambda k: falling_factorial(lam, k - 1)  # noqa: E731
    elif kind == "minus1":
        shift = Fraction(-1)
        left = lambda k: lam ** (k - 1)  # noqa: E731
    elif kind == "gamma":
        if gamma is None or to_fraction(gamma) == 0:
            raise DomainError("kind='gamma' needs a nonzero gamma")
        gamma = to_fraction(gamma)
        shift = gamma - 1
        left = lambda k: gamma ** (k - 1) * falling_factorial(lam / gamma, k - 1)  # noqa: E731
    else:
        raise DomainError(f"unknown appendix identity {kind!r}")
    y = _appendix_y(alpha, beta, shift, x, n)
    bx = bell_table(x, n)
    by = bell_table(y, n)
    lhs = sum((left(k) * by(n, k) for k in range(1, n + 1)), Fraction(0))
    rhs = sum((falling_factorial(alpha * n + beta * k + shift + lam, k - 1) * bx(n, k)
               for k in range(1, n + 1)), Fraction(0))
    params = {"alpha": alpha, "beta": beta, "x": x, "lambda": lam}
    if kind == "gamma":
        params["gamma"] = gamma
    return compare(f"appendix_{kind}", params, [lhs], [rhs], start=n, seed=seed)


# Generating-function equations.


def gf_sides(p, x: Sequence[Number], y: Optional[Sequence[Number]] = None):
    """Left and right sides of the functional equation linking X and Y.

    The form depends on which of ``c`` and ``d`` vanish:

    * c, d != 0:  X(t (1+dY)^{a/d}) = (1/c)[1 - (1+dY)^{-c/d}] (1+dY)^{-b/d}
    * c = 0:      X(t (1+dY)^{a/d}) = (1/d) log(1+dY) (1+dY)^{-b/d}
    * d = 0:      X(t e^{aY}) = (1/c)[1 - e^{-cY}] e^{-bY}
    * c = d = 0:  X(t e^{aY}) = Y e^{-bY}
    """
    p = _params(p)
    x = as_sequence(x)
    y = bell_transform(p, x) if y is None else as_sequence(y)
    N = min(len(x), len(y))
    X = S.from_sequence(x[:N])
    Y = S.from_sequence(y[:N])
    a, b, c, d = p.astuple()
    if d != 0:
        Z = 1 + Y.scale(d)
        inner = S.power(Z, a / d).shift_up(1)
        tail = S.power(Z, -b / d)
        if c != 0:
            rhs = (1 - S.power(Z, -c / d)).scale(1 / c) * tail
        else:
            rhs = S.log1p(Z).scale(1 / d) * tail
    else:
        inner = S.exp0(Y.scale(a)).shift_up(1)
        tail = S.exp0(Y.scale(-b))
        if c != 0:
            rhs = (1 - S.exp0(Y.scale(-c))).scale(1 / c) * tail
        else:
            rhs = Y * tail
    lhs = S.compose(X, inner)
    return lhs, rhs


def gf_case(p) -> str:
    p = _params(p)
    return {(True, True): "i", (False, True): "ii", (True, False): "iii",
            (False, False): "iv"}[(p.c != 0, p.d != 0)]


def check_gf(p, x: Sequence[Number], N: Optional[int] = None,
             y: Optional[Sequence[Number]] = None, seed: Optional[int] = None) -> CheckReport:
    """Check the generating-function equation to order ``N``.

    With ``y`` omitted it is computed as ``Y_p(x)``; passing ``y`` checks a
    given pair of sequences (for instance two pinned prefixes) instead.
    """
    p = _params(p)
    x = as_sequence(x)
    N = len(x) if N is None else N
    if len(x) < N or (y is not None and len(y) < N):
        raise LengthError(f"need {N} terms on both sides")
    lhs, rhs = gf_sides(p, x[:N], None if y is None else as_sequence(y)[:N])
    params = {"p": p.astuple(), "case": gf_case(p)}
    return compare("gf", params, lhs.coeffs, rhs.coeffs, seed=seed)


# Convolution.


def convolve_bell(p, x: Sequence[Number], r: int, N: Optional[int] = None) -> tuple:
    """``n -> d r sum_k (1/n!) prod_j (a n + b k + c j + d r) B_{n,k}(!x)``.

    Equals the r-fold convolution of ``d * Y_p(x)`` (with a leading 1).
    """
    p = _params(p)
    if p.d == 0:
        raise DomainError("convolution formula needs d != 0")
    if r < 1:
        raise DomainError(f"r must be a positive integer, got {r}")
    x = as_sequence(x)
    N = len(x) if N is None else N
    if len(x) < N:
        raise LengthError(f"need {N} terms of x, got {len(x)}")
    shifted = BellParams(p.a, p.b, p.c, p.d * r)
    bx = bell_table(factorial_weight(x[:N]), N)
    return tuple(
        p.d * r * sum((shifted.factor(n, k) * bx(n, k) for k in range(1, n + 1)),
                      Fraction(0)) / factorial(n)
        for n in range(1, N + 1)
    )


def ab_recurrence(a: int, b: int, x: Sequence[Number], N: Optional[int] = None) -> tuple:
    """Solve ``y_n = sum_l x_l [t^{n-l}] (1 + Y)^{a l + b}`` term by term.

    ``power[m][j]`` holds ``[t^j](1 + Y)^m`` and gains one column per new
    ``y_n``, so nothing beyond already known terms is ever read.
    """
    if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
        raise DomainError(f"a and b must be nonnegative integers, got {a}, {b}")
    if a == 0 and b == 0:
        raise DomainError("a and b must not both vanish")
    x = as_sequence(x)
    N = len(x) if N is None else N
    if len(x) < N:
        raise LengthError(f"need {N} terms of x, got {len(x)}")
    top = a * N + b
    y = [Fraction(1)]
    power = [[Fraction(1)] for _ in range(top + 1)]
    for m in range(1, top + 1):
        power[m] = [Fraction(1)]
    for n in range(1, N + 1):
        yn = sum((x[ell - 1] * power[a * ell + b][n - ell] for ell in range(1, n + 1)),
                 Fraction(0))
        y.append(yn)
        # column n of (1 + Y)^m from (1 + Y)^{m-1}
        power[0].append(Fraction(0))
        for m in range(1, top + 1):
            prev = power[m - 1]
            power[m].append(sum((y[i] * prev[n - i] for i in range(n + 1)), Fraction(0)))
    return tuple(y[1:])


# Algebraic relations around the bicubic-map sequence.

ALGEBRAIC = ("A257_closed_form", "A257_quadratic", "Av_cubic", "Av_functional")


def a000257_prefix(N: int) -> tuple:
    return tuple(a000257_term(j) for j in range(1, N + 1))


def av_2413_3412_transform_route(N: int) -> tuple:
    """``(Av_1, ..., Av_N)`` from ``R o Av = Y_{-1,0,-1,-1}(f)``."""
    shifted = bell_transform((-1, 0, -1, -1), a000257_prefix(N + 1))
    if shifted[0] != 1:
        raise DomainError("transform route does not start with 1")
    return shifted[1:]


def _script_a(N: int, av: Optional[Sequence[Number]]) -> Series:
    av = av_2413_3412_transform_route(N) if av is None else as_sequence(av)
    if len(av) < N:
        raise LengthError(f"need {N} avoidance counts, got {len(av)}")
    return Series([1] + list(av[:N]))


def check_algebraic_gf(name: str, N: int, av: Optional[Sequence[Number]] = None) -> CheckReport:
    """Residual checks for the algebraic equations of F and of the
    generating function of Av(2413, 3412).

    ``av`` substitutes externally supplied counts ``Av_1..Av_N`` (for
    instance from brute-force enumeration) for the transform route.
    """
    if N < 4:
        raise DomainError("algebraic checks need N >= 4")
    t = Series.t(N)
    if name == "A257_closed_form":
        # 32 t^2 F = -1 + 12 t - 24 t^2 + (1 - 8t)^{3/2}, expanded to order N + 2
        M = N + 2
        num = S.power(Series.polynomial([1, -8], M), Fraction(3, 2))
        num = num + Series.polynomial([-1, 12, -24], M)
        F = num.shift_down(2).scale(Fraction(1, 32))
        rhs = S.from_sequence(a000257_prefix(N))
        return compare(name, {}, F.coeffs, rhs.coeffs)
    if name == "A257_quadratic":
        calF = 1 + S.from_sequence(a000257_prefix(N))
        t2 = t * t
        resid = (t2.scale(16) * calF * calF
                 - (t2.scale(8) + t.scale(12) - 1) * calF
                 + t2 + t.scale(11) - 1)
        return compare(name, {}, resid.coeffs, Series.zero(N).coeffs)
    if name == "Av_cubic":
        A = _script_a(N, av)
        t2 = t * t
        t3 = t2 * t
        resid = (t3 * t * A * A * A
                 + (t3.scale(5) - t2.scale(11)) * A * A
                 + (t2.scale(3) + t.scale(10) - 1) * A
                 - t.scale(9) + 1)
        return compare(name, {"source": "transform" if av is None else "given"},
                       resid.coeffs, Series.zero(N).coeffs)
    if name == "Av_functional":
        # 1 + F(t (1 - t A)) = 1 / (1 - t A)
        A = _script_a(N, av)
        u = 1 - t * A
        F = S.from_sequence(a000257_prefix(N))
        lhs = 1 + S.compose(F, t * u)
        rhs = u.inverse()
        return compare(name, {"source": "transform" if av is None else "given"},
                       lhs.coeffs, rhs.coeffs)
    raise DomainError(f"unknown algebraic check {name!r}; choose from {ALGEBRAIC}")
