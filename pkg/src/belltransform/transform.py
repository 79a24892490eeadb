"""The four-parameter Bell transform, its inverse and named special cases.

``bell_transform((a, b, c, d), x)`` maps ``x`` to ``y`` with

    y_n = sum_{k=1}^n (1/n!) prod_{j=1}^{k-1} (a n + b k + c j + d) B_{n,k}(!x)

where ``!x = (1! x_1, 2! x_2, ...)``.  Operator words compose these maps
with the shift operators ``L``, ``R``, ``I`` and ``S_nu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from belltransform.bell_core import Number, as_sequence, bell_table, factorial_weight, to_fraction
from belltransform.errors import DomainError, LengthError


@dataclass(frozen=True, order=True)
class BellParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a: Number, b: Number, c: Number, d: Number):
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, to_fraction(v))

    @classmethod
    def parse(cls, text: str) -> "BellParams":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise DomainError(f"expected four comma-separated parameters, got {text!r}")
        return cls(*parts)

    def astuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def factor(self, n: int, k: int) -> Fraction:
        """``prod_{j=1}^{k-1} (a n + b k + c j + d)``."""
        base = self.a * n + self.b * k + self.d
        out = Fraction(1)
        for j in range(1, k):
            out *= base + self.c * j
        return out

    def is_identity(self) -> bool:
        """True when every product with ``k >= 2`` vanishes, for all ``n``.

        That happens exactly for ``a = 0`` and ``(b, c, d)`` of the form
        ``(0, c, -c)`` or ``(-c, c, c)`` (the two halves of one symmetry
        orbit), plus ``(0, 0, 0, 0)``.
        """
        a, b, c, d = self.astuple()
        return a == 0 and ((b == 0 and c + d == 0) or (b == -c and c == d))

    def canonical(self) -> "BellParams":
        """Representative of ``{(a, b, c, d), (a, b + c, -c, d)}`` with ``c <= 0``.

        Parameter sets that act as the identity map all collapse to
        ``(0, 0, 0, 0)``.
        """
        if self.is_identity():
            return BellParams(0, 0, 0, 0)
        if self.c > 0:
            return BellParams(self.a, self.b + self.c, -self.c, self.d)
        return self

    def label(self) -> str:
        return "Y[" + ",".join(str(v) for v in self.astuple()) + "]"

    def __str__(self) -> str:
        return self.label()


def _params(p) -> BellParams:
    if isinstance(p, BellParams):
        return p
    return BellParams(*p)


def bell_transform_k_slices(p, x: Sequence[Number]) -> tuple:
    """Per-block-count summands ``T[n][k]`` for ``1 <= k <= n <= N``.

    Row ``n`` (position ``n - 1``) is ``(T[n][1], ..., T[n][n])``.
    """
    p = _params(p)
    x = as_sequence(x)
    N = len(x)
    table = bell_table(factorial_weight(x), N)
    rows = []
    for n in range(1, N + 1):
        nf = factorial(n)
        rows.append(tuple(p.factor(n, k) * table(n, k) / nf for k in range(1, n + 1)))
    return tuple(rows)


def bell_transform(p, x: Sequence[Number]) -> tuple:
    """``Y_{a,b,c,d}(x)``, same length as ``x``."""
    return tuple(sum(row, Fraction(0)) for row in bell_transform_k_slices(p, x))


def _q_difference(p: BellParams, n: int, k: int) -> Fraction:
    """``(q_{n,k}(b + c) - q_{n,k}(b)) / c`` where ``q(t) = t prod_j (a n + d j + t)``."""
    def q(t: Fraction) -> Fraction:
        out = t
        for j in range(1, k):
            out *= p.a * n + p.d * j + t
        return out

    return (q(p.b + p.c) - q(p.b)) / p.c


def _q_derivative(p: BellParams, n: int, k: int) -> Fraction:
    """``q'_{n,k}(b)`` by the product rule over the ``k`` linear factors."""
    t = p.b
    factors = [t] + [p.a * n + p.d * j + t for j in range(1, k)]
    total = Fraction(0)
    for skip in range(len(factors)):
        prod = Fraction(1)
        for i, f in enumerate(factors):
            if i != skip:
                prod *= f
        total += prod
    return total


def bell_inverse(p, y: Sequence[Number]) -> tuple:
    """Recover ``x`` from ``y = Y_{a,b,c,d}(x)`` by the explicit inverse."""
    p = _params(p)
    y = as_sequence(y)
    N = len(y)
    table = bell_table(factorial_weight(y), N)
    weight = _q_difference if p.c != 0 else _q_derivative
    out = []
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += (-1) ** (k - 1) * weight(p, n, k) * table(n, k)
        out.append(acc / factorial(n))
    return tuple(out)


# Operators acting on sequence prefixes.


def shift_left(x: Sequence[Number]) -> tuple:
    """``L (x_1, x_2, ...) = (x_2, x_3, ...)``."""
    x = as_sequence(x)
    if len(x) < 2:
        raise LengthError("L needs at least two terms")
    return x[1:]


def shift_right(x: Sequence[Number]) -> tuple:
    """``R (x_1, x_2, ...) = (1, x_1, x_2, ...)``."""
    return (Fraction(1),) + as_sequence(x)


def alternate(x: Sequence[Number]) -> tuple:
    """``I (x_1, x_2, ...) = (x_1, -x_2, x_3, ...)``."""
    return tuple(v if i % 2 == 0 else -v for i, v in enumerate(as_sequence(x)))


def bump_first(x: Sequence[Number], nu: Number) -> tuple:
    """``S_nu (x_1, x_2, ...) = (x_1 + nu, x_2, ...)``."""
    x = as_sequence(x)
    if not x:
        raise LengthError("S needs at least one term")
    return (x[0] + to_fraction(nu),) + x[1:]


def binomial(a: Sequence[Number], power: int = 1) -> tuple:
    """``binomial^power`` on a 0-indexed sequence: ``b_n = sum_k C(n,k) power^(n-k) a_k``."""
    a = as_sequence(a)
    nu = Fraction(power)
    return tuple(
        sum((comb(n, k) * nu ** (n - k) * a[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(a))
    )


def exp_bs95(a: Sequence[Number]) -> tuple:
    """EXP in the integer convention: ``b = n! Y_{0,0,0,1}(a_n / n!)``."""
    a = as_sequence(a)
    x = [v / factorial(n) for n, v in enumerate(a, start=1)]
    y = bell_transform((0, 0, 0, 1), x)
    return tuple(v * factorial(n) for n, v in enumerate(y, start=1))


# Operator words.


@dataclass(frozen=True)
class Atom:
    kind: str  # "Y", "Yinv", "L", "R", "I", "S", "B"
    params: Optional[BellParams] = None
    value: Optional[Fraction] = None

    def apply(self, x: tuple) -> tuple:
        if self.kind == "Y":
            return bell_transform(self.params, x)
        if self.kind == "Yinv":
            return bell_inverse(self.params, x)
        if self.kind == "L":
            return shift_left(x)
        if self.kind == "R":
            return shift_right(x)
        if self.kind == "I":
            return alternate(x)
        if self.kind == "S":
            return bump_first(x, self.value)
        if self.kind == "B":
            return binomial(x, int(self.value))
        raise DomainError(f"unknown atom kind {self.kind!r}")

    def canonical(self) -> "Atom":
        if self.kind in ("Y", "Yinv"):
            return Atom(self.kind, self.params.canonical())
        return self

    def encode(self) -> str:
        if self.kind == "Y":
            return self.params.label()
        if self.kind == "Yinv":
            return self.params.label() + "^-1"
        if self.kind in ("S", "B"):
            return f"{self.kind}[{self.value}]"
        return self.kind


def Bell(*p) -> Atom:
    return Atom("Y", _params(p[0] if len(p) == 1 else p))


def InverseBell(*p) -> Atom:
    return Atom("Yinv", _params(p[0] if len(p) == 1 else p))


def S(nu: Number) -> Atom:
    return Atom("S", value=to_fraction(nu))


def Binomial(power: int = 1) -> Atom:
    power = to_fraction(power)
    if power.denominator != 1:
        raise DomainError(f"binomial power must be an integer, got {power}")
    return Atom("B", value=power)


L = Atom("L")
R = Atom("R")
I = Atom("I")  # noqa: E741


@dataclass(frozen=True)
class OperatorWord:
    """Atoms composed right to left: ``[A, B]`` means ``A o B``."""

    atoms: tuple = field(default_factory=tuple)

    def __init__(self, atoms):
        object.__setattr__(self, "atoms", tuple(atoms))

    def __call__(self, x):
        return apply_word(self, x)

    def canonical(self) -> "OperatorWord":
        atoms = [a.canonical() for a in self.atoms]
        # identity Bell atoms drop out of longer words
        kept = [a for a in atoms if not (a.kind == "Y" and a.params.is_identity())]
        return OperatorWord(kept or atoms[:1])

    def encode(self) -> str:
        return " o ".join(a.encode() for a in self.atoms)

    def __str__(self) -> str:
        return self.encode()


def apply_word(word, x: Sequence[Number]) -> tuple:
    """Apply the atoms of ``word`` to ``x``, rightmost first."""
    atoms = word.atoms if isinstance(word, OperatorWord) else tuple(word)
    if not atoms:
        raise DomainError("empty operator word")
    out = as_sequence(x)
    for atom in reversed(atoms):
        out = atom.apply(out)
    return out


NAMED = {
    "identity": lambda m: OperatorWord([Bell(0, 0, 0, 0)]),
    "invert": lambda m: OperatorWord([Bell(0, 0, m, m)]),
    "exp": lambda m: OperatorWord([Bell(0, 0, 0, 1)]),
    "conv": lambda m: OperatorWord([Bell(0, 0, -1, m)]),
    # R o Y_{-1,0,-1,-1} o I o L would apply the inverse of Y_{1,0,1,1}; that
    # word disagrees with series reversion from the third term on.
    "revert": lambda m: OperatorWord([R, Bell(1, 0, 1, 1), I, L]),
    "ncp": lambda m: OperatorWord([Bell(m, 0, -1, 1)]),
    "dissection": lambda m: OperatorWord([Bell(1, 0, 1, 1)]),
    "binomial": lambda m: OperatorWord([Binomial(m)]),
    "L": lambda m: OperatorWord([L]),
    "R": lambda m: OperatorWord([R]),
    "I": lambda m: OperatorWord([I]),
    "S": lambda m: OperatorWord([S(m)]),
}

_NEEDS_PARAM = {"invert", "conv", "ncp", "S"}
_DEFAULT_PARAM = {"binomial": 1}


def named_word(name: str, m: Optional[Number] = None) -> OperatorWord:
    if name not in NAMED:
        raise DomainError(f"unknown transform {name!r}; choose from {sorted(NAMED)}")
    if m is None:
        if name in _NEEDS_PARAM:
            raise DomainError(f"transform {name!r} needs a parameter")
        m = _DEFAULT_PARAM.get(name)
    if m is not None and name != "S":
        m = to_fraction(m)
        if name in ("invert", "conv", "ncp", "binomial") and m.denominator != 1:
            raise DomainError(f"transform {name!r} needs an integer parameter, got {m}")
        m = int(m)
    return NAMED[name](m)


def named_transform(name: str, x: Sequence[Number], m: Optional[Number] = None) -> tuple:
    """Apply one of the named transforms (see :data:`NAMED`)."""
    return apply_word(named_word(name, m), x)


def ncp(m: int, x: Sequence[Number]) -> tuple:
    """``T_m = Y_{m,0,-1,1}``, the m-th noncrossing partition transform."""
    return bell_transform((m, 0, -1, 1), x)
