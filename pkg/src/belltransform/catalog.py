"""Registry of named sequences.

Every entry yields exact 1-indexed prefixes.  Entries are defined by a
closed form, a recurrence, a transform of another entry, or a pinned
prefix read from ``data/pinned.tsv``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb, factorial
from typing import Callable, Dict, Optional, Sequence

from belltransform.bell_core import a000257_term, as_sequence
from belltransform.errors import DataError, DomainError, LengthError
from belltransform.transform import (
    Bell,
    InverseBell,
    L,
    OperatorWord,
    R,
    apply_word,
)


@dataclass(frozen=True)
class PinnedRecord:
    key: str
    oeis_id: str
    offset: int
    terms: tuple
    provenance: str
    extra: tuple = ()

    def render(self) -> str:
        fields = [self.key, self.oeis_id, str(self.offset), render_terms(self.terms),
                  self.provenance, *self.extra]
        for f in fields:
            if "\t" in f or "\n" in f:
                raise DataError(f"field {f!r} contains a tab or newline")
        return "\t".join(fields)


def render_terms(terms: Sequence) -> str:
    return ",".join(str(Fraction(t)) for t in terms)


def parse_terms(text: str) -> tuple:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(",") if p.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DataError(f"bad term list {text!r}: {exc}") from None


def parse_record(line: str, where: str = "<record>") -> PinnedRecord:
    parts = line.rstrip("\n").split("\t")
    if len(parts) < 5:
        raise DataError(f"{where}: expected at least 5 tab-separated fields, got {len(parts)}")
    key, oeis_id, offset, terms, provenance, *extra = parts
    try:
        offset = int(offset)
    except ValueError:
        raise DataError(f"{where}: offset {offset!r} is not an integer") from None
    terms = parse_terms(terms)
    if not terms:
        raise DataError(f"{where}: no terms")
    if not provenance.strip():
        raise DataError(f"{where}: empty provenance")
    return PinnedRecord(key, oeis_id, offset, terms, provenance, tuple(extra))


def parse_records(text: str, where: str = "<data>") -> Dict[str, PinnedRecord]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        rec = parse_record(line, f"{where}:{lineno}")
        out[rec.key] = rec
    return out


def load_pinned() -> Dict[str, PinnedRecord]:
    text = resources.files("belltransform").joinpath("data/pinned.tsv").read_text("utf-8")
    return parse_records(text, "pinned.tsv")


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    kind: str  # closed_form | recurrence | transform_of | pinned
    oeis_id: Optional[str] = None
    offset: int = 1
    term: Optional[Callable[[int], Fraction]] = None
    recurrence: Optional[Callable[[int], tuple]] = None
    source: Optional[str] = None
    word: Optional[OperatorWord] = None
    pinned: Optional[tuple] = None
    provenance: str = ""
    description: str = ""

    def describe(self) -> str:
        if self.kind == "transform_of":
            how = f"{self.word} applied to {self.source}"
        elif self.kind == "pinned":
            how = f"{len(self.pinned)} pinned terms"
        else:
            how = self.kind.replace("_", " ")
        oeis = f" [{self.oeis_id}, offset {self.offset}]" if self.oeis_id else ""
        return f"{self.key}{oeis}: {self.description or how}"


def _net_length_change(word: OperatorWord) -> int:
    return sum({"L": -1, "R": 1}.get(a.kind, 0) for a in word.atoms)


class Catalog:
    """Immutable registry after construction."""

    def __init__(self, entries: Sequence[CatalogEntry]):
        self._entries = {e.key: e for e in entries}

    def keys(self):
        return sorted(self._entries)

    def __contains__(self, key: str) -> bool:
        try:
            self.entry(key)
        except DomainError:
            return False
        return True

    def entry(self, key: str) -> CatalogEntry:
        if key in self._entries:
            return self._entries[key]
        param = _parametric(key)
        if param is not None:
            return param
        raise DomainError(f"unknown catalog key {key!r}")

    def get_prefix(self, key: str, N: int) -> tuple:
        """First ``N`` terms of entry ``key``."""
        if N < 1:
            raise DomainError(f"N must be positive, got {N}")
        e = self.entry(key)
        if e.kind == "closed_form":
            return tuple(Fraction(e.term(n)) for n in range(1, N + 1))
        if e.kind == "recurrence":
            return as_sequence(e.recurrence(N))[:N]
        if e.kind == "pinned":
            if N > len(e.pinned):
                raise LengthError(f"{key}: only {len(e.pinned)} pinned terms, asked for {N}")
            return e.pinned[:N]
        if e.kind == "transform_of":
            need = max(1, N - _net_length_change(e.word))
            out = apply_word(e.word, self.get_prefix(e.source, need))
            if len(out) < N:
                raise LengthError(f"{key}: transform produced {len(out)} terms, asked for {N}")
            return out[:N]
        raise DomainError(f"{key}: unknown generator kind {e.kind!r}")

    def data_prefix(self, key: str, N: int) -> tuple:
        """Up to ``N`` terms, taken from pinned data when the entry has any."""
        e = self.entry(key)
        if e.pinned is not None:
            return e.pinned[:N]
        cap = self.capacity(key)
        return self.get_prefix(key, N if cap is None else min(N, cap))

    def capacity(self, key: str) -> Optional[int]:
        """Largest available prefix length, or None when unbounded."""
        e = self.entry(key)
        if e.kind == "pinned":
            return len(e.pinned)
        if e.kind == "transform_of":
            cap = self.capacity(e.source)
            return None if cap is None else cap + _net_length_change(e.word)
        return None


# Generators.


def catalan(n: int) -> Fraction:
    return Fraction(comb(2 * n, n), n + 1)


def fuss_catalan(m: int) -> Callable[[int], Fraction]:
    def term(n: int) -> Fraction:
        return Fraction(comb((m + 1) * n, n), m * n + 1)
    return term


def bizley_blocks(alpha: int, beta: int) -> Callable[[int], Fraction]:
    """``f_j = C((alpha+beta) j, alpha j) / ((alpha+beta) j)``."""
    def term(j: int) -> Fraction:
        s = (alpha + beta) * j
        return Fraction(comb(s, alpha * j), s)
    return term


def bell_numbers(N: int) -> tuple:
    """Bell numbers ``B_1 .. B_N``: first entries of the Bell triangle rows."""
    row, out = [1], []
    for _ in range(N):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return tuple(out)


def a001519(N: int) -> tuple:
    """``1, 2, 5, 13, ...`` via ``a(n) = 3 a(n-1) - a(n-2)``."""
    out = [1, 2]
    while len(out) < N:
        out.append(3 * out[-1] - out[-2])
    return tuple(out[:N])


def primes(N: int) -> tuple:
    out, cand = [], 2
    while len(out) < N:
        if all(cand % p for p in out if p * p <= cand):
            out.append(cand)
        cand += 1
    return tuple(out)


_PARAM_RE = re.compile(r"^(\w+)\(([-\d,\s]+)\)$")


def _parametric(key: str) -> Optional[CatalogEntry]:
    m = _PARAM_RE.match(key)
    if not m:
        return None
    name, args = m.group(1), [int(a) for a in m.group(2).split(",")]
    if name == "fuss_catalan" and len(args) == 1:
        return CatalogEntry(key, "closed_form", term=fuss_catalan(args[0]),
                            description=f"Fuss-Catalan numbers with m={args[0]}")
    if name == "bizley_blocks" and len(args) == 2:
        return CatalogEntry(key, "closed_form", term=bizley_blocks(*args),
                            description="C((a+b)j, aj)/((a+b)j)")
    if name == "bizley" and len(args) == 2:
        return CatalogEntry(key, "transform_of", source=f"bizley_blocks({args[0]},{args[1]})",
                            word=OperatorWord([Bell(0, 0, 0, 1)]),
                            description=f"rational Dyck paths with slope {args[1]}/{args[0]}")
    return None


def default_entries() -> list:
    pinned = load_pinned()

    def pin(key: str, **kw) -> CatalogEntry:
        rec = pinned[key]
        return CatalogEntry(key, "pinned", oeis_id=rec.oeis_id, offset=rec.offset,
                            pinned=rec.terms, provenance=rec.provenance, **kw)

    f_word = lambda *atoms: OperatorWord(list(atoms))  # noqa: E731
    entries = [
        CatalogEntry("ones", "closed_form", term=lambda n: 1, description="all ones"),
        CatalogEntry("factorials", "closed_form", oeis_id="A000142", offset=1,
                     term=factorial, description="n!"),
        CatalogEntry("catalan", "closed_form", oeis_id="A000108", offset=1, term=catalan,
                     description="C(2n,n)/(n+1)"),
        CatalogEntry("fuss_catalan_2", "closed_form", oeis_id="A001764", offset=1,
                     term=fuss_catalan(2), description="Fuss-Catalan numbers, m=2"),
        CatalogEntry("fuss_catalan_3", "closed_form", oeis_id="A002293", offset=1,
                     term=fuss_catalan(3), description="Fuss-Catalan numbers, m=3"),
        CatalogEntry("little_schroeder", "transform_of", oeis_id="A001003", offset=0,
                     source="ones", word=f_word(R, Bell(1, 0, 1, 1)),
                     description="little Schroeder numbers from the dissection transform"),
        pin("large_schroeder"),
        CatalogEntry("A000257", "closed_form", oeis_id="A000257", offset=1,
                     term=a000257_term, description="3(2n-1)! 2^n/((n-1)!(n+2)!)"),
        pin("A000168"),
        pin("A000139"),
        CatalogEntry("A069728", "transform_of", oeis_id="A069728", offset=1,
                     source="A000257", word=f_word(Bell(-2, 0, -1, 1)),
                     description="nonseparable rooted Eulerian maps, Y[-2,0,-1,1](A000257)"),
        CatalogEntry("A298358", "transform_of", oeis_id="A298358", offset=1,
                     source="A000257", word=f_word(Bell(-3, 0, -1, 1)),
                     pinned=pinned["A298358"].terms,
                     provenance=pinned["A298358"].provenance,
                     description="3-connected bicubic maps, Y[-3,0,-1,1](A000257)"),
        CatalogEntry("A003319", "transform_of", oeis_id="A003319", offset=1,
                     source="factorials", word=f_word(InverseBell(0, 1, -1, 1)),
                     description="indecomposable permutations"),
        CatalogEntry("A075834", "transform_of", oeis_id="A075834", offset=1,
                     source="factorials", word=f_word(InverseBell(1, 0, -1, 1)),
                     description="stabilized-interval-free permutations"),
        pin("A022558"),
        CatalogEntry("av_2413", "transform_of", source="A000257",
                     word=f_word(Bell(0, 1, -1, 1), R),
                     description="Av(2413) counts from the invert of R(A000257)"),
        CatalogEntry("av_2413_3412", "transform_of", source="A000257",
                     word=f_word(L, Bell(-1, 0, -1, -1)),
                     description="Av(2413,3412) counts from L o Y[-1,0,-1,-1](A000257)"),
        CatalogEntry("av_ind_2413_3412", "transform_of", source="av_2413_3412",
                     word=f_word(InverseBell(0, 1, -1, 1)),
                     description="indecomposable Av(2413,3412)"),
        CatalogEntry("A001519", "recurrence", oeis_id="A001519", offset=1,
                     recurrence=a001519, description="a(n) = 3a(n-1) - a(n-2)"),
        CatalogEntry("bell_numbers", "recurrence", oeis_id="A000110", offset=1,
                     recurrence=bell_numbers, description="Bell numbers"),
        CatalogEntry("A099947", "transform_of", oeis_id="A099947", offset=1,
                     source="bell_numbers", word=f_word(InverseBell(1, 0, -1, 1)),
                     description="connected partitions (inverse route only)"),
        CatalogEntry("A074664", "transform_of", oeis_id="A074664", offset=1,
                     source="bell_numbers", word=f_word(InverseBell(0, 1, -1, 1)),
                     description="irreducible partitions (inverse route only)"),
        CatalogEntry("primes", "recurrence", oeis_id="A000040", offset=1,
                     recurrence=primes, description="prime numbers"),
    ]
    return entries


_DEFAULT: Optional[Catalog] = None


def default_catalog() -> Catalog:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Catalog(default_entries())
    return _DEFAULT


def get_prefix(key: str, N: int) -> tuple:
    return default_catalog().get_prefix(key, N)
