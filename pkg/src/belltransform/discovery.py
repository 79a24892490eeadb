"""Search for operator words that relate two sequence prefixes.

A reported relation has only been checked on a finite prefix; its status
is always ``verified-on-prefix``, never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence

from belltransform.bell_core import as_sequence, bell_table, factorial_weight
from belltransform.catalog import Catalog, default_catalog
from belltransform.errors import DomainError
from belltransform.transform import (
    Atom,
    Bell,
    BellParams,
    I,
    L,
    OperatorWord,
    R,
    S,
    apply_word,
)

VERIFIED = "verified-on-prefix"
REFUTED = "refuted"
DEFAULT_MIN_MATCH = 8


@dataclass(frozen=True)
class Grid:
    a: tuple = tuple(range(-3, 4))
    b: tuple = tuple(range(-3, 4))
    c: tuple = (-2, -1, 1, 2)
    d: tuple = (-1, 1)

    def params(self):
        for a in self.a:
            for b in self.b:
                for c in self.c:
                    for d in self.d:
                        yield BellParams(a, b, c, d)

    def __len__(self) -> int:
        return len(self.a) * len(self.b) * len(self.c) * len(self.d)


DEFAULT_PRE_OPS = (None, R, L, I, S(1), S(-1))


@dataclass(frozen=True)
class RelationHypothesis:
    source: str
    target: str
    word: OperatorWord
    matched: int
    status: str = VERIFIED
    witness: Optional[int] = None

    def describe(self) -> str:
        text = f"{self.target} = {self.word.encode()} ({self.source})"
        if self.status == VERIFIED:
            return f"{text}  [{self.status}, {self.matched} terms]"
        return f"{text}  [{self.status} at index {self.witness}]"


def _first_mismatch(p: BellParams, table, x_len: int, target: tuple) -> Optional[int]:
    """Index (1-based) of the first term where ``Y_p(x)`` differs from target."""
    for n in range(1, min(x_len, len(target)) + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            bnk = table(n, k)
            if bnk:
                acc += p.factor(n, k) * bnk
        if acc / factorial(n) != target[n - 1]:
            return n
    return None


def search(source: Sequence, target: Sequence, grid: Optional[Grid] = None,
           pre_ops: Iterable[Optional[Atom]] = DEFAULT_PRE_OPS,
           min_match: int = DEFAULT_MIN_MATCH, max_bell: int = 1,
           source_name: str = "source", target_name: str = "target") -> list:
    """All words ``Y_p`` or ``Y_p o P`` (P a pre-operator) with
    ``word(source) == target`` on the common prefix.

    ``max_bell=2`` also tries ``Y_q o Y_p`` without pre-operator.  Results
    are merged under the ``(a,b,c,d) ~ (a,b+c,-c,d)`` symmetry and sorted by
    their encoded word.
    """
    grid = Grid() if grid is None else grid
    if len(grid) == 0:
        raise DomainError("empty parameter grid")
    if min_match < 1:
        raise DomainError("min_match must be positive")
    source, target = as_sequence(source), as_sequence(target)
    found = {}

    def record(word: OperatorWord, matched: int):
        canon = word.canonical()
        key = canon.encode()
        if key not in found or found[key].matched < matched:
            found[key] = RelationHypothesis(source_name, target_name, canon, matched)

    checked_any = False
    for pre in pre_ops:
        try:
            x = pre.apply(source) if pre is not None else source
        except (DomainError, ValueError):
            continue
        overlap = min(len(x), len(target))
        if overlap < min_match:
            continue
        checked_any = True
        x = x[:overlap]
        table = bell_table(factorial_weight(x), overlap)
        for p in grid.params():
            if _first_mismatch(p, table, overlap, target) is None:
                atoms = [Bell(p)] + ([pre] if pre is not None else [])
                record(OperatorWord(atoms), overlap)
    if max_bell >= 2:
        overlap = min(len(source), len(target))
        if overlap >= min_match:
            checked_any = True
            for p in grid.params():
                mid = apply_word([Bell(p)], source[:overlap])
                table = bell_table(factorial_weight(mid), overlap)
                for q in grid.params():
                    if _first_mismatch(q, table, overlap, target) is None:
                        record(OperatorWord([Bell(q), Bell(p)]), overlap)
    if not checked_any:
        raise DomainError(
            f"prefixes too short: need at least {min_match} overlapping terms "
            f"(source {len(source)}, target {len(target)})"
        )
    return [found[k] for k in sorted(found)]


def verify(word: OperatorWord, source: Sequence, target: Sequence, *,
           source_name: str = "source", target_name: str = "target",
           min_match: int = DEFAULT_MIN_MATCH) -> RelationHypothesis:
    """Check ``word(source) == target`` on the overlapping prefix."""
    image = apply_word(word, source)
    target = as_sequence(target)
    overlap = min(len(image), len(target))
    if overlap < min_match:
        raise DomainError(
            f"{target_name} vs {word.encode()}({source_name}): only {overlap} comparable "
            f"terms, need {min_match}"
        )
    for i in range(overlap):
        if image[i] != target[i]:
            return RelationHypothesis(source_name, target_name, word, i, REFUTED, i + 1)
    return RelationHypothesis(source_name, target_name, word, overlap)


# Edges of the bicubic-map diagram: (source key, target key, word).
DIAGRAM_EDGES = (
    ("A298358", "A000257", OperatorWord([Bell(3, 0, -1, 1)])),
    ("A069728", "A000257", OperatorWord([Bell(2, 0, -1, 1)])),
    ("av_ind_2413_3412", "av_2413_3412", OperatorWord([Bell(0, 1, -1, 1)])),
    ("av_2413_3412", "A000257", OperatorWord([Bell(1, 1, -1, 1), R])),
    ("A000257", "A022558", OperatorWord([Bell(0, 1, -1, 1), R])),
)


def reproduce_paper_diagram(catalog: Optional[Catalog] = None, N: int = 12,
                            min_match: int = DEFAULT_MIN_MATCH,
                            overrides: Optional[dict] = None) -> list:
    """Verify the five diagram edges on prefixes of length up to ``N``.

    Pinned data (for example the printed A298358 prefix) is preferred over
    generated terms.  ``overrides`` maps catalog keys to externally supplied
    prefixes, e.g. brute-force pattern-avoidance counts.
    """
    catalog = catalog or default_catalog()
    overrides = overrides or {}
    if N < min_match:
        raise DomainError(f"N={N} is below min_match={min_match}; refusing to report edges")

    def get(key: str, n: int) -> tuple:
        if key in overrides:
            return as_sequence(overrides[key])[:n]
        return catalog.data_prefix(key, n)

    out = []
    for src, dst, word in DIAGRAM_EDGES:
        out.append(verify(word, get(src, N), get(dst, N + 1), source_name=src,
                          target_name=dst, min_match=min_match))
    return out
