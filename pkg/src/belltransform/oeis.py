"""Minimal OEIS client with an on-disk cache.

Only this module performs network I/O.  Fetches go through a pluggable
``transport`` callable so tests can replay recorded responses; the default
transport uses :mod:`urllib`.  Cache files reuse the pinned-record format
of :mod:`belltransform.catalog` with two extra fields (fetch time, URL).
"""

from __future__ import annotations

import json
import logging
import os
import re
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional, Tuple

from belltransform.catalog import PinnedRecord, parse_record
from belltransform.errors import (
    DataError,
    NotFoundError,
    TransportError,
    UnavailableError,
)

log = logging.getLogger(__name__)

CACHE_ENV = "BELLTRANSFORM_CACHE"
BASE_URL = "https://oeis.org"
USER_AGENT = "belltransform-oeis-client/0.1 (exact sequence transforms; polite, cached)"
DEFAULT_TIMEOUT = 30.0

_ID_RE = re.compile(r"^A\d{6}$")

# (url, timeout, headers) -> (status, body)
Transport = Callable[[str, float, dict], Tuple[int, str]]


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    root = os.environ.get("XDG_CACHE_HOME") or os.path.join(Path.home(), ".cache")
    return Path(root) / "belltransform" / "oeis"


def normalize_id(oeis_id: str) -> str:
    oeis_id = oeis_id.strip().upper()
    if not _ID_RE.match(oeis_id):
        raise DataError(f"malformed OEIS id {oeis_id!r}; expected A followed by 6 digits")
    return oeis_id


def urllib_transport(url: str, timeout: float, headers: dict) -> Tuple[int, str]:
    req = urllib.request.Request(url, headers=headers)
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.status, resp.read().decode("utf-8", errors="replace")
    except urllib.error.HTTPError as exc:
        return exc.code, ""
    except (urllib.error.URLError, OSError) as exc:
        raise TransportError(f"GET {url} failed: {exc}") from exc


@dataclass(frozen=True)
class CachedSequence:
    oeis_id: str
    offset: int
    terms: tuple
    fetched_at: str
    source: str

    def to_record(self) -> PinnedRecord:
        return PinnedRecord(self.oeis_id, self.oeis_id, self.offset, self.terms,
                            f"OEIS {self.oeis_id} fetched", (self.fetched_at, self.source))

    @classmethod
    def from_record(cls, rec: PinnedRecord, where: str = "<record>") -> "CachedSequence":
        if len(rec.extra) != 2:
            raise DataError(f"{where}: cache record needs fetch time and source fields")
        if any(t.denominator != 1 for t in rec.terms):
            raise DataError(f"{where}: OEIS terms must be integers")
        return cls(normalize_id(rec.oeis_id), rec.offset, tuple(int(t) for t in rec.terms),
                   rec.extra[0], rec.extra[1])

    def render(self) -> str:
        return self.to_record().render() + "\n"

    @classmethod
    def parse(cls, text: str, where: str = "<record>") -> "CachedSequence":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if len(lines) != 1:
            raise DataError(f"{where}: expected one record, found {len(lines)}")
        return cls.from_record(parse_record(lines[0], where), where)

    def prefix(self, first_index: int, N: Optional[int] = None) -> tuple:
        """Terms starting at OEIS index ``first_index``, i.e. re-based so that
        ``a(first_index)`` becomes ``x_1``."""
        skip = first_index - self.offset
        if skip < 0:
            raise DataError(f"{self.oeis_id} starts at index {self.offset}, not {first_index}")
        out = self.terms[skip:]
        if N is not None:
            if len(out) < N:
                raise DataError(f"{self.oeis_id}: only {len(out)} terms from index {first_index}")
            out = out[:N]
        return out


def parse_bfile(text: str) -> Tuple[int, tuple]:
    """Parse ``index value`` lines; returns (offset, terms)."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise DataError(f"b-file line {lineno}: expected 'index value', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise DataError(f"b-file line {lineno}: non-integer field in {line!r}") from None
    if not pairs:
        raise DataError("b-file contains no terms")
    offset = pairs[0][0]
    for i, (idx, _) in enumerate(pairs):
        if idx != offset + i:
            raise DataError(f"b-file indices not consecutive at index {idx}")
    return offset, tuple(v for _, v in pairs)


def parse_search_json(text: str, oeis_id: str) -> Tuple[int, tuple]:
    """Parse the JSON search endpoint (list or ``{"results": [...]}`` form)."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"search response is not JSON: {exc}") from None
    results = payload.get("results") if isinstance(payload, dict) else payload
    number = int(oeis_id[1:])
    for item in results or []:
        if isinstance(item, dict) and item.get("number") == number:
            try:
                offset = int(str(item["offset"]).split(",")[0])
                terms = tuple(int(v) for v in str(item["data"]).split(",") if v.strip())
            except (KeyError, ValueError) as exc:
                raise DataError(f"search entry for {oeis_id} malformed: {exc}") from None
            if not terms:
                raise DataError(f"search entry for {oeis_id} has no terms")
            return offset, terms
    raise DataError(f"search response has no entry for {oeis_id}")


class OEISClient:
    """Fetch and cache OEIS sequences.

    One request per second at most, one in-flight fetch per id, and a
    descriptive user agent.  ``offline=True`` refuses all network access.
    """

    def __init__(self, cache_dir=None, *, offline: bool = False,
                 transport: Optional[Transport] = None, min_interval: float = 1.0,
                 timeout: float = DEFAULT_TIMEOUT, clock=time.monotonic, sleep=time.sleep):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
        self.offline = offline
        self.transport = transport or urllib_transport
        self.min_interval = min_interval
        self.timeout = timeout
        self._clock = clock
        self._sleep = sleep
        self._last_request = None
        self._rate_lock = threading.Lock()
        self._id_locks: dict = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, oeis_id: str) -> threading.RLock:
        with self._locks_guard:
            return self._id_locks.setdefault(oeis_id, threading.RLock())

    def path(self, oeis_id: str) -> Path:
        return self.cache_dir / f"{normalize_id(oeis_id)}.tsv"

    def _get(self, url: str) -> Tuple[int, str]:
        with self._rate_lock:
            if self._last_request is not None:
                wait = self.min_interval - (self._clock() - self._last_request)
                if wait > 0:
                    self._sleep(wait)
            self._last_request = self._clock()
        log.info("GET %s", url)
        return self.transport(url, self.timeout, {"User-Agent": USER_AGENT})

    def fetch(self, oeis_id: str) -> CachedSequence:
        """Download ``oeis_id`` (b-file first, JSON search as fallback) and cache it."""
        oeis_id = normalize_id(oeis_id)
        if self.offline:
            raise UnavailableError(f"offline mode: not fetching {oeis_id}; use pinned data")
        with self._lock_for(oeis_id):
            url = f"{BASE_URL}/{oeis_id}/b{oeis_id[1:]}.txt"
            status, body = self._get(url)
            if status == 200 and body.strip():
                offset, terms = parse_bfile(body)
            else:
                url = f"{BASE_URL}/search?q=id:{oeis_id}&fmt=json"
                status, body = self._get(url)
                if status != 200:
                    raise TransportError(f"GET {url} returned HTTP {status}")
                offset, terms = parse_search_json(body, oeis_id)
            stamp = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
            seq = CachedSequence(oeis_id, offset, terms, stamp, url)
            self._write(seq)
            return seq

    def _write(self, seq: CachedSequence) -> None:
        path = self.path(seq.oeis_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(seq.render(), encoding="utf-8")
        tmp.replace(path)

    def get_cached(self, oeis_id: str) -> CachedSequence:
        path = self.path(oeis_id)
        with self._lock_for(normalize_id(oeis_id)):
            if not path.exists():
                raise NotFoundError(f"{oeis_id} is not cached in {self.cache_dir}")
            text = path.read_text(encoding="utf-8")
        try:
            return CachedSequence.parse(text, str(path))
        except DataError as exc:
            msg = str(exc)
            if str(path) not in msg:
                msg = f"{path}: {msg}"
            raise DataError(msg) from None

    def get(self, oeis_id: str) -> CachedSequence:
        """Cached copy if present, otherwise fetch.

        Concurrent callers for the same id wait for one another, so only
        the first one touches the network.
        """
        with self._lock_for(normalize_id(oeis_id)):
            try:
                return self.get_cached(oeis_id)
            except NotFoundError:
                return self.fetch(oeis_id)

    def invalidate(self, oeis_id: str) -> None:
        path = self.path(oeis_id)
        with self._lock_for(normalize_id(oeis_id)):
            if not path.exists():
                raise NotFoundError(f"{oeis_id} is not cached in {self.cache_dir}")
            path.unlink()

    def cached_ids(self) -> list:
        if not self.cache_dir.exists():
            return []
        return sorted(p.stem for p in self.cache_dir.glob("A*.tsv"))
