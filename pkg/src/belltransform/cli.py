"""Command-line interface.

Exit status: 0 success, 1 a checked identity failed, 2 usage error,
3 domain error, 4 data error, 5 network unavailable or failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from belltransform import identities
from belltransform.bell_core import bell_table
from belltransform.catalog import default_catalog, parse_records, parse_terms
from belltransform.discovery import (
    DEFAULT_MIN_MATCH,
    Grid,
    RelationHypothesis,
    reproduce_paper_diagram,
    search,
)
from belltransform.errors import (
    BellError,
    DataError,
    DomainError,
    LengthError,
    NotFoundError,
    ShapeError,
    TransportError,
    UnavailableError,
)
from belltransform.oeis import OEISClient, normalize_id
from belltransform.series import Series, power
from belltransform.transform import (
    Bell,
    BellParams,
    apply_word,
    bell_inverse,
    bell_transform,
    named_word,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_DATA, EXIT_NETWORK = range(6)
CONFIG_ENV = "BELLTRANSFORM_CONFIG"
CONFIG_KEYS = ("format", "offline", "cache_dir")

log = logging.getLogger("belltransform")


class UsageError(BellError):
    pass


@dataclass
class OutputRecord:
    command: str
    params: dict
    kind: str  # sequence | table | check | hypotheses | entries | text
    result: Any
    passed: Optional[bool] = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        body = {"command": self.command, "params": _jsonable(self.params),
                "kind": self.kind, "result": _jsonable(self.result)}
        if self.passed is not None:
            body["passed"] = self.passed
        body.update(_jsonable(self.extra))
        return json.dumps(body, indent=2, sort_keys=True)

    def to_plain(self) -> str:
        if self.kind == "sequence":
            return ",".join(str(v) for v in self.result)
        if self.kind == "table":
            return "\n".join(" ".join(str(v) for v in row) for row in self.result)
        if self.kind == "check":
            return "\n".join(r["summary"] for r in self.result)
        if self.kind == "hypotheses":
            if not self.result:
                return "no relation found"
            return "\n".join(h["describe"] for h in self.result)
        if isinstance(self.result, (list, tuple)):
            return "\n".join(str(v) for v in self.result)
        return str(self.result)

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_plain()


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(u) for u in v]
    if isinstance(v, BellParams):
        return [str(u) for u in v.astuple()]
    return v


# Input resolution.


def _client(args) -> OEISClient:
    return OEISClient(args.cache_dir, offline=args.offline)


def read_sequence(text: str, n: Optional[int], args) -> tuple:
    """Resolve ``--input``: a file in record format, an inline comma list,
    a catalog key, or an OEIS id (cache first, then network)."""
    path = Path(text)
    if path.is_file():
        records = parse_records(path.read_text(encoding="utf-8"), str(path))
        if len(records) != 1:
            raise DataError(f"{path}: expected exactly one record, found {len(records)}")
        terms = next(iter(records.values())).terms
        return _cut(terms, n, text)
    if "," in text or text.lstrip("-").replace("/", "").isdigit():
        try:
            terms = parse_terms(text)
        except DataError as exc:
            raise UsageError(str(exc)) from None
        return _cut(terms, n, "inline input")
    catalog = default_catalog()
    if text in catalog:
        entry = catalog.entry(text)
        if n is None:
            if entry.pinned is None:
                raise UsageError(f"--n is required for catalog key {text!r}")
            return entry.pinned
        return catalog.get_prefix(text, n)
    try:
        oeis_id = normalize_id(text)
    except DataError:
        raise UsageError(f"--input {text!r} is not a file, number list, catalog key "
                         f"or OEIS id") from None
    seq = _client(args).get(oeis_id)
    return _cut(tuple(Fraction(t) for t in seq.terms), n, oeis_id)


def _cut(terms: tuple, n: Optional[int], what: str) -> tuple:
    if n is None:
        return terms
    if len(terms) < n:
        raise LengthError(f"{what}: only {len(terms)} terms, asked for {n}")
    return terms[:n]


def _params(text: str) -> BellParams:
    try:
        return BellParams.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --params {text!r}: {exc}") from None


def _check_result(reports) -> list:
    return [{"name": r.name, "params": r.params, "order": r.order, "passed": r.passed,
             "index": r.index, "lhs": r.lhs, "rhs": r.rhs, "summary": r.summary()}
            for r in reports]


def _check_record(sub: str, params: dict, reports) -> OutputRecord:
    reports = list(reports)
    return OutputRecord(f"check {sub}", params, "check", _check_result(reports),
                        passed=all(r.passed for r in reports))


def _hyp(h: RelationHypothesis) -> dict:
    return {"source": h.source, "target": h.target, "word": h.word.encode(),
            "matched": h.matched, "status": h.status, "witness": h.witness,
            "describe": h.describe()}


# Commands.


def cmd_transform(args) -> OutputRecord:
    if (args.params is None) == (args.name is None):
        raise UsageError("give exactly one of --params and --name")
    x = read_sequence(args.input, args.n, args)
    if args.params is not None:
        word = [Bell(_params(args.params))]
        label = {"params": args.params}
    else:
        m = None if args.m is None else Fraction(args.m)
        word = named_word(args.name, m)
        label = {"name": args.name, "m": args.m}
    y = apply_word(word, x)
    if args.n is not None:
        y = y[:args.n]
    return OutputRecord("transform", {**label, "input": args.input, "n": args.n},
                        "sequence", y)


def cmd_inverse(args) -> OutputRecord:
    y = read_sequence(args.input, args.n, args)
    x = bell_inverse(_params(args.params), y)
    return OutputRecord("inverse", {"params": args.params, "input": args.input, "n": args.n},
                        "sequence", x)


def cmd_check(args) -> OutputRecord:
    sub = args.check
    if sub == "gf":
        p = _params(args.params)
        x = read_sequence(args.input, args.n, args)
        y = None if args.target is None else read_sequence(args.target, args.n, args)
        rep = identities.check_gf(p, x, args.n, y=y)
        return _check_record(sub, {"params": args.params, "input": args.input,
                                   "target": args.target, "n": args.n}, [rep])
    if sub == "interpolation":
        p = _params(args.params)
        x = read_sequence(args.input, args.n, args)
        reps = [identities.check_interpolation(p, x, Fraction(args.lam), n)
                for n in range(1, len(x) + 1)]
        return _check_record(sub, {"params": args.params, "input": args.input,
                                   "lambda": args.lam, "n": args.n}, reps)
    if sub == "convolution":
        p = _params(args.params)
        x = read_sequence(args.input, args.n, args)
        N = len(x)
        lhs = identities.convolve_bell(p, x, args.r, N)
        yhat = Series([1] + [p.d * v for v in bell_transform(p, x)])
        rhs = power(yhat, args.r).coeffs[1:]
        rep = identities.compare("convolution", {"p": p.astuple(), "r": args.r}, lhs, rhs,
                               start=1)
        return _check_record(sub, {"params": args.params, "input": args.input,
                                   "r": args.r, "n": args.n}, [rep])
    if sub == "recurrence":
        x = read_sequence(args.input, args.n, args)
        lhs = identities.ab_recurrence(args.a, args.b, x)
        rhs = bell_transform((args.a, args.b, -1, 1), x)
        rep = identities.compare("ab_recurrence", {"a": args.a, "b": args.b}, lhs, rhs,
                               start=1)
        return _check_record(sub, {"a": args.a, "b": args.b, "input": args.input,
                                   "n": args.n}, [rep])
    if sub == "algebraic":
        names = identities.ALGEBRAIC if args.name == "all" else (args.name,)
        if args.name != "all" and args.name not in identities.ALGEBRAIC:
            raise UsageError(f"unknown algebraic check {args.name!r}; "
                             f"choose from {', '.join(identities.ALGEBRAIC)} or all")
        reps = [identities.check_algebraic_gf(name, args.n) for name in names]
        return _check_record(sub, {"name": args.name, "n": args.n}, reps)
    raise UsageError(f"unknown check {sub!r}")


def cmd_bell(args) -> OutputRecord:
    z = read_sequence(args.input, args.n, args)
    table = bell_table(z, len(z))
    rows = [list(table.row(n)) for n in range(1, len(z) + 1)]
    return OutputRecord("bell", {"input": args.input, "n": args.n}, "table", rows)


def cmd_catalog(args) -> OutputRecord:
    catalog = default_catalog()
    if args.catalog == "list":
        return OutputRecord("catalog list", {}, "entries",
                            [catalog.entry(k).describe() for k in catalog.keys()])
    entry = catalog.entry(args.key)
    n = args.n
    if n is None:
        n = len(entry.pinned) if entry.pinned is not None else 10
    terms = catalog.get_prefix(args.key, n)
    return OutputRecord("catalog show", {"key": args.key, "n": n}, "sequence", terms,
                        extra={"entry": entry.describe(), "provenance": entry.provenance})


def cmd_oeis(args) -> OutputRecord:
    client = _client(args)
    if args.oeis == "fetch":
        seq = client.fetch(args.id)
        return OutputRecord("oeis fetch", {"id": seq.oeis_id}, "sequence", seq.terms,
                            extra={"offset": seq.offset, "source": seq.source})
    action = args.action
    if action == "list":
        return OutputRecord("oeis cache list", {"cache_dir": str(client.cache_dir)},
                            "entries", client.cached_ids())
    if args.id is None:
        raise UsageError(f"oeis cache {action} needs an id")
    if action == "show":
        seq = client.get_cached(args.id)
        return OutputRecord("oeis cache show", {"id": seq.oeis_id}, "sequence", seq.terms,
                            extra={"offset": seq.offset, "fetched_at": seq.fetched_at})
    client.invalidate(args.id)
    return OutputRecord("oeis cache invalidate", {"id": normalize_id(args.id)}, "text",
                        f"removed {normalize_id(args.id)}")


def cmd_discover(args) -> OutputRecord:
    if args.diagram:
        hyps = reproduce_paper_diagram(N=args.n, min_match=args.min_match)
        rec = OutputRecord("discover", {"diagram": True, "n": args.n,
                                        "min_match": args.min_match},
                           "hypotheses", [_hyp(h) for h in hyps])
        rec.passed = all(h.status == "verified-on-prefix" for h in hyps)
        return rec
    if args.source is None or args.target is None:
        raise UsageError("discover needs --source and --target, or --diagram")
    catalog = default_catalog()

    def load(key: str) -> tuple:
        if key in catalog:
            return catalog.data_prefix(key, args.n)
        return read_sequence(key, None, args)[:args.n]

    hyps = search(load(args.source), load(args.target), Grid(), min_match=args.min_match,
                  max_bell=args.max_bell, source_name=args.source, target_name=args.target)
    return OutputRecord("discover", {"source": args.source, "target": args.target,
                                     "n": args.n, "min_match": args.min_match,
                                     "max_bell": args.max_bell},
                        "hypotheses", [_hyp(h) for h in hyps])


# Parser.


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="belltransform",
                                 description="Exact Bell transforms of integer sequences.")
    ap.add_argument("--format", choices=("plain", "json"), default=None)
    ap.add_argument("--offline", action="store_true", default=None,
                    help="never touch the network")
    ap.add_argument("--cache-dir", default=None, help="OEIS cache directory")
    ap.add_argument("--config", default=None, help="JSON file with format/offline/cache_dir")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def n_arg(p, required=False, default=None):
        p.add_argument("--n", type=int, required=required, default=default)

    p = sub.add_parser("transform", help="apply a Bell transform or a named transform")
    p.add_argument("--params", help="a,b,c,d")
    p.add_argument("--name", help="named transform (invert, exp, ncp, revert, ...)")
    p.add_argument("--m", default=None, help="parameter of a named transform")
    p.add_argument("--input", required=True)
    n_arg(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("inverse", help="invert a Bell transform")
    p.add_argument("--params", required=True)
    p.add_argument("--input", required=True)
    n_arg(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("check", help="verify an identity exactly")
    csub = p.add_subparsers(dest="check", required=True)
    q = csub.add_parser("gf")
    q.add_argument("--params", required=True)
    q.add_argument("--input", required=True)
    q.add_argument("--target", help="check against this sequence instead of Y(input)")
    n_arg(q, required=True)
    q = csub.add_parser("interpolation")
    q.add_argument("--params", required=True)
    q.add_argument("--input", required=True)
    q.add_argument("--lambda", dest="lam", default="1/2")
    n_arg(q, required=True)
    q = csub.add_parser("convolution")
    q.add_argument("--params", required=True)
    q.add_argument("--input", required=True)
    q.add_argument("--r", type=int, default=2)
    n_arg(q, required=True)
    q = csub.add_parser("recurrence")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--input", required=True)
    n_arg(q, required=True)
    q = csub.add_parser("algebraic")
    q.add_argument("--name", default="all")
    n_arg(q, default=12)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bell", help="print the partial Bell triangle of a sequence")
    p.add_argument("--input", required=True)
    n_arg(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("catalog", help="browse the sequence catalog")
    csub = p.add_subparsers(dest="catalog", required=True)
    csub.add_parser("list")
    q = csub.add_parser("show")
    q.add_argument("key")
    n_arg(q)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("oeis", help="fetch and cache OEIS entries")
    csub = p.add_subparsers(dest="oeis", required=True)
    q = csub.add_parser("fetch")
    q.add_argument("id")
    q = csub.add_parser("cache")
    q.add_argument("action", choices=("list", "show", "invalidate"))
    q.add_argument("id", nargs="?")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("discover", help="search for transform relations")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--diagram", action="store_true",
                   help="verify the bicubic-map diagram edges")
    p.add_argument("--min-match", type=int, default=DEFAULT_MIN_MATCH)
    p.add_argument("--max-bell", type=int, default=1, choices=(1, 2))
    n_arg(p, default=12)
    p.set_defaults(func=cmd_discover)
    return ap


def _apply_config(args) -> None:
    path = args.config or os.environ.get(CONFIG_ENV)
    conf = {}
    if path:
        try:
            conf = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise DataError(f"config {path}: {exc}") from None
        if not isinstance(conf, dict) or set(conf) - set(CONFIG_KEYS):
            raise DataError(f"config {path}: expected an object with keys {CONFIG_KEYS}")
    for key, default in (("format", "plain"), ("offline", False), ("cache_dir", None)):
        if getattr(args, key) is None:
            setattr(args, key, conf.get(key, default))
    if args.format not in ("plain", "json"):
        raise DataError(f"config: format must be plain or json, got {args.format!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _apply_config(args)
        record = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnavailableError, TransportError) as exc:
        print(f"network error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except (DataError, LengthError, NotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (DomainError, ShapeError, ZeroDivisionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(record.render(args.format))
    if record.passed is False:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
