"""Command-line front end.

Exit codes: 0 success, 1 a verification or route-agreement failure, 2 a
usage error (bad arguments, bound exceeded, hypothesis not met).  Data goes
to stdout; diagnostics go to stderr.

An optional JSON config file (``--config PATH`` or ``$PRYMBN_CONFIG``) may set
``enumeration_bound``, ``cache`` (true/false), ``cache_path`` and
``output_format``.  Command-line flags take precedence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .cache import CountCache
from .exactring import rational_to_str
from .pfaffian import class_B_pfaffian
from .prym import (
    HypothesisError,
    MIN_GENUS,
    VanishingSequence,
    beta,
    class_B_closed,
    degree_B,
    general_nonempty,
    iter_rows_for_table,
    n_a,
    prym_tyurin_exponent,
    verify_identities,
)
from .tableaux import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationBoundError,
    InvariantViolation,
    StrictPartition,
    count_sst_formula,
    enumerate_sst,
    render_tableau,
)

CONFIG_ENV = "PRYMBN_CONFIG"
TABLE_COLUMNS = ["g", "a", "beta", "ell", "weight", "coeff", "degree", "n_a", "agree"]

log = logging.getLogger("prymbn")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    output_format: str = "text"
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    cache: bool = False
    cache_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        if self.enumeration_bound < 1:
            raise UsageError("enumeration bound must be at least 1")

    def count_cache(self) -> CountCache:
        return CountCache(self.cache_path, enabled=self.cache)


def load_config(args: argparse.Namespace) -> CliConfig:
    path = args.config or os.environ.get(CONFIG_ENV)
    data = {}
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}")
        unknown = set(data) - {"output_format", "enumeration_bound", "cache", "cache_path"}
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    cfg = CliConfig(**data)
    if args.format is not None:
        cfg.output_format = args.format
    if args.bound is not None:
        cfg.enumeration_bound = args.bound
    if args.cache is not None:
        cfg.cache = args.cache
    if args.cache_path is not None:
        cfg.cache_path = args.cache_path
    cfg.__post_init__()
    return cfg


# -- argument parsing -------------------------------------------------------


def parse_sequence(text: str) -> VanishingSequence:
    try:
        values = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"vanishing sequence {text!r}: expected comma-separated integers")
    if any(v < 0 for v in values):
        raise UsageError(f"vanishing sequence {text!r}: entries must be nonnegative")
    if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
        raise UsageError(
            f"vanishing sequence {text!r}: entries must be strictly increasing "
            "(ascending, e.g. 0,1,3)"
        )
    return VanishingSequence(values)


def parse_shape(text: str) -> StrictPartition:
    try:
        parts = tuple(int(t) for t in text.split(",")) if text else ()
    except ValueError:
        raise UsageError(f"shape {text!r}: expected comma-separated integers")
    if any(p <= 0 for p in parts):
        raise UsageError(f"shape {text!r}: parts must be positive")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise UsageError(
            f"shape {text!r}: parts must be strictly decreasing (descending, e.g. 4,2,1)"
        )
    return StrictPartition(parts)


def parse_range(text: str) -> range:
    """``"lo..hi"`` (inclusive) or a single integer; ``lo > hi`` is empty."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"range {text!r}: expected LO..HI")


def check_genus(g: int) -> int:
    if g < MIN_GENUS:
        raise UsageError(f"genus must be at least {MIN_GENUS}, got {g}")
    return g


# -- output ----------------------------------------------------------------


def emit(
    cfg: CliConfig,
    out,
    text: Sequence[str],
    record,
    header: Sequence[str],
    rows: Sequence[Sequence],
) -> None:
    if cfg.output_format == "json":
        out.write(json.dumps(record, indent=2) + "\n")
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for line in text:
            out.write(line + "\n")


def seq_text(a: VanishingSequence) -> str:
    return a.key()


def aligned(header: Sequence[str], rows: Sequence[Sequence]) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


# -- commands ---------------------------------------------------------------


def cmd_beta(args, cfg, out) -> int:
    g, a = check_genus(args.g), parse_sequence(args.a)
    b = beta(g, a)
    nonempty = general_nonempty(g, a)
    verdict = "nonempty" if nonempty else "empty"
    text = [
        f"beta(g={g}, a={a}) = {b}",
        f"general triple: {verdict} (prediction for general (C, epsilon, P))",
    ]
    record = {"g": g, "a": list(a.values), "beta": b, "general_nonempty": nonempty}
    emit(cfg, out, text, record, ["g", "a", "beta", "general_nonempty"],
         [[g, seq_text(a), b, str(nonempty).lower()]])
    return 0


def cmd_class(args, cfg, out) -> int:
    g, a = check_genus(args.g), parse_sequence(args.a)
    methods = ["closed", "pfaffian"] if args.method == "both" else [args.method]
    classes = {}
    for m in methods:
        classes[m] = class_B_closed(g, a) if m == "closed" else class_B_pfaffian(g, a)
    text = []
    for m, c in classes.items():
        line = f"B(g={g}, a={a}) = {c}  [{m}]"
        if c.is_zero() and a.weight > g - 1:
            line += f"  (codim {a.weight} exceeds g-1 = {g - 1})"
        text.append(line)
    record = {"g": g, "a": list(a.values)}
    record.update({m: c.to_json() for m, c in classes.items()})
    agree = None
    if len(classes) == 2:
        agree = classes["closed"] == classes["pfaffian"]
        text.append("AGREE" if agree else "DISAGREE")
        record["agree"] = agree
    rows = [[g, seq_text(a), m, c.codim, rational_to_str(c.coeff)] for m, c in classes.items()]
    emit(cfg, out, text, record, ["g", "a", "method", "codim", "coeff"], rows)
    return 1 if agree is False else 0


def cmd_degree(args, cfg, out) -> int:
    g, a = check_genus(args.g), parse_sequence(args.a)
    b = beta(g, a)
    d = degree_B(g, a)
    note = f"beta={b}: finite point count" if b == 0 else (
        f"beta={b}: degree of the class, not a point count"
    )
    record = {"g": g, "a": list(a.values), "beta": b, "degree": rational_to_str(d),
              "point_count": b == 0}
    emit(cfg, out, [f"deg B(g={g}, a={a}) = {rational_to_str(d)}", note], record,
         ["g", "a", "beta", "degree", "point_count"],
         [[g, seq_text(a), b, rational_to_str(d), str(b == 0).lower()]])
    return 0


def cmd_exponent(args, cfg, out) -> int:
    g, a = check_genus(args.g), parse_sequence(args.a)
    try:
        e = prym_tyurin_exponent(g, a)
    except HypothesisError as exc:
        raise UsageError(str(exc))
    count = n_a(a)
    text = [f"e(g={g}, a={a}) = {e}", f"n_a = {count}"]
    if e != count:
        text.append("DISAGREE")
    record = {"g": g, "a": list(a.values), "exponent": e, "n_a": count, "agree": e == count}
    emit(cfg, out, text, record, ["g", "a", "exponent", "n_a", "agree"],
         [[g, seq_text(a), e, count, str(e == count).lower()]])
    return 0 if e == count else 1


def cmd_na(args, cfg, out) -> int:
    a = parse_sequence(args.a)
    values = {}
    if args.method in ("formula", "both"):
        values["formula"] = n_a(a, "formula")
    if args.method in ("bruteforce", "both"):
        values["bruteforce"] = n_a(
            a, "bruteforce", counter=_brute_counter(cfg)
        )
    distinct = set(values.values())
    if len(distinct) == 1:
        text = [f"n_a(a={a}) = {distinct.pop()}"]
    else:
        text = [f"n_a(a={a}) = {v}  [{m}]" for m, v in values.items()] + ["DISAGREE"]
    agree = len(set(values.values())) == 1
    record = {"a": list(a.values), **{f"n_a_{m}": v for m, v in values.items()}}
    emit(cfg, out, text, record, ["a", "method", "n_a"],
         [[seq_text(a), m, v] for m, v in values.items()])
    return 0 if agree else 1


def _brute_counter(cfg: CliConfig):
    cache = cfg.count_cache()

    def counter(shape: StrictPartition) -> int:
        return cache.count(shape, cfg.enumeration_bound)

    return counter


def cmd_tableaux(args, cfg, out) -> int:
    shape = parse_shape(args.shape)
    if args.action == "count":
        formula = count_sst_formula(shape)
        brute = _brute_counter(cfg)(shape)
        text = [f"shape {shape}: formula: {formula}", f"shape {shape}: brute force: {brute}"]
        if formula != brute:
            text.append("DISAGREE")
        record = {"shape": list(shape.parts), "formula": formula, "bruteforce": brute}
        emit(cfg, out, text, record, ["shape", "formula", "bruteforce"],
             [[shape.key(), formula, brute]])
        return 0 if formula == brute else 1
    tableaux = list(enumerate_sst(shape, cfg.enumeration_bound))
    if args.action == "enumerate":
        text = [json.dumps([list(r) for r in t.rows], separators=(",", ":")) for t in tableaux]
    else:
        text = []
        for k, t in enumerate(tableaux):
            if k:
                text.append("")
            text.append(render_tableau(t))
    record = [t.to_json() for t in tableaux]
    rows = [[k + 1, shape.key(), "/".join(" ".join(map(str, r)) for r in t.rows)]
            for k, t in enumerate(tableaux)]
    emit(cfg, out, text, record, ["index", "shape", "rows"], rows)
    return 0


def cmd_verify(args, cfg, out) -> int:
    if args.max_weight < 0:
        raise UsageError("--max-weight must be nonnegative")
    if args.max_weight > cfg.enumeration_bound:
        raise UsageError(
            f"--max-weight {args.max_weight} exceeds the enumeration bound "
            f"{cfg.enumeration_bound}"
        )
    counter = _brute_counter(cfg) if args.trust_cache else None
    report = verify_identities(args.max_weight, cfg.enumeration_bound, counter)
    text = [f"verify max_weight={report.max_weight}: checked {report.checked} sequences, "
            f"{len(report.failures)} failures"]
    for f in report.failures:
        text.append("counterexample: " + json.dumps(f, separators=(",", ":")))
    text.append("PASS" if report.passed else "FAIL")
    header = ["a", "weight", "degree", "n_a", "sst_formula", "sst_bruteforce",
              "coeff_closed", "coeff_pfaffian", "ok"]
    rows = [[seq_text(r.a), r.a.weight, rational_to_str(r.degree), r.n_a, r.sst_formula,
             r.sst_bruteforce, rational_to_str(r.class_closed.coeff),
             rational_to_str(r.class_pfaffian.coeff), str(r.ok).lower()]
            for r in report.rows]
    emit(cfg, out, text, report.to_json(with_rows=True), header, rows)
    if not report.passed:
        for f in report.failures:
            print(f"verification failed for a=({','.join(map(str, f['a']))}): {', '.join(f['checks'])}",
                  file=sys.stderr)
        return 1
    return 0


def cmd_table(args, cfg, out) -> int:
    g_range = parse_range(args.g)
    weights = parse_range(args.weight)
    for g in g_range:
        check_genus(g)
    if weights and weights.start < 0:
        raise UsageError("weights must be nonnegative")
    if weights and weights[-1] > cfg.enumeration_bound:
        raise UsageError(
            f"weight {weights[-1]} exceeds the enumeration bound {cfg.enumeration_bound}"
        )
    counter = _brute_counter(cfg)
    rows = []
    all_agree = True
    for g, a in iter_rows_for_table(g_range, weights):
        closed = class_B_closed(g, a)
        agree = closed == class_B_pfaffian(g, a)
        all_agree &= agree
        rows.append([g, seq_text(a), beta(g, a), a.ell, a.weight,
                     rational_to_str(closed.coeff),
                     rational_to_str(factorial(a.weight) * closed.coeff),
                     n_a(a, "bruteforce", counter=counter), str(agree).lower()])
    record = [dict(zip(TABLE_COLUMNS, r)) for r in rows]
    for rec in record:
        rec["a"] = [int(v) for v in rec["a"].split(",")]
        rec["agree"] = rec["agree"] == "true"
    emit(cfg, out, aligned(TABLE_COLUMNS, rows), record, TABLE_COLUMNS, rows)
    return 0 if all_agree else 1


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None,
                        help="output format (default: text)")
    common.add_argument("--bound", type=int, default=None,
                        help=f"enumeration bound in cells (default {DEFAULT_ENUMERATION_BOUND})")
    common.add_argument("--cache", dest="cache", action="store_true", default=None,
                        help="memoize brute-force tableau counts on disk")
    common.add_argument("--no-cache", dest="cache", action="store_false")
    common.add_argument("--cache-path", default=None,
                        help="cache file (default: $PRYMBN_CACHE_DIR or per-user data dir)")
    common.add_argument("--config", default=None, help="JSON config file")

    parser = argparse.ArgumentParser(
        prog="prymbn",
        description="Invariants of pointed Prym-Brill-Noether loci in exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version=f"prymbn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def genus_seq(p):
        p.add_argument("-g", type=int, required=True, help="genus (>= 2)")
        p.add_argument("-a", required=True, help="vanishing sequence, ascending, e.g. 0,1,3")

    genus_seq(add("beta", cmd_beta, "expected dimension and emptiness verdict"))
    p = add("class", cmd_class, "class B(g,a) as a multiple of xi^|a|")
    genus_seq(p)
    p.add_argument("--method", choices=["closed", "pfaffian", "both"], default="closed")
    genus_seq(add("degree", cmd_degree, "degree of B(g,a)"))
    genus_seq(add("exponent", cmd_exponent, "Prym-Tyurin exponent (needs beta = 1)"))
    p = add("na", cmd_na, "tableau number n_a")
    p.add_argument("-a", required=True, help="vanishing sequence, ascending")
    p.add_argument("--method", choices=["formula", "bruteforce", "both"], default="both")
    p = add("tableaux", cmd_tableaux, "standard shifted tableaux of a shape")
    p.add_argument("-s", "--shape", required=True, help="strict partition, descending, e.g. 4,2,1")
    p.add_argument("action", choices=["count", "enumerate", "render"])
    p = add("verify", cmd_verify, "sweep the identities up to a weight")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--trust-cache", action="store_true",
                   help="reuse cached brute-force counts instead of recomputing")
    p = add("table", cmd_table, "batch table over genus and weight ranges")
    p.add_argument("--g", required=True, help="genus range LO..HI")
    p.add_argument("--weight", required=True, help="weight range LO..HI")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args)
        return args.func(args, cfg, out)
    except (UsageError, EnumerationBoundError) as exc:
        print(f"prymbn {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"prymbn {args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
