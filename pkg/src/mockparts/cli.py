"""``mockparts`` command line with the coeffs, verify, enumerate and excess subcommands.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 enumeration cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import mocktheta as mt
from .partitions import (
    CLASS_TAGS,
    ENV_ENUM_CAP,
    HARD_ENUM_CAP,
    EnumerationCapError,
    default_enum_cap,
    enumerate_odd_ferrers,
    enumerate_partitions,
    rows_with_two,
    stats,
)
from .qseries import BivariateSeries
from .verify import (
    ALIASES,
    DEFAULT_ENUM_CAP,
    REGISTRY,
    UnknownCheckError,
    beck_excess_nu,
    beck_excess_omega,
    resolve_names,
    run_check,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DEFAULT_ORDER = 200
FORMATS = ("text", "json", "csv")
FERRERS_CLASSES = ("odd_ferrers", "odd_ferrers_distinct")


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, no spaces, integers only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text_table(header: Sequence[str], rows) -> str:
    rows = [[("" if v is None else str(v)) for v in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _emit(fmt: str, header, rows, json_obj) -> str:
    if fmt == "json":
        return dump_json(json_obj) + "\n"
    if fmt == "csv":
        return _csv(header, [["" if v is None else v for v in r] for r in rows])
    return _text_table(header, rows)


def _env_cap(default: int) -> int:
    if os.environ.get(ENV_ENUM_CAP) is None:
        return default
    try:
        return default_enum_cap()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_cap_arg(cap: int | None, default: int) -> int:
    if cap is None:
        return _env_cap(default)
    if cap < 0 or cap > HARD_ENUM_CAP:
        raise UsageError(f"--enum-cap must lie in 0..{HARD_ENUM_CAP}")
    return cap


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_coeffs(args) -> tuple[int, str]:
    name = args.name
    if name not in mt.CATALOG:
        listing = "\n".join(f"  {e.name:16s} {e.arity:10s} {e.description}" for e in mt.CATALOG.values())
        raise UsageError(f"unknown series {name!r}; the catalog is:\n{listing}")
    N = args.N if args.N is not None else (args.order if args.order is not None else DEFAULT_ORDER)
    if N < 0:
        raise UsageError("order must be non-negative")
    s = mt.build(name, N)
    if isinstance(s, BivariateSeries):
        terms = sorted(s.terms().items(), key=lambda kv: (kv[0][1], kv[0][0]))
        flat = s.eval_z(1).coeffs
        obj = {
            "name": name,
            "order": N,
            "coeffs": [str(c) for c in flat],
            "bivariate": {"terms": [[m, n, str(c)] for (m, n), c in terms]},
        }
        rows = [[n, m, c] for (m, n), c in terms]
        return EXIT_OK, _emit(args.format, ["q_exponent", "z_exponent", "coeff"], rows, obj)
    obj = {"name": name, "order": N, "coeffs": [str(c) for c in s.coeffs]}
    rows = [[n, c] for n, c in enumerate(s.coeffs)]
    return EXIT_OK, _emit(args.format, ["exponent", "coeff"], rows, obj)


def cmd_verify(args) -> tuple[int, str]:
    try:
        names = resolve_names(args.checks)
    except UnknownCheckError as exc:
        known = ", ".join(list(REGISTRY) + list(ALIASES))
        raise UsageError(f"unknown check {exc.args[0]!r}; known checks: {known}") from None
    if args.order is not None and args.order < 1:
        raise UsageError("--order must be at least 1")
    cap = _check_cap_arg(args.enum_cap, DEFAULT_ENUM_CAP)
    reports = [run_check(n, args.order, cap, label=raw if raw in ALIASES else None) for n, raw in _with_labels(args.checks, names)]
    status = EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED
    header = ["name", "order", "status", "exponent", "lhs", "rhs", "elapsed_ms"]
    rows = []
    for r in reports:
        d = r.first_discrepancy
        rows.append([r.name, r.order_checked, r.status, d and d.exponent, d and d.lhs, d and d.rhs, r.to_dict()["elapsed_ms"]])
    if args.format == "text":
        out = _text_table(header[:-1], [row[:-1] for row in rows])
        for r in reports:
            if not r.ok:
                out += f"\n{r.name}: {r.detail}\n"
                out += "".join(f"  q^{e}: {a} vs {b}\n" for e, a, b in r.context)
        return status, out
    return status, _emit(args.format, header, rows, {"checks": [r.to_dict() for r in reports]})


def _with_labels(raw_names, names):
    # keep an alias as the report label when it was requested by alias
    raw = [] if not raw_names or list(raw_names) == ["all"] else list(raw_names)
    by_target = {ALIASES.get(r, r): r for r in raw}
    return [(n, by_target.get(n, n)) for n in names]


def cmd_enumerate(args) -> tuple[int, str]:
    tag = args.cls
    if tag not in CLASS_TAGS and tag not in FERRERS_CLASSES:
        known = ", ".join(list(CLASS_TAGS) + list(FERRERS_CLASSES))
        raise UsageError(f"unknown class {tag!r}; known classes: {known}")
    if args.n < 0:
        raise UsageError("n must be non-negative")
    cap = _check_cap_arg(args.enum_cap, HARD_ENUM_CAP)
    if tag in FERRERS_CLASSES:
        diagrams = enumerate_odd_ferrers(args.n, distinct_lambda=tag.endswith("distinct"), cap=cap)
        header = ["diagram", "k", "lambda", "size", "rows", "columns", "rank", "rows_with_two"]
        rows = [
            [str(F), F.k, " ".join(map(str, F.lam)), F.size, F.length, F.columns, F.rank, rows_with_two(F)]
            for F in diagrams
        ]
        obj = {
            "class": tag,
            "n": args.n,
            "items": [
                {"k": F.k, "lambda": list(F.lam), "rows": F.length, "columns": F.columns, "rank": F.rank, "rows_with_two": rows_with_two(F)}
                for F in diagrams
            ],
        }
        return EXIT_OK, _emit(args.format, header, rows, obj)
    parts = enumerate_partitions(args.n, tag, cap=cap)
    fields = ["length", "odd_parts", "even_parts", "rank", "m2_rank", "durfee_side", "L", "mult_of_1"]
    rows, items = [], []
    for p in parts:
        st = stats(p)
        vals = [getattr(st, f) for f in fields]
        rows.append([str(p)] + vals)
        items.append({"parts": list(p.parts), **dict(zip(fields, vals))})
    return EXIT_OK, _emit(args.format, ["partition"] + fields, rows, {"class": tag, "n": args.n, "items": items})


def cmd_excess(args) -> tuple[int, str]:
    fam, n = args.family, args.n
    if n < 0:
        raise UsageError("n must be non-negative")
    cap = _check_cap_arg(args.enum_cap, DEFAULT_ENUM_CAP)
    if fam == "phi":
        d = mt.F1(n) - mt.F2(n)
        rows = [[k, c] for k, c in enumerate(d.coeffs)]
        obj = {"family": fam, "order": n, "coeffs": [str(c) for c in d.coeffs]}
        status = EXIT_OK if all(c >= 0 for c in d.coeffs) else EXIT_FAILED
        return status, _emit(args.format, ["n", "f1_minus_f2"], rows, obj)
    rows, items, ok = [], [], True
    if fam == "omega":
        header = ["n", "enumeration", "series", "rows_with_two"]
        for k in range(1, n + 1):
            r = beck_excess_omega(k, cap)
            ok &= r.agree
            rows.append([k, r.via_enumeration, r.via_series, r.via_ferrers])
            items.append(dict(zip(header, rows[-1])))
    else:
        header = ["n", "enumeration", "series", "ranks", "odd_parts_minus_one", "parity", "eight_pentagonal"]
        for k in range(1, n + 1):
            r = beck_excess_nu(k, cap)
            ok &= r.agree
            parity = "odd" if r.via_series % 2 else "even"
            flag = mt.is_eight_times_pentagonal(k)
            ok &= flag == (parity == "odd")
            rows.append([k, r.via_enumeration, r.via_series, r.via_ranks, r.via_odd_parts, parity, "yes" if flag else "no"])
            items.append(dict(zip(header, rows[-1][:5])) | {"parity": parity, "eight_pentagonal": flag})
    obj = {"family": fam, "n": n, "rows": items}
    return (EXIT_OK if ok else EXIT_FAILED), _emit(args.format, header, rows, obj)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mockparts", description="Mock theta series and the partition identities they satisfy.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("coeffs", help="print the coefficients of a catalog series")
    c.add_argument("name")
    c.add_argument("N", nargs="?", type=int, help="truncation order (same as --order)")
    c.add_argument("--order", type=int)
    c.add_argument("--format", choices=FORMATS, default="text")
    c.set_defaults(func=cmd_coeffs)

    v = sub.add_parser("verify", help="run registered identity checks")
    v.add_argument("checks", nargs="*", help="check names, aliases, or 'all' (default)")
    v.add_argument("--order", type=int, help="override every check's series order")
    v.add_argument("--enum-cap", type=int, help=f"largest n enumerated (default {DEFAULT_ENUM_CAP}, at most {HARD_ENUM_CAP})")
    v.add_argument("--format", choices=FORMATS, default="text")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list a partition class or odd Ferrers diagrams of size n")
    e.add_argument("n", type=int)
    e.add_argument("cls", metavar="class")
    e.add_argument("--enum-cap", type=int)
    e.add_argument("--format", choices=FORMATS, default="text")
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("excess", help="Beck-type excess tables")
    x.add_argument("family", choices=("omega", "nu", "phi"))
    x.add_argument("n", type=int, help="largest n (omega, nu) or order (phi)")
    x.add_argument("--enum-cap", type=int)
    x.add_argument("--format", choices=FORMATS, default="text")
    x.set_defaults(func=cmd_excess)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except UsageError as exc:
        print(f"mockparts: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"mockparts: {exc}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
