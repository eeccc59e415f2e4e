"""Command-line entry point: ``qbent analyze | construct | verify | search``.

Every command prints exactly one JSON document on stdout; diagnostics go to
stderr.  Exit codes: 0 success/pass, 1 verification failed, 2 usage or input
error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import __version__
from .constructions import (
    ConstructionError,
    OverlappingSupportsError,
    PlateauedPairSpec,
    extend_linear,
    fix_coordinates,
    glue_disjoint,
    make_diag_squares,
    make_qn,
    minimal_pair,
    mm_plateaued,
    semilinear_quasigroup,
    subspace_modification,
)
from .cyclotomic import InvalidModulusError
from .functions import QFormatError, QFunc, is_balanced, parse_qfunc, point_array, serialize_qfunc
from .metrics import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    correlation_immunity,
    nonlinearity,
    strong_nonlinearity,
    walsh_divisibility_order,
)
from .search import (
    DEFAULT_SCAN_BUDGET,
    SearchTask,
    UnknownTheoremError,
    UnsupportedParamsError,
    class_tables,
    min_distance_in_class,
    parse_predicate,
    verify_theorem,
)
from .spectrum import classify, walsh_transform
from .subspaces import Coset, Subspace

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(doc: dict, out) -> None:
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    out.write(json.dumps(doc, sort_keys=True) + "\n")


def _read_input(path: str) -> QFunc:
    if path == "-":
        return parse_qfunc(sys.stdin.read())
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_qfunc(text)


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(v) for v in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _vectors(text: str) -> List[List[int]]:
    return [_int_list(part) for part in text.split(";") if part.strip()]


# -- analyze ------------------------------------------------------------------


def _histogram_json(hist: dict) -> dict:
    # integer norms in numeric order, then any irrational ones by text
    ints = sorted(k for k in hist if isinstance(k, int))
    others = sorted(k for k in hist if not isinstance(k, int))
    return {str(k): hist[k] for k in ints + others}


def analysis_report(f: QFunc, strong: bool = False, budget: int = DEFAULT_BUDGET, dump: bool = False) -> dict:
    spec = walsh_transform(f)
    cls = classify(f)
    report = {
        "q": f.q,
        "n": f.n,
        "balanced": is_balanced(f),
        "walsh_support_size": spec.support_size,
        "magnitude_histogram": _histogram_json(spec.histogram()),
        "is_bent": cls.is_bent,
        "is_regular": cls.regular,
        "plateaued_s": cls.plateaued_s,
        "dual": serialize_qfunc(cls.dual) if cls.dual is not None else None,
        "cor": correlation_immunity(f),
        "nl": nonlinearity(f),
        "strong_nl": strong_nonlinearity(f, budget=budget) if strong else None,
        "divisibility_order": walsh_divisibility_order(f),
    }
    if dump:
        report["spectrum"] = [str(w) for w in spec.w]
    return report


def cmd_analyze(args, out) -> int:
    f = _read_input(args.input)
    _emit({"command": "analyze", "report": analysis_report(f, args.strong_nl, args.budget, args.dump_spectrum)}, out)
    return EXIT_OK


# -- construct ----------------------------------------------------------------


def _build(args) -> List[tuple]:
    """Return ``[(suffix, text)]`` for the requested construction."""
    name = args.name
    if name == "qn":
        return [("", serialize_qfunc(make_qn(_req(args, "q"), _req(args, "n"))))]
    if name == "diag-squares":
        return [("", serialize_qfunc(make_diag_squares(_req(args, "n"))))]
    if name == "mm-plateaued":
        f = _read_input(_req(args, "f"))
        k = args.k or 0
        return [("", serialize_qfunc(mm_plateaued(_int_list(_req(args, "tau")), _int_list(args.sigma or "0"), f, k)))]
    if name == "extend":
        return [("", serialize_qfunc(extend_linear(_read_input(_req(args, "input")), _int_list(_req(args, "a")))))]
    if name == "fix":
        return [("", serialize_qfunc(fix_coordinates(_read_input(_req(args, "input")), _int_list(_req(args, "a")))))]
    if name == "glue":
        members = [_read_input(p) for p in _req(args, "family")]
        k = _req(args, "k")
        q = members[0].q
        keys = [tuple(int(v) for v in a) for a in point_array(q, k)]
        if len(members) != len(keys):
            raise UsageError(f"glue over k={k} needs {len(keys)} family files, got {len(members)}")
        return [("", serialize_qfunc(glue_disjoint(dict(zip(keys, members)), k)))]
    if name == "modify":
        f = _read_input(_req(args, "input"))
        S = Subspace.span(f.q, f.n, _vectors(_req(args, "basis")))
        rep = _int_list(args.rep) if args.rep else [0] * f.n
        return [("", serialize_qfunc(subspace_modification(f, Coset.of(S, rep), args.c)))]
    if name == "minimal-pair":
        a, b = minimal_pair(PlateauedPairSpec(_req(args, "q"), _req(args, "s"), args.t or 0))
        return [(".a", serialize_qfunc(a)), (".b", serialize_qfunc(b))]
    if name == "semilinear":
        return [("", semilinear_quasigroup(_read_input(_req(args, "b"))).to_text())]
    raise UsageError(f"unknown construction {name!r}")


def _req(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"construct {args.name} needs --{name}")
    return value


def cmd_construct(args, out) -> int:
    pieces = _build(args)
    files = []
    for suffix, text in pieces:
        entry = {"suffix": suffix, "table": text.split("\n")[1]}
        if args.output:
            path = args.output + suffix
            with open(path, "w", encoding="ascii") as fh:
                fh.write(text)
            entry["path"] = path
        else:
            entry["qf"] = text
        files.append(entry)
    header = pieces[0][1].split("\n")[0].split()
    _emit({"command": "construct", "name": args.name, "q": int(header[0]), "n": int(header[1]), "outputs": files}, out)
    return EXIT_OK


# -- verify / search -------------------------------------------------------------


def cmd_verify(args, out) -> int:
    params = {k: getattr(args, k) for k in ("q", "n", "s", "method") if getattr(args, k) is not None}
    report = verify_theorem(args.theorem, params, jobs=args.jobs)
    if args.stable:
        report.pop("elapsed_ms", None)
    _emit({"command": "verify", **report}, out)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def _shard(text: str):
    try:
        index, total = (int(v) for v in text.split("/"))
    except ValueError as exc:
        raise UsageError(f"--shard expects INDEX/TOTAL, got {text!r}") from exc
    return index, total


def cmd_search(args, out) -> int:
    try:
        pred = parse_predicate(args.cls)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    task = SearchTask(args.q, args.n, pred, shard=_shard(args.shard), budget=args.budget)
    doc = {"command": "search", "q": args.q, "n": args.n, "class": pred, "shard": list(task.shard)}
    if args.min_distance:
        doc["summary"] = min_distance_in_class(task, jobs=args.jobs).to_json()
    else:
        tables = class_tables(task, jobs=args.jobs)
        doc["count"] = len(tables)
        shown = tables if args.limit is None else tables[: args.limit]
        doc["tables"] = ["".join(map(str, t)) for t in shown.tolist()]
    _emit(doc, out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qbent", description="Exact analysis and construction of q-ary bent and plateaued functions.")
    p.add_argument("--version", action="version", version=f"qbent {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify a function given as a .qf file")
    a.add_argument("input", help=".qf path or - for stdin")
    a.add_argument("--strong-nl", action="store_true", help="also compute strong nonlinearity (slow)")
    a.add_argument("--dump-spectrum", action="store_true", help="include every Walsh coefficient")
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    c = sub.add_parser("construct", help="build a function and write it in .qf format")
    c.add_argument(
        "name",
        choices=["qn", "diag-squares", "mm-plateaued", "extend", "fix", "glue", "modify", "minimal-pair", "semilinear"],
    )
    c.add_argument("-o", "--output", help="output path (minimal-pair appends .a/.b)")
    c.add_argument("--q", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--c", type=int, default=1)
    c.add_argument("--a", help="comma-separated vector")
    c.add_argument("--tau", help="permutation of F_q^n as comma-separated point indices")
    c.add_argument("--sigma", help="permutation of F_q^k as comma-separated point indices")
    c.add_argument("--f", help=".qf path of the added function")
    c.add_argument("--b", help=".qf path of the Boolean function")
    c.add_argument("--input", help=".qf path of the function to transform")
    c.add_argument("--family", nargs="+", help=".qf paths indexed by F_q^k in point order")
    c.add_argument("--basis", help="subspace basis, vectors separated by ';'")
    c.add_argument("--rep", help="coset representative")

    v = sub.add_parser("verify", help="check a theorem exhaustively at desk scale")
    v.add_argument("theorem")
    v.add_argument("--q", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--method", choices=["brute", "reduced"])
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--stable", action="store_true", help="omit timing so output is byte-stable")

    s = sub.add_parser("search", help="enumerate a class of functions")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--class", dest="cls", default="bent", help="bent | regular-bent | plateaued(s) | balanced | all")
    s.add_argument("--shard", default="0/1")
    s.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--limit", type=int, help="print at most this many tables")
    s.add_argument("--min-distance", action="store_true", help="report pairwise distance summary")
    return p


COMMANDS = {"analyze": cmd_analyze, "construct": cmd_construct, "verify": cmd_verify, "search": cmd_search}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing command")
        return COMMANDS[args.command](args, out)
    except BudgetExceededError as exc:
        print(f"qbent: budget exceeded: {exc}", file=sys.stderr)
        _emit({"error": "budget", "message": str(exc)}, out)
        return EXIT_BUDGET
    except OverlappingSupportsError as exc:
        print(f"qbent: {exc}", file=sys.stderr)
        _emit({"error": "overlapping-supports", "message": str(exc), "pair": [list(a) for a in exc.pair]}, out)
        return EXIT_USAGE
    except UnknownTheoremError as exc:
        print(f"qbent: unknown theorem {exc.args[0]!r}", file=sys.stderr)
        _emit({"error": "usage", "message": f"unknown theorem {exc.args[0]!r}"}, out)
        return EXIT_USAGE
    except (UsageError, QFormatError, ConstructionError, UnsupportedParamsError, InvalidModulusError, ValueError) as exc:
        print(f"qbent: {exc}", file=sys.stderr)
        _emit({"error": "usage", "message": str(exc)}, out)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
