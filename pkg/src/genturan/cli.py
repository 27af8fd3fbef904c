"""Command-line front end.

Every run prints one JSON report ``{"config": ..., "data": ..., "meta": ...}``.
``data`` is deterministic; ``meta`` holds the version and worker count, plus
wall time when ``--timing`` is given. Validation failures exit with status 2
and a report of the form ``{"error": {"type": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .blowup import b_parameter
from .codecs import parse_graph_text, to_graph6
from .counting import count_cliques, count_copies, find_disjoint_cliques
from .cover import SetFamily, cover_decomposition, verify_cover
from .exceptions import GuardError, ParseError, PreconditionError
from .formulas import (
    ProblemParams,
    alpha_coefficients,
    ex_closed_value,
    extremal_construction,
    lemma_hgt_value,
    x_exponent,
)
from .graphs import Hypergraph, make_turan, partial_blowup
from .oracle import UniversalVertices, brute_force_ex, verify_theorem1, verify_universal_vertices
from .patterns import named_pattern

WORKERS_ENV = "GENTURAN_WORKERS"
EXIT_OK = 0
EXIT_INVALID = 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Unsupported(ValueError):
    pass


def _read_text(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def _graph(value: str) -> Hypergraph:
    return parse_graph_text(_read_text(value))


def _pattern(args) -> Hypergraph:
    if getattr(args, "pattern_graph", None):
        return _graph(args.pattern_graph)
    if getattr(args, "pattern", None):
        return named_pattern(args.pattern)
    raise UsageError("a pattern is required (--pattern NAME or --pattern-graph GRAPH)")


def graph_record(h: Hypergraph) -> dict:
    rec = {"n": h.n, "p": h.p, "edges": h.edge_lists()}
    if h.p == 2 and h.n <= 62:
        rec["graph6"] = to_graph6(h)
    return rec


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return value


# --- subcommands -----------------------------------------------------------
# Each handler returns the data section and, for --format graph6/csv, a text
# rendering (None when the format does not apply).


def cmd_construct(args):
    if args.kind == "extremal":
        h = extremal_construction(ProblemParams(args.n, args.s, args.r, args.t, args.p))
    elif args.kind == "turan":
        h = make_turan(args.n, args.k).to_hypergraph()
    else:
        h = partial_blowup(_graph(args.graph), args.U, args.m)
    text = to_graph6(h) + "\n" if args.format == "graph6" else None
    return graph_record(h), text


def cmd_count(args):
    host = _graph(args.graph)
    if args.clique is not None:
        return {"count": count_cliques(host, args.clique)}, None
    return {"count": count_copies(_pattern(args), host)}, None


def cmd_check(args):
    witness = find_disjoint_cliques(_graph(args.graph), args.t, args.r)
    return {"free": witness is None, "witness": witness}, None


def cmd_exponent(args):
    return {"x": x_exponent(args.s, args.r, args.t)}, None


def cmd_ex(args):
    if args.lemma:
        return {"value": lemma_hgt_value(args.s, args.r, args.t)}, None
    return {"value": ex_closed_value(ProblemParams(args.n, args.s, args.r, args.t))}, None


def cmd_alpha(args):
    table = alpha_coefficients(_pattern(args), args.t)
    entries = [
        {"graph": graph_record(e.graph), "alpha": e.alpha, "deletion_sets": [list(d) for d in e.deletion_sets]}
        for e in table
    ]
    text = None
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "n", "alpha", "deletion_sets"])
        for e in table:
            w.writerow([to_graph6(e.graph), e.graph.n, e.alpha, " ".join("-".join(map(str, d)) or "{}" for d in e.deletion_sets)])
        text = buf.getvalue()
    return {"entries": entries}, text


def cmd_bparam(args):
    if args.m is None:
        args.m = args.t
    res = b_parameter(_pattern(args), args.t, args.r, args.m)
    data = {"b": res.b, "saturated": res.saturated, "multiplicity": res.multiplicity}
    if res.certificate is not None:
        data["U"] = list(res.certificate.U)
        data["witnesses"] = [{"W": list(W), "packing": pk} for W, pk in res.certificate.witnesses.items()]
    return data, None


def cmd_cover(args):
    try:
        obj = json.loads(_read_text(args.family))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    if not isinstance(obj, dict) or not {"n", "r", "sets"} <= obj.keys():
        raise ParseError('expected an object with keys "n", "r", "sets"', 0)
    family = SetFamily.from_lists(obj["n"], obj["r"], obj["sets"])
    pair = cover_decomposition(family, args.t)
    return {**pair.as_dict(), "valid": verify_cover(family, args.t, pair)}, None


def _oracle_kwargs(args) -> dict:
    return {"mode": args.mode, "workers": args.workers, "override_guards": args.override_guards}


def cmd_oracle(args):
    constraints = UniversalVertices(args.universal) if args.universal else None
    res = brute_force_ex(
        args.n, _pattern(args), args.t, args.r, constraints=constraints, witness_cap=args.witness_cap, **_oracle_kwargs(args)
    )
    data = {
        "value": res.value,
        "witnesses": [graph_record(w) for w in res.witnesses],
        "scanned": res.scanned,
        "pruned": res.pruned,
        "mode": res.mode,
    }
    text = None
    if args.format == "graph6":
        text = "".join(to_graph6(w) + "\n" for w in res.witnesses)
    return data, text


def cmd_verify(args):
    if args.kind == "universal":
        ok = verify_universal_vertices(args.n, _pattern(args), args.t, args.r, **_oracle_kwargs(args))
        return {"holds": ok}, None
    if args.s is None:
        raise UsageError("verify theorem1 needs --s")
    rep = verify_theorem1(range(args.n_min, args.n_max + 1), args.s, args.r, args.t, **_oracle_kwargs(args))
    rows = [
        {"n": row.n, "oracle": row.oracle, "formula": row.formula, "equal": row.equal, "witness": to_graph6(row.witness)}
        for row in rep.rows
    ]
    text = None
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["n", "oracle", "formula", "equal", "witness"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    data = {"rows": rows, "lower_bound_holds": rep.lower_bound_holds, "equality_onset": rep.equality_onset}
    return data, text


# --- parser ----------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "graph6", "csv"], default="json", help="output format (default json)")
    common.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    common.add_argument("--override-guards", action="store_true", help="allow searches beyond the size guards")
    common.add_argument("--timing", action="store_true", help="add wall time to the meta section")
    common.add_argument("-o", "--output", default=None, help="write the report to this file instead of stdout")

    def pattern_flags(p):
        p.add_argument("--pattern", help="named pattern: K<s>[^p], E<k>[^p], P<k>, C<k>, M<k>, S<k>")
        p.add_argument("--pattern-graph", help="pattern as graph6, hypergraph JSON or a file holding either")

    def graph_flag(p, required=True):
        p.add_argument("-g", "--graph", required=required, help="graph6, hypergraph JSON, a file path, or - for stdin")

    parser = _Parser(prog="genturan", description="Generalized Turán numbers ex(n, H, tK_r^p) on small instances.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build a graph")
    p.add_argument("kind", choices=["extremal", "turan", "blowup"])
    for flag in ("--n", "--s", "--r", "--t", "--k", "--m"):
        p.add_argument(flag, type=int)
    p.add_argument("--p", type=int, default=2, help="uniformity (extremal only)")
    p.add_argument("--U", type=_int_list, default=[], help="blown-up vertices, comma separated")
    graph_flag(p, required=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", parents=[common], help="count pattern copies or cliques in a host")
    graph_flag(p)
    pattern_flags(p)
    p.add_argument("--clique", type=int, help="count q-cliques instead of a pattern")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", parents=[common], help="test a host for t disjoint r-cliques")
    p.add_argument("kind", choices=["free"])
    graph_flag(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("exponent", parents=[common], help="the tail order x(s, r, t)")
    for flag in ("--s", "--r", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=cmd_exponent)

    p = sub.add_parser("ex", parents=[common], help="closed-form value of ex(n, K_s, tK_r)")
    p.add_argument("--n", type=int)
    for flag in ("--s", "--r", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--lemma", action="store_true", help="use C(tr-1, s), valid for s > t(r-1)")
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("alpha", parents=[common], help="coefficients of the reduced objective")
    pattern_flags(p)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("bparam", parents=[common], help="blowup exponent b(H, t, r) with certificate")
    pattern_flags(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="blowup multiplicity (default t)")
    p.set_defaults(func=cmd_bparam)

    p = sub.add_parser("cover", parents=[common], help="cover pair for a family with no t disjoint members")
    p.add_argument("--family", required=True, help='JSON {"n":..,"r":..,"sets":[[..],..]} or a file holding it')
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    def oracle_flags(p):
        p.add_argument("--mode", choices=["auto", "raw", "dedup"], default="auto")
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive ex(n, H, tK_r^p)")
    p.add_argument("--n", type=int, required=True)
    pattern_flags(p)
    oracle_flags(p)
    p.add_argument("--witness-cap", type=int, default=16)
    p.add_argument("--universal", type=int, default=0, help="only hosts with at least this many universal vertices")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="oracle-versus-formula reports")
    p.add_argument("kind", choices=["theorem1", "universal"])
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, help="host order (universal)")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=7)
    pattern_flags(p)
    oracle_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _require(args, names: Sequence[str]) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.subcommand} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


_REQUIRED = {
    ("construct", "extremal"): ["n", "s", "r", "t"],
    ("construct", "turan"): ["n", "k"],
    ("construct", "blowup"): ["graph", "m"],
    ("verify", "universal"): ["n"],
}

_TEXT_FORMATS = {"construct": {"graph6"}, "oracle": {"graph6"}, "alpha": {"csv"}, "verify": {"csv"}}


def _resolved_config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output", "timing")}
    return {"subcommand": cfg.pop("subcommand"), **cfg}


def _error_report(exc: Exception) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["offset"] = exc.offset
    if isinstance(exc, PreconditionError) and exc.witness is not None:
        err["witness"] = exc.witness
    return {"error": err}


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    output = None
    try:
        args = parser.parse_args(argv)
        output = args.output
        if args.workers is None:
            args.workers = _default_workers()
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        _require(args, _REQUIRED.get((args.subcommand, getattr(args, "kind", None)), []))
        if args.format != "json" and args.format not in _TEXT_FORMATS.get(args.subcommand, ()):
            raise _Unsupported(f"--format {args.format} is not available for {args.subcommand}")
        start = time.perf_counter()
        data, text = args.func(args)
        elapsed = time.perf_counter() - start
    except (ValueError, GuardError, OSError) as exc:
        _emit(json.dumps(_error_report(exc), separators=(",", ":")) + "\n", output)
        return EXIT_INVALID
    if text is not None:
        _emit(text, output)
        return EXIT_OK
    meta = {"version": __version__, "workers": args.workers}
    if args.timing:
        meta["elapsed_s"] = round(elapsed, 6)
    report = {"config": _resolved_config(args), "data": data, "meta": meta}
    _emit(json.dumps(report, separators=(",", ":")) + "\n", output)
    return EXIT_OK


def console() -> None:
    sys.exit(main())
