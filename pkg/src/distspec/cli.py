"""Command-line interface: ``distspec {spectrum,classify,verify,enumerate,catalog}``."""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys
from typing import IO, Any, ContextManager, NoReturn

from . import __version__
from .catalog import ENV_VAR, REQUIRED_IDS, load_catalog
from .enumerate import MAX_N_PRUNED, MAX_N_UNRESTRICTED, enumerate_connected
from .errors import CatalogError, DistSpecError, NotConnected, ParseError, TooSmall, Unsupported
from .graph import read_graph6_lines, to_graph6
from .spectra import distance_spectrum

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LINE_FAILURE = 2
EXIT_DISAGREEMENT = 3
EXIT_CORPUS = 4
EXIT_CATALOG = 5

CLASSES = ("tree", "unicyclic", "bicyclic", "split", "chordal", "block")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _g(x: float) -> str:
    from .verify import fmt_float

    return f"{fmt_float(x):.12g}"


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _open_in(path: str | None) -> ContextManager[IO[str]]:
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdin)
    try:
        return open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc}") from exc


def _error_text(exc: Exception) -> str:
    if isinstance(exc, NotConnected):
        return "not connected"
    if isinstance(exc, TooSmall):
        return "too small: need n >= 2"
    return str(exc)


# -- spectrum ---------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace, out: IO[str]) -> int:
    failed = False
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["line", "graph6", "n", "lambda2", "eigenvalues", "error"])
    with _open_in(args.input) as stream:
        for lineno, text, g in read_graph6_lines(stream):
            try:
                if isinstance(g, Exception):
                    raise g
                spec = distance_spectrum(g)
            except DistSpecError as exc:
                failed = True
                err = _error_text(exc)
                if writer:
                    writer.writerow([lineno, text, "", "", "", err])
                elif args.format == "text":
                    out.write(f"{lineno}\t{text}\terror: {err}\n")
                else:
                    out.write(_dump({"line": lineno, "graph6": text, "error": err}) + "\n")
                continue
            vals = [_g(v) for v in spec.values]
            if writer:
                writer.writerow([lineno, text, g.n, _g(spec.lambda2), " ".join(vals), ""])
            elif args.format == "text":
                out.write(f"{lineno}\t{text}\tlambda2={_g(spec.lambda2)}\t{' '.join(vals)}\n")
            else:
                rec = {
                    "line": lineno,
                    "graph6": text,
                    "n": g.n,
                    "lambda2": float(_g(spec.lambda2)),
                    "eigenvalues": [float(v) for v in vals],
                }
                out.write(_dump(rec) + "\n")
    return EXIT_LINE_FAILURE if failed else EXIT_OK


# -- classify ---------------------------------------------------------------


def cmd_classify(args: argparse.Namespace, out: IO[str]) -> int:
    from .verify import classify

    catalog = load_catalog()
    failed = False
    with _open_in(args.input) as stream:
        for lineno, text, g in read_graph6_lines(stream):
            try:
                if isinstance(g, Exception):
                    raise g
                rec = {"line": lineno, **classify(g, catalog).to_dict()}
                rec["graph6"] = text
            except DistSpecError as exc:
                failed = True
                rec = {"line": lineno, "graph6": text, "error": _error_text(exc)}
            if args.format == "text":
                if "error" in rec:
                    out.write(f"{lineno}\t{text}\terror: {rec['error']}\n")
                else:
                    out.write(
                        f"{lineno}\t{text}\tlambda2={rec['lambda2']:.12g}\tbelow_half={rec['below_half']}\t"
                        f"{' '.join(rec['clauses'])}\n"
                    )
            else:
                out.write(_dump(rec) + "\n")
    return EXIT_LINE_FAILURE if failed else EXIT_OK


# -- verify -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    from .verify import THEOREMS, file_corpus_info, theorem_corpus, verify_theorem

    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    if (args.input is None) == (args.nmax is None):
        raise UsageError("give exactly one of --nmax or --input")
    if args.input is not None:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            out.write(_dump({"theorem": args.theorem, "error": f"cannot read corpus: {exc}"}) + "\n")
            return EXIT_CORPUS
        text = data.decode("ascii", errors="replace")
        corpus = read_graph6_lines(io.StringIO(text))
        info = file_corpus_info(args.input, data)
    else:
        try:
            corpus, info = theorem_corpus(args.theorem, args.nmax)
        except Unsupported as exc:
            raise UsageError(str(exc)) from exc
    report = verify_theorem(args.theorem, corpus, info, jobs=args.jobs)
    out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    if report.counts.get("corpus_errors"):
        return EXIT_CORPUS
    return EXIT_DISAGREEMENT if report.disagreements else EXIT_OK


# -- enumerate --------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace, out: IO[str]) -> int:
    from .verify import class_corpus

    limit = MAX_N_UNRESTRICTED if args.cls is None else MAX_N_PRUNED
    if not 1 <= args.n <= limit:
        raise UsageError(f"--n must be in 1..{limit}" + ("" if args.cls else " (or use --class)"))
    gen = enumerate_connected(args.n) if args.cls is None else class_corpus(args.cls, args.n)
    for g in gen:
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


# -- catalog ----------------------------------------------------------------


def cmd_catalog(args: argparse.Namespace, out: IO[str]) -> int:
    try:
        cat = load_catalog()
    except CatalogError as exc:
        out.write(_dump({"ok": False, "entry": exc.entry, "error": str(exc)}) + "\n")
        return EXIT_CATALOG
    if args.list:
        for e in cat:
            exp = "" if e.expected is None else f"\t{e.expected}"
            out.write(f"{e.id}\t{e.graph6}\t{_g(e.lambda2)}{exp}\n")
        return EXIT_OK
    if args.show is not None:
        if args.show not in cat:
            raise UsageError(f"no catalog entry {args.show!r}")
        e = cat[args.show]
        rec = {
            "id": e.id,
            "graph6": e.graph6,
            "n": e.graph.n,
            "m": e.graph.m,
            "lambda2": float(_g(e.lambda2)),
            "expected": e.expected,
            "edges": [f"{u}-{v}" for u, v in e.graph.edges()],
        }
        out.write(json.dumps(rec, indent=2) + "\n")
        return EXIT_OK
    from .verify import sporadic_crosscheck

    caps = {} if args.derive_nmax is None else {c: args.derive_nmax for c in ("unicyclic", "bicyclic", "split")}
    cross = sporadic_crosscheck(cat, caps)
    ok = all(v["ok"] for v in cross.values())
    rec = {
        "ok": ok,
        "source": cat.source,
        "entries": len(cat),
        "required": len(REQUIRED_IDS),
        "lambda2": {e.id: float(_g(e.lambda2)) for e in cat},
        "derivation": cross,
    }
    out.write(json.dumps(rec, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_CATALOG


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="distspec", description="Distance spectra and lambda2 characterizations of small graphs.")
    p.add_argument("--version", action="version", version=f"distspec {__version__}")
    p.add_argument("--catalog", help=f"catalog file (default: ${ENV_VAR} or the bundled file)")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", help="distance spectrum and lambda2 of each graph6 line")
    s.add_argument("--input", "-i", help="graph6 file (default stdin)")
    s.add_argument("--format", choices=("json", "csv", "text"), default="json")
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("classify", help="classify each graph6 line")
    c.add_argument("--input", "-i", help="graph6 file (default stdin)")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="check a characterization over a corpus")
    v.add_argument("--theorem", required=True)
    v.add_argument("--nmax", type=int, help="generate all class members with 2 <= n <= NMAX")
    v.add_argument("--input", "-i", help="graph6 corpus file instead of generation")
    v.add_argument("--jobs", "-j", type=int, default=1, help="worker processes")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="one graph6 line per isomorphism class of connected graphs")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--class", dest="cls", choices=CLASSES)
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("catalog", help="inspect or validate the sporadic-graph catalog")
    grp = k.add_mutually_exclusive_group(required=True)
    grp.add_argument("--validate", action="store_true", help="recheck entries and rederive the sporadic sets")
    grp.add_argument("--list", action="store_true")
    grp.add_argument("--show", metavar="ID")
    k.add_argument("--derive-nmax", type=int, help="cap the derivation order (faster, weaker check)")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            parser.error("--jobs must be >= 1")
    except SystemExit as exc:  # usage errors, --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    saved = os.environ.get(ENV_VAR)
    if args.catalog:
        # workers spawned by --jobs inherit the override through the environment
        os.environ[ENV_VAR] = args.catalog
    try:
        return _run(args)
    finally:
        if saved is None:
            os.environ.pop(ENV_VAR, None)
        else:
            os.environ[ENV_VAR] = saved


def _run(args: argparse.Namespace) -> int:
    out: IO[str]
    try:
        out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    except OSError as exc:
        print(f"distspec: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"distspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CatalogError as exc:
        print(f"distspec: catalog error: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except ParseError as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_LINE_FAILURE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
