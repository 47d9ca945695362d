"""Command-line front end: ``turanlab analyze | reduce | search | verify``.

Exit codes: 0 clean, 1 usage or input error, 2 a certified bound was violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .bounds import BIPARTITE_BOUNDS, BOUND_IDS, VIOLATED, GraphProfile, evaluate
from .counting import count
from .errors import CapExceeded, DomainError, Graph6Error, PreconditionError, TuranLabError
from .graph import Graph, bipartition
from .graph6 import read_graph6_file, to_graph6
from .reduce import erdos_bipartite_subgraph, gyori_c4free_reduction
from .detect import contains_c4
from .search import extremal_number, extremal_number_bipartite, sweep_bounds

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2
COUNT_KINDS = ("w3", "p3", "c4", "c6", "girth")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TURANLAB_THREADS", "1")))
    except ValueError:
        return 1


def _bound_ids(text: str | None) -> list[str]:
    if not text:
        return []
    if text == "all":
        return list(BOUND_IDS)
    ids = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [b for b in ids if b not in BOUND_IDS]
    if unknown:
        raise DomainError(f"unknown bound id(s): {', '.join(unknown)}")
    return sorted(ids)


def _count_kinds(text: str | None) -> list[str]:
    if not text:
        return []
    kinds = [s.strip() for s in text.split(",") if s.strip()]
    for k in kinds:
        if k not in COUNT_KINDS and not (k.startswith("w") and k[1:].isdigit() and int(k[1:]) >= 1):
            raise DomainError(f"unknown count kind {k!r}")
    return kinds


def _report(command: str, inputs: list[str], results: list, timing: list[float], deterministic: bool) -> dict:
    out: dict = {}
    if not deterministic:
        out["tool_version"] = __version__
    out["command"] = command
    out["inputs"] = inputs
    out["results"] = results
    if not deterministic:
        out["timing"] = timing
    return out


def _emit(obj: dict, stream) -> None:
    json.dump(obj, stream, indent=2, sort_keys=False)
    stream.write("\n")


def _load(paths: list[str]) -> list[tuple[str, Graph]]:
    graphs = []
    for path in paths:
        try:
            graphs.extend(read_graph6_file(path))
        except OSError as exc:
            raise Graph6Error(f"{path}: cannot read ({exc.strerror or exc})") from exc
    return graphs


def _analyze_one(item: tuple[str, Graph], kinds: list[str], ids: list[str]) -> tuple[dict, float]:
    gid, g = item
    start = time.perf_counter()
    prof = GraphProfile(g)
    view = bipartition(g) if any(b in BIPARTITE_BOUNDS or b == "qplus_leading" for b in ids) else None
    counts = [count(g, k).to_dict() for k in kinds]
    bounds = []
    for bid in ids:
        bounds.extend(r.to_dict() for r in evaluate(bid, g, view, profile=prof))
    entry = {"graph": gid, "graph6": to_graph6(g), "n": g.n, "e": g.e, "counts": counts, "bounds": bounds}
    return entry, time.perf_counter() - start


def cmd_analyze(args, out) -> int:
    kinds = _count_kinds(args.counts)
    ids = _bound_ids(args.bounds)
    graphs = _load(args.files)
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        done = list(pool.map(lambda item: _analyze_one(item, kinds, ids), graphs))
    results = [entry for entry, _ in done]
    violated = any(b["verdict"] == VIOLATED for r in results for b in r["bounds"])
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["graph", "graph6", "item", "name", "value", "observed", "verdict", "slack"])
        for r in results:
            for c in r["counts"]:
                writer.writerow([r["graph"], r["graph6"], "count", c["kind"], c["value"], "", "", ""])
            for b in r["bounds"]:
                writer.writerow(
                    [r["graph"], r["graph6"], "bound", b["bound_id"], b["bound_value"], b["observed"], b["verdict"], b["slack"]]
                )
    else:
        _emit(_report("analyze", [gid for gid, _ in graphs], results, [t for _, t in done], args.deterministic), out)
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_reduce(args, out) -> int:
    graphs = _load([args.file])
    results, timing = [], []
    for gid, g in graphs:
        start = time.perf_counter()
        if args.method == "erdos":
            res, view = erdos_bipartite_subgraph(g)
            checks = {
                "bipartite": bipartition(res.output) is not None,
                "half_degree": all(2 * res.output.degree(x) >= g.degree(x) for x in range(g.n)),
                "half_edges": 2 * res.kept_edges >= g.e,
            }
            entry = {"graph": gid, **res.to_dict(), "class_a": sorted(view.class_a), "checks": checks}
        else:
            try:
                res = gyori_c4free_reduction(g)
            except PreconditionError as exc:
                print(f"error: {gid}: {exc}; witness 6-cycle {list(exc.witness or ())}", file=sys.stderr)
                return EXIT_INPUT
            checks = {"c4_free": not contains_c4(res.output), "half_edges": 2 * res.kept_edges >= g.e}
            entry = {"graph": gid, **res.to_dict(), "checks": checks}
        results.append(entry)
        timing.append(time.perf_counter() - start)
    _emit(_report(f"reduce --method {args.method}", [gid for gid, _ in graphs], results, timing, args.deterministic), out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    start = time.perf_counter()
    if args.bip:
        a, b = args.bip
        res = extremal_number_bipartite(a, b, args.forbid)
    else:
        res = extremal_number(args.n, args.forbid)
    _emit(_report("search", [], [res.to_dict()], [time.perf_counter() - start], args.deterministic), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = _bound_ids(args.bounds)
    start = time.perf_counter()
    rep = sweep_bounds(args.n_max, ids, workers=_threads())
    _emit(_report("verify", [], [rep.to_dict()], [time.perf_counter() - start], args.deterministic), out)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="turanlab", description="Counts, bounds and exact Turán numbers for small graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    det = argparse.ArgumentParser(add_help=False)
    det.add_argument("--deterministic", action="store_true", help="omit version and timing fields")

    an = sub.add_parser("analyze", parents=[det], help="counts and bound verdicts for graph6 files")
    an.add_argument("files", nargs="+")
    an.add_argument("--counts", default="", help="comma list of w3,p3,c4,c6,girth (or w<k>)")
    an.add_argument("--bounds", default="", help="comma list of bound ids, or 'all'")
    fmt = an.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="flat CSV table")
    an.set_defaults(func=cmd_analyze)

    rd = sub.add_parser("reduce", parents=[det], help="bipartite or C4-free reduction")
    rd.add_argument("file")
    rd.add_argument("--method", choices=("erdos", "gyori"), required=True)
    rd.set_defaults(func=cmd_reduce)

    se = sub.add_parser("search", parents=[det], help="exact ex(n,H) or ex(a,b,H)")
    host = se.add_mutually_exclusive_group(required=True)
    host.add_argument("--n", type=int)
    host.add_argument("--bip", type=int, nargs=2, metavar=("A", "B"))
    se.add_argument("--forbid", choices=("C4", "C6", "Q", "Qplus", "K3"), required=True)
    se.set_defaults(func=cmd_search)

    ve = sub.add_parser("verify", parents=[det], help="sweep bounds over all graphs up to n-max")
    ve.add_argument("--n-max", type=int, required=True)
    ve.add_argument("--bounds", default="all")
    ve.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"error: refused: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Graph6Error, DomainError, TuranLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Invoke the CLI in-process and capture stdout; handy for tests and notebooks."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
