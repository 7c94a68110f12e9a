"""Command-line interface.

Every command prints one JSON document (the sets command prints JSON
lines) with a top-level schema version, byte-deterministic for a fixed
input: keys are sorted and separators fixed.  Exit codes: 0 success, 1
invalid input, 2 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .classify import certify_pair, verdict_to_json
from .cycles import minimal_partition, partition_to_json
from .graphs import (
    GraphError,
    TooManyVerticesError,
    VerticalGraph,
    VphtError,
    graph_from_json,
    make_vertical_graph,
)
from .persistence import (
    Direction,
    build_filtration,
    compute_verbose_diagram,
    diagram_to_json,
    hash_signature,
    vpht_signature,
)
from .search import collision_sets, colliding_graphs, compute_metrics, set_to_json

SCHEMA = 1
_BENCH_CAP = 8


def _parse_edges(text: str) -> list[tuple[int, int]]:
    """Parse "1-4,2-5" into vertex pairs."""
    edges = []
    if not text:
        return edges
    for part in text.split(","):
        a, sep, b = part.strip().partition("-")
        if not sep:
            raise GraphError(f"bad edge {part!r}, expected the form 1-4")
        try:
            edges.append((int(a), int(b)))
        except ValueError as exc:
            raise GraphError(f"bad edge {part!r}: {exc}") from None
    return edges


def _load_graph(args, graph_attr: str = "graph") -> VerticalGraph:
    path = getattr(args, graph_attr, None)
    if path is not None:
        try:
            with open(path, "rb") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise GraphError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path} is not valid JSON: {exc}") from None
        return graph_from_json(obj)
    if args.n is None:
        raise GraphError("pass --graph FILE or --n N with --edges")
    return make_vertical_graph(args.n, _parse_edges(args.edges or ""))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _add_single_graph_args(sub) -> None:
    sub.add_argument("--graph", help="path to a graph JSON file")
    sub.add_argument("--n", type=int, help="vertex count for inline --edges")
    sub.add_argument("--edges", help="inline edge list, e.g. 1-4,2-5")
    sub.add_argument("--out", help="write output to a file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vpht")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("diagram", help="verbose diagram in one direction")
    _add_single_graph_args(p)
    p.add_argument("--direction", choices=["up", "down"], required=True)

    p = subs.add_parser("signature", help="both diagrams and the 64-bit hash")
    _add_single_graph_args(p)

    p = subs.add_parser("collide", help="all graphs sharing the signature")
    _add_single_graph_args(p)
    p.add_argument("--ignore-dangling", action="store_true")

    p = subs.add_parser("sets", help="all collision sets of a universe")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base-edges", default="", help="edges every graph must contain")
    p.add_argument("--ignore-dangling", action="store_true")
    p.add_argument("--exclude-common", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", help="write output to a file instead of stdout")

    for name in ("partition", "classify"):
        p = subs.add_parser(
            name,
            help="alternating-cycle partition of a pair"
            if name == "partition"
            else "full pair certificate",
        )
        p.add_argument("--g1", required=True, help="path to the first graph")
        p.add_argument("--g2", required=True, help="path to the second graph")
        if name == "partition":
            p.add_argument("--exclude-common", action="store_true")
        p.add_argument("--out", help="write output to a file instead of stdout")

    p = subs.add_parser("bench", help="time one full universe scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--force", action="store_true", help="allow n beyond 8")
    p.add_argument("--out", help="write output to a file instead of stdout")

    return parser


def _load_pair(args) -> tuple[VerticalGraph, VerticalGraph]:
    class _One:
        def __init__(self, path):
            self.graph = path
            self.n = None
            self.edges = None

    return _load_graph(_One(args.g1)), _load_graph(_One(args.g2))


def _run(args) -> int:
    if args.command == "diagram":
        g = _load_graph(args)
        d = compute_verbose_diagram(build_filtration(g, Direction(args.direction)))
        _emit(_dumps({"schema": SCHEMA, **diagram_to_json(d)}) + "\n", args.out)
        return 0

    if args.command == "signature":
        g = _load_graph(args)
        sig = vpht_signature(g)
        obj = {
            "schema": SCHEMA,
            "n": g.n,
            "hash": f"0x{hash_signature(sig):016x}",
            "up": diagram_to_json(sig.up),
            "down": diagram_to_json(sig.down),
        }
        _emit(_dumps(obj) + "\n", args.out)
        return 0

    if args.command == "collide":
        g = _load_graph(args)
        found = colliding_graphs(g, ignore_dangling=args.ignore_dangling)
        obj = {
            "schema": SCHEMA,
            "n": g.n,
            "count": len(found),
            "graphs": [[list(e) for e in m.edges] for m in found],
        }
        _emit(_dumps(obj) + "\n", args.out)
        return 0

    if args.command == "sets":
        sets = collision_sets(
            args.n,
            base_edges=_parse_edges(args.base_edges),
            ignore_dangling=args.ignore_dangling,
            jobs=args.jobs,
        )
        lines = [
            _dumps(
                {
                    "schema": SCHEMA,
                    **set_to_json(
                        compute_metrics(s, exclude_common=args.exclude_common)
                    ),
                }
            )
            for s in sets
        ]
        _emit("".join(line + "\n" for line in lines), args.out)
        return 0

    if args.command == "partition":
        g1, g2 = _load_pair(args)
        p = minimal_partition(g1, g2, exclude_common=args.exclude_common)
        _emit(_dumps({"schema": SCHEMA, **partition_to_json(p)}) + "\n", args.out)
        return 0

    if args.command == "classify":
        g1, g2 = _load_pair(args)
        v = certify_pair(g1, g2)
        _emit(_dumps({"schema": SCHEMA, **verdict_to_json(v)}) + "\n", args.out)
        return 0

    if args.command == "bench":
        if args.n < 3:
            raise GraphError("bench needs at least 3 vertices")
        if args.n > _BENCH_CAP and not args.force:
            raise TooManyVerticesError(
                f"bench beyond {_BENCH_CAP} vertices needs --force"
            )
        jobs = args.jobs
        if jobs is None:
            jobs = max(1, int(os.environ.get("VPHT_JOBS", "1")))
        start = time.perf_counter()
        sets = collision_sets(args.n, jobs=jobs)
        seconds = time.perf_counter() - start
        graphs = 1 << (args.n * (args.n - 1) // 2)
        obj = {
            "schema": SCHEMA,
            "n": args.n,
            "jobs": jobs,
            "graphs": graphs,
            "sets": len(sets),
            "seconds": round(seconds, 6),
            "graphs_per_second": round(graphs / seconds, 3) if seconds else None,
        }
        _emit(_dumps(obj) + "\n", args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return _run(args)
    except TooManyVerticesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (VphtError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
