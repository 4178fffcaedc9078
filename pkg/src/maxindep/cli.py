"""Command-line interface.  graph6 lines flow on stdin/stdout; logs go to stderr."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator, TextIO

from maxindep import _kernels
from maxindep.constructions import CliqueStarProfile, build_clique_star, build_F, build_G, enumerate_family
from maxindep.counting import count_mis, enumerate_mis
from maxindep.graph import Graph, Graph6Error, GraphError, encode_graph6, remove_edge
from maxindep.iso import classify_extremal
from maxindep.transform import TransformError, moon_moser_saturate, reduce_edges_trace
from maxindep.verify import (
    check_lemma3,
    default_jobs,
    emit_table,
    ingest_graph6,
    reports_csv,
    reports_json,
    verify_theorem1,
    verify_theorem2,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_FLAGS = 3
EXIT_GRAPH6 = 4
EXIT_INVALID = 5

log = logging.getLogger("maxindep")


class FlagError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxindep", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit extremal graphs as graph6")
    c.add_argument("--kind", required=True, choices=["G", "F", "family", "clique-star"])
    c.add_argument("--n", type=_positive)
    c.add_argument("--alpha", type=_positive)
    c.add_argument("--sizes", type=_sizes, help="clique orders s0,s1,... (clique-star only)")

    c = sub.add_parser("count", help="alpha and number of maximum independent sets per input graph")
    c.add_argument("--per-vertex", action="store_true")
    c.add_argument("--enumerate", action="store_true", help="also list the maximum independent sets")
    c.add_argument("--input", type=argparse.FileType("r"), default=None)

    c = sub.add_parser("classify", help="match input graphs against the extremal constructions")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--alpha", type=_positive, required=True)
    c.add_argument("--input", type=argparse.FileType("r"), default=None)

    c = sub.add_parser("transform", help="twin saturation or edge reduction")
    c.add_argument("operation", choices=["twin-saturate", "reduce-edges"])
    c.add_argument("--anchor", type=int, default=None, help="anchor vertex (default: best anchor)")
    c.add_argument("--all-steps", action="store_true", help="emit graph6 after every step, not just the final graph")
    c.add_argument("--input", type=argparse.FileType("r"), default=None)

    c = sub.add_parser("verify", help="exhaustive verification over small graphs")
    c.add_argument("target", choices=["theorem1", "theorem2", "lemma3"])
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--alpha", type=_positive)
    c.add_argument("--input", type=argparse.FileType("r"), default=None, help="graph6 catalog instead of internal generation")
    c.add_argument("--skip-malformed", action="store_true")
    c.add_argument("--jobs", type=_positive, default=None)
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.add_argument("--timing", action="store_true", help="fill the elapsed field (breaks byte-identical output)")

    c = sub.add_parser("table", help="closed-form values and family sizes")
    c.add_argument("--max-n", type=_positive, required=True)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--verify-max-n", type=int, default=0, help="also run theorem2 verification up to this order")
    c.add_argument("--jobs", type=_positive, default=None)
    return p


def _graphs(stream: TextIO | None) -> Iterator[Graph]:
    return ingest_graph6(stream if stream is not None else sys.stdin)


def _emit(out: TextIO, line: str) -> None:
    out.write(line + "\n")
    out.flush()


def cmd_construct(args, out: TextIO) -> int:
    if args.kind == "clique-star":
        if args.sizes is None:
            raise FlagError("--kind clique-star needs --sizes")
        if args.n is not None or args.alpha is not None:
            raise FlagError("--n/--alpha are implied by --sizes")
        graphs = [build_clique_star(CliqueStarProfile(args.sizes))]
    else:
        if args.sizes is not None:
            raise FlagError("--sizes only applies to --kind clique-star")
        if args.n is None or args.alpha is None:
            raise FlagError(f"--kind {args.kind} needs --n and --alpha")
        if args.kind == "G":
            graphs = [build_G(args.n, args.alpha)]
        elif args.kind == "F":
            graphs = [build_F(args.n, args.alpha)]
        else:
            graphs = enumerate_family(args.n, args.alpha)
    for g in graphs:
        _emit(out, encode_graph6(g))
    return EXIT_OK


def cmd_count(args, out: TextIO) -> int:
    for g in _graphs(args.input):
        res = count_mis(g, per_vertex=args.per_vertex)
        parts = [str(g.n), str(res.alpha), str(res.num_mis)]
        if args.per_vertex:
            parts.append(",".join(map(str, res.per_vertex)))
        if args.enumerate:
            parts.extend("{" + ",".join(map(str, sorted(s))) + "}" for s in enumerate_mis(g))
        _emit(out, " ".join(parts))
    return EXIT_OK


def cmd_classify(args, out: TextIO) -> int:
    for g in _graphs(args.input):
        _emit(out, json.dumps(classify_extremal(g, args.n, args.alpha).to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_transform(args, out: TextIO) -> int:
    err = sys.stderr
    for idx, g in enumerate(_graphs(args.input)):
        if args.anchor is not None and not 0 <= args.anchor < g.n:
            raise FlagError(f"--anchor {args.anchor} out of range for n={g.n}")
        start = count_mis(g)
        if args.operation == "twin-saturate":
            steps = moon_moser_saturate(g, args.anchor)
            err.write(f"# graph {idx}: {encode_graph6(g)} alpha={start.alpha} num_mis={start.num_mis}\n")
            err.write("step\tx\ty\talpha\tnum_mis\n")
            for i, st in enumerate(steps, 1):
                res = count_mis(st.after)
                err.write(f"{i}\t{st.x}\t{st.y}\t{res.alpha}\t{res.num_mis}\n")
                if args.all_steps:
                    _emit(out, encode_graph6(st.after))
            final = steps[-1].after if steps else g
            if not (args.all_steps and steps):
                _emit(out, encode_graph6(final))
        else:
            final, removed = reduce_edges_trace(g, args.anchor)
            err.write(f"# graph {idx}: {encode_graph6(g)} alpha={start.alpha} num_mis={start.num_mis}\n")
            err.write("step\tu\tv\talpha\tnum_mis\n")
            cur = g
            for i, (u, v) in enumerate(removed, 1):
                cur = remove_edge(cur, u, v)
                res = count_mis(cur)
                err.write(f"{i}\t{u}\t{v}\t{res.alpha}\t{res.num_mis}\n")
                if args.all_steps:
                    _emit(out, encode_graph6(cur))
            if not (args.all_steps and removed):
                _emit(out, encode_graph6(final))
        err.flush()
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    jobs = args.jobs or default_jobs()
    source = None
    if args.input is not None:
        source = list(ingest_graph6(args.input, skip_malformed=args.skip_malformed))
    if args.target == "lemma3":
        if args.alpha is not None:
            raise FlagError("lemma3 scans every alpha; drop --alpha")
        violations = check_lemma3(args.n, source)
        doc = {"n": args.n, "violations": [v.__dict__ for v in violations], "pass": not violations}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_OK if not violations else EXIT_FAILED
    fn = verify_theorem2 if args.target == "theorem2" else verify_theorem1
    reports = fn(args.n, args.alpha, source=source, jobs=jobs)
    out.write(reports_json(reports, args.timing) if args.format == "json" else reports_csv(reports))
    for r in reports:
        if not r.passed:
            log.error("%s fails at n=%d alpha=%d: offending %s", r.theorem, r.n, r.alpha, r.offending())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_table(args, out: TextIO) -> int:
    if args.max_n > 62:
        raise FlagError("--max-n is limited to 62")
    if args.verify_max_n > min(args.max_n, 10):
        raise FlagError("--verify-max-n must not exceed --max-n or 10")
    out.write(emit_table(args.max_n, args.format, args.verify_max_n, args.jobs or default_jobs()))
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "count": cmd_count,
    "classify": cmd_classify,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    log.debug("kernel backend: %s", _kernels.BACKEND)
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except FlagError as exc:
        sys.stderr.write(f"maxindep: {exc}\n")
        return EXIT_FLAGS
    except Graph6Error as exc:
        sys.stderr.write(f"maxindep: malformed graph6: {exc}\n")
        return EXIT_GRAPH6
    except (GraphError, TransformError, ValueError) as exc:
        sys.stderr.write(f"maxindep: {exc}\n")
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())
