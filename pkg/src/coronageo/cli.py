"""Command-line interface: compute invariants, build corona products, run
claim verifications over corpora, and tabulate census invariants.

Exit codes: 0 success; 1 a verification reported FAIL; 2 usage, parse, or
domain errors; 3 a search cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CENSUS_COUNTS, CorpusSpec, census_lines, parse_range
from .errors import CapExceeded, DomainError, FormatError
from .formats import encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .geodesic import geodetic_number, interval, k_geodetic_number
from .graphs import Graph, bfs_distances, corona, diameter, extreme_vertices, mask_of, vertex_tuple
from .harness import Caps, THEOREM_IDS, THEOREMS, run_corpus, summarize, summary_json
from .steiner import steiner_distance, steiner_hull, steiner_number

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

MEASURES = ("g", "g2", "gk", "s", "diameter", "extreme", "interval",
            "steiner-distance", "steiner-hull")


def _jsonline(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _load_one_graph(g6: str | None, edges_path: str | None, what: str) -> Graph:
    if (g6 is None) == (edges_path is None):
        raise DomainError(f"provide exactly one source for {what} (graph6 or edge-list file)")
    if g6 is not None:
        return parse_graph6(g6)
    return parse_edge_list(Path(edges_path).read_text())


def _load_compute_graphs(args: argparse.Namespace) -> list[Graph]:
    sources = [s for s in (args.g6, args.g6_file, args.edges) if s is not None]
    if len(sources) != 1:
        raise DomainError("provide exactly one of --g6, --g6-file, --edges")
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.g6_file is not None:
        return [parse_graph6(ln) for ln in Path(args.g6_file).read_text().splitlines() if ln.strip()]
    return [parse_edge_list(Path(args.edges).read_text())]


def _caps(args: argparse.Namespace) -> Caps:
    if getattr(args, "max_n", None) is not None:
        m = args.max_n
        if m < 1:
            raise DomainError("--max-n must be positive")
        return Caps(geodetic=m, steiner=m, terminals=m)
    return Caps()


def _parse_vertices(text: str | None) -> list[int]:
    if not text:
        raise DomainError("this measure needs --vertices (comma-separated list)")
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise DomainError(f"bad --vertices value {text!r}") from None


def _measure_payload(g: Graph, measure: str, args: argparse.Namespace, caps: Caps) -> dict:
    if measure == "g":
        r = geodetic_number(g, cap=caps.geodetic)
        return {"value": r.value, "witness": list(r.witness)}
    if measure == "g2":
        r = k_geodetic_number(g, 2, cap=caps.geodetic)
        return {"value": r.value, "witness": None if r.witness is None else list(r.witness)}
    if measure == "gk":
        if args.k is None:
            raise DomainError("measure gk needs --k")
        r = k_geodetic_number(g, args.k, cap=caps.geodetic)
        return {"k": args.k, "value": r.value,
                "witness": None if r.witness is None else list(r.witness)}
    if measure == "s":
        r = steiner_number(g, cap=caps.steiner)
        return {"value": r.value, "witness": list(r.witness)}
    if measure == "diameter":
        return {"value": diameter(g)}
    if measure == "extreme":
        vs = vertex_tuple(extreme_vertices(g))
        return {"value": len(vs), "witness": list(vs)}
    if measure == "interval":
        vs = _parse_vertices(args.vertices)
        if len(vs) != 2:
            raise DomainError("measure interval needs --vertices U,V (exactly two)")
        out = vertex_tuple(interval(bfs_distances(g), vs[0], vs[1]))
        return {"vertices": vs, "value": len(out), "witness": list(out)}
    if measure == "steiner-distance":
        vs = _parse_vertices(args.vertices)
        return {"vertices": vs, "value": steiner_distance(g, mask_of(vs), terminal_cap=caps.terminals)}
    if measure == "steiner-hull":
        vs = _parse_vertices(args.vertices)
        out = vertex_tuple(steiner_hull(g, mask_of(vs), terminal_cap=caps.terminals))
        return {"vertices": vs, "value": len(out), "witness": list(out)}
    raise DomainError(f"unknown measure {measure!r}")


def _human_value(measure: str, value) -> str:
    if value is None:
        return "undefined" if measure == "diameter" else "unsatisfiable"
    return str(value)


def cmd_compute(args: argparse.Namespace) -> int:
    caps = _caps(args)
    measures = [m.strip() for m in args.measure.split(",") if m.strip()]
    for m in measures:
        if m not in MEASURES:
            raise DomainError(f"unknown measure {m!r}; known: {', '.join(MEASURES)}")
    for g in _load_compute_graphs(args):
        code = encode_graph6(g)
        for m in measures:
            payload = _measure_payload(g, m, args, caps)
            if args.json:
                line = {"g6": code, "measure": m}
                line.update(payload)
                print(_jsonline(line))
            else:
                text = f"{code} {m} = {_human_value(m, payload['value'])}"
                if payload.get("witness") is not None:
                    text += f" witness={payload['witness']}"
                print(text)
    return EXIT_OK


def cmd_corona(args: argparse.Namespace) -> int:
    g = _load_one_graph(args.g6, args.edges, "the first factor")
    h = _load_one_graph(args.g6_h, args.edges_h, "the second factor")
    prod, layout = corona(g, h)
    layout_payload = {
        "n1": layout.n1,
        "n2": layout.n2,
        "order": layout.order,
        "g_indices": list(range(layout.n1)),
        "copies": [list(layout.copy_indices(i)) for i in range(layout.n1)],
    }
    if args.format == "g6":
        print(encode_graph6(prod))
    else:
        sys.stdout.write(format_edge_list(prod))
    print(_jsonline({"layout": layout_payload}))
    return EXIT_OK


def _corpus_from_flags(args: argparse.Namespace, *, which: str) -> CorpusSpec | None:
    spec = getattr(args, f"family_{which}", None)
    if spec is not None:
        return CorpusSpec.parse(spec)
    return None


def _random_corpus(args: argparse.Namespace) -> CorpusSpec | None:
    if args.random is None:
        return None
    fields = {}
    for part in args.random.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise DomainError(f"bad --random entry {part!r}; expected key=value")
        fields[key.strip()] = value.strip()
    missing = {"n", "p", "count"} - set(fields)
    if missing:
        raise DomainError(f"--random needs n=, p=, count= (missing {sorted(missing)})")
    if args.seed is None:
        raise DomainError("--random corpora need --seed")
    try:
        return CorpusSpec.random(int(fields["n"]), float(fields["p"]), int(fields["count"]), args.seed)
    except ValueError:
        raise DomainError(f"bad --random value in {args.random!r}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    caps = _caps(args)
    info = THEOREMS[args.theorem]
    corpus_g = _corpus_from_flags(args, which="g")
    corpus_h = _corpus_from_flags(args, which="h")
    rand = _random_corpus(args)
    n_range = parse_range(args.range) if args.range is not None else None

    corpus = corpus_g
    if info.kind == "single":
        picked = [c for c in (corpus_g, corpus_h, rand) if c is not None]
        if len(picked) != 1:
            raise DomainError(
                f"{args.theorem} takes exactly one corpus (--family-g, --family-h, or --random)"
            )
        corpus = picked[0]
        corpus_h = None
    elif info.kind in ("pair", "pendant"):
        if corpus_h is not None and rand is not None:
            raise DomainError("give the H corpus as --family-h or --random, not both")
        if corpus_h is None:
            corpus_h = rand
        if corpus is None or corpus_h is None:
            raise DomainError(f"{args.theorem} needs --family-g and --family-h (or --random) corpora")
    elif info.kind == "range":
        if n_range is None:
            raise DomainError(f"{args.theorem} needs --range A..B")
    elif info.kind == "g_range":
        if corpus is None or n_range is None:
            raise DomainError(f"{args.theorem} needs --family-g and --range A..B")

    reports = run_corpus(
        args.theorem,
        corpus=corpus,
        corpus_h=corpus_h,
        n_range=n_range,
        k=args.k,
        caps=caps,
        parallel=args.parallel,
    )
    for report in reports:
        print(report.to_json(timing=args.timing))
    print(summary_json(reports))
    return EXIT_FAIL if summarize(reports)["fail"] else EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    if args.order not in CENSUS_COUNTS:
        raise DomainError(f"census files cover orders 1..7, got {args.order}")
    caps = _caps(args)
    rows = []
    for code in census_lines(args.order):
        g = parse_graph6(code)
        rg = geodetic_number(g, cap=caps.geodetic)
        rg2 = k_geodetic_number(g, 2, cap=caps.geodetic)
        rs = steiner_number(g, cap=caps.steiner)
        rows.append({
            "g6": code,
            "g": rg.value,
            "g2": rg2.value,
            "s": rs.value,
            "diameter": diameter(g),
            "g_le_s": rg.value <= rs.value,
        })
    if args.json:
        for row in rows:
            print(_jsonline(row))
    else:
        print(f"{'g6':<12} {'g':>3} {'g2':>3} {'s':>3} {'diam':>4}  g<=s")
        for row in rows:
            g2 = "-" if row["g2"] is None else row["g2"]
            print(f"{row['g6']:<12} {row['g']:>3} {g2:>3} {row['s']:>3} "
                  f"{row['diameter']:>4}  {'yes' if row['g_le_s'] else 'NO'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coronageo",
        description="Exact geodetic, k-geodetic and Steiner invariants of small "
                    "graphs, corona products, and claim verification runs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute invariants of supplied graphs")
    p_compute.add_argument("--g6", help="graph6 code of the input graph")
    p_compute.add_argument("--g6-file", help="file with one graph6 code per line")
    p_compute.add_argument("--edges", help="edge-list file ('n m' header, then 'u v' lines)")
    p_compute.add_argument("--measure", required=True,
                           help=f"comma-separated list from: {', '.join(MEASURES)}")
    p_compute.add_argument("--k", type=int, help="k for the gk measure")
    p_compute.add_argument("--vertices", help="comma-separated vertices for interval / steiner measures")
    p_compute.add_argument("--json", action="store_true", help="emit JSON Lines instead of text")
    p_compute.add_argument("--max-n", type=int, help="override all search caps")
    p_compute.set_defaults(func=cmd_compute)

    p_corona = sub.add_parser("corona", help="build a corona product")
    p_corona.add_argument("--g6", help="graph6 code of the first factor")
    p_corona.add_argument("--edges", help="edge-list file of the first factor")
    p_corona.add_argument("--g6-h", help="graph6 code of the second factor")
    p_corona.add_argument("--edges-h", help="edge-list file of the second factor")
    p_corona.add_argument("--format", choices=("edges", "g6"), default="edges",
                          help="output format for the product (default: edges)")
    p_corona.set_defaults(func=cmd_corona)

    p_verify = sub.add_parser("verify", help="run one claim over a corpus, emitting JSON Lines")
    p_verify.add_argument("--theorem", required=True, choices=THEOREM_IDS, metavar="ID",
                          help=f"one of: {', '.join(THEOREM_IDS)}")
    p_verify.add_argument("--family-g",
                          help="corpus for G: 'all-connected:A..B', '<family>:A..B', 'file:PATH'")
    p_verify.add_argument("--family-h", help="corpus for H (same syntax)")
    p_verify.add_argument("--random", help="random corpus: n=N,p=P,count=C (needs --seed)")
    p_verify.add_argument("--seed", type=int, help="seed for random corpora")
    p_verify.add_argument("--range", help="parameter range A..B for family formulas")
    p_verify.add_argument("--k", type=int, help="pendant-copy count for PENDANT_COROLLARY")
    p_verify.add_argument("--parallel", type=int, default=1, help="worker processes (default 1)")
    p_verify.add_argument("--max-n", type=int, help="override all search caps")
    p_verify.add_argument("--timing", action="store_true",
                          help="include elapsed_ms in reports (breaks byte-for-byte determinism)")
    p_verify.set_defaults(func=cmd_verify)

    p_census = sub.add_parser("census", help="tabulate g, g2, s, diameter over a census order")
    p_census.add_argument("--order", type=int, required=True, help="graph order (1..7)")
    p_census.add_argument("--json", action="store_true", help="emit JSON Lines instead of a table")
    p_census.add_argument("--max-n", type=int, help="override all search caps")
    p_census.set_defaults(func=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
