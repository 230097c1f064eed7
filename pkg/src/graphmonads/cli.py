"""Command-line front end.

Exit codes: 0 when everything checks out, 1 when a law or structural check
fails (the report names a witness), 2 for unreadable input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .category import LawReport
from .errors import GraphMonadError, InvalidMatching, InvalidPSTS, NotAnAlgebra
from .families import graphs_up_to, random_graphs
from .io import labels_from_json, labels_to_json, parse_edge_list, read_graph, serialize_edge_list, to_dot, write_text
from .labels import as_label
from .matching import (
    PerfectMatching,
    T_algebra_from_json,
    T_on_objects,
    algebra_to_json,
    algebra_to_matching,
    check_monad_laws_T,
    enumerate_matchings,
    enumerate_T_algebras,
    is_perfect_matching,
    matching_from_json,
    matching_to_algebra,
    matching_to_json,
    product_perf,
)
from .steiner import (
    S_algebra_from_json,
    S_algebra_to_json,
    S_on_objects,
    algebra_to_psts,
    check_monad_laws_S,
    enumerate_psts_on,
    enumerate_S_algebras,
    is_complete_sts,
    is_psts,
    product_psts,
    psts_from_json,
    psts_to_algebra,
    psts_to_json,
)

OK, VIOLATION, ERROR = "ok", "violation", "error"
EXIT_CODES = {OK: 0, VIOLATION: 1, ERROR: 2}


@dataclass
class CommandResult:
    status: str
    report: str
    payload: object = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class UsageError(GraphMonadError):
    pass


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None


def _dump(payload) -> str:
    if isinstance(payload, str):
        return payload
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_check_matching(graph_file, matching_file) -> CommandResult:
    graph = read_graph(graph_file)
    obj = _load_json(matching_file)
    if not isinstance(obj, dict) or "matching" not in obj:
        raise UsageError(f"{matching_file}: expected an object with a 'matching' key")
    if isinstance(obj.get("graph"), str):
        if parse_edge_list(obj["graph"]) != graph:
            raise UsageError(f"{matching_file}: embedded graph differs from {graph_file}")
    m = labels_from_json(obj["matching"])
    if graph.order % 2:
        return CommandResult(VIOLATION, f"violation: graph has odd order {graph.order}; no perfect matching exists")
    res = is_perfect_matching(graph, m)
    if not res:
        return CommandResult(VIOLATION, f"violation: vertex {res.witness}: {res.detail}")
    pm = PerfectMatching(graph, m)
    pairs = " ".join(f"{u}-{v}" for u, v in pm.edges)
    return CommandResult(OK, f"ok: perfect matching {pairs}", matching_to_json(pm))


def cmd_check_psts(psts_file) -> CommandResult:
    obj = _load_json(psts_file)
    try:
        p = psts_from_json(obj)
    except InvalidPSTS:
        res = is_psts([as_label(x) for x in obj["points"]],
                      [tuple(as_label(x) for x in t) for t in obj["triples"]])
        return CommandResult(VIOLATION, f"violation: {res}")
    kind = "complete Steiner triple system" if is_complete_sts(p) else "partial Steiner triple system"
    return CommandResult(OK, f"ok: {kind} on {len(p.points)} points with {len(p.triples)} triples",
                         psts_to_json(p))


LIST_KINDS = ("matchings", "psts", "algebras-T", "algebras-S")


def cmd_list(kind, graph_file, cap=None) -> CommandResult:
    g = read_graph(graph_file)
    kw = {} if cap is None else {"cap": cap}
    if kind == "matchings":
        items = [labels_to_json(pm.m) for pm in enumerate_matchings(g, **kw)]
    elif kind == "psts":
        items = [psts_to_json(p) for p in enumerate_psts_on(g, **kw)]
    elif kind == "algebras-T":
        items = [labels_to_json(a.alpha.mapping) for a in enumerate_T_algebras(g, **kw)]
    elif kind == "algebras-S":
        items = [labels_to_json(a.alpha.mapping) for a in enumerate_S_algebras(g, **kw)]
    else:
        raise UsageError(f"unknown list kind {kind!r}")
    report = json.dumps(items, indent=2, ensure_ascii=False) + f"\ncount: {len(items)}"
    return CommandResult(OK, report, items)


_LAWS = {"T": check_monad_laws_T, "S": check_monad_laws_S}


def _law_result(report: LawReport, subject: str) -> CommandResult:
    status = OK if report.ok else VIOLATION
    payload = {name: {"ok": res.ok, "witness": None if res.ok else str(res.witness)}
               for name, res in report.checks.items()}
    text = "\n".join([f"{report.subject} on {subject}: {status}"] + ["  " + s for s in report.lines()])
    return CommandResult(status, text, payload)


def cmd_laws(monad, graph_file) -> CommandResult:
    g = read_graph(graph_file)
    return _law_result(_LAWS[monad](g), graph_file)


def cmd_laws_sweep(monad, max_n=5, random_count=0, seed=0, min_random_n=6, max_random_n=9) -> CommandResult:
    check = _LAWS[monad]
    started = time.perf_counter()
    total = 0
    failures = []
    per_n = {}

    def run(g, origin):
        nonlocal total
        total += 1
        rep = check(g)
        if not rep.ok:
            failures.append((origin, serialize_edge_list(g), [str(r) for r in rep.checks.values() if not r]))

    for g in graphs_up_to(max_n):
        per_n[g.order] = per_n.get(g.order, 0) + 1
        run(g, f"labeled n={g.order}")
    for g in random_graphs(random_count, min_random_n, max_random_n, seed=seed):
        run(g, f"random n={g.order}")
    elapsed = time.perf_counter() - started
    lines = [f"laws-sweep {monad}: {total} graphs, {len(failures)} failures ({elapsed:.1f}s)"]
    lines += [f"  n={n}: {c} labeled graphs" for n, c in sorted(per_n.items())]
    if random_count:
        lines.append(f"  random: {random_count} graphs with {min_random_n}-{max_random_n} vertices (seed {seed})")
    for origin, text, msgs in failures[:5]:
        lines.append(f"  FAILED {origin}: {'; '.join(msgs)}")
    payload = {"monad": monad, "graphs": total, "failures": len(failures),
               "labeled_per_order": {str(n): c for n, c in sorted(per_n.items())}}
    return CommandResult(VIOLATION if failures else OK, "\n".join(lines), payload)


def cmd_product(kind, file_a, file_b) -> CommandResult:
    if kind == "perf":
        a = matching_from_json(_load_json(file_a), base_dir=os.path.dirname(file_a))
        b = matching_from_json(_load_json(file_b), base_dir=os.path.dirname(file_b))
        try:
            prod = product_perf(a, b)
        except InvalidMatching as exc:
            return CommandResult(VIOLATION, f"violation: product failed validation: {exc}")
        res = is_perfect_matching(prod.graph, prod.m)
        if not res:
            return CommandResult(VIOLATION, f"violation: product failed validation: {res}")
        report = f"ok: product matching on {prod.graph.order} vertices, {prod.graph.size} edges"
        return CommandResult(OK, report, matching_to_json(prod))
    if kind == "psts":
        p, q = psts_from_json(_load_json(file_a)), psts_from_json(_load_json(file_b))
        try:
            prod = product_psts(p, q)
        except InvalidPSTS as exc:
            return CommandResult(VIOLATION, f"violation: product failed validation: {exc}")
        res = is_psts(prod.points, prod.triples)
        if not res:
            return CommandResult(VIOLATION, f"violation: product failed validation: {res}")
        report = f"ok: product system on {len(prod.points)} points, {len(prod.triples)} triples"
        return CommandResult(OK, report, psts_to_json(prod))
    raise UsageError(f"unknown product kind {kind!r}")


def cmd_functor(kind, graph_file) -> CommandResult:
    g = read_graph(graph_file)
    image = {"T": T_on_objects, "S": S_on_objects}[kind](g)
    report = f"ok: {kind}(G) has {image.order} vertices, {image.size} edges"
    return CommandResult(OK, report, serialize_edge_list(image))


def cmd_dot(graph_file, structure_file=None) -> CommandResult:
    g = read_graph(graph_file)
    if structure_file is None:
        return CommandResult(OK, f"ok: {g.order} vertices, {g.size} edges", to_dot(g))
    obj = _load_json(structure_file)
    if isinstance(obj, dict) and "matching" in obj:
        m = labels_from_json(obj["matching"])
        res = is_perfect_matching(g, m)
        if not res:
            return CommandResult(VIOLATION, f"violation: vertex {res.witness}: {res.detail}")
        return CommandResult(OK, f"ok: highlighted {len(m) // 2} matched edges", to_dot(g, matching=m))
    if isinstance(obj, dict) and "triples" in obj:
        p = psts_from_json(obj)
        missing = [t for t in p.triple_list
                   if not all(g.has_edge(x, y) for x, y in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))]
        if missing:
            return CommandResult(VIOLATION, f"violation: triple {tuple(map(str, missing[0]))} is not a triangle of the graph")
        return CommandResult(OK, f"ok: highlighted {len(p.triples)} triples", to_dot(g, triples=p.triples))
    raise UsageError(f"{structure_file}: expected a matching or PSTS JSON document")


CONVERSIONS = ("matching-to-algebra", "algebra-to-matching", "psts-to-algebra", "algebra-to-psts")


def cmd_convert(kind, in_file) -> CommandResult:
    obj = _load_json(in_file)
    base = os.path.dirname(in_file)
    if kind == "matching-to-algebra":
        out = algebra_to_json(matching_to_algebra(matching_from_json(obj, base_dir=base)))
    elif kind == "algebra-to-matching":
        out = matching_to_json(algebra_to_matching(T_algebra_from_json(obj, base_dir=base)))
    elif kind == "psts-to-algebra":
        out = S_algebra_to_json(psts_to_algebra(psts_from_json(obj)))
    elif kind == "algebra-to-psts":
        out = psts_to_json(algebra_to_psts(S_algebra_from_json(obj)))
    else:
        raise UsageError(f"unknown conversion {kind!r}")
    return CommandResult(OK, f"ok: {kind}", out)


# -- argument parsing -----------------------------------------------------------


def _global_options(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--cap", type=int, default=default,
                        help="vertex cap for enumerations (overrides the per-kind default)")
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="print one JSON document with status, report and payload")
    parser.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="suppress the human-readable report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphmonads", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-matching", parents=[common], help="validate a perfect matching")
    p.add_argument("graph")
    p.add_argument("matching")

    p = sub.add_parser("check-psts", parents=[common], help="validate a partial Steiner triple system")
    p.add_argument("psts")

    p = sub.add_parser("list", parents=[common], help="enumerate structures on a graph")
    p.add_argument("kind", choices=LIST_KINDS)
    p.add_argument("graph")

    p = sub.add_parser("laws", parents=[common], help="check the monad laws on one graph")
    p.add_argument("monad", choices=("T", "S"))
    p.add_argument("graph")

    p = sub.add_parser("laws-sweep", parents=[common], help="check the monad laws on all small graphs")
    p.add_argument("monad", choices=("T", "S"))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--random", type=int, default=0, metavar="K", help="also check K random graphs")
    p.add_argument("--min-random-n", type=int, default=6)
    p.add_argument("--max-random-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("product", parents=[common], help="product in Perf or PSTS")
    p.add_argument("kind", choices=("perf", "psts"))
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--out")

    p = sub.add_parser("functor", parents=[common], help="apply T or S to a graph")
    p.add_argument("kind", choices=("T", "S"))
    p.add_argument("graph")
    p.add_argument("-o", "--out")

    p = sub.add_parser("dot", parents=[common], help="render a graph (optionally decorated) as DOT")
    p.add_argument("graph")
    p.add_argument("structure", nargs="?")
    p.add_argument("-o", "--out")

    p = sub.add_parser("convert", parents=[common], help="translate between structures and algebras")
    p.add_argument("kind", choices=CONVERSIONS)
    p.add_argument("input")
    p.add_argument("-o", "--out")
    return parser


def dispatch(args) -> CommandResult:
    verb = args.verb
    if verb == "check-matching":
        return cmd_check_matching(args.graph, args.matching)
    if verb == "check-psts":
        return cmd_check_psts(args.psts)
    if verb == "list":
        return cmd_list(args.kind, args.graph, cap=args.cap)
    if verb == "laws":
        return cmd_laws(args.monad, args.graph)
    if verb == "laws-sweep":
        return cmd_laws_sweep(args.monad, args.max_n, args.random, args.seed,
                              args.min_random_n, args.max_random_n)
    if verb == "product":
        return cmd_product(args.kind, args.a, args.b)
    if verb == "functor":
        return cmd_functor(args.kind, args.graph)
    if verb == "dot":
        return cmd_dot(args.graph, args.structure)
    if verb == "convert":
        return cmd_convert(args.kind, args.input)
    raise UsageError(f"unknown verb {verb!r}")


PRODUCERS = {"product", "functor", "dot", "convert"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = dispatch(args)
    except (GraphMonadError, NotAnAlgebra, OSError, KeyError, TypeError) as exc:
        result = CommandResult(ERROR, f"error: {exc}")

    out = getattr(args, "out", None)
    if args.json:
        doc = {"status": result.status, "report": result.report, "payload": result.payload}
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        if out and result.status == OK:
            write_text(out, _dump(result.payload))
        return result.exit_code

    stream = sys.stdout
    if args.verb in PRODUCERS and result.status == OK:
        if out:
            write_text(out, _dump(result.payload))
        else:
            sys.stdout.write(_dump(result.payload))
            stream = sys.stderr
    if not args.quiet or result.status == ERROR:
        (sys.stderr if result.status == ERROR else stream).write(result.report + "\n")
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
