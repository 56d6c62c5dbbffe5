"""Command-line surface.

Machine-readable results go to stdout, one `key: value` per line;
diagnostics go to stderr.  Exit codes: 0 = yes/accept, 1 = no/reject,
2 = error.
"""
from __future__ import annotations

import argparse
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .graphs import GraphError, VertexMap, lshom_brute, load_graph, verify_lshom
from .mapfile import dump_map, load_map
from .order import Poset, PosetError, dump_poset, load_poset
from .pmorph import PosetMap, logcontain, spmorph_brute, verify_pmorphism
from .reduction import (build_pos, check_degree_bounds, dump_pathdecomp,
                        load_pathdecomp, theorem3_check, transform_pathdecomp)
from .treesolver import compute_qt, dump_qt, tree_spmorph

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


@dataclass
class RunReport:
    command: str
    decision: str = "yes"
    elapsed_ms: float = 0.0
    witnesses: list = field(default_factory=list)
    extra: list = field(default_factory=list)

    def emit(self):
        print(f"command: {self.command}")
        for key, value in self.extra:
            print(f"{key}: {value}")
        print(f"decision: {self.decision}")
        for path in self.witnesses:
            print(f"witness: {path}")
        print(f"elapsed_ms: {self.elapsed_ms:.1f}")

    @property
    def exit_code(self) -> int:
        return {"yes": EXIT_YES, "no": EXIT_NO}.get(self.decision, EXIT_ERROR)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_poset(path: str) -> Poset:
    return load_poset(_read(path))


def _load_graph(path: str):
    return load_graph(_read(path))


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name)


def _poset_info(report: RunReport, p: Poset):
    report.extra += [
        ("elements", len(p)),
        ("covers", len(p.covers)),
        ("depth", p.depth()),
        ("rooted", "yes" if p.is_rooted() else "no"),
        ("tree", "yes" if p.is_tree() else "no"),
        ("minimal", " ".join(p.minimal_elements())),
        ("maximal", " ".join(p.maximal_elements())),
    ]


def cmd_poset(args, report: RunReport):
    p = _load_poset(args.file)
    if args.action == "info":
        _poset_info(report, p)
    else:
        report.extra.append(("valid", "yes"))


def cmd_pmorph_check(args, report: RunReport):
    P = _load_poset(args.source)
    Q = _load_poset(args.target)
    assignment = load_map(_read(args.map))
    h = PosetMap(P, Q, assignment)
    bad = verify_pmorphism(h, require_surjective=not args.no_surjective)
    if bad is None:
        report.decision = "yes"
    else:
        report.decision = "no"
        report.extra.append(("violation", bad))


def cmd_spmorph(args, report: RunReport):
    P = _load_poset(args.source)
    Q = _load_poset(args.target)
    method = args.method
    if method == "auto":
        method = "tree" if P.is_tree() else "brute"
    if method == "tree":
        if not P.is_tree():
            raise PosetError("--method tree requires a tree source poset")
        decision, witness = tree_spmorph(P, Q)
    else:
        decision, witness = spmorph_brute(P, Q)
    report.extra.append(("method", method))
    report.decision = "yes" if decision else "no"
    if decision and args.witness:
        bad = verify_pmorphism(witness, require_surjective=True)
        assert bad is None, f"internal error: witness rejected: {bad}"
        Path(args.witness).write_text(
            dump_map(witness.assignment, order=witness.source.elements),
            encoding="utf-8")
        report.witnesses.append(args.witness)


def cmd_logcontain(args, report: RunReport):
    P = _load_poset(args.source)
    Q = _load_poset(args.target)
    decision, witnesses = logcontain(P, Q)
    report.decision = "yes" if decision else "no"
    if decision and args.witness:
        outdir = Path(args.witness)
        outdir.mkdir(parents=True, exist_ok=True)
        for idx, (y, wit) in enumerate(witnesses.items()):
            bad = verify_pmorphism(wit, require_surjective=True)
            assert bad is None, f"internal error: witness rejected: {bad}"
            path = outdir / f"witness_{idx:03d}_{_safe_name(y)}.map"
            path.write_text(
                dump_map(wit.assignment, order=wit.source.elements),
                encoding="utf-8")
            report.witnesses.append(str(path))


def cmd_lshom(args, report: RunReport):
    G = _load_graph(args.source)
    H = _load_graph(args.target)
    if args.check:
        g = VertexMap(G, H, load_map(_read(args.check)))
        bad = verify_lshom(g, require_surjective=not args.no_surjective)
        if bad is None:
            report.decision = "yes"
        else:
            report.decision = "no"
            report.extra.append(("violation", bad))
        return
    decision, witness = lshom_brute(G, H, require_surjective=True)
    report.decision = "yes" if decision else "no"
    if decision and args.witness:
        Path(args.witness).write_text(
            dump_map(witness.assignment, order=G.vertices), encoding="utf-8")
        report.witnesses.append(args.witness)


def cmd_pos(args, report: RunReport):
    G = _load_graph(args.graph)
    poset, _ = build_pos(G, rooted=args.rooted)
    report.extra += [("elements", len(poset)), ("depth", poset.depth())]
    if args.output:
        Path(args.output).write_text(dump_poset(poset), encoding="utf-8")
        report.extra.append(("output", args.output))


def cmd_theorem3(args, report: RunReport):
    G = _load_graph(args.source)
    H = _load_graph(args.target)
    lshom_dec, spm_dec, agree = theorem3_check(G, H, rooted=args.rooted)
    report.extra += [
        ("lshom", "yes" if lshom_dec else "no"),
        ("spmorph", "yes" if spm_dec else "no"),
        ("agree", "yes" if agree else "no"),
    ]
    if not agree:
        report.decision = "error"
        report.extra.append(("violation", "decisions disagree"))
    else:
        report.decision = "yes" if lshom_dec else "no"


def cmd_pathdecomp(args, report: RunReport):
    G = _load_graph(args.graph)
    D = load_pathdecomp(_read(args.decomposition))
    bad = D.validate(G.vertices, G.edges)
    if bad is not None:
        raise GraphError(f"invalid path decomposition: {bad}")
    k = D.width()
    out = transform_pathdecomp(G, D, rooted=args.rooted)
    bound = 3 * k + 8 if args.rooted else 3 * k + 7
    report.extra += [
        ("input_width", k),
        ("output_width", out.width()),
        ("bound", bound),
        ("bags", len(out.bags)),
    ]
    if args.output:
        Path(args.output).write_text(dump_pathdecomp(out), encoding="utf-8")
        report.extra.append(("output", args.output))


def cmd_qt_dump(args, report: RunReport):
    T = _load_poset(args.source)
    Q = _load_poset(args.target)
    table = compute_qt(T, Q)
    sys.stdout.write(dump_qt(table))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetmorph",
        description="Decide containment of tabular intermediate logics, "
                    "surjective p-morphisms, and locally surjective graph "
                    "homomorphisms.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("poset", help="inspect or validate a poset file")
    p.add_argument("action", choices=["info", "validate"])
    p.add_argument("file")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("pmorph", help="verify a p-morphism witness")
    psub = p.add_subparsers(dest="action", required=True)
    pc = psub.add_parser("check")
    pc.add_argument("source")
    pc.add_argument("target")
    pc.add_argument("map")
    pc.add_argument("--no-surjective", action="store_true",
                    help="do not require surjectivity")
    pc.set_defaults(func=cmd_pmorph_check)

    p = sub.add_parser("spmorph", help="decide surjective p-morphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--method", choices=["auto", "brute", "tree"],
                   default="auto")
    p.add_argument("--witness", metavar="PATH")
    p.set_defaults(func=cmd_spmorph)

    p = sub.add_parser("logcontain", help="decide tabular logic containment")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--witness", metavar="DIR")
    p.set_defaults(func=cmd_logcontain)

    p = sub.add_parser("lshom",
                       help="decide locally surjective homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--witness", metavar="PATH")
    p.add_argument("--check", metavar="MAPFILE",
                   help="verify a map file instead of deciding")
    p.add_argument("--no-surjective", action="store_true",
                   help="with --check, do not require surjectivity")
    p.set_defaults(func=cmd_lshom)

    p = sub.add_parser("pos", help="build the reduction poset of a graph")
    p.add_argument("graph")
    p.add_argument("--rooted", action="store_true")
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=cmd_pos)

    p = sub.add_parser("theorem3",
                       help="cross-check the graph and poset decisions")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--rooted", action="store_true")
    p.set_defaults(func=cmd_theorem3)

    p = sub.add_parser("pathdecomp",
                       help="transform a path decomposition of a graph "
                            "into one of the reduction poset")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("--rooted", action="store_true")
    p.add_argument("-o", "--output", metavar="OUT")
    p.set_defaults(func=cmd_pathdecomp)

    p = sub.add_parser("qt", help="dump the tree-solver table")
    qsub = p.add_subparsers(dest="action", required=True)
    qd = qsub.add_parser("dump")
    qd.add_argument("source")
    qd.add_argument("target")
    qd.set_defaults(func=cmd_qt_dump)

    p = sub.add_parser("degrees",
                       help="check successor bounds of the reduction poset")
    p.add_argument("graph")
    p.add_argument("--rooted", action="store_true")
    p.set_defaults(func=cmd_degrees)
    return parser


def cmd_degrees(args, report: RunReport):
    G = _load_graph(args.graph)
    result = check_degree_bounds(G, rooted=args.rooted)
    for key in ("max_degree", "max_immediate_successors", "immediate_bound",
                "max_strict_successors", "total_bound"):
        report.extra.append((key, result[key]))
    report.decision = "yes" if result["ok"] else "no"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(command=" ".join(argv if argv is not None
                                        else sys.argv[1:]))
    start = time.perf_counter()
    try:
        args.func(args, report)
    except (PosetError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.cmd == "qt":
        return EXIT_YES
    report.emit()
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
