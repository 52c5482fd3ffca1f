"""Command-line interface.

Subcommands::

    compute      measures, classification and the inequality table for a graph
    gen          emit a named family as graph6 or an edge list
    enum         stream isomorphism classes of a population
    verify       run verification suites over enumerated populations
    conjectures  scan the two conjectured inequalities
    extremal     maximisers of S and Var over one (n, m) slice

Exit codes: 0 success, 1 violations found, 2 bad input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .enumeration import EnumerationSpec, enumerate_codes_cached
from .errors import CapabilityError, InputError
from .families import (
    complete,
    complete_multipartite,
    complete_split,
    cycle,
    named,
    path,
    recognize,
    star,
    wheel,
)
from .graph import Graph, classify, degree_stats
from .io import format_edge_list, parse_graph, parse_graph6, to_graph6
from .measures import bound_report, measure_set
from .serialize import (
    bound_record_json,
    fraction_decimal,
    fraction_text,
    measure_set_json,
    report_json,
)
from .spectral import two_walk_params, variance_spectral_identity
from .verify import (
    SUITE_IDS,
    check_deviation_conjecture,
    check_omega_conjecture,
    extremal_search,
    max_deviation_split_k,
    run_all_suites,
    run_suite,
    split_deviation_argmax,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed options shared by the population-driven subcommands."""

    workers: int = 1
    cache_dir: Optional[str] = None
    out: Optional[str] = None
    csv: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls(
            workers=getattr(args, "workers", 1),
            cache_dir=getattr(args, "cache_dir", None),
            out=getattr(args, "out", None),
            csv=getattr(args, "csv", None),
        )
        if cfg.workers < 1:
            raise InputError("--workers must be positive")
        return cfg


def _fmt(q) -> str:
    text = fraction_text(q)
    if q.denominator == 1:
        return text
    return f"{text} ({fraction_decimal(q)})"


def _read_input(arg: str) -> Graph:
    if arg == "-":
        return parse_graph(sys.stdin.read())
    with open(arg, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _cmd_compute(args: argparse.Namespace) -> int:
    g = _read_input(args.input)
    st = degree_stats(g)
    cls = classify(g, st)
    ms = measure_set(g, st)
    bounds = bound_report(g)
    spectral = None
    if cls.is_connected and not cls.is_regular and g.n >= 2:
        params = two_walk_params(g)
        if params is not None:
            ident = variance_spectral_identity(g)
            spectral = (params, ident)

    if args.json:
        doc = {
            "n": g.n,
            "m": st.edge_count,
            "degrees": list(st.degrees),
            "degree_set": list(st.degree_set),
            "histogram": {str(d): c for d, c in sorted(st.histogram.items())},
            "universal_count": st.universal_count,
            "classification": {
                "connected": cls.is_connected,
                "regular": cls.is_regular,
                "degree_class": cls.degree_class,
                "bidegreed": cls.is_bidegreed,
                "balanced_bidegreed": cls.is_balanced_bidegreed,
                "dominating": cls.is_dominating,
                "tree": cls.is_tree,
                "unicyclic": cls.is_unicyclic,
                "cyclomatic": cls.cyclomatic,
                "complete_split_k": cls.complete_split_k,
            },
            "measures": measure_set_json(ms),
            "bounds": [bound_record_json(r) for r in bounds],
            "two_walk": None
            if spectral is None
            else {
                "a": spectral[0].a,
                "b": spectral[0].b,
                "var_via_params": {
                    "num": spectral[1].var_via_params.numerator,
                    "den": spectral[1].var_via_params.denominator,
                },
                "matches": spectral[1].matches,
            },
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    print(f"n={g.n} m={st.edge_count}")
    print("degrees:", " ".join(map(str, sorted(st.degrees, reverse=True))))
    hist = " ".join(f"{d}:{c}" for d, c in sorted(st.histogram.items()))
    print(f"degree_set: {{{', '.join(map(str, st.degree_set))}}}  counts: {hist}  q={st.universal_count}")
    labels = []
    if cls.is_regular:
        labels.append("regular")
    else:
        labels.append(f"{cls.degree_class}-degreed")
    if cls.is_bidegreed:
        labels.append("bidegreed")
    if cls.is_balanced_bidegreed:
        labels.append("balanced")
    if cls.is_dominating:
        labels.append("dominating")
    if cls.is_tree:
        labels.append("tree")
    if cls.is_unicyclic:
        labels.append("unicyclic")
    if cls.complete_split_k is not None:
        labels.append(f"complete split k={cls.complete_split_k}")
    print("classification:", "; ".join(labels))
    if cls.is_connected:
        print(f"connected: yes  c={cls.cyclomatic}")
    else:
        print("connected: no")
    print(f"M1={_fmt(ms.m1)}")
    print(f"S={_fmt(ms.s)}")
    print(f"Var={_fmt(ms.var)}")
    print(f"IRD={_fmt(ms.ird)}")
    print(f"IRR={_fmt(ms.irr)}")
    if ms.omega is None:
        print("Omega: undefined")
    else:
        print(f"Omega={_fmt(ms.omega)}")
    if spectral is not None:
        params, ident = spectral
        print(f"two_walk: a={params.a} b={params.b}")
        status = "matches Var" if ident.matches else "DOES NOT match Var"
        print(f"two_walk variance: {_fmt(ident.var_via_params)} ({status})")
    print("bounds:")
    for rec in bounds:
        if rec.agreement == "not-applicable":
            print(f"  {rec.bound_id}: not applicable")
            continue
        mark = "=" if rec.is_equality else ("ok" if rec.holds else "VIOLATED")
        print(
            f"  {rec.bound_id}: lhs={fraction_text(rec.lhs)} rhs={fraction_text(rec.rhs)}"
            f" [{mark}] ({rec.agreement})"
        )
    return EXIT_OK


_FAMILIES = {
    "path": (1, lambda a: path(a[0])),
    "cycle": (1, lambda a: cycle(a[0])),
    "star": (1, lambda a: star(a[0])),
    "complete": (1, lambda a: complete(a[0])),
    "wheel": (1, lambda a: wheel(a[0])),
    "cs": (2, lambda a: complete_split(a[0], a[1])),
}


def _cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "named":
        if len(args.params) != 1:
            raise InputError("usage: gen named <name>")
        g = named(args.params[0])
    elif fam == "multipartite":
        sizes = [int(p) for p in args.params]
        g = complete_multipartite(sizes)
    elif fam in _FAMILIES:
        arity, build = _FAMILIES[fam]
        if len(args.params) != arity:
            raise InputError(f"family {fam!r} takes {arity} integer parameter(s)")
        g = build([int(p) for p in args.params])
    else:
        raise InputError(f"unknown family {fam!r}")
    if args.edges:
        sys.stdout.write(format_edge_list(g))
    else:
        print(to_graph6(g))
    return EXIT_OK


def _enum_spec(args: argparse.Namespace) -> EnumerationSpec:
    population = "all"
    if args.trees:
        population = "trees"
    elif args.unicyclic:
        population = "unicyclic"
    return EnumerationSpec(
        n=args.n,
        m=args.m,
        connected_only=args.connected,
        irregular_only=args.irregular,
        population=population,
    )


def _cmd_enum(args: argparse.Namespace) -> int:
    spec = _enum_spec(args)
    cfg = RunConfig.from_args(args)
    codes = enumerate_codes_cached(spec, workers=cfg.workers, cache_dir=cfg.cache_dir)
    if args.count:
        print(len(codes))
    else:
        for code in codes:
            print(code)
    return EXIT_OK


def _population_specs(args: argparse.Namespace) -> list[EnumerationSpec]:
    if getattr(args, "population", "graphs") == "trees":
        return [EnumerationSpec(n=k, population="trees") for k in range(2, args.max_n + 1)]
    if getattr(args, "population", "graphs") == "unicyclic":
        return [
            EnumerationSpec(n=k, population="unicyclic")
            for k in range(3, args.max_n + 1)
        ]
    connected = getattr(args, "connected", True)
    return [
        EnumerationSpec(n=k, connected_only=connected) for k in range(1, args.max_n + 1)
    ]


def _emit_reports(reports, cfg: RunConfig) -> int:
    for rep in reports:
        print(
            f"suite={rep.suite_id} checked={rep.graphs_checked}"
            f" violations={len(rep.violations)} findings={len(rep.findings)}"
            f" equalities={len(rep.equalities)} ({rep.elapsed:.2f}s)"
        )
        for v in rep.violations[:10]:
            print(f"  VIOLATION {v.check} on {v.graph}: lhs={v.lhs} rhs={v.rhs} {v.note}")
        for f in rep.findings[:10]:
            print(f"  finding {f.check} on {f.graph}: {f.note}")
        for e in rep.equalities[:10]:
            print(f"  equality {e.check} on {e.graph}")
        if len(rep.equalities) > 10:
            print(f"  ... {len(rep.equalities) - 10} further equality cases")
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump([report_json(r) for r in reports], fh, indent=2, sort_keys=True)
        print(f"wrote {cfg.out}")
    if cfg.csv:
        lines = ["suite,checked,violations,findings,equalities"]
        lines += [
            f"{r.suite_id},{r.graphs_checked},{len(r.violations)},{len(r.findings)},{len(r.equalities)}"
            for r in reports
        ]
        with open(cfg.csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {cfg.csv}")
    return EXIT_VIOLATIONS if any(r.violations for r in reports) else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    specs = _population_specs(args)
    cfg = RunConfig.from_args(args)
    if args.suite == "all":
        reports = run_all_suites(specs, workers=cfg.workers, cache_dir=cfg.cache_dir)
    else:
        reports = [
            run_suite(specs, args.suite, workers=cfg.workers, cache_dir=cfg.cache_dir)
        ]
    return _emit_reports(reports, cfg)


def _cmd_conjectures(args: argparse.Namespace) -> int:
    specs = [
        EnumerationSpec(n=k, connected_only=not args.include_disconnected)
        for k in range(1, args.max_n + 1)
    ]
    cfg = RunConfig.from_args(args)
    reports = [
        check_deviation_conjecture(specs, workers=cfg.workers, cache_dir=cfg.cache_dir),
        check_omega_conjecture(specs, workers=cfg.workers, cache_dir=cfg.cache_dir),
    ]
    return _emit_reports(reports, cfg)


def _cmd_extremal(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    result = extremal_search(
        args.n, args.m, workers=cfg.workers, cache_dir=cfg.cache_dir
    )

    def _names(codes):
        out = []
        for code in codes:
            name = recognize(parse_graph6(code))
            out.append(name if name else code)
        return ", ".join(out)

    print(f"n={result.n} m={result.m}")
    print(f"max S = {_fmt(result.max_s)} attained by: {_names(result.max_s_graphs)}")
    print(f"max Var = {_fmt(result.max_var)} attained by: {_names(result.max_var_graphs)}")
    print(f"coincide: {'true' if result.coincide else 'false'}")
    if cfg.out:
        doc = {
            "n": result.n,
            "m": result.m,
            "max_s": fraction_text(result.max_s),
            "max_var": fraction_text(result.max_var),
            "max_s_graphs": list(result.max_s_graphs),
            "max_var_graphs": list(result.max_var_graphs),
            "coincide": result.coincide,
        }
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
        print(f"wrote {cfg.out}")
    return EXIT_OK


def _cmd_split_k(args: argparse.Namespace) -> int:
    rule = max_deviation_split_k(args.n)
    brute = split_deviation_argmax(args.n)
    print(f"n={args.n} rule k={list(rule)} brute-force argmax={list(brute)}")
    return EXIT_OK if rule == brute else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="graphirr",
        description="Exact graph irregularity measures, verification and search",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="measures and checks for one graph")
    p.add_argument("input", help="path to a graph6 or edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("gen", help="emit a graph family member")
    p.add_argument(
        "family",
        choices=sorted(_FAMILIES) + ["multipartite", "named"],
    )
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--edges", action="store_true", help="edge-list output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("enum", help="stream isomorphism classes as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--irregular", action="store_true")
    p.add_argument("--trees", action="store_true")
    p.add_argument("--unicyclic", action="store_true")
    p.add_argument("--count", action="store_true", help="print the class count only")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help="all or one of: " + " ".join(SUITE_IDS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--population", choices=["graphs", "trees", "unicyclic"], default="graphs"
    )
    p.add_argument(
        "--connected",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="restrict the graph population to connected graphs",
    )
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--csv", default=None, help="write a CSV summary here")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("conjectures", help="scan the conjectured inequalities")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--include-disconnected", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(fn=_cmd_conjectures)

    p = sub.add_parser("extremal", help="S and Var maximisers over one (n, m) slice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(fn=_cmd_extremal)

    p = sub.add_parser("split-k", help="rule vs brute force for the best CS clique size")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_split_k)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
