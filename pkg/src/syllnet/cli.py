"""Command-line interface: ``syllnet <subcommand> ...``.

Exit codes: 0 success, 1 usage/configuration error, 2 I/O error,
3 analysis error (for example an empty network).
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .baseline import DEFAULT_SAMPLES, DEFAULT_SEED, ComparisonReport, compare_with_er
from .corpus import CROATIAN_ALPHABET, iter_tokens, load_corpus
from .errors import (AnalysisError, CorpusError, GraphParseError, MissingInput, RuleSetError,
                     SyllnetError, VariantMismatch)
from .metrics import (CLUSTERING_MODES, DEGREE_CONVENTIONS, PATH_CONVENTIONS, PATH_SCOPES, analyze,
                      degree_distribution, top_k_by_degree)
from .netbuild import (NetworkVariant, SyllableNetwork, build_network, filter_min_degree, merge,
                       to_undirected_unweighted)
from .report_io import (TableSpec, dumps_json, emit_degree_distribution, emit_table, export_graph,
                        import_graph, read_json, write_json, write_table)
from .syllabifier import DEFAULT_RULES, NoNucleus, SyllabificationStats, load_rules, syllabify, syllabify_tokens

log = logging.getLogger("syllnet")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_ANALYSIS = 0, 1, 2, 3


class UsageError(SyllnetError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class PipelineConfig:
    inputs: list
    out_dir: Path
    label: str = "corpus"
    variant: NetworkVariant = field(default_factory=NetworkVariant)
    min_degree: int | None = None
    iterative_filter: bool = False
    strict_alphabet: bool = True
    alphabet: str = CROATIAN_ALPHABET
    rules_path: str | None = None
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    threads: int = 1
    graph_format: str = "graphml"
    path_convention: str = "connected"
    clustering_mode: str = "all_nodes"
    degree_convention: str = "standard"
    path_scope: str = "largest"
    top: int = 10

    def validate(self) -> None:
        for p in self.inputs:
            if not Path(p).exists():
                raise FileNotFoundError(f"input not found: {p}")
        if self.rules_path and not Path(self.rules_path).exists():
            raise FileNotFoundError(f"rules file not found: {self.rules_path}")
        if self.min_degree is not None and self.min_degree < 1:
            raise UsageError("--min-degree must be >= 1")
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")

    def analyze_kwargs(self) -> dict:
        return {"path_convention": self.path_convention, "clustering_mode": self.clustering_mode,
                "scope": self.path_scope, "degree_convention": self.degree_convention}


# shared argument groups -----------------------------------------------------

def _add_corpus_args(p):
    g = p.add_argument_group("corpus")
    g.add_argument("inputs", nargs="*", help="text files or directories (UTF-8)")
    g.add_argument("--label", default="corpus", help="source label recorded as provenance")
    g.add_argument("--strict-alphabet", dest="strict_alphabet", action="store_true", default=True,
                   help="drop tokens containing letters outside the alphabet (default)")
    g.add_argument("--no-strict-alphabet", dest="strict_alphabet", action="store_false",
                   help="keep tokens with foreign letters; they syllabify as consonants")
    g.add_argument("--alphabet", default=CROATIAN_ALPHABET,
                   help="alphabet for strict mode (default: %(default)s)")
    g.add_argument("--rules", dest="rules_path", metavar="FILE",
                   help="syllabification rules file (key = value: vowels, digraphs, onset_mode)")


def _add_variant_args(p):
    g = p.add_argument_group("network variant")
    g.add_argument("--linking", choices=("co", "fn", "co_occurrence", "first_neighbour"), default="co",
                   help="co: link every syllable pair of a word; fn: link adjacent syllables only")
    g.add_argument("--directed", action="store_true",
                   help="orient links from the earlier to the later syllable of the word")
    g.add_argument("--weighted", action="store_true",
                   help="count repeated links as edge weight instead of collapsing them")
    g.add_argument("--min-degree", type=int, metavar="K",
                   help="drop nodes with degree < K (rare syllables, often foreign words)")
    g.add_argument("--iterative-filter", action="store_true",
                   help="repeat the --min-degree removal until it is stable (K-core)")


def _add_convention_args(p):
    g = p.add_argument_group("measure conventions")
    g.add_argument("--avg-degree", dest="degree_convention", choices=DEGREE_CONVENTIONS, default="standard",
                   help="standard: 2K/N undirected, K/N directed (default); "
                        "k_over_n: K/N always, for tables that normalise by N alone")
    g.add_argument("--path-convention", choices=PATH_CONVENTIONS, default="connected",
                   help="connected: mean hop distance over connected pairs (default); literal: each node's "
                        "distance sum divided by N including itself, then averaged over the N nodes")
    g.add_argument("--path-scope", choices=PATH_SCOPES, default="largest",
                   help="measure L and D on the largest connected component (default) or all nodes")
    g.add_argument("--clustering-mode", choices=CLUSTERING_MODES, default="all_nodes",
                   help="all_nodes: average C_i over every node, degree < 2 counting as 0 (default); "
                        "exclude_low_degree: average over nodes of degree >= 2 only")


def _add_er_args(p):
    g = p.add_argument_group("random baseline")
    g.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                   help="number of G(n, M) samples matched in N and K (default: %(default)s; 1 = single instance)")
    g.add_argument("--seed", type=int, default=DEFAULT_SEED, help="base seed (default: %(default)s)")
    g.add_argument("--threads", type=int, default=1, help="worker cap for analysing samples")


def _variant(args) -> NetworkVariant:
    return NetworkVariant(args.linking, args.directed, args.weighted)


def _labelled(items, what) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"{what} must be given as LABEL=PATH, got {item!r}")
        label, path = item.split("=", 1)
        out[label] = path
    return out


def _rules(path):
    return load_rules(path) if path else DEFAULT_RULES


def _emit(text: str, path) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# building ------------------------------------------------------------------

def build_from_corpus(inputs, label, variant, rules=DEFAULT_RULES, alphabet=CROATIAN_ALPHABET,
                      strict=True, min_degree=None, iterative=False):
    docs = load_corpus(inputs, label)
    stats = SyllabificationStats()
    words = syllabify_tokens(iter_tokens(docs, alphabet, strict), rules, stats)
    net = build_network(words, variant, provenance=[label])
    log.info("%d documents, %d tokens, %d syllabified, %d skipped without nucleus",
             len(docs), stats.tokens, stats.syllabified, stats.skipped_total)
    if min_degree:
        before = net.n
        net = filter_min_degree(net, min_degree, iterative)
        log.info("degree filter k_min=%d%s removed %d nodes", min_degree,
                 " (iterative)" if iterative else "", before - net.n)
    return net, stats


def cmd_syllabify(args) -> int:
    rules = _rules(args.rules_path)
    for word in args.words:
        try:
            print(syllabify(word.lower(), rules))
        except NoNucleus as exc:
            print(f"{word}: {exc}", file=sys.stderr)
    return EXIT_OK


def cmd_build(args) -> int:
    if not args.inputs:
        raise UsageError("build needs at least one input path")
    net, _ = build_from_corpus(args.inputs, args.label, _variant(args), _rules(args.rules_path),
                               args.alphabet, args.strict_alphabet, args.min_degree, args.iterative_filter)
    export_graph(net, args.format, args.output)
    log.info("wrote %s (N=%d, K=%d)", args.output, net.n, net.k)
    return EXIT_OK


def cmd_merge(args) -> int:
    net = merge([import_graph(p) for p in args.networks])
    export_graph(net, args.format, args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    net = import_graph(args.network, args.input_format)
    if args.undirected:
        net = to_undirected_unweighted(net)
    if args.min_degree:
        net = filter_min_degree(net, args.min_degree, args.iterative_filter)
    export_graph(net, args.format, args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    net = import_graph(args.network)
    metrics = analyze(net, args.path_convention, args.clustering_mode, args.path_scope, args.degree_convention)
    if args.report:
        write_json(metrics.to_dict(), args.report)
    else:
        sys.stdout.write(dumps_json(metrics.to_dict()))
    if args.degree_dist:
        emit_degree_distribution(degree_distribution(net), args.degree_dist)
    if args.top:
        for syllable, degree in top_k_by_degree(net, args.top):
            print(f"{syllable}\t{degree}")
    return EXIT_OK


def cmd_compare(args) -> int:
    net = import_graph(args.network)
    report = compare_with_er(net, args.samples, args.seed, args.threads,
                             path_convention=args.path_convention, clustering_mode=args.clustering_mode,
                             scope=args.path_scope, degree_convention=args.degree_convention)
    _emit(dumps_json(report.to_dict()), args.output)
    return EXIT_OK


def cmd_top(args) -> int:
    net = import_graph(args.network)
    table = emit_table(TableSpec.TABLE4_TOP_SYLLABLES, {"networks": {args.label: net}, "k": args.k})
    _emit(table.to_csv() if args.csv else table.to_text(), args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    spec = TableSpec.parse(args.table)
    nets = {label: import_graph(p) for label, p in _labelled(args.net, "--net").items()}
    reports = {label: ComparisonReport.from_dict(read_json(p))
               for label, p in _labelled(args.comparison, "--comparison").items()}
    inputs = {"networks": nets, "k": args.k, "comparisons": reports}
    if spec is TableSpec.TABLE3_FN_METRICS and reports:
        label, report = next(iter(reports.items()))
        inputs.update(comparison=report, label=label)
    table = emit_table(spec, inputs)
    _emit(table.to_csv() if args.csv else table.to_text(), args.output)
    return EXIT_OK


# full pipeline ----------------------------------------------------------------

def run_pipeline(config: PipelineConfig) -> dict:
    """Corpus to network, measures, baseline comparison and tables, all written to ``config.out_dir``.

    Returns a summary dict (also the content of ``summary.json``).
    """
    config.validate()
    rules = load_rules(config.rules_path) if config.rules_path else DEFAULT_RULES
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    net, stats = build_from_corpus(config.inputs, config.label, config.variant, rules, config.alphabet,
                                   config.strict_alphabet, config.min_degree, config.iterative_filter)
    ext = {"graphml": "graphml", "gexf": "gexf", "edge_csv": "csv", "csv": "csv"}[config.graph_format]
    export_graph(net, config.graph_format, out / f"network.{ext}")

    kwargs = config.analyze_kwargs()
    metrics = analyze(net, **kwargs)
    write_json(metrics.to_dict(), out / "metrics.json")
    emit_degree_distribution(degree_distribution(net), out / "degree_distribution.tsv")

    log.info("analysing %d ER samples", config.samples)
    report = compare_with_er(net, config.samples, config.seed, config.threads, **kwargs)
    write_json(report.to_dict(), out / "comparison.json")

    tables = {"table1": emit_table("table1", {"networks": {config.label: net}}),
              "table4": emit_table("table4", {"networks": {config.label: net}, "k": config.top})}
    if net.directed:
        tables["table3"] = emit_table("table3", {"comparison": report, "label": config.label})
    else:
        tables["table2"] = emit_table("table2", {"comparisons": {config.label: report}})
    for name, table in sorted(tables.items()):
        write_table(table, out / f"{name}.txt")
        write_table(table, out / f"{name}.csv")

    summary = {
        "variant": config.variant.name,
        "tokens": stats.tokens,
        "skipped_tokens": stats.skipped_total,
        "n": metrics.n,
        "k": metrics.k,
        "avg_degree": metrics.avg_degree,
        "diameter": metrics.diameter,
        "avg_path_length": metrics.avg_path_length,
        "avg_clustering": metrics.avg_clustering,
        "er_avg_clustering": report.er_mean.avg_clustering,
        "clustering_ratio": report.clustering_ratio,
        "seed": config.seed,
        "samples": config.samples,
    }
    write_json(summary, out / "summary.json")
    return summary


def _fmt_summary(s: dict) -> str:
    def f(x, spec):
        return "n/a" if x is None else format(x, spec)
    return "\n".join([
        f"variant   {s['variant']}",
        f"tokens    {s['tokens']} ({s['skipped_tokens']} skipped)",
        f"N         {s['n']}",
        f"K         {s['k']}",
        f"<k>       {f(s['avg_degree'], '.2f')}",
        f"D         {f(s['diameter'], 'd')}",
        f"L         {f(s['avg_path_length'], '.3f')}",
        f"C         {f(s['avg_clustering'], '.3f')}",
        f"C(ER)     {f(s['er_avg_clustering'], '.4f')}  (mean of {s['samples']} samples, seed {s['seed']})",
        f"C/C(ER)   {f(s['clustering_ratio'], '.1f')}",
    ]) + "\n"


def cmd_run(args) -> int:
    if not args.inputs:
        raise UsageError("run needs at least one input path")
    config = PipelineConfig(
        inputs=args.inputs, out_dir=Path(args.out_dir), label=args.label, variant=_variant(args),
        min_degree=args.min_degree, iterative_filter=args.iterative_filter,
        strict_alphabet=args.strict_alphabet, alphabet=args.alphabet, rules_path=args.rules_path,
        samples=args.samples, seed=args.seed, threads=args.threads, graph_format=args.format,
        path_convention=args.path_convention, clustering_mode=args.clustering_mode,
        degree_convention=args.degree_convention, path_scope=args.path_scope, top=args.top,
    )
    summary = run_pipeline(config)
    sys.stdout.write(_fmt_summary(summary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syllnet", description="Syllable networks from text corpora.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("syllabify", help="print words split into syllables")
    p.add_argument("words", nargs="+")
    p.add_argument("--rules", dest="rules_path", metavar="FILE")
    p.set_defaults(func=cmd_syllabify)

    p = sub.add_parser("build", help="build a syllable network from text")
    _add_corpus_args(p)
    _add_variant_args(p)
    p.add_argument("-o", "--output", required=True, help="network file (.graphml, .gexf or .csv)")
    p.add_argument("--format", choices=("graphml", "gexf", "edge_csv"), help="override the format")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("merge", help="union of networks built with the same variant")
    p.add_argument("networks", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=("graphml", "gexf", "edge_csv"))
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("export", help="convert, project or filter a network file")
    p.add_argument("network")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=("graphml", "gexf", "edge_csv"))
    p.add_argument("--input-format", choices=("graphml", "gexf", "edge_csv"))
    p.add_argument("--undirected", action="store_true", help="drop direction and weights")
    p.add_argument("--min-degree", type=int, metavar="K")
    p.add_argument("--iterative-filter", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("analyze", help="network measures (N, K, <k>, L, D, C)")
    p.add_argument("network")
    p.add_argument("--report", metavar="JSON", help="write metrics JSON here instead of stdout")
    p.add_argument("--degree-dist", metavar="TSV", help="write the degree histogram (+ .loglog companion)")
    p.add_argument("--top", type=int, metavar="K", help="also print the K highest-degree syllables")
    _add_convention_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="compare with matched Erdős–Rényi graphs")
    p.add_argument("network")
    p.add_argument("-o", "--output", metavar="JSON")
    _add_er_args(p)
    _add_convention_args(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("top", help="highest-degree syllables")
    p.add_argument("network")
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--label", default="net")
    p.add_argument("--csv", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("table", help="report tables (table1 counts, table2 measures, "
                                     "table3 directed measures, table4 top syllables)")
    p.add_argument("table", choices=("table1", "table2", "table3", "table4") + tuple(t.value for t in TableSpec))
    p.add_argument("--net", action="append", metavar="LABEL=PATH", help="network file (table1, table4)")
    p.add_argument("--comparison", action="append", metavar="LABEL=PATH",
                   help="comparison JSON from 'compare' (table2, table3)")
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--csv", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("run", help="full pipeline: corpus to network, measures, baseline and tables")
    _add_corpus_args(p)
    _add_variant_args(p)
    _add_er_args(p)
    _add_convention_args(p)
    p.add_argument("-o", "--out-dir", required=True)
    p.add_argument("--format", choices=("graphml", "gexf", "edge_csv"), default="graphml")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (OSError, CorpusError, GraphParseError) as exc:
        print(f"syllnet: {exc}", file=sys.stderr)
        return EXIT_IO
    except (AnalysisError, VariantMismatch) as exc:
        print(f"syllnet: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except (UsageError, RuleSetError, MissingInput, ValueError) as exc:
        print(f"syllnet: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
