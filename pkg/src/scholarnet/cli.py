"""Command-line entry point.

    scholarnet metrics   --input pubs.csv --out results/
    scholarnet correlate --input pubs.csv --out results/
    scholarnet top       --input pubs.csv --by h_index --top-n 10 --out-format markdown
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import ScholarNetError, UnknownMeasure
from .graph import build_graph, edge_list_csv
from .ingest import Corpus, build_corpus, load_aliases, parse_records
from .metrics import EFFECTIVENESS_VARIANTS, AuthorMetrics, compute_all
from .report import (
    CORRELATION_HEADER,
    METRICS_HEADER,
    OUTPUT_FORMATS,
    TOP_MEASURES,
    VENUE_HEADER,
    VENUE_MEASURES,
    correlation_rows,
    metrics_rows,
    render,
    top_authors,
    top_venues,
    venue_rows,
)
from .stats import correlation_table

logger = logging.getLogger("scholarnet")

_EXTENSIONS = {"csv": "csv", "json": "json", "markdown": "md"}


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    input_format: str = "csv"
    alias_path: Path | None = None
    drop_isolates: bool = False
    effectiveness_variant: str = "binary"
    top_n: int = 20
    output_dir: Path = Path(".")
    output_format: str = "csv"

    def __post_init__(self):
        if self.top_n < 1:
            raise ValueError("top_n must be >= 1")
        if self.input_format not in ("csv", "jsonl"):
            raise ValueError(f"unknown input format {self.input_format!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.effectiveness_variant not in EFFECTIVENESS_VARIANTS:
            raise ValueError(f"unknown effectiveness variant {self.effectiveness_variant!r}")

    def output_path(self, stem: str) -> Path:
        return Path(self.output_dir) / f"{stem}.{_EXTENSIONS[self.output_format]}"


def write_atomic(path: Path, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see half a file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(config: RunConfig) -> Corpus:
    path = Path(config.input_path)
    if not path.is_file():
        raise FileNotFoundError(f"input file not found: {path}")
    aliases = None
    if config.alias_path is not None:
        if not Path(config.alias_path).is_file():
            raise FileNotFoundError(f"alias file not found: {config.alias_path}")
        aliases = load_aliases(config.alias_path)
    records = parse_records(path, config.input_format)
    return build_corpus(records, aliases)


def author_metrics(config: RunConfig, corpus: Corpus) -> list[AuthorMetrics]:
    g = build_graph(corpus)
    metrics = compute_all(corpus, g, config.effectiveness_variant)
    if config.drop_isolates:
        metrics = [m for m in metrics if m.degree > 0]
    return metrics


def cmd_ingest_check(config: RunConfig) -> int:
    corpus = load(config)
    g = build_graph(corpus)
    isolates = sum(1 for u in range(g.n) if g.degree(u) == 0)
    print(f"publications: {len(corpus.publications)}")
    print(f"authors: {len(corpus.authors)}")
    print(f"co-authorship ties: {g.num_edges()}")
    print(f"isolated authors: {isolates}")
    return 0


def cmd_graph_export(config: RunConfig) -> int:
    corpus = load(config)
    g = build_graph(corpus)
    edges_path = Path(config.output_dir) / "edges.csv"
    index_path = Path(config.output_dir) / "authors.csv"
    index = render(("author_id", "name"), [[p.author_id, p.canonical_name] for p in corpus.authors])
    write_atomic(edges_path, edge_list_csv(g))
    write_atomic(index_path, index)
    logger.info("wrote %s and %s", edges_path, index_path)
    return 0


def cmd_metrics(config: RunConfig) -> int:
    corpus = load(config)
    metrics = author_metrics(config, corpus)
    out = config.output_path("metrics")
    write_atomic(out, render(METRICS_HEADER, metrics_rows(metrics, corpus), config.output_format))
    logger.info("wrote %d author rows to %s", len(metrics), out)
    return 0


def cmd_correlate(config: RunConfig) -> int:
    corpus = load(config)
    metrics = author_metrics(config, corpus)
    results = correlation_table(metrics)
    out = config.output_path("correlations")
    write_atomic(out, render(CORRELATION_HEADER, correlation_rows(results), config.output_format))
    logger.info("wrote %d correlation rows to %s", len(results), out)
    return 0


def cmd_top(config: RunConfig, by: str) -> int:
    if by not in TOP_MEASURES:
        raise UnknownMeasure(by, TOP_MEASURES)
    corpus = load(config)
    if by in VENUE_MEASURES:
        rows = venue_rows(top_venues(corpus.publications, by, config.top_n))
        text = render(VENUE_HEADER, rows, config.output_format)
    else:
        metrics = author_metrics(config, corpus)
        ranked = top_authors(metrics, corpus, by, config.top_n)
        header = ("rank",) + METRICS_HEADER
        rows = [[i] + row for i, row in enumerate(metrics_rows(ranked, corpus), start=1)]
        text = render(header, rows, config.output_format)
    write_atomic(config.output_path(f"top_{by}"), text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, help="publication records file")
    common.add_argument("--format", choices=("csv", "jsonl"), default="csv", help="input format")
    common.add_argument("--aliases", type=Path, help="CSV of from_name,to_name author merges")
    common.add_argument("--drop-isolates", action="store_true", help="omit authors without co-authors")
    common.add_argument("--effectiveness", choices=EFFECTIVENESS_VARIANTS, default="binary")
    common.add_argument("--top-n", type=int, default=20)
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--out-format", choices=OUTPUT_FORMATS, default="csv")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="scholarnet",
        description="Co-authorship social capital and citation performance measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ingest-check", parents=[common], help="validate input and print corpus summary")
    sub.add_parser("graph-export", parents=[common], help="write the weighted edge list")
    sub.add_parser("metrics", parents=[common], help="write per-author measures")
    sub.add_parser("correlate", parents=[common], help="write Spearman correlations")
    top = sub.add_parser("top", parents=[common], help="write a top-N ranking")
    top.add_argument("--by", required=True, help=f"one of: {', '.join(TOP_MEASURES)}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.top_n < 1:
        print("error: --top-n must be >= 1", file=sys.stderr)
        return 1
    config = RunConfig(
        input_path=args.input,
        input_format=args.format,
        alias_path=args.aliases,
        drop_isolates=args.drop_isolates,
        effectiveness_variant=args.effectiveness,
        top_n=args.top_n,
        output_dir=args.out,
        output_format=args.out_format,
    )
    commands = {
        "ingest-check": cmd_ingest_check,
        "graph-export": cmd_graph_export,
        "metrics": cmd_metrics,
        "correlate": cmd_correlate,
        "top": lambda c: cmd_top(c, args.by),
    }
    try:
        return commands[args.command](config)
    except (ScholarNetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
