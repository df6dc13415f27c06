"""Ranked tables and rendering to CSV, JSON or Markdown."""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import UnknownMeasure
from .ingest import Corpus, PublicationRecord
from .metrics import METRIC_COLUMNS, AuthorMetrics
from .stats import CorrelationResult

OUTPUT_FORMATS = ("csv", "json", "markdown")
VENUE_MEASURES = ("publications", "citations")
TOP_MEASURES = METRIC_COLUMNS + VENUE_MEASURES

METRICS_HEADER = ("author",) + METRIC_COLUMNS
CORRELATION_HEADER = ("measure_x", "measure_y", "rho", "p_value", "n", "significant_at_0.01")
VENUE_HEADER = ("venue", "publications", "citations")


@dataclass(frozen=True)
class VenueRow:
    venue: str
    publications: int
    citations: int


def metrics_rows(metrics: Sequence[AuthorMetrics], corpus: Corpus) -> list[list]:
    return [[corpus.name(m.author_id)] + [m.get(c) for c in METRIC_COLUMNS] for m in metrics]


def correlation_rows(results: Sequence[CorrelationResult]) -> list[list]:
    return [[r.measure_x, r.measure_y, r.rho, r.p_value, r.n, r.significant] for r in results]


def venue_rows(rows: Sequence[VenueRow]) -> list[list]:
    return [[r.venue, r.publications, r.citations] for r in rows]


def venue_table(records: Sequence[PublicationRecord]) -> list[VenueRow]:
    pubs: dict[str, int] = defaultdict(int)
    cites: dict[str, int] = defaultdict(int)
    for rec in records:
        pubs[rec.venue] += 1
        cites[rec.venue] += rec.citations
    return [VenueRow(v, pubs[v], cites[v]) for v in sorted(pubs)]


def top_venues(records: Sequence[PublicationRecord], by: str = "publications", top_n: int = 20) -> list[VenueRow]:
    if by not in VENUE_MEASURES:
        raise UnknownMeasure(by, VENUE_MEASURES)
    rows = venue_table(records)
    rows.sort(key=lambda r: (-getattr(r, by), r.venue))
    return rows[:top_n]


def top_authors(metrics: Sequence[AuthorMetrics], corpus: Corpus, by: str, top_n: int = 20) -> list[AuthorMetrics]:
    """Highest ``by`` first; equal values fall back to ascending name."""
    if by not in METRIC_COLUMNS:
        raise UnknownMeasure(by, METRIC_COLUMNS)
    return sorted(metrics, key=lambda m: (-m.get(by), corpus.name(m.author_id)))[:top_n]


def _plain(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return repr(float(value))
    if value is None:
        return ""
    return value


def _json_value(value):
    if isinstance(value, Fraction):
        return float(value)
    return value


def _markdown_value(value):
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (Fraction, float)):
        return f"{float(value):.2f}"
    return str(value).replace("|", "\\|")


def render(header: Sequence[str], rows: Sequence[Sequence], fmt: str = "csv") -> str:
    """Render rows; CSV/JSON keep full precision, Markdown rounds to 2 decimals."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_plain(v) for v in row])
        return buf.getvalue()
    if fmt == "json":
        objs = [{k: _json_value(v) for k, v in zip(header, row)} for row in rows]
        return json.dumps(objs, indent=2, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(_markdown_value(v) for v in row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")
