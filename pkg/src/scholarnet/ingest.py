"""Reading publication records and resolving author identities.

Records come from a CSV file (header required) or from JSON Lines. Author
names are reduced to a canonical key by :func:`normalize_name`; two raw
names are the same scholar iff their keys are equal, optionally after an
alias table has been applied.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DuplicatePubId, EmptyName, MalformedRow

REQUIRED_FIELDS = ("pub_id", "title", "year", "venue", "citations", "authors")
AUTHOR_DELIMITER = ";"

# single letters joined by periods once trailing periods are gone: "y.b", "j.r.r"
_INITIALS = re.compile(r"^(?:[^\W\d_]\.)+[^\W\d_]$")


@dataclass(frozen=True)
class PublicationRecord:
    pub_id: str
    title: str
    year: int
    venue: str
    citations: int
    authors: tuple[str, ...]
    keywords: tuple[str, ...] = ()


@dataclass(frozen=True)
class AuthorProfile:
    author_id: int
    canonical_name: str
    publication_ids: frozenset[str]
    # aligned with the corpus publication order, one entry per publication
    citation_vector: tuple[int, ...]


@dataclass(frozen=True)
class Corpus:
    publications: tuple[PublicationRecord, ...]
    authors: tuple[AuthorProfile, ...]
    author_index: Mapping[str, int] = field(repr=False)
    # canonical author ids per publication, same order as ``publications``
    publication_authors: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    def __len__(self) -> int:
        return len(self.authors)

    def name(self, author_id: int) -> str:
        return self.authors[author_id].canonical_name


def normalize_name(raw: str) -> str:
    """Canonical key for an author name.

    Whitespace is trimmed and collapsed, case is folded, trailing periods
    are dropped from every token, and runs of dotted initials are fused
    (``"Y.B. Jun"`` becomes ``"yb jun"``). The function is idempotent.
    """
    tokens = []
    for token in raw.casefold().split():
        token = token.rstrip(".")
        if _INITIALS.match(token):
            token = token.replace(".", "")
        if token:
            tokens.append(token)
    if not tokens:
        raise EmptyName(f"author name {raw!r} is empty after normalization")
    return " ".join(tokens)


def _split_list(value: str, delimiter: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in value.split(delimiter) if part.strip())


def _parse_int(value, line: int, name: str) -> int:
    if isinstance(value, bool):
        raise MalformedRow(line, f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return int(text)
        except ValueError:
            pass
    raise MalformedRow(line, f"{name} must be an integer, got {value!r}")


def _make_record(row: Mapping, line: int, delimiter: str) -> PublicationRecord:
    for name in REQUIRED_FIELDS:
        if row.get(name) is None:
            raise MalformedRow(line, f"missing required field {name!r}")

    pub_id = str(row["pub_id"]).strip()
    if not pub_id:
        raise MalformedRow(line, "empty pub_id")
    year = _parse_int(row["year"], line, "year")
    citations = _parse_int(row["citations"], line, "citations")
    if citations < 0:
        raise MalformedRow(line, f"citations must be non-negative, got {citations}")

    raw_authors = row["authors"]
    if isinstance(raw_authors, str):
        authors = _split_list(raw_authors, delimiter)
    elif isinstance(raw_authors, list):
        if not all(isinstance(a, str) for a in raw_authors):
            raise MalformedRow(line, "authors must be strings")
        authors = tuple(a.strip() for a in raw_authors if a.strip())
    else:
        raise MalformedRow(line, f"authors must be a list or string, got {raw_authors!r}")
    if not authors:
        raise MalformedRow(line, "no authors listed")
    for name in authors:
        try:
            normalize_name(name)
        except EmptyName:
            raise MalformedRow(line, f"author name {name!r} is empty after normalization") from None

    raw_keywords = row.get("keywords") or ()
    if isinstance(raw_keywords, str):
        keywords = _split_list(raw_keywords, delimiter)
    else:
        keywords = tuple(str(k).strip() for k in raw_keywords if str(k).strip())

    return PublicationRecord(
        pub_id=pub_id,
        title=str(row["title"]),
        year=year,
        venue=str(row["venue"]).strip(),
        citations=citations,
        authors=authors,
        keywords=keywords,
    )


def _iter_csv(path: Path):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [name for name in REQUIRED_FIELDS if name not in header]
        if missing:
            raise MalformedRow(1, f"header lacks column(s): {', '.join(missing)}")
        for row in reader:
            if None in row:
                raise MalformedRow(reader.line_num, "more fields than header columns")
            yield reader.line_num, row


def _iter_jsonl(path: Path):
    with open(path, encoding="utf-8") as fh:
        for lineno, text in enumerate(fh, start=1):
            if not text.strip():
                continue
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise MalformedRow(lineno, f"invalid JSON: {exc.msg}") from None
            if not isinstance(obj, dict):
                raise MalformedRow(lineno, "expected a JSON object")
            yield lineno, obj


def parse_records(path, format: str = "csv", delimiter: str = AUTHOR_DELIMITER) -> list[PublicationRecord]:
    """Read publication records from ``path`` in input order.

    Raises :class:`MalformedRow` with the offending line number and
    :class:`DuplicatePubId` when an id repeats.
    """
    path = Path(path)
    if format == "csv":
        rows = _iter_csv(path)
    elif format == "jsonl":
        rows = _iter_jsonl(path)
    else:
        raise ValueError(f"unsupported input format {format!r}")

    records = []
    seen = set()
    for line, row in rows:
        record = _make_record(row, line, delimiter)
        if record.pub_id in seen:
            raise DuplicatePubId(record.pub_id, line)
        seen.add(record.pub_id)
        records.append(record)
    return records


def load_aliases(path) -> dict[str, str]:
    """Read a ``from_name,to_name`` CSV into a map between canonical keys."""
    aliases = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or not {"from_name", "to_name"} <= set(reader.fieldnames):
            raise MalformedRow(1, "alias file needs columns from_name,to_name")
        for row in reader:
            if not row["from_name"] or not row["to_name"]:
                raise MalformedRow(reader.line_num, "empty alias name")
            aliases[normalize_name(row["from_name"])] = normalize_name(row["to_name"])
    return aliases


def _resolve(name: str, aliases: Mapping[str, str]) -> str:
    # follow alias chains; a cycle resolves to its smallest member
    path = [name]
    while name in aliases:
        name = aliases[name]
        if name in path:
            return min(path[path.index(name):])
        path.append(name)
    return name


def build_corpus(records: Sequence[PublicationRecord], aliases: Mapping[str, str] | None = None) -> Corpus:
    """Deduplicate authors and index them by sorted canonical name."""
    aliases = aliases or {}
    seen_ids = set()
    per_pub_names = []
    for rec in records:
        if rec.pub_id in seen_ids:
            raise DuplicatePubId(rec.pub_id)
        seen_ids.add(rec.pub_id)
        names = []
        for raw in rec.authors:
            key = _resolve(normalize_name(raw), aliases)
            if key not in names:
                names.append(key)
        per_pub_names.append(names)

    ordered = sorted({name for names in per_pub_names for name in names})
    index = {name: i for i, name in enumerate(ordered)}

    pubs_of: list[list[str]] = [[] for _ in ordered]
    cites_of: list[list[int]] = [[] for _ in ordered]
    pub_authors = []
    for rec, names in zip(records, per_pub_names):
        ids = tuple(index[name] for name in names)
        pub_authors.append(ids)
        for aid in ids:
            pubs_of[aid].append(rec.pub_id)
            cites_of[aid].append(rec.citations)

    profiles = tuple(
        AuthorProfile(
            author_id=i,
            canonical_name=name,
            publication_ids=frozenset(pubs_of[i]),
            citation_vector=tuple(cites_of[i]),
        )
        for i, name in enumerate(ordered)
    )
    return Corpus(
        publications=tuple(records),
        authors=profiles,
        author_index=index,
        publication_authors=tuple(pub_authors),
    )


def load_corpus(path, format: str = "csv", alias_path=None) -> Corpus:
    aliases = load_aliases(alias_path) if alias_path else None
    return build_corpus(parse_records(path, format), aliases)

