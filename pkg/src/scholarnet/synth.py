"""Synthetic publication corpora for tests and benchmarks."""

from __future__ import annotations

import os
import random

from .ingest import PublicationRecord

SEED_ENV = "SCHOLARNET_SEED"
DEFAULT_SEED = 20240101


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    value = os.environ.get(SEED_ENV)
    return int(value) if value else default


def author_name(i: int) -> str:
    return f"Author {i:05d}"


def random_records(
    n_pubs: int,
    n_authors: int,
    max_authors: int = 4,
    max_citations: int = 60,
    seed: int | None = None,
    cover_all: bool = False,
) -> list[PublicationRecord]:
    """Publications with 1..max_authors random authors each.

    With ``cover_all`` every author id that was never drawn gets one solo
    paper, so the corpus has exactly ``n_authors`` authors.
    """
    rng = random.Random(seed_from_env() if seed is None else seed)
    records = []
    for i in range(n_pubs):
        k = rng.randint(1, min(max_authors, n_authors))
        authors = tuple(author_name(a) for a in rng.sample(range(n_authors), k))
        records.append(
            PublicationRecord(
                pub_id=f"p{i:06d}",
                title=f"Synthetic paper {i}",
                year=rng.randint(2001, 2010),
                venue=f"Journal {rng.randint(1, 25):02d}",
                citations=min(max_citations, int(rng.paretovariate(1.2)) - 1),
                authors=authors,
            )
        )
    if cover_all:
        used = {name for rec in records for name in rec.authors}
        for a in range(n_authors):
            if author_name(a) not in used:
                i = len(records)
                records.append(
                    PublicationRecord(f"p{i:06d}", f"Synthetic paper {i}", 2005, "Journal 01", 0, (author_name(a),))
                )
    return records


def table2_records(ego: str = "E. Go", ego_h: int = 7) -> list[PublicationRecord]:
    """A corpus whose ego has seven co-authors with h-indices 6,5,5,3,3,1,1
    and collaboration counts 4,3,2,3,1,2,2.

    Each co-author's h-index comes from h solo papers cited h times; joint
    papers with the ego are uncited so they leave that h-index unchanged.
    The ego gets ``ego_h`` solo papers cited 10 times.
    """
    coauthors = [
        ("CA1", 6, 4),
        ("CA2", 5, 3),
        ("CA3", 5, 2),
        ("CA4", 3, 3),
        ("CA5", 3, 1),
        ("CA6", 1, 2),
        ("CA7", 1, 2),
    ]
    records = []

    def add(authors, citations, venue):
        pid = f"t2-{len(records):03d}"
        records.append(PublicationRecord(pid, f"Paper {pid}", 2005, venue, citations, tuple(authors)))

    for name, h, joint in coauthors:
        for _ in range(h):
            add([name], h, "Solo Journal")
        for _ in range(joint):
            add([ego, name], 0, "Joint Journal")
    for _ in range(ego_h):
        add([ego], 10, "Solo Journal")
    return records
