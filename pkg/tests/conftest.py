import csv
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scholarnet.ingest import PublicationRecord  # noqa: E402

HEADER = ["pub_id", "title", "year", "venue", "citations", "authors"]


def record(pub_id, authors, citations=0, venue="J1", year=2005):
    return PublicationRecord(pub_id, f"Title {pub_id}", year, venue, citations, tuple(authors))


def write_csv(path, records):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(HEADER)
        for r in records:
            writer.writerow([r.pub_id, r.title, r.year, r.venue, r.citations, "; ".join(r.authors)])
    return path


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            obj = dict(pub_id=r.pub_id, title=r.title, year=r.year, venue=r.venue,
                       citations=r.citations, authors=list(r.authors))
            fh.write(json.dumps(obj) + "\n")
    return path


@pytest.fixture
def small_records():
    return [
        record("p1", ["A. Smith", "B. Jones"], citations=12, venue="J1"),
        record("p2", ["A. Smith", "C. Wu", "B. Jones"], citations=3, venue="J2"),
        record("p3", ["D. Solo"], citations=7, venue="J1"),
    ]


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    label = getattr(report, "criterion", None)
    if label is None:
        return
    if report.when == "call" or report.failed:
        _criteria[label] = _criteria.get(label, True) and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
