"""Weighted undirected co-authorship network."""

from __future__ import annotations

import csv
import io
import operator
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import UnknownAuthor
from .ingest import Corpus


class CoauthorGraph:
    """Adjacency-list graph over dense author ids ``0..n-1``.

    ``adjacency[u]`` is a tuple of ``(neighbor, weight)`` pairs sorted by
    neighbor id. Weights count joint publications and are always >= 1.
    Instances are treated as immutable once built.
    """

    __slots__ = ("n", "adjacency", "_neighbor_sets", "_weights")

    def __init__(self, n: int, adjacency: Sequence[Sequence[tuple[int, int]]]):
        if len(adjacency) != n:
            raise ValueError("adjacency must have one entry per node")
        self.n = n
        self.adjacency = tuple(tuple(sorted(row)) for row in adjacency)
        self._weights = tuple(dict(row) for row in self.adjacency)
        self._neighbor_sets = tuple(frozenset(w) for w in self._weights)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "CoauthorGraph":
        """Build from ``(u, v, w)`` triples; repeated pairs accumulate weight."""
        weights: Counter = Counter()
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if w < 1:
                raise ValueError(f"edge weight must be >= 1, got {w}")
            weights[(min(u, v), max(u, v))] += w
        return cls._from_pair_counts(n, weights)

    @classmethod
    def _from_pair_counts(cls, n, weights):
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), w in weights.items():
            adjacency[u].append((v, w))
            adjacency[v].append((u, w))
        return cls(n, adjacency)

    def neighbors(self, u: int) -> frozenset[int]:
        return self._neighbor_sets[u]

    def weight(self, u: int, v: int) -> int:
        """Tie strength between ``u`` and ``v``; 0 when not adjacent."""
        return self._weights[u].get(v, 0)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def weighted_degree(self, u: int) -> int:
        return sum(w for _, w in self.adjacency[u])

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(src, dst, weight)`` with ``src < dst``, sorted."""
        return [(u, v, w) for u in range(self.n) for v, w in self.adjacency[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def __eq__(self, other):
        if not isinstance(other, CoauthorGraph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"CoauthorGraph(n={self.n}, edges={self.num_edges()})"


@dataclass(frozen=True)
class EgoNetwork:
    ego: int
    alters: tuple[int, ...]
    # ego_ties[i] is the tie strength between ego and alters[i]
    ego_ties: tuple[int, ...]
    # (a, b, w) with a < b, both in alters
    alter_ties: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.alters)

    def alter_adjacency(self) -> dict[int, set[int]]:
        adj = {a: set() for a in self.alters}
        for a, b, _ in self.alter_ties:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def build_graph(corpus: Corpus) -> CoauthorGraph:
    """Each publication adds 1 to the tie of every pair of its authors."""
    pair_counts: Counter = Counter()
    for ids in corpus.publication_authors:
        for u, v in combinations(sorted(ids), 2):
            pair_counts[(u, v)] += 1
    return CoauthorGraph._from_pair_counts(len(corpus.authors), pair_counts)


def ego_network(g: CoauthorGraph, ego: int) -> EgoNetwork:
    try:
        ego = operator.index(ego)
    except TypeError:
        raise UnknownAuthor(ego) from None
    if not 0 <= ego < g.n:
        raise UnknownAuthor(ego)
    row = g.adjacency[ego]
    alters = tuple(v for v, _ in row)
    alter_set = g.neighbors(ego)
    alter_ties = tuple(
        (a, b, w)
        for a in alters
        for b, w in g.adjacency[a]
        if a < b and b in alter_set
    )
    return EgoNetwork(ego=ego, alters=alters, ego_ties=tuple(w for _, w in row), alter_ties=alter_ties)


def edge_list_csv(g: CoauthorGraph, names: Sequence[str] | None = None) -> str:
    """Render the ``src,dst,weight`` edge list; ids are swapped for names if given."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["src", "dst", "weight"])
    for u, v, w in g.edges():
        if names is None:
            writer.writerow([u, v, w])
        else:
            writer.writerow([names[u], names[v], w])
    return buf.getvalue()


def read_edge_list(text: str) -> list[tuple[int, int, int]]:
    reader = csv.DictReader(io.StringIO(text))
    return [(int(r["src"]), int(r["dst"]), int(r["weight"])) for r in reader]
