"""Per-author performance and social-capital measures.

Performance is the citation count and the h-index. Social capital is read
off each author's ego network: size, tie strength, effectiveness,
ego-betweenness, and the two h-style indices over co-authors (power
diversity uses co-author h-indices, power-tie diversity multiplies each
co-author's h-index by the tie strength first).

Non-integer measures are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import LengthMismatch
from .graph import CoauthorGraph, EgoNetwork, ego_network
from .ingest import AuthorProfile, Corpus

EFFECTIVENESS_VARIANTS = ("binary", "weighted")

PERFORMANCE_MEASURES = ("citation_count", "h_index")
CAPITAL_MEASURES = (
    "degree",
    "weighted_degree",
    "avg_tie_strength",
    "effectiveness",
    "ego_betweenness",
    "power_diversity",
    "power_tie_diversity",
)
METRIC_COLUMNS = PERFORMANCE_MEASURES + CAPITAL_MEASURES


@dataclass(frozen=True)
class AuthorMetrics:
    author_id: int
    citation_count: int
    h_index: int
    degree: int
    weighted_degree: int
    avg_tie_strength: Fraction
    effectiveness: Fraction
    ego_betweenness: Fraction
    power_diversity: int
    power_tie_diversity: int

    def get(self, measure: str):
        return getattr(self, measure)


assert tuple(f.name for f in fields(AuthorMetrics))[1:] == METRIC_COLUMNS


def h_index(values: Iterable[int]) -> int:
    """Largest h such that at least h of ``values`` are >= h."""
    h = 0
    for rank, value in enumerate(sorted(values, reverse=True), start=1):
        if value < rank:
            break
        h = rank
    return h


def citation_count(profile: AuthorProfile) -> int:
    return sum(profile.citation_vector)


def tie_strength(eg: EgoNetwork) -> tuple[int, int, Fraction]:
    """Degree, summed tie strength and mean tie strength of the ego."""
    degree = len(eg.alters)
    total = sum(eg.ego_ties)
    avg = Fraction(total, degree) if degree else Fraction(0)
    return degree, total, avg


def _binary_effectiveness(eg: EgoNetwork) -> Fraction:
    n = len(eg.alters)
    if n == 0:
        return Fraction(0)
    t = len(eg.alter_ties)
    return Fraction(n * n - 2 * t, n)


def _weighted_effectiveness(eg: EgoNetwork) -> Fraction:
    # Burt's effective size restricted to the ego network
    if not eg.alters:
        return Fraction(0)
    ego_w = dict(zip(eg.alters, eg.ego_ties))
    total = sum(eg.ego_ties)
    ties: dict[int, dict[int, int]] = {a: {} for a in eg.alters}
    for a, b, w in eg.alter_ties:
        ties[a][b] = w
        ties[b][a] = w

    size = Fraction(0)
    for j in eg.alters:
        strongest = max(ego_w[j], max(ties[j].values(), default=0))
        redundancy = sum(
            (Fraction(ego_w[q] * w_jq, total * strongest) for q, w_jq in ties[j].items()),
            Fraction(0),
        )
        size += 1 - redundancy
    return size


def effectiveness(eg: EgoNetwork, variant: str = "binary") -> Fraction:
    """Number of non-redundant contacts of the ego.

    ``binary`` is ``n - 2t/n`` over the unweighted alter graph (``t``
    alter-alter ties); ``weighted`` is Burt's effective size using tie
    strengths, with marginal strengths taken inside the ego network.
    Both are 0 for an isolate.
    """
    if variant == "binary":
        return _binary_effectiveness(eg)
    if variant == "weighted":
        return _weighted_effectiveness(eg)
    raise ValueError(f"unknown effectiveness variant {variant!r}")


def ego_betweenness(eg: EgoNetwork) -> Fraction:
    """Brokerage of the ego over pairs of its alters.

    Adjacent alter pairs contribute 0. A non-adjacent pair contributes
    ``1/k`` where ``k`` counts the nodes linking it inside the ego
    network, the ego included. Weights are ignored.
    """
    n = len(eg.alters)
    if n < 2:
        return Fraction(0)
    adj = eg.alter_adjacency()

    # shared alter neighbours, only for pairs that have at least one
    shared: Counter = Counter()
    for c in eg.alters:
        for a, b in combinations(sorted(adj[c]), 2):
            if b not in adj[a]:
                shared[(a, b)] += 1

    open_pairs = n * (n - 1) // 2 - len(eg.alter_ties)
    # group pairs by connector count so the Fraction sum stays short
    by_k = Counter(1 + s for s in shared.values())
    by_k[1] += open_pairs - len(shared)
    return sum((Fraction(count, k) for k, count in sorted(by_k.items())), Fraction(0))


def power_diversity(alter_h: Sequence[int]) -> int:
    """h-index over the co-authors' own h-indices."""
    return h_index(alter_h)


def power_strengths(alter_h: Sequence[int], tie_w: Sequence[int]) -> list[int]:
    if len(alter_h) != len(tie_w):
        raise LengthMismatch(f"{len(alter_h)} h-indices but {len(tie_w)} tie weights")
    return [h * w for h, w in zip(alter_h, tie_w)]


def power_tie_diversity(alter_h: Sequence[int], tie_w: Sequence[int]) -> int:
    """h-index over co-author h-index times tie strength."""
    return h_index(power_strengths(alter_h, tie_w))


def author_metrics(
    eg: EgoNetwork,
    profile: AuthorProfile,
    h_of: Sequence[int],
    variant: str = "binary",
) -> AuthorMetrics:
    degree, total, avg = tie_strength(eg)
    alter_h = [h_of[a] for a in eg.alters]
    return AuthorMetrics(
        author_id=eg.ego,
        citation_count=citation_count(profile),
        h_index=h_of[eg.ego],
        degree=degree,
        weighted_degree=total,
        avg_tie_strength=avg,
        effectiveness=effectiveness(eg, variant),
        ego_betweenness=ego_betweenness(eg),
        power_diversity=power_diversity(alter_h),
        power_tie_diversity=power_tie_diversity(alter_h, eg.ego_ties),
    )


def compute_all(corpus: Corpus, g: CoauthorGraph, variant: str = "binary") -> list[AuthorMetrics]:
    """One :class:`AuthorMetrics` per author, ordered by author id."""
    if variant not in EFFECTIVENESS_VARIANTS:
        raise ValueError(f"unknown effectiveness variant {variant!r}")
    if g.n != len(corpus.authors):
        raise ValueError(f"graph has {g.n} nodes but corpus has {len(corpus.authors)} authors")
    # co-author h-indices come from this corpus only
    h_of = [h_index(p.citation_vector) for p in corpus.authors]
    return [
        author_metrics(ego_network(g, p.author_id), p, h_of, variant)
        for p in corpus.authors
    ]
