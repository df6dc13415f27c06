"""Co-authorship networks, social-capital measures and citation performance."""

from .errors import (
    DegenerateInput,
    DuplicatePubId,
    EmptyName,
    InsufficientData,
    LengthMismatch,
    MalformedRow,
    ScholarNetError,
    UnknownAuthor,
    UnknownMeasure,
)
from .graph import CoauthorGraph, EgoNetwork, build_graph, ego_network
from .ingest import AuthorProfile, Corpus, PublicationRecord, build_corpus, normalize_name, parse_records
from .metrics import (
    AuthorMetrics,
    citation_count,
    compute_all,
    effectiveness,
    ego_betweenness,
    h_index,
    power_diversity,
    power_tie_diversity,
    tie_strength,
)
from .stats import CorrelationResult, average_ranks, correlation_table, spearman

__version__ = "0.1.0"
