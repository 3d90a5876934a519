"""Friends-and-strangers graphs on bipartite hosts: exact component counts,
swap-sequence certificates, minimum-degree scans, and random-graph sweeps."""

from .bigraph import (
    BgParseError,
    BiGraph,
    BridgeReport,
    StructureCensus,
    census,
    complete_host,
    cycle_host,
    emit_bg,
    find_bridges,
    from_matrix,
    is_connected,
    is_cycle,
    load_bg,
    make_bigraph,
    parse_bg,
    sample_gnp,
    zhu_two_components,
)
from .perms import factorials, perm_table, rank_of, unrank
from .engine import (
    DENSE_CAP,
    Bijection,
    ExchangeResult,
    FsReport,
    IsolatedSearch,
    apply_swap,
    count_isolated_states,
    exchangeable,
    fs_component_count,
    parity_class,
    swap_legal,
)
from .certlab import (
    EmbeddedCase,
    GadgetCase,
    GadgetParseError,
    ShortestResult,
    Verdict,
    VerdictFailure,
    builtin_corpus,
    embed_case,
    emit_gadget,
    load_gadget,
    parse_gadget,
    sequence_product,
    shortest_exchange,
    verify_certificate,
)
from .scan import (
    CorollaryReport,
    Counterexample,
    ScanReport,
    Witness,
    corollary_check,
    enumerate_subgraphs,
    theorem_scan,
    tightness_search,
)
from .randomlab import (
    AgreementReport,
    SweepConfig,
    SweepRow,
    classify_sample,
    cross_validate,
    emit_csv,
    expected_isolated,
    isolated_vertex_stats,
    parse_csv,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BgParseError",
    "BiGraph",
    "BridgeReport",
    "StructureCensus",
    "census",
    "complete_host",
    "cycle_host",
    "emit_bg",
    "find_bridges",
    "from_matrix",
    "is_connected",
    "is_cycle",
    "load_bg",
    "make_bigraph",
    "parse_bg",
    "sample_gnp",
    "zhu_two_components",
    "factorials",
    "perm_table",
    "rank_of",
    "unrank",
    "DENSE_CAP",
    "Bijection",
    "ExchangeResult",
    "FsReport",
    "IsolatedSearch",
    "apply_swap",
    "count_isolated_states",
    "exchangeable",
    "fs_component_count",
    "parity_class",
    "swap_legal",
    "EmbeddedCase",
    "GadgetCase",
    "GadgetParseError",
    "ShortestResult",
    "Verdict",
    "VerdictFailure",
    "builtin_corpus",
    "embed_case",
    "emit_gadget",
    "load_gadget",
    "parse_gadget",
    "sequence_product",
    "shortest_exchange",
    "verify_certificate",
    "CorollaryReport",
    "Counterexample",
    "ScanReport",
    "Witness",
    "corollary_check",
    "enumerate_subgraphs",
    "theorem_scan",
    "tightness_search",
    "AgreementReport",
    "SweepConfig",
    "SweepRow",
    "classify_sample",
    "cross_validate",
    "emit_csv",
    "expected_isolated",
    "isolated_vertex_stats",
    "parse_csv",
    "sweep",
]
