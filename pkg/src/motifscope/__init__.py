"""Motif significance profiles and graphlet degree vectors for dynamic
networks, with density-based snapshot grouping and pixel-based rendering."""

from .census import (
    TRIAD_LABELS,
    CensusMatrix,
    build_census_matrix,
    classify_triad,
    count_triads,
    significance_profile,
    snapshot_profile,
    z_scores,
)
from .graphlets import GdvMatrix, compute_gdv, gdv_similarity, undirect
from .layout import force_layout
from .metrics import communities, network_metrics, node_metrics, pagerank
from .nullmodel import NullEnsembleStats, degree_signature, ensemble_stats, randomize
from .render import (
    ColorScale,
    build_view_model,
    color_of,
    diverging_scale,
    export_png,
    export_svg,
    grayscale_scale,
)
from .reorder import (
    ClusterAssignment,
    CollapsedLayout,
    DistanceMatrix,
    ViewState,
    cluster_density,
    collapse,
    cosine_distance_matrix,
    order_columns,
    order_rows,
    temporal_filter,
)
from .temporal import (
    DynamicNetwork,
    EdgeList,
    EdgeListFormat,
    Snapshot,
    TemporalEdge,
    discretize,
    ingest,
    supergraph,
)

__version__ = "0.1.0"
