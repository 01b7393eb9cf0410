from ._grasp import (
    DatasetBundle,
    Graph,
    apply_edits,
    balanced_forman,
    compute_metrics,
    load_tudataset,
    ollivier_ricci,
    rewire,
    similarity,
    spectral_gap,
    total_resistance,
    wasserstein1,
)

__all__ = [
    "DatasetBundle",
    "Graph",
    "apply_edits",
    "balanced_forman",
    "compute_metrics",
    "load_tudataset",
    "ollivier_ricci",
    "rewire",
    "similarity",
    "spectral_gap",
    "total_resistance",
    "wasserstein1",
]
