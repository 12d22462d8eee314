"""Basis partitions: rank-vector constructions, generators, censuses and
generating-function identity checks."""

from .basis import (
    Block,
    Side,
    basis_census,
    blocks_of,
    construct_basis,
    fiber_count,
    franklin_step,
    is_basis,
    signature,
)
from .complete import complete_census, d3_weighted_sum, is_complete, power_of_two_profile
from .errors import (
    BasisPartError,
    EnumerationLimitError,
    FixedPointError,
    OrderLimitError,
    PreconditionError,
    SlideError,
    VerificationError,
)
from .partitions import (
    Partition,
    conjugate,
    decompose,
    durfee_side,
    hook_sums,
    is_primary,
    partitions_of,
    rank_vector,
)
from .pod import (
    PodPartition,
    TwoModularGraph,
    construct_minimal,
    is_minimal_basis,
    is_pod_basis,
    pod_census,
    pod_rank_vector,
    pod_spawn_basis,
    spawn_from_minimal,
)
from .primary import primary_to_rr, rr_to_primary, signature_fiber, slide_all, spawn_basis, weighted_census
from .qseries.catalogue import check_identity, identity_ids

__all__ = [
    "BasisPartError",
    "Block",
    "EnumerationLimitError",
    "FixedPointError",
    "OrderLimitError",
    "Partition",
    "PodPartition",
    "PreconditionError",
    "Side",
    "SlideError",
    "TwoModularGraph",
    "VerificationError",
    "basis_census",
    "blocks_of",
    "check_identity",
    "complete_census",
    "conjugate",
    "construct_basis",
    "construct_minimal",
    "d3_weighted_sum",
    "decompose",
    "durfee_side",
    "fiber_count",
    "franklin_step",
    "hook_sums",
    "identity_ids",
    "is_basis",
    "is_complete",
    "is_minimal_basis",
    "is_pod_basis",
    "is_primary",
    "partitions_of",
    "pod_census",
    "pod_rank_vector",
    "pod_spawn_basis",
    "power_of_two_profile",
    "primary_to_rr",
    "rank_vector",
    "rr_to_primary",
    "signature",
    "signature_fiber",
    "slide_all",
    "spawn_basis",
    "spawn_from_minimal",
    "weighted_census",
    "clear_caches",
]

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoized census and series (used to time cold runs)."""
    from . import basis, complete, pod, primary
    from .qseries import catalogue

    for fn in (basis._basis_members, basis._basis_census, basis._rank_vector_counts, complete._complete_census, pod._pod_census):
        fn.cache_clear()
    for name in dir(catalogue):
        fn = getattr(catalogue, name)
        if hasattr(fn, "cache_clear"):
            fn.cache_clear()
    primary._SIGNATURE_SERIES.update(order=-1, series=None)
