"""Sorting networks, branchless compare-exchange strategies and small-array sorts.

Arrays are numpy ``uint64`` arrays of shape ``(n, 2)``; column 0 is the key,
column 1 a reference payload. All sorts work in place and order by key.
"""

import numpy as np

from ._smallsort import (
    Minstd,
    SmallsortError,
    aggregate_ranks,
    boxplot,
    check_sorted,
    emit_network,
    insertion_sort,
    network,
    network_depth,
    parse_network,
    permutation_fingerprint,
    quicksort,
    sample_sort,
    sort_small,
    swap_codes,
    validate_network,
)

__all__ = [
    "Minstd",
    "SmallsortError",
    "aggregate_ranks",
    "boxplot",
    "check_sorted",
    "elements",
    "emit_network",
    "insertion_sort",
    "network",
    "network_depth",
    "parse_network",
    "permutation_fingerprint",
    "quicksort",
    "sample_sort",
    "sort_small",
    "swap_codes",
    "validate_network",
]


def elements(keys, references=None):
    """Build an (n, 2) uint64 element array; references default to 0..n-1."""
    keys = np.asarray(keys, dtype=np.uint64)
    if references is None:
        references = np.arange(len(keys), dtype=np.uint64)
    return np.ascontiguousarray(np.stack([keys, np.asarray(references, dtype=np.uint64)], axis=1))
