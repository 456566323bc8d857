"""Exact enumeration of grid classes of signed permutations."""
from .distance import (
    Family,
    ResourceLimitError,
    distance_polynomial,
    pancake_pi,
    reversal_pi,
    sorting_sequence,
)
from .gridclass import (
    LengthHistogram,
    closure_histogram,
    complete_and_compact,
    enumerate_gridclass,
    grid_member,
    length_histogram,
)
from .oracle import DistanceHistogram, bfs_histogram, count_within, verify
from .perm import (
    SignedPerm,
    block_reversal,
    compactify,
    contains,
    delete,
    format_perm,
    identity,
    inflate,
    is_compact,
    parse_perm,
    prefix_reversal,
    standardize,
)
from .poly import Polynomial, binomial_basis_poly, from_histogram, gregory_newton

__all__ = [
    "Family",
    "ResourceLimitError",
    "distance_polynomial",
    "pancake_pi",
    "reversal_pi",
    "sorting_sequence",
    "LengthHistogram",
    "closure_histogram",
    "complete_and_compact",
    "enumerate_gridclass",
    "grid_member",
    "length_histogram",
    "DistanceHistogram",
    "bfs_histogram",
    "count_within",
    "verify",
    "SignedPerm",
    "block_reversal",
    "compactify",
    "contains",
    "delete",
    "format_perm",
    "identity",
    "inflate",
    "is_compact",
    "parse_perm",
    "prefix_reversal",
    "standardize",
    "Polynomial",
    "binomial_basis_poly",
    "from_histogram",
    "gregory_newton",
]

__version__ = "0.1.0"
