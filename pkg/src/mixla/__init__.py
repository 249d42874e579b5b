"""mixla: construct, verify, bound, search for, and decode mixed-level
locating arrays for combinatorial interaction testing."""

from .bounds import BoundResult, bound_case, lower_bound
from .core import (
    Array,
    ColumnMap,
    FormatError,
    Interaction,
    LevelProfile,
    PreconditionError,
    RowSet,
    SizeCapError,
    canonicalize,
    parse_array,
    serialize_array,
)
from .decoder import Diagnosis, Locator, Outcomes, locate, simulate_outcomes
from .direct import (
    build_la_1_w,
    build_la_2_3,
    build_oa_sum,
    build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
    full_factorial,
)
from .recursive import (
    derive,
    expand_level,
    fuse,
    pdimoa_product,
    product,
    roux_one,
    roux_two,
    split_column,
    truncate,
)
from .search import Cost, SearchParams, anneal, cost
from .verifier import (
    IndexProfile,
    NotAnMoaError,
    VerificationReport,
    Witness,
    enumerate_interactions,
    interaction_count,
    is_detecting,
    is_locating,
    is_mca,
    is_mca2_star,
    is_pdimoa,
    is_pdimoa_star,
    iter_rho,
    moa_indices,
    rho,
    rho_set,
)

__version__ = "0.1.0"

__all__ = [
    "Array",
    "BoundResult",
    "ColumnMap",
    "Cost",
    "Diagnosis",
    "FormatError",
    "IndexProfile",
    "Interaction",
    "LevelProfile",
    "Locator",
    "NotAnMoaError",
    "Outcomes",
    "PreconditionError",
    "RowSet",
    "SearchParams",
    "SizeCapError",
    "VerificationReport",
    "Witness",
    "anneal",
    "bound_case",
    "build_la_1_w",
    "build_la_2_3",
    "build_oa_sum",
    "build_pdimoa_star_general",
    "build_pdimoa_star_t_plus_1",
    "canonicalize",
    "cost",
    "derive",
    "enumerate_interactions",
    "expand_level",
    "full_factorial",
    "fuse",
    "interaction_count",
    "is_detecting",
    "is_locating",
    "is_mca",
    "is_mca2_star",
    "is_pdimoa",
    "is_pdimoa_star",
    "iter_rho",
    "locate",
    "lower_bound",
    "moa_indices",
    "parse_array",
    "pdimoa_product",
    "product",
    "rho",
    "rho_set",
    "roux_one",
    "roux_two",
    "serialize_array",
    "simulate_outcomes",
    "split_column",
    "truncate",
]
