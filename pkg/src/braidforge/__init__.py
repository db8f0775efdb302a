"""Exact computation with positive braids and their closures."""

__version__ = "0.1.0"

from .braid_core import (
    BraidError,
    BraidParseError,
    BraidWord,
    Permutation,
    StrandTrace,
    concat,
    format_braid,
    full_twist,
    half_twist,
    is_positive,
    parse_braid,
    permutation_of,
    span_within,
    trace_strand,
)
from .families import (
    FamilyParams,
    TLinkSpec,
    VLinkSpec,
    companion_mid_t,
    companion_t,
    companion_v,
    parse_tlink,
    parse_vlink,
    satellite_family_t,
    satellite_family_v,
    t_link_braid,
    v_link_braid,
)
from .garside import (
    NormalForm,
    SimpleElement,
    extract_full_twists,
    normal_form,
    oracle_divisible_by_delta,
    positive_equal,
)
from .invariants import (
    InvariantBundle,
    alexander_polynomial,
    bundles_match,
    closure_components,
    euler_characteristic,
    invariant_bundle,
    linking_matrix,
)
from .laurent import LaurentPoly
from .satellite_ops import adjoin_axis, delete_components, match_case2_form
