"""Best complete approximations of finite preorders.

A preference relation on a finite set (a reflexive transitive relation, not
necessarily total) induces choices: the maximal elements of each menu.  The
top-difference semimetric totals, over all menus, how far apart the choices
of two relations are.  This package computes the total preorders nearest to
a given preorder under that semimetric, three ways: by definition, through
the index-maximization dual, and in closed form for the order families where
the canonical completion is known to win.
"""

from ._backend import BACKEND_NAME
from .core import (
    GroundSet,
    Mask,
    Preorder,
    Relation,
    TotalPreorder,
    asymmetric_part,
    converse,
    down_set,
    hasse_edges,
    incomparable_witness,
    is_completion,
    is_total,
    layers,
    maximal_elements,
    maximum_elements,
    preorder_from_predicate,
    relation_from_pairs,
    relation_violations,
    restrict,
    symmetric_part,
    to_total,
    up_set,
    validate_preorder,
)
from .completions import (
    CompletionStream,
    canonical_completion,
    enumerate_completions,
    enumerate_preorders,
    enumerate_total_preorders,
    is_maximal_completion,
)
from .documents import (
    RelationDocument,
    document_from_relation,
    document_from_total,
    document_to_json,
    document_to_preorder,
    document_to_relation,
    parse_document,
    render_dot,
)
from .errors import (
    BadParameter,
    DocumentError,
    EmptySequence,
    EmptySubset,
    GroundMismatch,
    NotACompletion,
    NotTotal,
    ParameterMismatch,
    PreorderBcaError,
    TooLarge,
    ViolationError,
)
from .families import FamilySpec
from .metrics import (
    DominationProfile,
    MenuDelta,
    StrictCompletionReport,
    domination_profile,
    delta_menu,
    ksb_distance,
    top_difference_direct,
    top_difference_fast,
    verify_strict_optimality,
)
from .scoring import (
    DyadicRational,
    layer_composition,
    index_general,
    index_total,
    normalized_index,
    score,
)
from .solver import (
    ApproximationReport,
    ConditionStarReport,
    ConditionStarWitness,
    CoveringRadiusReport,
    bca_auto,
    bca_bruteforce,
    bca_duality,
    bca_theorem5,
    condition_star,
    covering_radius,
)

__version__ = "0.1.0"
