"""Zagreb and ABC indices of trees, metric dimension, and exhaustive bound checks."""

from .bounds import (
    BoundEvaluation,
    Theorem,
    abc_max_bound,
    evaluate_bounds,
    lemma_F,
    lemma_g,
    lemma_scan,
    lemma_upsilon,
    m1_lower,
    m1_upper,
    m2_lower,
    m2_upper,
)
from .enumeration import canonical_code, enumerate_trees, oracle_enumerate, tree_from_code
from .graph import Tree, degrees, diameter, distance_matrix, leaves, parse_edge_list
from .harness import VerificationReport, extremal_search, sweep, verify_order
from .indices import Family, Index, InvariantRecord, abc_index, closed_form, first_zagreb, second_zagreb
from .metric_dimension import (
    ResolvingResult,
    is_resolving,
    metric_dimension_bruteforce,
    metric_dimension_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BoundEvaluation",
    "Family",
    "Index",
    "InvariantRecord",
    "ResolvingResult",
    "Theorem",
    "Tree",
    "VerificationReport",
    "abc_index",
    "abc_max_bound",
    "canonical_code",
    "closed_form",
    "degrees",
    "diameter",
    "distance_matrix",
    "enumerate_trees",
    "evaluate_bounds",
    "extremal_search",
    "first_zagreb",
    "is_resolving",
    "leaves",
    "lemma_F",
    "lemma_g",
    "lemma_scan",
    "lemma_upsilon",
    "m1_lower",
    "m1_upper",
    "m2_lower",
    "m2_upper",
    "metric_dimension_bruteforce",
    "metric_dimension_tree",
    "oracle_enumerate",
    "parse_edge_list",
    "second_zagreb",
    "sweep",
    "tree_from_code",
    "verify_order",
]
