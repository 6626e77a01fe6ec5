"""
Bound calculator (facade): relation parameters, family relations, block sensitivity and relation search.
"""

from __future__ import annotations

from .block_sensitivity import block_sensitivity, bs_relation
from .boolean_functions import (
    and_of_ors_table,
    and_table,
    constant_table,
    counting_table,
    majority_table,
    or_table,
    parity_table,
    permutation_inversion_table,
    random_truth_table,
    search_identification_table,
    single_variable_table,
    unit_vector,
)
from .bound_contracts import (
    AdversaryRelation,
    BlockSensitivityResult,
    BoundReport,
    EnumerationCheck,
    RelationParameters,
    word_label,
)
from .family_relations import RelationFamily, closed_form_parameters, family_relation
from .relation_files import format_relation, parse_relation, read_relation, write_relation
from .relation_parameters import (
    bound_report,
    implied_query_lower_bound,
    relation_parameters,
    theorem2_bound,
    theorem3_bound,
)
from .relation_search import SearchLimits, decision_tree_depth, search_best_relation

__all__ = [
    "AdversaryRelation",
    "BlockSensitivityResult",
    "BoundReport",
    "EnumerationCheck",
    "RelationFamily",
    "RelationParameters",
    "SearchLimits",
    "and_of_ors_table",
    "and_table",
    "block_sensitivity",
    "bound_report",
    "bs_relation",
    "closed_form_parameters",
    "constant_table",
    "counting_table",
    "decision_tree_depth",
    "family_relation",
    "format_relation",
    "implied_query_lower_bound",
    "majority_table",
    "or_table",
    "parity_table",
    "parse_relation",
    "permutation_inversion_table",
    "random_truth_table",
    "read_relation",
    "relation_parameters",
    "search_best_relation",
    "search_identification_table",
    "single_variable_table",
    "theorem2_bound",
    "theorem3_bound",
    "unit_vector",
    "word_label",
    "write_relation",
]
