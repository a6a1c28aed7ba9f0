from graphbench.rules.bipartite import find_bipartition, two_color_components
from graphbench.rules.calibration import (
    estimate_random_valid_prob,
    implied_edge_count,
    sample_random_graph,
)
from graphbench.rules.coloring import chromatic_number, find_k_coloring
from graphbench.rules.generators import (
    generate_exemplar,
    generate_exemplars,
    random_cycle,
    random_tree,
    turan_edge_count,
)
from graphbench.rules.validators import component_shape, find_wheel_hub, validate_rule

__all__ = [
    "chromatic_number",
    "component_shape",
    "estimate_random_valid_prob",
    "find_bipartition",
    "find_k_coloring",
    "find_wheel_hub",
    "generate_exemplar",
    "generate_exemplars",
    "implied_edge_count",
    "random_cycle",
    "random_tree",
    "sample_random_graph",
    "turan_edge_count",
    "validate_rule",
]
