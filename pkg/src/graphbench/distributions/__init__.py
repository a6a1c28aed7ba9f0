from graphbench.distributions.classify import classify, motif_decompositions
from graphbench.distributions.estimate import estimate_p_gen, positive_fraction
from graphbench.distributions.samplers import sample_graph, sample_input_set
from graphbench.distributions.templates import (
    build_base,
    full_tree,
    is_full_tree,
    is_ladder,
    is_wheel,
    ladder,
    motif_template,
    recognize_base,
    recognize_motif,
    wheel,
)

__all__ = [
    "build_base",
    "classify",
    "estimate_p_gen",
    "full_tree",
    "is_full_tree",
    "is_ladder",
    "is_wheel",
    "ladder",
    "motif_decompositions",
    "motif_template",
    "positive_fraction",
    "recognize_base",
    "recognize_motif",
    "sample_graph",
    "sample_input_set",
    "wheel",
]
