from graphbench.molecules.dataset import load_dataset, sample_positives
from graphbench.molecules.novelty import CommandCanonicalizer, molecule_novel_unique
from graphbench.molecules.rectify import expected_raw_score, rectify
from graphbench.molecules.scorers import (
    CommandScorer,
    ConstantScorer,
    HttpScorer,
    MoleculeScorer,
    build_scorer,
    parse_scores,
    score_molecules,
)

__all__ = [
    "CommandCanonicalizer",
    "CommandScorer",
    "ConstantScorer",
    "HttpScorer",
    "MoleculeScorer",
    "build_scorer",
    "expected_raw_score",
    "load_dataset",
    "molecule_novel_unique",
    "parse_scores",
    "rectify",
    "sample_positives",
    "score_molecules",
]
