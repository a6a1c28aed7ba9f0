"""Harness constants: presets, templates, defaults and limits."""

# Graph limits
MAX_ISOMORPHISM_NODES = 32
GENERATION_ATTEMPT_BUDGET = 10_000
MIN_CALIBRATION_SAMPLES = 1_000

# Rule size presets (per rule kind parameters)
SIZE_PRESETS: dict[str, dict[str, dict[str, object]]] = {
    "Small": {
        "Tree": {"n": 10},
        "Cycle": {"n": 10},
        "Components": {"n": 10, "k": 3},
        "Planar": {"n": 10, "m": 15},
        "KRegular": {"n": 12, "k": 3},
        "Wheel": {"n": 10},
        "Bipartite": {"part_sizes": (3, 3)},
        "KColor": {"n": 10, "m": 20, "k": 3},
        "TwoComponents": {"component_kinds": ("Tree", "Cycle"), "size_range": (5, 7)},
    },
    "Medium": {
        "Tree": {"n": 15},
        "Cycle": {"n": 15},
        "Components": {"n": 15, "k": 5},
        "Planar": {"n": 15, "m": 24},
        "KRegular": {"n": 16, "k": 3},
        "Wheel": {"n": 15},
        "Bipartite": {"part_sizes": (5, 5)},
        "KColor": {"n": 15, "m": 32, "k": 3},
        "TwoComponents": {"component_kinds": ("Tree", "Cycle"), "size_range": (5, 7)},
    },
    "Large": {
        "Tree": {"n": 20},
        "Cycle": {"n": 20},
        "Components": {"n": 20, "k": 7},
        "Planar": {"n": 20, "m": 33},
        "KRegular": {"n": 20, "k": 3},
        "Wheel": {"n": 20},
        "Bipartite": {"part_sizes": (7, 7)},
        "KColor": {"n": 18, "m": 39, "k": 3},
        "TwoComponents": {"component_kinds": ("Tree", "Cycle"), "size_range": (5, 7)},
    },
}
DEFAULT_PRESET = "Medium"

# Sampling temperatures
RULE_TEMPERATURE = 0.8
DISTRIBUTION_TEMPERATURE = 0.5
PROPERTY_TEMPERATURE = 0.5

# Ablation grids
TEMPERATURE_GRID = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
AMOUNT_GRID = (5, 10, 20)
P_GRID = (0.2, 0.4, 0.6, 0.8)

# Run defaults
DEFAULT_REQUESTED_COUNT = 10
DEFAULT_TRIAL_COUNT = 10
DEFAULT_EXEMPLAR_COUNT = 3
DEFAULT_POSITIVE_COUNT = 10
DEFAULT_SET_SIZE = 10
DEFAULT_SIZE_RANGE = (5, 7)

# Motif task templates, 1-indexed edge lists
MOTIF_TEMPLATES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "Cycle": (5, ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))),
    "House": (5, ((1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5))),
    "Crane": (5, ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5))),
}
MOTIF_NODE_COUNT = 5

# Base graphs for the motif task
TREE_BASE_SHAPES = ((2, 2), (3, 2))  # (branching, depth): binary 7 nodes, ternary 13 nodes
LADDER_BASE_RUNGS = 4
WHEEL_BASE_NODES = 7

# Published MolHIV classifier confusion matrix
MOLHIV_CONFUSION = {"tn": 35539, "fp": 4145, "fn": 633, "tp": 810}

# Report rendering
MISSING_CELL = "---"
SHORT_OUTPUT_REASON = "model unable to generate enough graphs"

# Seed stream purposes
SEED_EXEMPLARS = 0
SEED_INPUT_SET = 1
SEED_DEMONSTRATION = 2
SEED_MOLECULES = 3
DEMONSTRATION_SEED = 20240
DEMONSTRATION_P = 0.3
