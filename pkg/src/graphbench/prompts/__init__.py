from graphbench.prompts.builder import (
    build_distribution_prompt,
    build_property_prompt,
    build_rule_prompt,
    default_demonstration,
    describe_rule,
)
from graphbench.prompts.registry import (
    PromptRegistry,
    get_registry,
    template_hash,
)
from graphbench.prompts.response_parser import (
    answer_section,
    parse_p_estimate,
    parse_response,
    smiles_candidate,
)

__all__ = [
    "PromptRegistry",
    "answer_section",
    "build_distribution_prompt",
    "build_property_prompt",
    "build_rule_prompt",
    "default_demonstration",
    "describe_rule",
    "get_registry",
    "parse_p_estimate",
    "parse_response",
    "smiles_candidate",
    "template_hash",
]
