"""Render prompt bundles for the rule, distribution and property tasks."""

import re
from collections.abc import Sequence
from typing import Any

import structlog

from graphbench.config.constants import DEMONSTRATION_P, DEMONSTRATION_SEED
from graphbench.distributions import motif_template, sample_input_set
from graphbench.errors import (
    EmptyExemplarSet,
    InvalidExemplar,
    MissingExemplars,
    PromptError,
    UnsupportedStyle,
)
from graphbench.graphs import serialize_graph
from graphbench.models import (
    BaseKind,
    DistributionSpec,
    DistributionTask,
    ExpectedOutput,
    Graph,
    MotifKind,
    OutputKind,
    PromptBundle,
    PromptStyle,
    RuleSpec,
    WorkedExample,
)
from graphbench.prompts.registry import PromptRegistry, get_registry
from graphbench.rules import validate_rule

logger = structlog.get_logger(__name__)

GRAPH_SYSTEM_PROMPT = "graph_generator"
MOLECULE_SYSTEM_PROMPT = "molecule_generator"
DEFAULT_PROPERTY = "MolHIV"

_BLANK_RUNS = re.compile(r"\n{3,}")


def _tidy(text: str) -> str:
    """Collapse the blank lines left by empty optional blocks."""
    return _BLANK_RUNS.sub("\n\n", text).strip() + "\n"


def _bundle(
    registry: PromptRegistry,
    system_prompt: str,
    user_text: str,
    expected: ExpectedOutput,
) -> PromptBundle:
    bundle = PromptBundle(
        system_text=registry.load("system", system_prompt),
        user_text=_tidy(user_text),
        expected_output=expected,
        template_hash=registry.template_hash(),
    )
    logger.debug("Prompt built", output=expected.kind.value, prompt_hash=bundle.prompt_hash[:12])
    return bundle


def _format_p(p: float) -> str:
    return f"{round(p, 4):g}"


def _rule_params(spec: RuleSpec) -> dict[str, Any]:
    params: dict[str, Any] = {"n": spec.n, "m": spec.m, "k": spec.k}
    if spec.part_sizes is not None:
        params["u"], params["v"] = spec.part_sizes
    if spec.size_range is not None:
        params["low"], params["high"] = spec.size_range
    if spec.component_kinds is not None:
        first, second = spec.component_kinds
        if first == second:
            params["components"] = f"two {first.value.lower()}s"
        else:
            params["components"] = f"one {first.value.lower()} and one {second.value.lower()}"
    return params


def describe_rule(spec: RuleSpec, registry: PromptRegistry | None = None) -> str:
    """Rule wording with the rule parameters filled in."""
    table = (registry or get_registry()).load_json("descriptions", "rules")
    return str(table[spec.kind.value]).format(**_rule_params(spec))


def build_rule_prompt(
    spec: RuleSpec,
    style: PromptStyle,
    exemplars: Sequence[Graph],
    count: int,
    registry: PromptRegistry | None = None,
) -> PromptBundle:
    """Build the prompt asking for ``count`` graphs satisfying a rule.

    Args:
        spec: Rule to describe
        style: Prompt style
        exemplars: Example graphs; required and embedded for few-shot styles
        count: Requested number of graphs
        registry: Template registry (packaged resources by default)

    Returns:
        Rendered PromptBundle expecting a GraphList

    Raises:
        MissingExemplars: Few-shot style without exemplars
        InvalidExemplar: An exemplar fails the rule
    """
    registry = registry or get_registry()
    examples_block = ""
    if style.is_few_shot:
        if not exemplars:
            raise MissingExemplars(f"{style.value} prompts need at least one exemplar", field="exemplars")
        for index, graph in enumerate(exemplars):
            report = validate_rule(spec, graph)
            if not report.valid:
                raise InvalidExemplar(
                    f"exemplar {index} fails {spec.label}: {report.reason}",
                    field="exemplars",
                )
        examples_block = registry.format_prompt(
            "templates",
            "examples_block",
            example_count=len(exemplars),
            examples="\n".join(serialize_graph(graph) for graph in exemplars),
        )

    user_text = registry.format_prompt(
        "templates",
        "rule_task",
        count=count,
        rule_description=describe_rule(spec, registry),
        examples_block=examples_block,
        output_format=registry.format_prompt("templates", "output_graph_list", count=count),
        reasoning_clause=registry.load("templates", "reasoning_cot") if style.is_cot else "",
    )
    expected = ExpectedOutput(kind=OutputKind.GRAPH_LIST, count=count)
    return _bundle(registry, GRAPH_SYSTEM_PROMPT, user_text, expected)


def default_demonstration(spec: DistributionSpec) -> WorkedExample:
    """Fixed-seed labelled set used when no demonstration is supplied."""
    demo_spec = DistributionSpec(
        task=spec.task,
        p=DEMONSTRATION_P,
        size_range=spec.size_range,
        set_size=spec.set_size,
    )
    return WorkedExample(graphs=sample_input_set(demo_spec, DEMONSTRATION_SEED))


def _label_text(example: WorkedExample) -> list[str]:
    lines = []
    for index, item in enumerate(example.graphs, 1):
        lines.append(f"Graph {index}: {serialize_graph(item.graph)} label: {item.label.describe()}")
    return lines


def _templates_block(registry: PromptRegistry) -> str:
    table = registry.load_json("descriptions", "templates")
    bases = "\n".join(table["bases"][kind.value] for kind in BaseKind)
    motifs = "\n".join(
        f"{table['motifs'][kind.value]}: {serialize_graph(motif_template(kind))}" for kind in MotifKind
    )
    return registry.format_prompt("templates", "templates_block", bases=bases, motifs=motifs)


def _demonstration_block(
    registry: PromptRegistry,
    example: WorkedExample,
    wording: dict[str, str],
) -> str:
    total = len(example.graphs)
    positives = sum(1 for item in example.graphs if item.label.is_positive)
    expected_positives = round(example.p * total)
    steps = registry.format_prompt(
        "templates",
        "demonstration_steps",
        positives=positives,
        negatives=total - positives,
        total=total,
        p=_format_p(example.p),
        positive_description=wording["positive"],
        negative_description=wording["negative"],
        expected_positives=expected_positives,
        expected_negatives=total - expected_positives,
    )
    return registry.format_prompt(
        "templates",
        "demonstration_block",
        labelled_graphs="\n".join(_label_text(example)),
        demonstration_steps=steps,
    )


def build_distribution_prompt(
    spec: DistributionSpec,
    style: PromptStyle,
    input_set: Sequence[Graph],
    worked_example: WorkedExample | None = None,
    registry: PromptRegistry | None = None,
) -> PromptBundle:
    """Build the prompt asking for p and ``spec.set_size`` new graphs.

    Few-shot styles embed the worked example's labelled graphs when one is
    given. Chain-of-thought styles embed the full demonstration (counting,
    estimating p, proportional generation), falling back to a fixed-seed
    default demonstration.

    Raises:
        PromptError: If the input set size differs from ``spec.set_size``
    """
    registry = registry or get_registry()
    if len(input_set) != spec.set_size:
        raise PromptError(
            f"input set has {len(input_set)} graphs, expected {spec.set_size}",
            field="input_set",
        )
    wording: dict[str, str] = registry.load_json("descriptions", "distributions")[spec.task.value]
    low, high = spec.size_range

    demonstration_block = ""
    if style.is_cot:
        example = worked_example or default_demonstration(spec)
        demonstration_block = _demonstration_block(registry, example, wording)
    elif style.is_few_shot and worked_example is not None:
        demonstration_block = registry.format_prompt(
            "templates",
            "labelled_block",
            p=_format_p(worked_example.p),
            labelled_graphs="\n".join(_label_text(worked_example)),
        )

    user_text = registry.format_prompt(
        "templates",
        "distribution_task",
        set_size=spec.set_size,
        task_description=wording["description"].format(low=low, high=high),
        templates_block=_templates_block(registry) if spec.task == DistributionTask.MOTIF else "",
        input_graphs="\n".join(serialize_graph(graph) for graph in input_set),
        demonstration_block=demonstration_block,
        output_format=registry.format_prompt("templates", "output_p_and_graph_list", count=spec.set_size),
        reasoning_clause=registry.load("templates", "reasoning_cot") if style.is_cot else "",
    )
    expected = ExpectedOutput(kind=OutputKind.P_ESTIMATE_AND_GRAPH_LIST, count=spec.set_size)
    return _bundle(registry, GRAPH_SYSTEM_PROMPT, user_text, expected)


def build_property_prompt(
    positives: Sequence[str],
    style: PromptStyle,
    count: int,
    property_label: str = DEFAULT_PROPERTY,
    registry: PromptRegistry | None = None,
) -> PromptBundle:
    """Build the prompt asking for ``count`` new molecules with the property.

    Raises:
        EmptyExemplarSet: If no positive molecules are given
        UnsupportedStyle: For styles without exemplars
    """
    registry = registry or get_registry()
    if not positives:
        raise EmptyExemplarSet("property prompts need at least one positive molecule", field="positives")
    if not style.is_few_shot:
        raise UnsupportedStyle(f"property prompts support FewShot styles only, got {style.value}")
    descriptions: dict[str, str] = registry.load_json("descriptions", "properties")
    if property_label not in descriptions:
        raise PromptError(f"no description for property {property_label!r}", field="property_label")

    user_text = registry.format_prompt(
        "templates",
        "property_task",
        property_description=descriptions[property_label],
        positives="\n".join(positives),
        count=count,
        output_format=registry.format_prompt("templates", "output_smiles_list", count=count),
        reasoning_clause=registry.load("templates", "property_cot") if style.is_cot else "",
    )
    expected = ExpectedOutput(kind=OutputKind.SMILES_LIST, count=count)
    return _bundle(registry, MOLECULE_SYSTEM_PROMPT, user_text, expected)
