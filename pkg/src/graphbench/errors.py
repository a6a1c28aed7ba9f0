"""Error hierarchy shared by every harness module."""


class BenchError(Exception):
    """Base error carrying a short machine-readable code."""

    code = "bench_error"

    def __init__(self, message: str, field: str | None = None):
        self.message = message
        self.field = field
        super().__init__(message)


class ConfigError(BenchError):
    """Run configuration cannot be resolved."""

    code = "config_error"


# Graph text and graph-core


class GraphFormatError(BenchError):
    """Graph text could not be turned into a valid Graph."""

    code = "graph_format"


class MalformedSyntax(GraphFormatError):
    code = "malformed_syntax"


class EndpointOutOfRange(GraphFormatError):
    code = "endpoint_out_of_range"


class SelfLoop(GraphFormatError):
    code = "self_loop"


class SizeLimitExceeded(BenchError):
    code = "size_limit_exceeded"


# Rules


class RuleError(BenchError):
    code = "rule_error"


class SpecMismatch(RuleError):
    """Rule parameters are incoherent (e.g. k >= n for a regular graph)."""

    code = "spec_mismatch"


class Unsatisfiable(RuleError):
    code = "unsatisfiable"


class GenerationTimeout(RuleError):
    code = "generation_timeout"


# Distributions


class NoClassifiableGraphs(BenchError):
    code = "no_classifiable_graphs"


# Prompts


class PromptError(BenchError):
    code = "prompt_error"


class MissingExemplars(PromptError):
    code = "missing_exemplars"


class InvalidExemplar(PromptError):
    code = "invalid_exemplar"


class EmptyExemplarSet(PromptError):
    code = "empty_exemplar_set"


class UnsupportedStyle(PromptError):
    code = "unsupported_style"


# Endpoint transport


class EndpointError(BenchError):
    """Transport-level failure talking to a model endpoint."""

    code = "endpoint_error"

    def __init__(self, message: str, field: str | None = None, status_code: int | None = None):
        self.status_code = status_code
        super().__init__(message, field)


class AuthError(EndpointError):
    code = "auth_error"


class RateLimited(EndpointError):
    code = "rate_limited"


class EndpointTimeout(EndpointError):
    code = "timeout"


class EndpointUnavailable(EndpointError):
    code = "endpoint_unavailable"


class MalformedEndpointReply(EndpointError):
    code = "malformed_endpoint_reply"


class TranscriptNotFound(BenchError):
    code = "not_found"


# Metrics


class NoValidGraphs(BenchError):
    code = "no_valid_graphs"


class EmptyInput(BenchError):
    code = "empty_input"


# Molecules


class MoleculeError(BenchError):
    code = "molecule_error"


class FileUnreadable(MoleculeError):
    code = "file_unreadable"


class NoPositives(MoleculeError):
    code = "no_positives"


class DegenerateModel(MoleculeError):
    code = "degenerate_model"


class ScorerUnavailable(MoleculeError):
    code = "scorer_unavailable"


class ScorerProtocolViolation(MoleculeError):
    code = "scorer_protocol_violation"
