from graphbench.utils.rate_limiter import ConcurrencyLimiter, RateLimiter
from graphbench.utils.seeds import SeedLike, SeedStream, as_random
from graphbench.utils.validators import (
    check_smiles_syntax,
    normalize_smiles,
    sanitize_text,
    tokenize_smiles,
)

__all__ = [
    "ConcurrencyLimiter",
    "RateLimiter",
    "SeedLike",
    "SeedStream",
    "as_random",
    "check_smiles_syntax",
    "normalize_smiles",
    "sanitize_text",
    "tokenize_smiles",
]
