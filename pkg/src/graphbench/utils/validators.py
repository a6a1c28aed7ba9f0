"""Text sanitizing and SMILES syntax checks."""

import re

import structlog

logger = structlog.get_logger(__name__)

MAX_RESPONSE_LENGTH = 200_000

# Organic-subset atoms, bracket atoms, bonds, branches and ring-bond labels
SMI_REGEX_PATTERN = r"""(\[[^\]]+]|Br?|Cl?|N|O|S|P|F|I|b|c|n|o|s|p|\(|\)|\.|=|#|-|\+|\\|\/|:|~|@|\?|>>?|\*|\$|\%[0-9]{2}|[0-9])"""
SMI_REGEX = re.compile(SMI_REGEX_PATTERN)
RING_LABEL = re.compile(r"^(%[0-9]{2}|[0-9])$")
ATOM_TOKEN = re.compile(r"^(\[[^\]]+]|Br?|Cl?|N|O|S|P|F|I|b|c|n|o|s|p|\*)$")

QUOTE_CHARS = "\"'`"


def sanitize_text(text: str | bytes, max_length: int | None = MAX_RESPONSE_LENGTH) -> str:
    """Clean raw model text before parsing.

    Bytes are decoded leniently. Null bytes and control characters other
    than newlines and tabs are removed; line structure is preserved.

    Args:
        text: Raw text or bytes
        max_length: Optional maximum length

    Returns:
        Sanitized text
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    if not text:
        return ""

    text = text.replace("\r\n", "\n").replace("\r", "\n")
    text = re.sub(r"[\x00-\x08\x0b\x0c\x0e-\x1f\x7f-\x9f]", "", text)

    if max_length and len(text) > max_length:
        text = text[:max_length]
        logger.debug("Response truncated", max_length=max_length)

    return text


def tokenize_smiles(smiles: str) -> list[str]:
    """Split a SMILES string into tokens."""
    return SMI_REGEX.findall(smiles)


def check_smiles_syntax(smiles: str) -> tuple[bool, str]:
    """Syntactic sanity check for a SMILES string.

    Checks that every character belongs to a token, parentheses and
    brackets balance, and every ring-bond label is opened and closed.
    No chemistry is checked.

    Args:
        smiles: Candidate SMILES string

    Returns:
        (is_valid, reason) where reason is "ok" or a short code
    """
    if not smiles or not smiles.strip():
        return False, "empty"
    if any(ch.isspace() for ch in smiles):
        return False, "whitespace"

    tokens = tokenize_smiles(smiles)
    if "".join(tokens) != smiles:
        return False, "unknown_token"
    if not any(ATOM_TOKEN.match(token) for token in tokens):
        return False, "no_atoms"

    depth = 0
    open_rings: set[str] = set()
    has_atom = False
    for token in tokens:
        if token == "(":
            if not has_atom:
                return False, "branch_without_atom"
            depth += 1
            has_atom = False
        elif token == ")":
            depth -= 1
            if depth < 0:
                return False, "unbalanced_parentheses"
            has_atom = True
        elif RING_LABEL.match(token):
            if not has_atom:
                return False, "ring_bond_without_atom"
            open_rings ^= {token}
        elif token == ".":
            has_atom = False
        elif ATOM_TOKEN.match(token):
            has_atom = True

    if depth != 0:
        return False, "unbalanced_parentheses"
    if open_rings:
        return False, "unmatched_ring_bond"
    return True, "ok"


def normalize_smiles(smiles: str) -> str:
    """Trim whitespace and surrounding quotes."""
    value = smiles.strip()
    while len(value) >= 2 and value[0] in QUOTE_CHARS and value[-1] == value[0]:
        value = value[1:-1].strip()
    return value
