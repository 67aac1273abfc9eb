"""Resolution prover over linguistic truth values."""

import json

from ._lingres import (
    LingresError,
    ProveResult,
    Signature,
    brute_unsat,
    normalize,
    prove,
)

__all__ = [
    "LingresError",
    "ProveResult",
    "Signature",
    "brute_unsat",
    "normalize",
    "proof_tree",
    "prove",
]


def proof_tree(result):
    """Decoded proof of a ProveResult, or None when nothing was refuted."""
    return json.loads(result.proof_json) if result.refuted else None
