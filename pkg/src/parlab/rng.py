"""Deterministic derivation of independent random streams from one root seed.

Every random draw in the library flows from a single integer root seed.
Sub-streams are derived by hashing string labels, so a stream's values depend
only on (root seed, label), never on how many other streams were consumed.
"""

import hashlib

import numpy as np


def derive_seed(root_seed: int, *labels) -> int:
    """Derive a 64-bit child seed from a root seed and a label path."""
    key = ":".join([str(int(root_seed))] + [str(l) for l in labels])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def derive_rng(root_seed: int, *labels) -> np.random.Generator:
    """A numpy Generator whose stream depends only on (root_seed, labels)."""
    return np.random.default_rng(derive_seed(root_seed, *labels))
