"""Derivation of independent child seeds from a user seed.

Child seeds come from numpy's ``SeedSequence`` hash: ``sub_seed(seed, r)``
for replicate ``r``, ``sub_seed(seed, r, "ties")`` for its tie-break
stream.  String keys are mapped to 32-bit integers through SHA-256, so the
derivation is stable across runs, platforms and call order.
"""

import hashlib

import numpy as np

__all__ = ["sub_seed", "make_rng"]


def _key(k):
    if isinstance(k, str):
        return int.from_bytes(hashlib.sha256(k.encode()).digest()[:4], "little")
    k = int(k)
    if k < 0:
        raise ValueError("seed keys must be nonnegative")
    return k


def sub_seed(seed, *keys) -> int:
    """64-bit child seed of ``seed`` along the path ``keys``."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(_key(k) for k in keys))
    lo, hi = ss.generate_state(2, dtype=np.uint32)
    return int(lo) | (int(hi) << 32)


def make_rng(seed) -> np.random.Generator:
    """PCG64 generator for an integer seed (or pass-through for a Generator)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))
