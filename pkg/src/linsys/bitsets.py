"""Fixed-width bitsets stored as little arrays of uint64 words.

Every point/line set that reaches a hot kernel is packed this way, so
intersections and coverage tests cost O(size/64) words.
"""

import numpy as np

WORD_BITS = 64


def word_count(size: int) -> int:
    return max(1, (size + WORD_BITS - 1) // WORD_BITS)


def pack_sets(sets, size: int) -> np.ndarray:
    """Pack an iterable of index sets into an (m, W) uint64 matrix."""
    rows = len(sets)
    out = np.zeros((rows, word_count(size)), dtype=np.uint64)
    for i, members in enumerate(sets):
        for x in members:
            out[i, x >> 6] |= np.uint64(1) << np.uint64(x & 63)
    return out


def pack_one(members, size: int) -> np.ndarray:
    return pack_sets([members], size)[0]


def unpack(words: np.ndarray) -> list:
    """Indices of the set bits, ascending."""
    out = []
    for w, value in enumerate(words):
        v = int(value)
        base = w << 6
        while v:
            low = v & -v
            out.append(base + low.bit_length() - 1)
            v ^= low
    return out


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())
