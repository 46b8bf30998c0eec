"""Packed bitset helpers: rows of booleans as little-endian uint64 words."""

from __future__ import annotations

import numpy as np


def words_for(nbits: int) -> int:
    return max(1, (nbits + 63) // 64)


def pack_rows(rows: np.ndarray) -> np.ndarray:
    """Pack a ``(k, nbits)`` boolean array into ``(k, words_for(nbits))`` uint64."""
    rows = np.asarray(rows, dtype=bool)
    k, nbits = rows.shape
    nbytes = words_for(nbits) * 8
    packed = np.zeros((k, nbytes), dtype=np.uint8)
    if nbits:
        b = np.packbits(rows, axis=1, bitorder="little")
        packed[:, : b.shape[1]] = b
    return packed.view("<u8")


def full_mask(nbits: int) -> np.ndarray:
    """Packed row with the first ``nbits`` bits set."""
    return pack_rows(np.ones((1, nbits), dtype=bool))[0]


def popcount(words: np.ndarray, axis: int = -1) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=axis, dtype=np.int64)


def test_bit(words: np.ndarray, i: int) -> bool:
    return bool((int(words[i >> 6]) >> (i & 63)) & 1)


def chunk_rows(n_rows: int, row_cost: int, budget: int = 1 << 22) -> int:
    """Rows per chunk so that one chunk touches about ``budget`` elements."""
    return max(1, min(n_rows, budget // max(1, row_cost)))
