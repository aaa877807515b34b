"""Small helpers for subsets encoded as integer bit-masks."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def compress(mask: int, support: int) -> int:
    """Re-index ``mask`` onto the positions of ``support`` (``mask`` must lie inside it)."""
    out = 0
    for pos, i in enumerate(iter_bits(support)):
        if mask >> i & 1:
            out |= 1 << pos
    return out


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for subsets: by size, then lexicographically by member indices."""
    return mask.bit_count(), tuple(iter_bits(mask))
