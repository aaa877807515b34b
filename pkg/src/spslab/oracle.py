"""Brute-force references and exhaustive enumeration of small closure spaces."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .bits import canonical_key, full
from .closure import ClosureSpace
from .errors import TooLarge
from .lattice import Element
from .sps import StatePropertySystem

EXHAUSTIVE_CAP = 4
NAIVE_CAP = 10


def _families(n: int) -> Iterator[list[int]]:
    universe = full(n)
    # proper nonempty subsets by increasing size: when S is considered, every
    # strictly smaller intersection S & T has already been decided
    candidates = sorted(range(1, universe), key=canonical_key)
    decided_in: set[int] = {0, universe}
    chosen: list[int] = []

    def fits(s: int) -> bool:
        for t in chosen:
            m = s & t
            if m != t and m not in decided_in:
                return False
        return True

    def walk(k: int) -> Iterator[list[int]]:
        if k == len(candidates):
            yield [0, *chosen, universe]
            return
        s = candidates[k]
        yield from walk(k + 1)
        if fits(s):
            chosen.append(s)
            decided_in.add(s)
            yield from walk(k + 1)
            decided_in.discard(s)
            chosen.pop()

    yield from walk(0)


@dataclass
class EnumerationCursor:
    """Deterministic, duplicate-free walk over every closure space on ``n`` points.

    Points are ``0 .. n-1``; ``index`` counts the spaces emitted so far.
    """

    n: int
    index: int = 0
    _walk: Iterator[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.n > EXHAUSTIVE_CAP:
            raise TooLarge(f"exhaustive enumeration is capped at n={EXHAUSTIVE_CAP}")

    def __iter__(self) -> "EnumerationCursor":
        return self

    def __next__(self) -> ClosureSpace:
        if self._walk is None:
            self._walk = _families(self.n)
        family = next(self._walk)
        self.index += 1
        return ClosureSpace.from_masks(range(self.n), family, check=False)


def enumerate_closure_spaces(n: int) -> EnumerationCursor:
    return EnumerationCursor(n)


def random_closure_space(n: int, rng: random.Random, generators: int | None = None) -> ClosureSpace:
    """Intersection closure of a few random subsets, plus the empty set and the universe."""
    universe = full(n)
    if generators is None:
        generators = rng.randint(1, max(1, 2 * n))
    family = {0, universe}
    for _ in range(generators):
        s = rng.getrandbits(n) & universe
        new = {s} | {s & f for f in family}
        family |= new
    return ClosureSpace.from_masks(range(n), family, check=False)


def naive_components(cs: ClosureSpace) -> list[frozenset]:
    """Each point's component as the literal union of all connected subsets containing it."""
    if cs.n > NAIVE_CAP:
        raise TooLarge(f"naive components are capped at {NAIVE_CAP} points")
    connected = [a for a in range(1, cs.universe + 1) if cs.connected_mask(a)]
    blocks = []
    for i in range(cs.n):
        k = 0
        for a in connected:
            if a >> i & 1:
                k |= a
        if k not in blocks:
            blocks.append(k)
    return [cs.points_of(b) for b in blocks]


def naive_classical(sps: StatePropertySystem, a: Element) -> tuple[bool, Element | None]:
    """Search every property for a complement witness straight from the definition."""
    lat = sps.lattice
    i = lat.index(a)
    for j in range(len(lat)):
        if lat.join2(i, j) != lat.top or lat.meet2(i, j) != lat.bottom:
            continue
        ij = lat.join2(i, j)
        if all(not xm >> ij & 1 or xm >> i & 1 or xm >> j & 1 for xm in sps.xi_masks):
            return True, lat.elements[j]
    return False, None
