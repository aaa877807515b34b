"""Finite closure spaces: a point set with an intersection-closed family of closed sets.

Subsets are bit-masks over the indexed universe.  The public methods accept
and return collections of point identifiers; the ``*_mask`` variants work on
raw masks and are what the other modules use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .bits import canonical_key, compress, full, iter_bits
from .errors import (
    ClosureSpaceError,
    EmptySubspace,
    EmptyUniverse,
    MissingEmptySet,
    NotIntersectionClosed,
    UnknownPoint,
)

Point = Hashable


@dataclass(frozen=True)
class ClosureSpace:
    points: tuple[Point, ...]
    closed_sets: tuple[int, ...]
    # True when the universe had to be added to the input family
    normalized: bool = field(default=False, compare=False)
    _index: dict = field(default_factory=dict, compare=False, repr=False)
    _family: frozenset = field(default=frozenset(), compare=False, repr=False)

    @classmethod
    def from_masks(cls, points: Sequence[Point], masks: Iterable[int], check: bool = True) -> "ClosureSpace":
        points = tuple(points)
        if not points:
            raise EmptyUniverse("a closure space needs at least one point")
        index = {p: i for i, p in enumerate(points)}
        if len(index) != len(points):
            raise ClosureSpaceError("duplicate point identifiers")
        universe = full(len(points))
        family = set(masks)
        if check:
            if any(m & ~universe for m in family):
                raise ClosureSpaceError("closed set outside the universe")
            if 0 not in family:
                raise MissingEmptySet()
        normalized = universe not in family
        family.add(universe)
        ordered = tuple(sorted(family, key=canonical_key))
        if check:
            for i, a in enumerate(ordered):
                for b in ordered[i + 1:]:
                    if a & b not in family:
                        raise NotIntersectionClosed(
                            frozenset(points[k] for k in iter_bits(a)),
                            frozenset(points[k] for k in iter_bits(b)),
                        )
        return cls(points, ordered, normalized, index, frozenset(family))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def universe(self) -> int:
        return full(len(self.points))

    def mask_of(self, subset: Iterable[Point]) -> int:
        mask = 0
        for p in subset:
            try:
                mask |= 1 << self._index[p]
            except (KeyError, TypeError):
                raise UnknownPoint(p) from None
        return mask

    def points_of(self, mask: int) -> frozenset:
        return frozenset(self.points[i] for i in iter_bits(mask))

    def family(self) -> list[frozenset]:
        return [self.points_of(m) for m in self.closed_sets]

    # mask-level operations

    def is_closed_mask(self, a: int) -> bool:
        return a in self._family

    def closure_mask(self, a: int) -> int:
        out = self.universe
        for f in self.closed_sets:
            if a & ~f == 0:
                out &= f
        return out

    def is_clopen_mask(self, a: int) -> bool:
        return a in self._family and (self.universe ^ a) in self._family

    @cached_property
    def clopen_masks(self) -> tuple[int, ...]:
        return tuple(f for f in self.closed_sets if (self.universe ^ f) in self._family)

    def traces(self, a: int) -> set[int]:
        """Closed sets of the subspace on ``a``, as masks in the ambient indexing."""
        return {f & a for f in self.closed_sets}

    def connected_mask(self, a: int) -> bool:
        if a & (a - 1) == 0:
            # empty set and singletons
            return True
        traces = self.traces(a)
        return not any(t and t != a and (a ^ t) in traces for t in traces)

    def _split(self, a: int) -> list[int]:
        """Blocks of ``a`` under clopen separation in the subspace on ``a``."""
        traces = self.traces(a)
        blocks = [a]
        for t in traces:
            if t and t != a and (a ^ t) in traces:
                refined = []
                for b in blocks:
                    for part in (b & t, b & ~t):
                        if part:
                            refined.append(part)
                blocks = refined
        return blocks

    def _components_within(self, a: int) -> list[int]:
        # Connected sets never straddle a clopen set of the subspace, so each
        # component lies inside one block; recursing on the block's subspace
        # terminates because a disconnected block always splits.
        blocks = self._split(a)
        if len(blocks) == 1:
            return blocks
        out = []
        for b in blocks:
            out.extend(self._components_within(b))
        return out

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        return tuple(sorted(self._components_within(self.universe), key=lambda m: (m & -m).bit_length()))

    def component_of_mask(self, i: int) -> int:
        for c in self.component_masks:
            if c >> i & 1:
                return c
        raise UnknownPoint(i)

    # public API

    def closure(self, subset: Iterable[Point]) -> frozenset:
        """Smallest closed set containing ``subset``."""
        return self.points_of(self.closure_mask(self.mask_of(subset)))

    def is_closed(self, subset: Iterable[Point]) -> bool:
        return self.is_closed_mask(self.mask_of(subset))

    def is_clopen(self, subset: Iterable[Point]) -> bool:
        return self.is_clopen_mask(self.mask_of(subset))

    def clopen_sets(self) -> list[frozenset]:
        return [self.points_of(m) for m in self.clopen_masks]

    def subspace(self, subset: Iterable[Point]) -> "ClosureSpace":
        a = self.mask_of(subset)
        if not a:
            raise EmptySubspace("the induced subspace needs at least one point")
        pts = [self.points[i] for i in iter_bits(a)]
        return ClosureSpace.from_masks(pts, {compress(t, a) for t in self.traces(a)}, check=False)

    def is_connected(self) -> bool:
        return self.connected_mask(self.universe)

    def is_connected_subset(self, subset: Iterable[Point]) -> bool:
        return self.connected_mask(self.mask_of(subset))

    def component_of(self, x: Point) -> frozenset:
        """The connection component of ``x``: the largest connected set containing it."""
        i = self.mask_of([x]).bit_length() - 1
        return self.points_of(self.component_of_mask(i))

    def components(self) -> list[frozenset]:
        return [self.points_of(c) for c in self.component_masks]

    def is_totally_disconnected(self) -> bool:
        return all(c & (c - 1) == 0 for c in self.component_masks)

    def is_weakly_zero_dimensional(self) -> bool:
        """True iff the clopen sets form a base: each closed set is an intersection of clopens."""
        clopens = self.clopen_masks
        for f in self.closed_sets:
            hull = self.universe
            for c in clopens:
                if f & ~c == 0:
                    hull &= c
            if hull != f:
                return False
        return True


def build_closure_space(points: Sequence[Point], closed_sets: Iterable[Iterable[Point]]) -> ClosureSpace:
    """Validate ``closed_sets`` over ``points``; the universe is added if absent (see ``normalized``)."""
    points = tuple(points)
    if not points:
        raise EmptyUniverse("a closure space needs at least one point")
    index = {p: i for i, p in enumerate(points)}
    masks = []
    for subset in closed_sets:
        mask = 0
        for p in subset:
            if p not in index:
                raise UnknownPoint(p)
            mask |= 1 << index[p]
        masks.append(mask)
    return ClosureSpace.from_masks(points, masks)
