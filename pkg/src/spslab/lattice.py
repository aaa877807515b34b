"""Finite bounded lattices stored as dense order relations.

Element ``i`` is represented by its position in ``elements``.  The order is
kept as two tuples of bit-masks: ``down[i]`` holds every ``j <= i`` and
``up[i]`` every ``j >= i``.  A meet of any index set is then the element
whose down-set equals the intersection of the down-sets, which is a dict
lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .bits import full, iter_bits, to_mask
from .errors import CycleError, EmptyLattice, LatticeError, NotALattice, UnknownElement

Element = Hashable


@dataclass(frozen=True)
class FiniteLattice:
    elements: tuple[Element, ...]
    down: tuple[int, ...]
    up: tuple[int, ...] = field(compare=False, repr=False)
    bottom: int = field(compare=False)
    top: int = field(compare=False)
    _index: dict = field(compare=False, repr=False)
    _by_down: dict = field(compare=False, repr=False)
    _by_up: dict = field(compare=False, repr=False)

    @classmethod
    def from_down_sets(cls, elements: Sequence[Element], down: Sequence[int]) -> "FiniteLattice":
        """Build from a reflexive, transitive relation given as down-set masks.

        Antisymmetry and the existence of pairwise meets and joins are checked
        here; transitivity is the caller's responsibility.
        """
        elements = tuple(elements)
        n = len(elements)
        if n == 0:
            raise EmptyLattice("a lattice needs at least one element")
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != n:
            raise LatticeError("duplicate element identifiers")
        down = tuple(down)
        up = [0] * n
        for i, d in enumerate(down):
            for j in iter_bits(d):
                up[j] |= 1 << i
        up = tuple(up)
        for i in range(n):
            for j in iter_bits(down[i] & up[i] & ~(1 << i)):
                raise CycleError(elements[i], elements[j])
        by_down = {d: i for i, d in enumerate(down)}
        by_up = {u: i for i, u in enumerate(up)}
        everything = full(n)
        if everything not in by_down:
            raise NotALattice(None, None, "top (empty meet)")
        if everything not in by_up:
            raise NotALattice(None, None, "bottom (empty join)")
        for i in range(n):
            for j in range(i + 1, n):
                if down[i] & down[j] not in by_down:
                    raise NotALattice(elements[i], elements[j], "meet")
                if up[i] & up[j] not in by_up:
                    raise NotALattice(elements[i], elements[j], "join")
        return cls(
            elements=elements,
            down=down,
            up=up,
            bottom=by_up[everything],
            top=by_down[everything],
            _index=index,
            _by_down=by_down,
            _by_up=by_up,
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self._index

    def index(self, e: Element) -> int:
        try:
            return self._index[e]
        except (KeyError, TypeError):
            raise UnknownElement(e) from None

    def mask_of(self, elems: Iterable[Element]) -> int:
        return to_mask(self.index(e) for e in elems)

    def elements_of(self, mask: int) -> list[Element]:
        return [self.elements[i] for i in iter_bits(mask)]

    @property
    def bottom_element(self) -> Element:
        return self.elements[self.bottom]

    @property
    def top_element(self) -> Element:
        return self.elements[self.top]

    # index-level queries

    def leq_index(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def meet_index(self, mask: int) -> int:
        lower = full(len(self.elements))
        for i in iter_bits(mask):
            lower &= self.down[i]
        return self._by_down[lower]

    def join_index(self, mask: int) -> int:
        upper = full(len(self.elements))
        for i in iter_bits(mask):
            upper &= self.up[i]
        return self._by_up[upper]

    def meet2(self, i: int, j: int) -> int:
        return self._by_down[self.down[i] & self.down[j]]

    def join2(self, i: int, j: int) -> int:
        return self._by_up[self.up[i] & self.up[j]]

    def covers_of(self, i: int) -> int:
        """Mask of the elements covering ``i``."""
        strict_up = self.up[i] & ~(1 << i)
        out = 0
        for j in iter_bits(strict_up):
            between = strict_up & self.down[j] & ~(1 << j)
            if not between:
                out |= 1 << j
        return out

    def induced(self, mask: int) -> "FiniteLattice":
        """Sub-poset on the indices in ``mask`` with the inherited order.

        Raises NotALattice if the sub-poset is not a lattice.  Meets and joins
        of the result are computed inside the sub-poset, so they may differ
        from the ambient ones.
        """
        members = list(iter_bits(mask))
        pos = {i: k for k, i in enumerate(members)}
        down = []
        for i in members:
            d = 0
            for j in iter_bits(self.down[i] & mask):
                d |= 1 << pos[j]
            down.append(d)
        return FiniteLattice.from_down_sets([self.elements[i] for i in members], down)

    # identifier-level API

    def leq(self, a: Element, b: Element) -> bool:
        return self.leq_index(self.index(a), self.index(b))

    def meet(self, elems: Iterable[Element]) -> Element:
        """Greatest lower bound; the meet of nothing is the top."""
        return self.elements[self.meet_index(self.mask_of(elems))]

    def join(self, elems: Iterable[Element]) -> Element:
        """Least upper bound; the join of nothing is the bottom."""
        return self.elements[self.join_index(self.mask_of(elems))]

    def segment(self, a: Element) -> "FiniteLattice":
        """The interval [bottom, a] with the induced order."""
        return self.induced(self.down[self.index(a)])

    def is_atom(self, a: Element) -> bool:
        i = self.index(a)
        return i != self.bottom and self.down[i] == (1 << i) | (1 << self.bottom)

    def atoms(self) -> list[Element]:
        return self.elements_of(self.covers_of(self.bottom))

    def hasse_edges(self) -> list[tuple[Element, Element]]:
        """Covering pairs ``(x, y)`` with ``y`` covering ``x``, sorted by index."""
        return [
            (self.elements[i], self.elements[j])
            for i in range(len(self.elements))
            for j in iter_bits(self.covers_of(i))
        ]


def build_lattice(
    elements: Sequence[Element], leq_pairs: Iterable[tuple[Element, Element]]
) -> FiniteLattice:
    """Validated lattice whose order is the reflexive-transitive closure of ``leq_pairs``."""
    elements = list(elements)
    if not elements:
        raise EmptyLattice("a lattice needs at least one element")
    index: dict = {}
    for i, e in enumerate(elements):
        if e in index:
            raise LatticeError(f"duplicate element {e!r}")
        index[e] = i
    down = [1 << i for i in range(len(elements))]
    for a, b in leq_pairs:
        if a not in index:
            raise UnknownElement(a)
        if b not in index:
            raise UnknownElement(b)
        down[index[b]] |= 1 << index[a]
    # Warshall over bit rows
    for k in range(len(elements)):
        bit = 1 << k
        dk = down[k]
        for i in range(len(elements)):
            if down[i] & bit:
                down[i] |= dk
    return FiniteLattice.from_down_sets(elements, down)
