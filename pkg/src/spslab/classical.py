"""Super selection rules, classical properties, and the classical part of a system."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import iter_bits, to_mask
from .errors import NotClassical
from .lattice import Element, FiniteLattice
from .sps import StatePropertySystem


def ssr_conditions(sps: StatePropertySystem, a: Element, b: Element) -> tuple[bool, bool, bool]:
    """The three equivalent forms of "a ssr b".

    Returns (definitional, kappa(a v b) == kappa(a) | kappa(b),
    kappa(a) | kappa(b) is a Cartan image).
    """
    lat = sps.lattice
    i, j = lat.index(a), lat.index(b)
    ab = lat.join2(i, j)
    definitional = all(
        not xm >> ab & 1 or xm >> i & 1 or xm >> j & 1 for xm in sps.xi_masks
    )
    kappa = sps.kappa_masks
    union = kappa[i] | kappa[j]
    return definitional, kappa[ab] == union, union in sps.kappa_inverse


def is_ssr(sps: StatePropertySystem, a: Element, b: Element) -> bool:
    """True iff every state making a v b actual makes a or b actual."""
    definitional, by_join, by_family = ssr_conditions(sps, a, b)
    assert definitional == by_join == by_family, (a, b)
    return definitional


def _complement_index(sps: StatePropertySystem, i: int) -> int | None:
    return sps.kappa_inverse.get(sps.all_states ^ sps.kappa_masks[i])


def is_classical(sps: StatePropertySystem, a: Element) -> bool:
    # clopen criterion: the complement of kappa(a) is itself a Cartan image
    return _complement_index(sps, sps.lattice.index(a)) is not None


def complement(sps: StatePropertySystem, a: Element) -> Element:
    """The unique classical complement of ``a``."""
    c = _complement_index(sps, sps.lattice.index(a))
    if c is None:
        raise NotClassical(f"{a!r} is not a classical property")
    return sps.lattice.elements[c]


def classical_mask(sps: StatePropertySystem) -> int:
    return to_mask(i for i in range(len(sps.lattice)) if _complement_index(sps, i) is not None)


def classical_elements(sps: StatePropertySystem) -> list[Element]:
    """Classical properties in lattice order; always includes bottom and top."""
    return sps.lattice.elements_of(classical_mask(sps))


def is_pure_nonclassical(sps: StatePropertySystem) -> bool:
    lat = sps.lattice
    return classical_mask(sps) == (1 << lat.bottom) | (1 << lat.top)


@dataclass(frozen=True)
class ClassicalLattice:
    """Meet-closure of the classical properties inside the ambient lattice.

    ``lattice`` carries the inherited order; its joins are computed inside the
    carrier and need not agree with the ambient ones.
    """

    ambient: FiniteLattice
    carrier: int
    lattice: FiniteLattice

    @property
    def elements(self) -> tuple:
        return self.lattice.elements

    def meet(self, elems) -> Element:
        return self.lattice.meet(elems)

    def join(self, elems) -> Element:
        return self.lattice.join(elems)

    def join_table(self) -> dict[tuple[Element, Element], Element]:
        lat = self.lattice
        return {
            (lat.elements[i], lat.elements[j]): lat.elements[lat.join2(i, j)]
            for i in range(len(lat))
            for j in range(len(lat))
        }

    def differing_joins(self) -> list[tuple[Element, Element]]:
        """Pairs whose join in the carrier differs from the ambient join."""
        amb = self.ambient
        return [
            (x, y)
            for (x, y), z in self.join_table().items()
            if amb.join([x, y]) != z
        ]

    def is_atomistic(self) -> bool:
        lat = self.lattice
        atoms = lat.covers_of(lat.bottom)
        return all(
            lat.join_index(lat.down[i] & atoms) == i for i in range(len(lat))
        )


def meet_closure(lattice: FiniteLattice, mask: int) -> int:
    """Close ``mask`` under pairwise meets (finite, so under arbitrary meets too); adds top."""
    closed = mask | (1 << lattice.top)
    frontier = list(iter_bits(closed))
    while frontier:
        i = frontier.pop()
        for j in list(iter_bits(closed)):
            m = lattice.meet2(i, j)
            if not closed >> m & 1:
                closed |= 1 << m
                frontier.append(m)
    return closed


def classical_property_lattice(sps: StatePropertySystem) -> ClassicalLattice:
    carrier = meet_closure(sps.lattice, classical_mask(sps))
    return ClassicalLattice(sps.lattice, carrier, sps.lattice.induced(carrier))


def classical_part(sps: StatePropertySystem) -> StatePropertySystem:
    """The system restricted to the classical property lattice."""
    cl = classical_property_lattice(sps)
    pos = {i: k for k, i in enumerate(iter_bits(cl.carrier))}
    xi = []
    for xm in sps.xi_masks:
        m = 0
        for i in iter_bits(xm & cl.carrier):
            m |= 1 << pos[i]
        xi.append(m)
    return StatePropertySystem.from_masks(sps.states, cl.lattice, xi)
