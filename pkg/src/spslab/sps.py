"""State property systems: states, a property lattice, and the actuality map."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .bits import full, iter_bits
from .errors import (
    AxiomViolation,
    BottomActual,
    EmptyStates,
    NotMeetClosed,
    OrderAxiomBackward,
    OrderAxiomForward,
    SPSError,
    UnknownState,
)
from .lattice import Element, FiniteLattice

State = Hashable

VIOLATION_TYPES = {
    "BottomActual": BottomActual,
    "NotMeetClosed": NotMeetClosed,
    "OrderAxiomForward": OrderAxiomForward,
    "OrderAxiomBackward": OrderAxiomBackward,
}


@dataclass(frozen=True)
class Violation:
    kind: str
    state: State | None = None
    elements: tuple = ()
    witness_state: State | None = None

    def __str__(self) -> str:
        parts = [self.kind]
        if self.state is not None:
            parts.append(f"state={self.state!r}")
        if self.elements:
            parts.append(f"elements={list(self.elements)!r}")
        if self.witness_state is not None:
            parts.append(f"r={self.witness_state!r}")
        return " ".join(parts)


@dataclass(frozen=True)
class StatePropertySystem:
    states: tuple[State, ...]
    lattice: FiniteLattice
    # xi_masks[k]: bit-mask over lattice indices of the properties actual in states[k]
    xi_masks: tuple[int, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_masks(cls, states: Sequence[State], lattice: FiniteLattice, xi_masks: Sequence[int]) -> "StatePropertySystem":
        """Unvalidated constructor; pair with ``validate_axioms`` or use ``build_sps``."""
        states = tuple(states)
        if not states:
            raise EmptyStates("a state property system needs at least one state")
        index = {p: k for k, p in enumerate(states)}
        if len(index) != len(states):
            raise SPSError("duplicate state identifiers")
        if len(xi_masks) != len(states):
            raise SPSError("xi must be given for every state")
        return cls(states, lattice, tuple(xi_masks), index)

    @property
    def all_states(self) -> int:
        return full(len(self.states))

    @cached_property
    def kappa_masks(self) -> tuple[int, ...]:
        """kappa_masks[i]: mask over state indices where lattice element i is actual."""
        kappa = [0] * len(self.lattice)
        for k, xm in enumerate(self.xi_masks):
            for i in iter_bits(xm):
                kappa[i] |= 1 << k
        return tuple(kappa)

    @cached_property
    def kappa_inverse(self) -> dict[int, int]:
        """State mask -> lattice index; well defined because the Cartan map is injective."""
        return {m: i for i, m in enumerate(self.kappa_masks)}

    def state_index(self, p: State) -> int:
        try:
            return self._index[p]
        except (KeyError, TypeError):
            raise UnknownState(p) from None

    def states_of(self, mask: int) -> frozenset:
        return frozenset(self.states[k] for k in iter_bits(mask))

    def xi(self, p: State) -> frozenset:
        """Properties actual in state ``p``."""
        return frozenset(self.lattice.elements_of(self.xi_masks[self.state_index(p)]))

    def cartan(self, a: Element) -> frozenset:
        """The set of states in which ``a`` is actual."""
        return self.states_of(self.kappa_masks[self.lattice.index(a)])

    def is_actual(self, p: State, a: Element) -> bool:
        return bool(self.xi_masks[self.state_index(p)] >> self.lattice.index(a) & 1)


def validate_axioms(sps: StatePropertySystem) -> list[Violation]:
    """Every violation of the state property system axioms, with witnesses."""
    lat = sps.lattice
    out: list[Violation] = []
    for k, xm in enumerate(sps.xi_masks):
        p = sps.states[k]
        if xm >> lat.bottom & 1:
            out.append(Violation("BottomActual", state=p))
        if not xm >> lat.top & 1:
            # the meet of the empty family
            out.append(Violation("NotMeetClosed", state=p, elements=()))
        members = list(iter_bits(xm))
        for x, i in enumerate(members):
            for j in members[x + 1:]:
                if not xm >> lat.meet2(i, j) & 1:
                    out.append(Violation("NotMeetClosed", state=p, elements=(lat.elements[i], lat.elements[j])))
    kappa = sps.kappa_masks
    n = len(lat)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            below = lat.leq_index(i, j)
            implied = kappa[i] & ~kappa[j] == 0
            if below and not implied:
                r = next(iter_bits(kappa[i] & ~kappa[j]))
                out.append(Violation("OrderAxiomForward", elements=(lat.elements[i], lat.elements[j]),
                                     witness_state=sps.states[r]))
            elif implied and not below:
                out.append(Violation("OrderAxiomBackward", elements=(lat.elements[i], lat.elements[j])))
    return out


def raise_for_violations(violations: list[Violation]) -> None:
    if violations:
        raise VIOLATION_TYPES.get(violations[0].kind, AxiomViolation)(violations)


def build_sps(
    states: Sequence[State],
    lattice: FiniteLattice,
    xi: Mapping[State, Iterable[Element]],
) -> StatePropertySystem:
    """Validated state property system; raises the first violation's error type with the full report."""
    states = tuple(states)
    masks = []
    for p in states:
        if p not in xi:
            raise SPSError(f"xi is not defined on state {p!r}")
        masks.append(lattice.mask_of(xi[p]))
    extra = set(xi) - set(states)
    if extra:
        raise UnknownState(sorted(map(str, extra))[0])
    sps = StatePropertySystem.from_masks(states, lattice, masks)
    raise_for_violations(validate_axioms(sps))
    return sps
