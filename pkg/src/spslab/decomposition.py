"""Splitting a state property system into pure nonclassical parts and a classical skeleton."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .bits import iter_bits
from .bridge import subset_name, to_closure_space
from .classical import is_pure_nonclassical
from .errors import DecompositionError, NoSuchProperty, SkeletonAxiomViolation, SPSError, TooLarge
from .lattice import Element
from .sps import State, StatePropertySystem, validate_axioms

MAX_BLOCKS = 16


def restrict(sps: StatePropertySystem, state_mask: int, element_mask: int) -> StatePropertySystem:
    """Sub-system on the given states and lattice elements, with xi intersected."""
    lattice = sps.lattice.induced(element_mask)
    pos = {i: k for k, i in enumerate(iter_bits(element_mask))}
    xi = []
    for k in iter_bits(state_mask):
        m = 0
        for i in iter_bits(sps.xi_masks[k] & element_mask):
            m |= 1 << pos[i]
        xi.append(m)
    return StatePropertySystem.from_masks([sps.states[k] for k in iter_bits(state_mask)], lattice, xi)


def block_masks(sps: StatePropertySystem) -> tuple[int, ...]:
    return to_closure_space(sps).component_masks


def state_equivalence(sps: StatePropertySystem) -> list[frozenset]:
    """States grouped by their connection component in the associated closure space."""
    return [sps.states_of(m) for m in block_masks(sps)]


def _label_index(sps: StatePropertySystem, block: int) -> int:
    i = sps.kappa_inverse.get(block)
    if i is None:
        raise NoSuchProperty(f"no property has Cartan image {sorted(map(str, sps.states_of(block)))}")
    return i


def component_label(sps: StatePropertySystem, omega: Iterable[State]) -> Element:
    """The property whose Cartan image is exactly the block ``omega``."""
    block = 0
    for p in omega:
        block |= 1 << sps.state_index(p)
    if block not in block_masks(sps):
        raise SPSError(f"{sorted(map(str, sps.states_of(block)))} is not a block of the state equivalence")
    return sps.lattice.elements[_label_index(sps, block)]


def nonclassical_parts(sps: StatePropertySystem) -> list[StatePropertySystem]:
    """One sub-system per block: its states, the segment below its label, xi restricted."""
    return [
        restrict(sps, block, sps.lattice.down[_label_index(sps, block)])
        for block in block_masks(sps)
    ]


def _block_name(sps: StatePropertySystem, block: int) -> str:
    return subset_name(sps.states, block)


def skeleton_with_collisions(sps: StatePropertySystem) -> tuple[StatePropertySystem, list[tuple[str, str]]]:
    lat = sps.lattice
    blocks = block_masks(sps)
    if len(blocks) > MAX_BLOCKS:
        raise TooLarge(f"{len(blocks)} blocks exceed the skeleton cap of {MAX_BLOCKS}")
    labels = [_label_index(sps, b) for b in blocks]
    k = len(blocks)
    joins = [lat.bottom] * (1 << k)
    first_subset: dict[int, int] = {lat.bottom: 0}
    collisions: list[tuple[str, str]] = []
    for sub in range(1, 1 << k):
        low = (sub & -sub).bit_length() - 1
        joins[sub] = lat.join2(joins[sub & (sub - 1)], labels[low])
        j = joins[sub]
        if j in first_subset:
            names = lambda s: "+".join(_block_name(sps, blocks[t]) for t in iter_bits(s)) or "()"
            collisions.append((names(first_subset[j]), names(sub)))
        else:
            first_subset[j] = sub
    carrier = 0
    for j in joins:
        carrier |= 1 << j
    lattice = lat.induced(carrier)
    pos = {i: t for t, i in enumerate(iter_bits(carrier))}
    eta = []
    mismatches = []
    for b in blocks:
        reps = list(iter_bits(b))
        values = {sps.xi_masks[q] & carrier for q in reps}
        if len(values) != 1:
            mismatches.append(
                f"eta not well defined on block {_block_name(sps, b)}: "
                + ", ".join(f"{sps.states[q]!r}->{lat.elements_of(sps.xi_masks[q] & carrier)}" for q in reps)
            )
        m = 0
        for i in iter_bits(sps.xi_masks[reps[0]] & carrier):
            m |= 1 << pos[i]
        eta.append(m)
    if mismatches:
        raise SkeletonAxiomViolation(mismatches)
    skeleton = StatePropertySystem.from_masks([_block_name(sps, b) for b in blocks], lattice, eta)
    problems = validate_axioms(skeleton)
    if problems:
        raise SkeletonAxiomViolation(problems)
    return skeleton, collisions


def classical_skeleton(sps: StatePropertySystem) -> StatePropertySystem:
    """Blocks as states; all joins of block labels as properties; eta(block) = xi(p) & C for p in the block."""
    return skeleton_with_collisions(sps)[0]


def is_totally_classical(sps: StatePropertySystem) -> bool:
    """True iff every segment without proper classical elements is {bottom, atom}."""
    lat = sps.lattice
    for i in range(len(lat)):
        if i == lat.bottom:
            continue
        seg = lat.down[i]
        if seg.bit_count() == 2:
            continue
        if is_pure_nonclassical(restrict(sps, sps.kappa_masks[i], seg)):
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    omega: list[frozenset]
    labels: dict[frozenset, Element]
    parts: list[StatePropertySystem]
    skeleton: StatePropertySystem
    collisions: list[tuple[str, str]] = field(default_factory=list)


def decomposition_failures(sps: StatePropertySystem, parts, skeleton, blocks) -> list[str]:
    failures = []
    union = 0
    for b in blocks:
        if not b or union & b:
            failures.append(f"blocks overlap or are empty at {_block_name(sps, b)}")
        union |= b
    if union != sps.all_states:
        failures.append("blocks do not cover the states")
    for part in parts:
        name = subset_name(part.states, part.all_states)
        problems = validate_axioms(part)
        if problems:
            failures.append(f"part {name} fails the axioms: {problems[0]}")
        elif not is_pure_nonclassical(part):
            failures.append(f"part {name} is not pure nonclassical")
    sk = skeleton.lattice
    for t in range(len(skeleton.states)):
        label = sk.index(sps.lattice.elements[_label_index(sps, blocks[t])])
        if not sk.is_atom(sk.elements[label]):
            failures.append(f"label of block {skeleton.states[t]} is not an atom of the skeleton lattice")
    if not is_totally_classical(skeleton):
        failures.append("skeleton is not totally classical")
    if not to_closure_space(skeleton).is_totally_disconnected():
        failures.append("skeleton closure space is not totally disconnected")
    return failures


def decompose(sps: StatePropertySystem) -> Decomposition:
    """Full decomposition; raises DecompositionError if any post-condition fails."""
    blocks = block_masks(sps)
    parts = nonclassical_parts(sps)
    skeleton, collisions = skeleton_with_collisions(sps)
    failures = decomposition_failures(sps, parts, skeleton, blocks)
    if failures:
        raise DecompositionError(failures)
    omega = [sps.states_of(b) for b in blocks]
    labels = {w: sps.lattice.elements[_label_index(sps, b)] for w, b in zip(omega, blocks)}
    return Decomposition(omega, labels, parts, skeleton, collisions)
