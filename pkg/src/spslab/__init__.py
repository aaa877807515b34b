"""spslab: finite state property systems, closure spaces, and their decomposition."""

from .bridge import check_round_trips, to_closure_space, to_sps
from .classical import (
    ClassicalLattice,
    classical_elements,
    classical_part,
    classical_property_lattice,
    complement,
    is_classical,
    is_pure_nonclassical,
    is_ssr,
)
from .closure import ClosureSpace, build_closure_space
from .decomposition import (
    Decomposition,
    classical_skeleton,
    component_label,
    decompose,
    is_totally_classical,
    nonclassical_parts,
    state_equivalence,
)
from .lattice import FiniteLattice, build_lattice
from .sps import StatePropertySystem, Violation, build_sps, validate_axioms

__all__ = [
    "ClassicalLattice",
    "ClosureSpace",
    "Decomposition",
    "FiniteLattice",
    "StatePropertySystem",
    "Violation",
    "build_closure_space",
    "build_lattice",
    "build_sps",
    "check_round_trips",
    "classical_elements",
    "classical_part",
    "classical_property_lattice",
    "classical_skeleton",
    "complement",
    "component_label",
    "decompose",
    "is_classical",
    "is_pure_nonclassical",
    "is_ssr",
    "is_totally_classical",
    "nonclassical_parts",
    "state_equivalence",
    "to_closure_space",
    "to_sps",
    "validate_axioms",
]
