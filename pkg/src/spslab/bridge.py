"""Object-level translation between state property systems and closure spaces."""

from __future__ import annotations

from .bits import canonical_key, iter_bits
from .closure import ClosureSpace
from .lattice import FiniteLattice
from .sps import StatePropertySystem, validate_axioms


def subset_name(points, mask: int) -> str:
    """Canonical label of a subset, e.g. ``{1,2}``; used as lattice element names."""
    return "{" + ",".join(str(points[i]) for i in iter_bits(mask)) + "}"


def to_closure_space(sps: StatePropertySystem) -> ClosureSpace:
    """The states with the Cartan images of all properties as closed sets."""
    return ClosureSpace.from_masks(sps.states, sps.kappa_masks)


def to_sps(cs: ClosureSpace) -> StatePropertySystem:
    """Closed sets ordered by inclusion as properties; a point makes every closed set containing it actual."""
    family = cs.closed_sets
    down = []
    for f in family:
        d = 0
        for j, g in enumerate(family):
            if g & ~f == 0:
                d |= 1 << j
        down.append(d)
    lattice = FiniteLattice.from_down_sets([subset_name(cs.points, f) for f in family], down)
    xi = []
    for k in range(cs.n):
        xm = 0
        for j, f in enumerate(family):
            if f >> k & 1:
                xm |= 1 << j
        xi.append(xm)
    return StatePropertySystem.from_masks(cs.points, lattice, xi)


def check_round_trips(cs: ClosureSpace | None = None, sps: StatePropertySystem | None = None) -> list[str]:
    """Mismatches of F(G(cs)) == cs and of G(F(sps)) ~= sps via the Cartan map; empty when both hold."""
    report: list[str] = []
    if cs is not None:
        back = to_closure_space(to_sps(cs))
        if back.points != cs.points:
            report.append(f"F(G(cs)) changed the universe: {back.points!r} != {cs.points!r}")
        if set(back.closed_sets) != set(cs.closed_sets):
            extra = sorted(set(back.closed_sets) ^ set(cs.closed_sets), key=canonical_key)
            report.append(f"F(G(cs)) changed the family; differing sets {[subset_name(cs.points, m) for m in extra]}")
    if sps is not None:
        report.extend(_check_gf(sps))
    return report


def _check_gf(sps: StatePropertySystem) -> list[str]:
    report = []
    problems = validate_axioms(sps)
    if problems:
        return [f"input is not a state property system: {problems[0]}"]
    g = to_sps(to_closure_space(sps))
    if g.states != sps.states:
        report.append("G(F(sps)) changed the states")
        return report
    lat, glat = sps.lattice, g.lattice
    kappa = sps.kappa_masks
    # a -> kappa(a) lands on the G-lattice element with the same state set
    by_set = {m: j for j, m in enumerate(g.kappa_masks)}
    image = []
    for i, m in enumerate(kappa):
        if m not in by_set:
            report.append(f"kappa({lat.elements[i]!r}) is not a property of G(F(sps))")
            return report
        image.append(by_set[m])
    if len(set(image)) != len(lat) or len(glat) != len(lat):
        report.append("kappa is not a bijection onto the closed sets")
        return report
    for i in range(len(lat)):
        for j in range(len(lat)):
            if lat.leq_index(i, j) != glat.leq_index(image[i], image[j]):
                report.append(f"order not preserved at ({lat.elements[i]!r}, {lat.elements[j]!r})")
    for k, p in enumerate(sps.states):
        moved = 0
        for i in iter_bits(sps.xi_masks[k]):
            moved |= 1 << image[i]
        if moved != g.xi_masks[k]:
            report.append(f"xi does not commute with kappa at state {p!r}")
    return report
