"""Theorem checks run over enumerated and sampled instances, with replayable certificates.

Every check takes a closure space ``cs`` and a state property system ``sps``
whose associated closure space is ``cs`` (up to the state order), and
returns a list of failure descriptions.  An empty list means the check
held on that instance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .bits import iter_bits
from .bridge import check_round_trips, to_closure_space, to_sps
from .classical import (
    classical_elements,
    classical_mask,
    classical_part,
    complement,
    is_classical,
    is_pure_nonclassical,
    ssr_conditions,
)
from .closure import ClosureSpace
from .decomposition import decompose, state_equivalence
from .errors import SpslabError
from .lattice import FiniteLattice
from .oracle import NAIVE_CAP, enumerate_closure_spaces, naive_classical, naive_components, random_closure_space
from .sps import StatePropertySystem, validate_axioms

Check = Callable[[ClosureSpace, StatePropertySystem], list]


def check_round_trip(cs: ClosureSpace, sps: StatePropertySystem) -> list[str]:
    return check_round_trips(cs, sps)


def check_lemma1(cs, sps) -> list[str]:
    out = []
    els = sps.lattice.elements
    for a in els:
        for b in els:
            conds = ssr_conditions(sps, a, b)
            if len(set(conds)) != 1:
                out.append(f"ssr forms disagree at ({a!r}, {b!r}): {conds}")
    return out


def check_classical_clopen(cs, sps) -> list[str]:
    out = []
    space = to_closure_space(sps)
    lat = sps.lattice
    for i, a in enumerate(lat.elements):
        fast = is_classical(sps, a)
        slow, _ = naive_classical(sps, a)
        if fast != slow:
            out.append(f"is_classical({a!r}) = {fast} but definitional search says {slow}")
        if space.is_clopen_mask(sps.kappa_masks[i]) != bool(classical_mask(sps) >> i & 1):
            out.append(f"classical_elements disagrees with clopen test at {a!r}")
    cl = set(classical_elements(sps))
    if lat.bottom_element not in cl or lat.top_element not in cl:
        out.append("bottom or top missing from the classical elements")
    if is_pure_nonclassical(sps) != space.is_connected():
        out.append("pure nonclassical does not match connectedness")
    if cs.is_connected() != is_pure_nonclassical(to_sps(cs)):
        out.append("G of the space is not pure nonclassical exactly when the space is connected")
    return out


def check_lemma2(cs, sps) -> list[str]:
    out = []
    lat = sps.lattice
    kappa = sps.kappa_masks
    cls = classical_elements(sps)
    for a in cls:
        ac = complement(sps, a)
        if complement(sps, ac) != a:
            out.append(f"complement of complement of {a!r} is not {a!r}")
        ia, ic = lat.index(a), lat.index(ac)
        if kappa[ic] != sps.all_states ^ kappa[ia]:
            out.append(f"kappa of complement of {a!r} is not the set complement")
        for k, xm in enumerate(sps.xi_masks):
            if bool(xm >> ia & 1) == bool(xm >> ic & 1):
                out.append(f"state {sps.states[k]!r} makes both or neither of {a!r}, {ac!r} actual")
        for b in cls:
            if lat.leq(a, b) and not lat.leq(complement(sps, b), ac):
                out.append(f"complement does not reverse order at ({a!r}, {b!r})")
    return out


def check_components(cs, sps) -> list[str]:
    if cs.n > NAIVE_CAP:
        return []
    fast = set(cs.components())
    slow = set(naive_components(cs))
    if fast != slow:
        return [f"components {sorted(map(sorted, fast))} != naive {sorted(map(sorted, slow))}"]
    return []


def check_decomposition(cs, sps) -> list[str]:
    out = []
    space = to_closure_space(sps)
    if set(state_equivalence(sps)) != set(space.components()):
        out.append("state equivalence classes differ from the components")
    try:
        decompose(sps)
    except SpslabError as exc:
        details = getattr(exc, "failures", None) or getattr(exc, "violations", None)
        out.extend(f"{type(exc).__name__}: {d}" for d in details) if details else out.append(
            f"{type(exc).__name__}: {exc}"
        )
    return out


def check_classical_part(cs, sps) -> list[str]:
    out = []
    part = classical_part(sps)
    problems = validate_axioms(part)
    if problems:
        out.append(f"classical part fails the axioms: {problems[0]}")
        return out
    pspace = to_closure_space(part)
    if not pspace.is_weakly_zero_dimensional():
        out.append("closure space of the classical part is not weakly zero-dimensional")
    space = to_closure_space(sps)
    intersections = {space.universe}
    for c in space.clopen_masks:
        intersections |= {c & m for m in intersections}
    if set(pspace.closed_sets) != intersections:
        out.append("kappa of the classical property lattice is not the intersections of clopens")
    return out


THEOREMS: dict[str, Check] = {
    "round-trip": check_round_trip,
    "lemma1-ssr": check_lemma1,
    "classical-clopen": check_classical_clopen,
    "lemma2-complement": check_lemma2,
    "components-oracle": check_components,
    "decomposition": check_decomposition,
    "classical-part": check_classical_part,
}


def run_check(name: str, cs: ClosureSpace, sps: StatePropertySystem) -> list[str]:
    try:
        return THEOREMS[name](cs, sps)
    except SpslabError as exc:
        return [f"{type(exc).__name__}: {exc}"]


def relabel(sps: StatePropertySystem, rng: random.Random) -> StatePropertySystem:
    """Same system with opaque element names and shuffled element order."""
    lat = sps.lattice
    n = len(lat)
    perm = list(range(n))
    rng.shuffle(perm)
    # new position k holds old element perm[k]
    where = {old: k for k, old in enumerate(perm)}
    down = []
    for old in perm:
        d = 0
        for j in iter_bits(lat.down[old]):
            d |= 1 << where[j]
        down.append(d)
    new = FiniteLattice.from_down_sets([f"e{old}" for old in perm], down)
    xi = []
    for xm in sps.xi_masks:
        m = 0
        for i in iter_bits(xm):
            m |= 1 << where[i]
        xi.append(m)
    return StatePropertySystem.from_masks(sps.states, new, xi)


@dataclass
class Certificate:
    theorem: str
    failures: list[str]
    sps: StatePropertySystem
    source: str

    def to_document(self) -> dict:
        from .io import sps_payload

        doc = {"kind": "sps", **sps_payload(self.sps)}
        doc["meta"] = {
            "name": f"counterexample-{self.theorem}",
            "description": self.failures[0],
            "certificate": {"theorem": self.theorem, "failures": self.failures, "source": self.source},
        }
        return doc


@dataclass
class SuiteReport:
    checked: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    instances: dict[str, int] = field(default_factory=dict)
    certificates: list[Certificate] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.certificates

    def lines(self) -> list[str]:
        out = [f"instances {k}: {v}" for k, v in self.instances.items()]
        for name in self.checked:
            status = "PASS" if not self.failed.get(name) else "FAIL"
            out.append(f"{status} {name}: {self.checked[name]} checked, {self.failed.get(name, 0)} failed")
        out.append(f"{len(self.certificates)} certificate(s) in {self.seconds:.2f}s")
        return out


def instances(
    max_n: int = 3,
    samples: int = 0,
    seed: int = 0,
    sample_sizes: Iterable[int] | None = None,
) -> Iterator[tuple[str, ClosureSpace, StatePropertySystem]]:
    """Exhaustive spaces for n <= max_n, then ``samples`` random larger ones (relabeled)."""
    for n in range(1, max_n + 1):
        for k, cs in enumerate(enumerate_closure_spaces(n)):
            yield f"exhaustive n={n} #{k}", cs, to_sps(cs)
    sizes = list(sample_sizes) if sample_sizes is not None else [max_n + 1, max_n + 2]
    rng = random.Random(seed)
    for k in range(samples):
        n = sizes[k % len(sizes)]
        cs = random_closure_space(n, rng)
        yield f"sample seed={seed} n={n} #{k}", cs, relabel(to_sps(cs), rng)


def run_suite(
    max_n: int = 3,
    samples: int = 0,
    seed: int = 0,
    theorems: Iterable[str] | None = None,
    sample_sizes: Iterable[int] | None = None,
) -> SuiteReport:
    names = list(theorems) if theorems is not None else list(THEOREMS)
    report = SuiteReport(checked={n: 0 for n in names}, failed={n: 0 for n in names})
    start = time.perf_counter()
    for source, cs, sps in instances(max_n, samples, seed, sample_sizes):
        kind = source.split(" #")[0]
        report.instances[kind] = report.instances.get(kind, 0) + 1
        for name in names:
            report.checked[name] += 1
            failures = run_check(name, cs, sps)
            if failures:
                report.failed[name] += 1
                report.certificates.append(Certificate(name, failures, sps, source))
    report.seconds = time.perf_counter() - start
    return report
