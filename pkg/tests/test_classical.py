import random

import pytest

from spslab import (
    build_closure_space,
    build_lattice,
    classical_elements,
    classical_part,
    classical_property_lattice,
    complement,
    is_classical,
    is_pure_nonclassical,
    is_ssr,
    to_closure_space,
    to_sps,
    validate_axioms,
)
from spslab.classical import ClassicalLattice, ssr_conditions
from spslab.errors import NotClassical
from spslab.oracle import enumerate_closure_spaces, naive_classical, random_closure_space
from spslab.theorems import relabel

from conftest import name, space

fs = frozenset


def G(key):
    return to_sps(space(key))


class TestSsr:
    def test_discrete(self):
        g = G("E2")
        assert is_ssr(g, name(0), name(1))
        assert ssr_conditions(g, name(0), name(1)) == (True, True, True)

    def test_E4(self):
        g = G("E4")
        assert not is_ssr(g, name(1), name(2))
        # kappa({1} v {2}) = X is strictly larger than {1} | {2}
        assert g.cartan(g.lattice.join([name(1), name(2)])) == fs({1, 2, 3})

    def test_top_top(self):
        g = G("E4")
        top = g.lattice.top_element
        assert is_ssr(g, top, top)


class TestClassical:
    def test_bottom_and_top(self):
        for key in ("E1", "E2", "E3", "E4", "E5"):
            g = G(key)
            assert is_classical(g, g.lattice.bottom_element)
            assert is_classical(g, g.lattice.top_element)

    def test_E5(self):
        assert is_classical(G("E5"), name(1, 2))
        ok, witness = naive_classical(G("E5"), name(1, 2))
        assert ok and witness == name(3, 4)

    def test_E3(self):
        assert not is_classical(G("E3"), name(1))
        assert naive_classical(G("E3"), name(1)) == (False, None)

    def test_top_witness(self):
        g = G("E4")
        assert naive_classical(g, g.lattice.top_element) == (True, g.lattice.bottom_element)


class TestComplement:
    def test_examples(self):
        g = G("E5")
        assert complement(g, name(1, 2)) == name(3, 4)
        assert complement(g, g.lattice.top_element) == g.lattice.bottom_element

    def test_not_classical(self):
        with pytest.raises(NotClassical):
            complement(G("E3"), name(1))


class TestClassicalElements:
    def test_examples(self):
        assert classical_elements(G("E1")) == [name(), name(0, 1)]
        assert classical_elements(G("E2")) == list(G("E2").lattice.elements)
        assert set(classical_elements(G("E5"))) == {name(), name(1, 2), name(3, 4), name(1, 2, 3, 4)}

    def test_pure_nonclassical(self):
        assert is_pure_nonclassical(G("E1"))
        assert is_pure_nonclassical(G("E4"))
        assert not is_pure_nonclassical(G("E5"))


class TestClassicalPropertyLattice:
    def test_examples(self):
        assert classical_property_lattice(G("E2")).elements == G("E2").lattice.elements
        assert classical_property_lattice(G("E1")).elements == (name(), name(0, 1))
        cl = classical_property_lattice(G("E5"))
        assert set(cl.elements) == {name(), name(1, 2), name(3, 4), name(1, 2, 3, 4)}
        assert cl.differing_joins() == []

    def test_join_differs_from_ambient(self):
        # {1} and {2} are clopen; their union is not closed, so L joins them to {1,2,3}
        # while the classical lattice has to go up to X
        cs = build_closure_space(
            range(4),
            [[], [1], [2], [3], [0, 3], [1, 3], [2, 3], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        )
        g = to_sps(cs)
        cl = classical_property_lattice(g)
        assert g.lattice.join(["{1}", "{2}"]) == "{1,2,3}"
        assert cl.join(["{1}", "{2}"]) == "{0,1,2,3}"
        assert cl.meet(["{0,1,3}", "{0,2,3}"]) == g.lattice.meet(["{0,1,3}", "{0,2,3}"]) == "{0,3}"
        assert ("{1}", "{2}") in cl.differing_joins()

    def test_atomistic_diagnostic(self):
        chain = build_lattice(["0", "a", "I"], [("0", "a"), ("a", "I")])
        assert not ClassicalLattice(chain, 0b111, chain).is_atomistic()
        assert classical_property_lattice(G("E5")).is_atomistic()


class TestClassicalPart:
    def test_E1(self):
        part = classical_part(G("E1"))
        assert len(part.lattice) == 2
        assert part.xi(0) == {name(0, 1)}

    def test_E5(self):
        part = classical_part(G("E5"))
        assert len(part.lattice) == 4
        assert part.xi(1) == {name(1, 2), name(1, 2, 3, 4)}
        assert validate_axioms(part) == []

    def test_E4_trivial(self):
        part = classical_part(G("E4"))
        assert part.lattice.elements == (name(), name(1, 2, 3))


def _classical_laws(sps):
    space = to_closure_space(sps)
    lat = sps.lattice
    for a in lat.elements:
        conds = ssr_conditions(sps, a, lat.top_element)
        assert len(set(conds)) == 1
        assert is_classical(sps, a) == space.is_clopen(sps.cartan(a)) == naive_classical(sps, a)[0]
    cls = classical_elements(sps)
    for a in cls:
        ac = complement(sps, a)
        assert complement(sps, ac) == a
        assert sps.cartan(ac) == fs(sps.states) - sps.cartan(a)
        for p in sps.states:
            assert sps.is_actual(p, a) != sps.is_actual(p, ac)
        for b in cls:
            if lat.leq(a, b):
                assert lat.leq(complement(sps, b), ac)
    assert is_pure_nonclassical(sps) == space.is_connected()
    part = classical_part(sps)
    assert validate_axioms(part) == []
    assert to_closure_space(part).is_weakly_zero_dimensional()


def test_classical_laws_exhaustive():
    for n in range(1, 4):
        for cs in enumerate_closure_spaces(n):
            _classical_laws(to_sps(cs))


def test_classical_laws_relabeled_random():
    rng = random.Random(5)
    for _ in range(150):
        _classical_laws(relabel(to_sps(random_closure_space(rng.randint(2, 6), rng)), rng))
