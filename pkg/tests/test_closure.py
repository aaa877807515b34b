import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from spslab import build_closure_space
from spslab.errors import EmptySubspace, MissingEmptySet, NotIntersectionClosed, UnknownPoint
from spslab.oracle import enumerate_closure_spaces, naive_components, random_closure_space

import brute

fs = frozenset


class TestBuild:
    def test_indiscrete(self, E1):
        assert E1.family() == [fs(), fs({0, 1})]
        assert not E1.normalized

    def test_intersection_witness(self):
        with pytest.raises(NotIntersectionClosed) as err:
            build_closure_space([1, 2, 3], [[], [1, 2], [2, 3], [1, 2, 3]])
        assert set(err.value.witness) == {fs({1, 2}), fs({2, 3})}
        ok = build_closure_space([1, 2, 3], [[], [1, 2], [2, 3], [2], [1, 2, 3]])
        assert len(ok.closed_sets) == 5

    def test_E4_is_valid(self, E4):
        assert set(E4.family()) == {fs(), fs({1}), fs({2}), fs({1, 2, 3})}

    def test_missing_empty(self):
        with pytest.raises(MissingEmptySet):
            build_closure_space([0, 1], [[0], [0, 1]])

    def test_universe_added_and_reported(self):
        cs = build_closure_space([0, 1], [[]])
        assert cs.normalized
        assert fs({0, 1}) in cs.family()

    def test_unknown_point(self):
        with pytest.raises(UnknownPoint):
            build_closure_space([0, 1], [[], [7]])


class TestClosure:
    def test_examples(self, E1, E2, E4):
        assert E1.closure([0]) == fs({0, 1})
        assert E2.closure([0]) == fs({0})
        assert E4.closure([1, 2]) == brute.closure([1, 2, 3], [[], [1], [2]], {1, 2}) == fs({1, 2, 3})

    def test_unknown(self, E1):
        with pytest.raises(UnknownPoint):
            E1.closure([5])

    def test_kuratowski_like_laws_exhaustive(self):
        for n in range(1, 5):
            for cs in enumerate_closure_spaces(n):
                for a in range(cs.universe + 1):
                    c = cs.closure_mask(a)
                    assert a & ~c == 0
                    assert cs.closure_mask(c) == c
                    assert cs.is_closed_mask(c)
                    assert (c == a) == cs.is_closed_mask(a)
                    for b in range(cs.universe + 1):
                        if a & ~b == 0:
                            assert c & ~cs.closure_mask(b) == 0


class TestClopen:
    def test_examples(self, E2, E3, E5):
        assert E2.is_clopen([0])
        assert not E3.is_clopen([1])
        assert E5.is_clopen([1, 2])
        assert set(E5.clopen_sets()) == brute.clopens([1, 2, 3, 4], [[], [1, 2], [3, 4]])


class TestSubspace:
    def test_E5(self, E5):
        sub = E5.subspace([1, 2])
        assert sub.points == (1, 2)
        assert set(sub.family()) == {fs(), fs({1, 2})}

    def test_one_point(self, E2):
        sub = E2.subspace([0])
        assert sub.points == (0,)
        assert set(sub.family()) == {fs(), fs({0})}

    def test_E4(self, E4):
        assert set(E4.subspace([1, 2]).family()) == {fs(), fs({1}), fs({2}), fs({1, 2})}

    def test_empty(self, E2):
        with pytest.raises(EmptySubspace):
            E2.subspace([])


class TestConnected:
    def test_spaces(self, E1, E2, E4):
        assert E1.is_connected()
        assert not E2.is_connected()
        assert E4.is_connected()

    def test_subsets(self, E5):
        assert E5.is_connected_subset([1, 2])
        assert not E5.is_connected_subset([2, 3])
        assert E5.is_connected_subset([])
        assert E5.is_connected_subset([3])

    def test_against_brute_force(self):
        for n in range(1, 4):
            for cs in enumerate_closure_spaces(n):
                closed = cs.family()
                for a in brute.powerset(cs.points):
                    assert cs.is_connected_subset(a) == brute.connected(cs.points, closed, a)


class TestComponents:
    def test_component_of(self, E1, E2, E5):
        assert E1.component_of(0) == fs({0, 1})
        assert E2.component_of(0) == fs({0})
        assert E5.component_of(3) == fs({3, 4})

    def test_components(self, E1, E2, E3, E5):
        assert E1.components() == [fs({0, 1})]
        assert E2.components() == [fs({0}), fs({1})]
        assert E3.components() == [fs({0, 1})]
        assert E5.components() == [fs({1, 2}), fs({3, 4})]
        assert set(E5.components()) == brute.components([1, 2, 3, 4], [[], [1, 2], [3, 4]])

    def test_totally_disconnected(self, E1, E2):
        assert E2.is_totally_disconnected()
        assert not E1.is_totally_disconnected()

    def test_quasi_components_can_be_too_coarse(self):
        # {0,3} is a component and {1}, {2} are singletons, but no clopen set separates 2 from {0,3}
        cs = build_closure_space(range(4), [[], [1], [2], [3], [0, 3], [2, 3], [0, 2, 3], [1, 2, 3]])
        assert set(cs.components()) == {fs({0, 3}), fs({1}), fs({2})}
        assert set(cs.clopen_sets()) == {fs(), fs({1}), fs({0, 2, 3}), fs(range(4))}


class TestWeaklyZeroDimensional:
    def test_examples(self, E1, E2, E3):
        assert E2.is_weakly_zero_dimensional()
        assert not E3.is_weakly_zero_dimensional()
        assert E1.is_weakly_zero_dimensional()


def _component_invariants(cs):
    comps = cs.component_masks
    union = 0
    for c in comps:
        assert c and not union & c
        union |= c
        assert cs.connected_mask(c)
        assert cs.is_closed_mask(c)
    assert union == cs.universe
    for i in range(cs.n):
        assert cs.component_of_mask(i) >> i & 1
    assert cs.is_connected() == (len(comps) == 1)
    # clopen sets never split connected sets
    for u in cs.clopen_masks:
        for a in range(1, cs.universe + 1):
            if a & u and cs.connected_mask(a):
                assert a & ~u == 0
    # maximality: no connected set properly contains a component
    for a in range(1, cs.universe + 1):
        if cs.connected_mask(a):
            assert any(a & ~c == 0 for c in comps)


def test_component_invariants_exhaustive():
    for n in range(1, 5):
        for cs in enumerate_closure_spaces(n):
            _component_invariants(cs)


@settings(max_examples=150, deadline=None)
@given(st.integers(5, 7), st.integers(0, 2**32))
def test_components_match_naive_random(n, seed):
    cs = random_closure_space(n, random.Random(seed))
    _component_invariants(cs)
    assert set(cs.components()) == set(naive_components(cs))


def test_subspace_is_closure_space_exhaustive():
    for cs in enumerate_closure_spaces(3):
        for bits in product([0, 1], repeat=3):
            a = [p for p, b in zip(cs.points, bits) if b]
            if a:
                sub = cs.subspace(a)
                assert set(sub.points) == set(a)
