import random
from itertools import combinations

import pytest

from spslab.bits import full
from spslab.closure import ClosureSpace
from spslab.errors import TooLarge
from spslab.oracle import EnumerationCursor, enumerate_closure_spaces, naive_components, random_closure_space

from conftest import space

fs = frozenset

# frozen from the first run; agrees with the brute-force filter below
COUNTS = {1: 1, 2: 4, 3: 45, 4: 2271}


def brute_force_families(n):
    universe = full(n)
    middle = list(range(1, universe))
    out = set()
    for r in range(len(middle) + 1):
        for chosen in combinations(middle, r):
            fam = {0, universe, *chosen}
            if all(a & b in fam for a in fam for b in fam):
                out.add(frozenset(fam))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_is_complete_and_duplicate_free(n):
    spaces = list(enumerate_closure_spaces(n))
    families = [frozenset(cs.closed_sets) for cs in spaces]
    assert len(families) == len(set(families)) == COUNTS[n]
    assert set(families) == brute_force_families(n)


def test_enumeration_is_deterministic():
    a = [cs.closed_sets for cs in enumerate_closure_spaces(3)]
    b = [cs.closed_sets for cs in enumerate_closure_spaces(3)]
    assert a == b


def test_n2_spaces():
    fams = {tuple(sorted(tuple(sorted(f)) for f in cs.family())) for cs in enumerate_closure_spaces(2)}
    assert fams == {
        ((), (0, 1)),
        ((), (0,), (0, 1)),
        ((), (0, 1), (1,)),
        ((), (0,), (0, 1), (1,)),
    }


def test_cursor_counts():
    cur = EnumerationCursor(3)
    for _ in cur:
        pass
    assert cur.index == 45


def test_cap():
    with pytest.raises(TooLarge):
        EnumerationCursor(5)
    with pytest.raises(ValueError):
        EnumerationCursor(0)


def test_emitted_spaces_validate():
    for cs in enumerate_closure_spaces(4):
        ClosureSpace.from_masks(cs.points, cs.closed_sets)


def test_random_spaces_validate():
    rng = random.Random(2)
    for _ in range(200):
        cs = random_closure_space(rng.randint(1, 7), rng)
        ClosureSpace.from_masks(cs.points, cs.closed_sets)


class TestNaiveComponents:
    def test_examples(self):
        assert set(naive_components(space("E5"))) == {fs({1, 2}), fs({3, 4})}
        assert naive_components(space("E1")) == [fs({0, 1})]
        assert naive_components(space("E3")) == [fs({0, 1})]

    def test_cap(self):
        big = ClosureSpace.from_masks(range(11), [0])
        with pytest.raises(TooLarge):
            naive_components(big)
