"""Independent brute-force references over plain frozensets, for freezing expected values."""

from __future__ import annotations

from itertools import chain, combinations


def powerset(xs):
    xs = list(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))]


def family_of(points, closed):
    return {frozenset(c) for c in closed} | {frozenset(points)}


def closure(points, closed, a):
    out = frozenset(points)
    for f in family_of(points, closed):
        if frozenset(a) <= f:
            out &= f
    return out


def connected(points, closed, a):
    a = frozenset(a)
    traces = {f & a for f in family_of(points, closed)}
    return not any(t and t != a and t in traces and (a - t) in traces for t in powerset(a))


def components(points, closed):
    comps = set()
    for x in points:
        comps.add(frozenset().union(*(s for s in powerset(points) if x in s and connected(points, closed, s))))
    return comps


def clopens(points, closed):
    fam = family_of(points, closed)
    return {f for f in fam if frozenset(points) - f in fam}


def lower_bounds(family, sets):
    return [f for f in family if all(f <= s for s in sets)]


def upper_bounds(family, sets):
    return [f for f in family if all(s <= f for s in sets)]
