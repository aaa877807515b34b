"""Graphviz DOT renderings: Hasse diagrams and component diagrams."""

from __future__ import annotations

import json

from .bits import iter_bits
from .closure import ClosureSpace
from .lattice import FiniteLattice

PALETTE = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"]


def _q(name) -> str:
    return json.dumps(str(name), ensure_ascii=False)


def ranks(lattice: FiniteLattice) -> list[int]:
    """Length of the longest chain from the bottom to each element."""
    rank = [0] * len(lattice)
    # down-set size is a linear extension of the order
    for i in sorted(range(len(lattice)), key=lambda i: lattice.down[i].bit_count()):
        for j in iter_bits(lattice.covers_of(i)):
            rank[j] = max(rank[j], rank[i] + 1)
    return rank


def hasse_dot(lattice: FiniteLattice, name: str = "hasse") -> str:
    rank = ranks(lattice)
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for r in range(max(rank) + 1):
        members = " ".join(_q(lattice.elements[i]) for i in range(len(lattice)) if rank[i] == r)
        lines.append(f"  {{ rank=same; {members} }}  // rank {r}")
    for x, y in lattice.hasse_edges():
        lines.append(f"  {_q(x)} -> {_q(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def components_dot(cs: ClosureSpace, name: str = "components") -> str:
    lines = [f"graph {_q(name)} {{", "  node [shape=circle, style=filled];"]
    for k, comp in enumerate(cs.component_masks):
        color = PALETTE[k % len(PALETTE)]
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q('component ' + str(k))};")
        for i in iter_bits(comp):
            lines.append(f"    {_q(cs.points[i])} [fillcolor={_q(color)}];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
