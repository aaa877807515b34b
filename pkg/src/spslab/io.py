"""JSON documents for closure spaces and state property systems.

Closure space::

    {"kind": "closure_space", "points": ["1", "2"], "closed_sets": [[], ["1"], ["1", "2"]]}

State property system::

    {"kind": "sps", "states": ["p"], "lattice": {"elements": ["0", "I"], "leq": [["0", "I"]]},
     "xi": {"p": ["I"]}}

Identifiers are strings.  The canonical form sorts points and states by name
(numeric names numerically), lists elements bottom-up (by down-set size, then
name), writes subsets as sorted lists, and gives the covering pairs of the
order as ``leq``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .bits import canonical_key, iter_bits
from .closure import ClosureSpace, build_closure_space
from .errors import DocumentSyntaxError, SpslabError, ValidationError
from .lattice import build_lattice
from .sps import StatePropertySystem, build_sps

KINDS = ("closure_space", "sps")


def natural_key(name: str) -> tuple:
    return (0, int(name), "") if re.fullmatch(r"-?\d+", name) else (1, 0, name)


@dataclass
class StructureDocument:
    kind: str
    payload: ClosureSpace | StatePropertySystem
    meta: dict = field(default_factory=dict)


def _strings(value: Any, where: str) -> list[str]:
    if not isinstance(value, list):
        raise ValidationError(f"{where}: expected a list, got {type(value).__name__}")
    out = []
    for k, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise ValidationError(f"{where}[{k}]: expected a string identifier, got {v!r}")
        out.append(str(v))
    return out


def _wrap(where: str, exc: SpslabError) -> ValidationError:
    return ValidationError(f"{where}: {type(exc).__name__}: {exc}", cause=exc)


def from_dict(data: Any) -> StructureDocument:
    if not isinstance(data, dict):
        raise ValidationError("document: expected a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"kind: expected one of {KINDS}, got {kind!r}")
    meta = data.get("meta") or {}
    if not isinstance(meta, dict):
        raise ValidationError("meta: expected an object")
    if kind == "closure_space":
        points = _strings(data.get("points"), "points")
        raw = data.get("closed_sets")
        if not isinstance(raw, list):
            raise ValidationError("closed_sets: expected a list of lists")
        family = [_strings(s, f"closed_sets[{k}]") for k, s in enumerate(raw)]
        try:
            payload = build_closure_space(points, family)
        except SpslabError as exc:
            raise _wrap("closed_sets", exc) from exc
        return StructureDocument(kind, payload, meta)
    states = _strings(data.get("states"), "states")
    lat = data.get("lattice")
    if not isinstance(lat, dict):
        raise ValidationError("lattice: expected an object with elements and leq")
    elements = _strings(lat.get("elements"), "lattice.elements")
    pairs_raw = lat.get("leq", [])
    if not isinstance(pairs_raw, list):
        raise ValidationError("lattice.leq: expected a list of pairs")
    pairs = []
    for k, pr in enumerate(pairs_raw):
        pr = _strings(pr, f"lattice.leq[{k}]")
        if len(pr) != 2:
            raise ValidationError(f"lattice.leq[{k}]: expected a pair")
        pairs.append(tuple(pr))
    try:
        lattice = build_lattice(elements, pairs)
    except SpslabError as exc:
        raise _wrap("lattice", exc) from exc
    xi_raw = data.get("xi")
    if not isinstance(xi_raw, dict):
        raise ValidationError("xi: expected an object mapping states to element lists")
    xi = {str(p): _strings(v, f"xi[{p!r}]") for p, v in xi_raw.items()}
    try:
        payload = build_sps(states, lattice, xi)
    except SpslabError as exc:
        raise _wrap("xi", exc) from exc
    return StructureDocument(kind, payload, meta)


def parse(source: str | Path) -> StructureDocument:
    """Parse a document from a path or from JSON text."""
    if isinstance(source, Path) or not source.lstrip().startswith("{"):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_dict(data)


def closure_space_payload(cs: ClosureSpace) -> dict:
    pts = [str(p) for p in cs.points]
    order = sorted(range(cs.n), key=lambda i: natural_key(pts[i]))
    rank = {i: r for r, i in enumerate(order)}

    def remap(m: int) -> int:
        return sum(1 << rank[i] for i in iter_bits(m))

    family = sorted((remap(m) for m in cs.closed_sets), key=canonical_key)
    return {
        "points": [pts[i] for i in order],
        "closed_sets": [[pts[order[r]] for r in iter_bits(m)] for m in family],
    }


def sps_payload(sps: StatePropertySystem) -> dict:
    lat = sps.lattice
    names = [str(e) for e in lat.elements]
    # bottom-up: by down-set size, then by name
    order = sorted(range(len(lat)), key=lambda i: (lat.down[i].bit_count(), natural_key(names[i])))
    rank = {i: r for r, i in enumerate(order)}
    edges = sorted(
        ((i, j) for i in range(len(lat)) for j in iter_bits(lat.covers_of(i))),
        key=lambda e: (rank[e[0]], rank[e[1]]),
    )
    states = sorted(range(len(sps.states)), key=lambda k: natural_key(str(sps.states[k])))
    xi = {}
    for k in states:
        actual = sorted(iter_bits(sps.xi_masks[k]), key=rank.__getitem__)
        xi[str(sps.states[k])] = [names[i] for i in actual]
    return {
        "states": [str(sps.states[k]) for k in states],
        "lattice": {"elements": [names[i] for i in order], "leq": [[names[i], names[j]] for i, j in edges]},
        "xi": xi,
    }


def to_dict(doc: StructureDocument) -> dict:
    if isinstance(doc.payload, ClosureSpace):
        out = {"kind": "closure_space", **closure_space_payload(doc.payload)}
    else:
        out = {"kind": "sps", **sps_payload(doc.payload)}
    if doc.meta:
        out["meta"] = doc.meta
    return out


def dumps(data: dict, compact: bool = False) -> str:
    """One top-level key per line; nested values inline.  ``compact`` gives a single line."""
    if compact:
        return json.dumps(data, ensure_ascii=False)
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in data.items())
    return "{\n" + body + "\n}\n"


def serialize(doc: StructureDocument, compact: bool = False) -> str:
    return dumps(to_dict(doc), compact)


def canonicalize(doc: StructureDocument) -> StructureDocument:
    """Rebuild the payload in canonical point/element order."""
    return from_dict(to_dict(doc))


def closure_space_document(cs: ClosureSpace, **meta) -> StructureDocument:
    return StructureDocument("closure_space", cs, dict(meta))


def sps_document(sps: StatePropertySystem, **meta) -> StructureDocument:
    return StructureDocument("sps", sps, dict(meta))
