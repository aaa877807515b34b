"""Command-line interface: ``spslab <command> [options]``.

Exit codes: 0 success, 1 validation failure, 2 theorem counterexample, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bridge import to_closure_space, to_sps
from .classical import (
    classical_elements,
    classical_part,
    classical_property_lattice,
    complement,
    is_pure_nonclassical,
)
from .closure import ClosureSpace
from .decomposition import skeleton_with_collisions, block_masks, decomposition_failures, nonclassical_parts
from .dot import components_dot, hasse_dot
from .errors import SpslabError, TooLarge
from .io import StructureDocument, closure_space_document, dumps, parse, serialize, sps_document, to_dict
from .oracle import enumerate_closure_spaces
from .sps import StatePropertySystem
from .theorems import THEOREMS, Certificate, run_check, run_suite

EXIT_OK, EXIT_INVALID, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2, 3

COMMANDS = (
    "validate",
    "convert",
    "classical",
    "components",
    "decompose",
    "classical-part",
    "check-theorems",
    "enumerate",
    "export-dot",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spslab", description="State property systems and closure spaces.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", help="input document (default: stdin)")
    p.add_argument("--output", "-o", help="write the result here instead of stdout")
    p.add_argument("--format", "-f", choices=("text", "json", "dot"), default="text")
    p.add_argument("--max-n", type=int, default=3, help="exhaustive size cap for check-theorems")
    p.add_argument("--n", type=int, help="universe size for enumerate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=0, help="random larger instances for check-theorems")
    p.add_argument("--certificates", help="directory for counterexample certificates")
    p.add_argument("--theorem", action="append", choices=sorted(THEOREMS), help="restrict check-theorems")
    p.add_argument("--diagram", choices=("hasse", "components"), default="hasse")
    return p


def _load(args) -> StructureDocument:
    if args.input and args.input != "-":
        return parse(Path(args.input))
    return parse(sys.stdin.read())


def _as_sps(doc: StructureDocument) -> StatePropertySystem:
    return doc.payload if isinstance(doc.payload, StatePropertySystem) else to_sps(doc.payload)


def _as_space(doc: StructureDocument) -> ClosureSpace:
    return doc.payload if isinstance(doc.payload, ClosureSpace) else to_closure_space(doc.payload)


def _subset(cs: ClosureSpace, s) -> list[str]:
    return [str(cs.points[i]) for i in range(cs.n) if cs.points[i] in s]


def _write_certificates(directory: str | None, certs: list[Certificate]) -> list[str]:
    if not directory:
        return []
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, cert in enumerate(certs):
        path = out / f"{k:04d}-{cert.theorem}.json"
        path.write_text(dumps(cert.to_document()), encoding="utf-8")
        paths.append(str(path))
    return paths


def cmd_validate(args) -> tuple[int, str]:
    doc = _load(args)
    lines = []
    if isinstance(doc.payload, ClosureSpace):
        cs = doc.payload
        lines.append(f"valid closure_space: {cs.n} points, {len(cs.closed_sets)} closed sets")
        if cs.normalized:
            lines.append("normalized: the universe was added to the closed sets")
    else:
        sps = doc.payload
        lines.append(f"valid sps: {len(sps.states)} states, {len(sps.lattice)} properties")
    cert = doc.meta.get("certificate")
    if isinstance(cert, dict) and cert.get("theorem") in THEOREMS:
        failures = run_check(cert["theorem"], _as_space(doc), _as_sps(doc))
        if failures:
            lines.append(f"certificate replay: {cert['theorem']} still fails")
            lines.extend(f"  {f}" for f in failures)
            return EXIT_COUNTEREXAMPLE, "\n".join(lines)
        lines.append(f"certificate replay: {cert['theorem']} holds")
    return EXIT_OK, "\n".join(lines)


def cmd_convert(args) -> tuple[int, str]:
    doc = _load(args)
    if isinstance(doc.payload, ClosureSpace):
        out = sps_document(to_sps(doc.payload))
    else:
        out = closure_space_document(to_closure_space(doc.payload))
    return EXIT_OK, serialize(out)


def cmd_classical(args) -> tuple[int, str]:
    sps = _as_sps(_load(args))
    cs = to_closure_space(sps)
    rows = []
    for a in classical_elements(sps):
        rows.append({
            "element": str(a),
            "complement": str(complement(sps, a)),
            "cartan": _subset(cs, sps.cartan(a)),
        })
    pure = is_pure_nonclassical(sps)
    if args.format == "json":
        return EXIT_OK, dumps({"classical": rows, "pure_nonclassical": pure})
    lines = [f"classical properties: {len(rows)} of {len(sps.lattice)}"]
    lines += [f"  {r['element']}  complement {r['complement']}" for r in rows]
    lines.append(f"pure nonclassical: {'yes' if pure else 'no'}")
    return EXIT_OK, "\n".join(lines)


def cmd_components(args) -> tuple[int, str]:
    cs = _as_space(_load(args))
    comps = [_subset(cs, c) for c in cs.components()]
    if args.format == "json":
        return EXIT_OK, dumps({
            "components": comps,
            "connected": cs.is_connected(),
            "totally_disconnected": cs.is_totally_disconnected(),
        })
    if args.format == "dot":
        return EXIT_OK, components_dot(cs)
    lines = [f"components: {len(comps)}"]
    lines += ["  {" + ",".join(c) + "}" for c in comps]
    lines.append(f"connected: {'yes' if cs.is_connected() else 'no'}")
    lines.append(f"totally disconnected: {'yes' if cs.is_totally_disconnected() else 'no'}")
    return EXIT_OK, "\n".join(lines)


def cmd_decompose(args) -> tuple[int, str]:
    sps = _as_sps(_load(args))
    blocks = block_masks(sps)
    try:
        parts = nonclassical_parts(sps)
        skeleton, collisions = skeleton_with_collisions(sps)
        failures = decomposition_failures(sps, parts, skeleton, blocks)
    except SpslabError as exc:
        parts, skeleton, collisions = [], None, []
        failures = list(getattr(exc, "violations", None) or getattr(exc, "failures", None) or [str(exc)])
        failures = [str(f) for f in failures]
    if failures:
        cert = Certificate("decomposition", failures, sps, "spslab decompose")
        paths = _write_certificates(args.certificates, [cert])
        lines = ["decomposition post-conditions FAILED:"]
        lines += [f"  {f}" for f in failures]
        lines += [f"certificate: {p}" for p in paths]
        if not paths:
            lines += ["certificate:", dumps(cert.to_document()).rstrip()]
        return EXIT_COUNTEREXAMPLE, "\n".join(lines)
    summary = {
        "blocks": [sorted(map(str, p.states)) for p in parts],
        "parts": [
            {
                "states": [str(s) for s in p.states],
                "label": str(p.lattice.top_element),
                "lattice": [str(e) for e in p.lattice.elements],
            }
            for p in parts
        ],
        "skeleton": to_dict(sps_document(skeleton)),
        "collisions": [list(c) for c in collisions],
        "post_conditions": "all hold",
    }
    if args.format == "json":
        return EXIT_OK, dumps(summary)
    lines = [f"blocks: {len(parts)}"]
    for p in summary["parts"]:
        lines.append(
            "  part {" + ",".join(p["states"]) + "}: label " + p["label"]
            + f", {len(p['lattice'])} properties, pure nonclassical"
        )
    lines.append(
        f"skeleton: {len(skeleton.states)} states, {len(skeleton.lattice)} properties "
        + "[" + ", ".join(str(e) for e in skeleton.lattice.elements) + "], totally classical"
    )
    lines.append(f"collisions: {len(collisions)}")
    lines.append("post-conditions: all hold")
    return EXIT_OK, "\n".join(lines)


def cmd_classical_part(args) -> tuple[int, str]:
    sps = _as_sps(_load(args))
    part = classical_part(sps)
    if args.format == "json":
        return EXIT_OK, serialize(sps_document(part))
    cl = classical_property_lattice(sps)
    wzd = to_closure_space(part).is_weakly_zero_dimensional()
    lines = [
        "classical property lattice: [" + ", ".join(str(e) for e in cl.elements) + "]",
        f"atomistic: {'yes' if cl.is_atomistic() else 'no'}",
        f"joins differing from the ambient lattice: {len(cl.differing_joins())}",
        f"weakly zero-dimensional: {'yes' if wzd else 'no'}",
    ]
    return (EXIT_OK if wzd else EXIT_COUNTEREXAMPLE), "\n".join(lines)


def cmd_check_theorems(args) -> tuple[int, str]:
    report = run_suite(max_n=args.max_n, samples=args.samples, seed=args.seed, theorems=args.theorem)
    lines = report.lines()
    lines += [f"certificate: {p}" for p in _write_certificates(args.certificates, report.certificates)]
    if args.format == "json":
        return (EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE), dumps({
            "instances": report.instances,
            "checked": report.checked,
            "failed": report.failed,
            "certificates": len(report.certificates),
        })
    return (EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE), "\n".join(lines)


def cmd_enumerate(args) -> tuple[int, str]:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    docs = (serialize(closure_space_document(cs), compact=True) for cs in enumerate_closure_spaces(args.n))
    return EXIT_OK, "\n".join(docs)


def cmd_export_dot(args) -> tuple[int, str]:
    doc = _load(args)
    if args.diagram == "components":
        return EXIT_OK, components_dot(_as_space(doc))
    return EXIT_OK, hasse_dot(_as_sps(doc).lattice)


HANDLERS = {
    "validate": cmd_validate,
    "convert": cmd_convert,
    "classical": cmd_classical,
    "components": cmd_components,
    "decompose": cmd_decompose,
    "classical-part": cmd_classical_part,
    "check-theorems": cmd_check_theorems,
    "enumerate": cmd_enumerate,
    "export-dot": cmd_export_dot,
}


def run_command(command: str, args: list[str] | None = None) -> tuple[int, str]:
    """Run one command; returns the exit code and the report text."""
    try:
        ns = _parser().parse_args([command, *(args or [])])
        code, text = HANDLERS[ns.command](ns)
    except (UsageError, TooLarge, ValueError) as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except (SpslabError, OSError) as exc:
        return EXIT_INVALID, f"error: {exc}"
    if ns.output and text:
        Path(ns.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        return code, f"wrote {ns.output}"
    return code, text


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        print(_parser().format_help())
        return EXIT_OK if argv else EXIT_USAGE
    code, text = run_command(argv[0], argv[1:])
    stream = sys.stdout if code in (EXIT_OK, EXIT_COUNTEREXAMPLE) else sys.stderr
    if text:
        print(text.rstrip("\n"), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
