"""Command-line front end: realize a planar-map JSON file as a polytope.

Exit status: 0 on success with a fully true certificate, 1 for invalid
input, 2 for an internal contract violation (a bug, with witness).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ContractViolation, InvalidMapError
from .pipeline import Realization, realize
from .planar_map import load


def emit_off(result: Realization) -> str:
    """The polytope in OFF format, vertices in original input order."""
    pmap = result.pmap
    lines = ["OFF", f"{pmap.n} {pmap.num_faces} {pmap.num_edges}"]
    for (x, y, z) in result.vertex_coordinates():
        lines.append(f"{x} {y} {z}")
    for face in pmap.faces:
        lines.append(" ".join([str(len(face))] + [str(v) for v in face]))
    return "\n".join(lines) + "\n"


def emit_json(result: Realization) -> str:
    """The polytope as JSON: integer vertices plus the face cycles."""
    payload = {
        "vertices": [list(p) for p in result.vertex_coordinates()],
        "faces": [list(f) for f in result.pmap.faces],
    }
    return json.dumps(payload, indent=2) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realize",
        description=(
            "Realize a 3-connected planar map as a convex 3-polytope "
            "with integer coordinates."
        ),
    )
    parser.add_argument("input", help="planar map JSON file")
    parser.add_argument(
        "--outer-face", type=int, default=None, metavar="IDX",
        help="index of the face to use as the outer face (at most 5 vertices)",
    )
    parser.add_argument(
        "--reduce", action="store_true",
        help="divide out the coordinate gcds and output the reduced grid",
    )
    parser.add_argument(
        "--no-verify", action="store_true",
        help="skip the output certificate (faster, not recommended)",
    )
    parser.add_argument(
        "--report", metavar="PATH", default=None,
        help="write the machine-readable run report to this file",
    )
    parser.add_argument(
        "--format", choices=("off", "json", "both"), default="off",
        help="polytope output format on stdout (default: off)",
    )
    parser.add_argument(
        "--output", metavar="PATH", default=None,
        help="write the polytope here instead of stdout",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        pmap = load(args.input)
        result = realize(
            pmap,
            outer_face=args.outer_face,
            reduce=args.reduce,
            verify=not args.no_verify,
        )
    except InvalidMapError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ContractViolation, AssertionError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 1

    chunks = []
    if args.format in ("off", "both"):
        chunks.append(emit_off(result))
    if args.format in ("json", "both"):
        chunks.append(emit_json(result))
    text = "".join(chunks)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(result.report(), fh, indent=2)
            fh.write("\n")

    if result.certificate is not None and not result.certificate.all_ok:
        for w in result.certificate.witnesses:
            print(f"certificate failure: {w}", file=sys.stderr)
        return 2
    if result.reduced is not None and result.reduced.certificate is not None:
        if not result.reduced.certificate.all_ok:
            for w in result.reduced.certificate.witnesses:
                print(f"certificate failure (reduced): {w}", file=sys.stderr)
            return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
