"""Command line interface: ``markedorder <command> FILE [options]``.

Exit status is 0 on success, 1 for domain errors (including failed
verification) and 2 for unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import crosscheck
from ._rational import format_fraction, parse_exact
from .conditional import minimal_face_dimension, tiling_map
from .document import parse_document, serialize_document
from .errors import MarkedOrderError, ParseError
from .faces import DEFAULT_MAX_ELEMENTS, enumerate_face_partitions, partition_from_point
from .geometry import (
    dimension,
    facet_table,
    is_pointed,
    minkowski_markings,
    minkowski_sum_check,
    vertices,
)
from .marked import constant_intervals, regularity_report, regularize

COMMANDS = (
    "check", "dim", "faces", "facets", "vertices",
    "regularize", "minkowski", "conditional-dim", "oracle-verify",
)

HELP = {
    "check": "summarize strictness, regularity, pointedness and dimension",
    "dim": "dimension of the polyhedron",
    "faces": "all faces as face partitions",
    "facets": "strictify and regularize, then list one facet per cover",
    "vertices": "vertex coordinates",
    "regularize": "remove redundant covers (input must be strict)",
    "minkowski": "Minkowski decomposition into 0/1-marked summands",
    "conditional-dim": "tiling matrix and minimal face dimension at --point",
    "oracle-verify": "compare every result against the exact LP oracle",
}


class CommandError(MarkedOrderError):
    """Bad command-line usage detected after argument parsing."""


def _header(M) -> dict:
    return {
        "elements": list(M.poset.elements),
        "covers": [[p, q] for p, q in M.poset.covers],
        "marks": {a: format_fraction(v) for a, v in M.marking.items()},
    }


def _partition_json(pi, dim=None) -> dict:
    return {
        "blocks": [list(b) for b in pi.blocks],
        "free_blocks": [list(b) for b in pi.free_blocks],
        "dim": pi.n_free if dim is None else dim,
    }


def _point_text(x) -> str:
    return " ".join(f"{k}={format_fraction(v)}" for k, v in x.items())


def parse_point(text: str, M) -> dict[str, Fraction]:
    """``p=1,q=3/2`` for the unmarked elements; marked ones default to their
    marks."""
    x = dict(M.marking)
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, eq, value = item.partition("=")
        if not eq:
            raise ParseError(f"expected 'name=value' in --point, got {item!r}")
        number = parse_exact(value)
        if number is None:
            raise ParseError(f"expected an integer or n/d in --point, got {value!r}")
        x[name.strip()] = number
    missing = [e for e in M.poset.elements if e not in x]
    if missing:
        raise CommandError(f"--point gives no value for {', '.join(missing)}")
    unknown = [k for k in x if k not in M.poset]
    if unknown:
        raise CommandError(f"--point names unknown elements: {', '.join(unknown)}")
    return {e: x[e] for e in M.poset.elements}


def cmd_check(M, S, args):
    report = regularity_report(M)
    data = _header(M) | {
        "strict": report.strict,
        "regular": report.is_regular,
        "pointed": is_pointed(M),
        "dimension": dimension(M),
        "constant_intervals": [[c.lower, c.upper] for c in constant_intervals(M)],
        "redundant_covers": [[p, q] for p, q in report.redundant_covers],
        "marked_covers": [list(c) for c in report.marked_covers],
        "crowded_elements": report.crowded_elements,
        "conditions": 0 if S is None else len(S),
    }
    lines = [
        f"{len(M.poset)} elements, {len(M.poset.covers)} covers, {len(M.marking)} marked",
        f"strict: {'yes' if report.strict else 'no'}",
        f"regular: {'yes' if report.is_regular else 'no'}",
        f"pointed: {'yes' if data['pointed'] else 'no'}",
        f"dimension: {data['dimension']}",
    ]
    for (p, q), (a, b) in report.redundant_covers.items():
        lines.append(f"redundant cover {p}<{q} (witness {a}, {b})")
    return data, lines, 0


def cmd_dim(M, S, args):
    d = dimension(M)
    return _header(M) | {"dimension": d}, [str(d)], 0


def cmd_faces(M, S, args):
    lattice = enumerate_face_partitions(M, args.max_elements)
    f = lattice.f_vector()
    data = _header(M) | {
        "faces": [_partition_json(pi) for pi in lattice.nodes],
        "f_vector": list(f),
    }
    lines = [f"{len(lattice)} faces: f-vector ({', '.join(map(str, f))})"]
    lines += [f"dim {pi.n_free}: {pi}" for pi in lattice.nodes]
    return data, lines, 0


def cmd_facets(M, S, args):
    table = facet_table(M)
    data = _header(M) | {
        "removed_covers": [[p, q] for p, q in table.removed_covers],
        "regular": _header(table.regular),
        "facets": [{"cover": [p, q]} | _partition_json(pi) for (p, q), pi in table.facets],
    }
    lines = []
    contracted = [b for b in table.contracted.blocks if len(b) > 1]
    for block in contracted:
        lines.append(f"contracted constant interval {{{', '.join(block)}}}")
    for p, q in table.removed_covers:
        lines.append(f"removed cover {p}<{q}")
    lines.append(f"{len(table.facets)} facets")
    for (p, q), pi in table.facets:
        lines.append(f"  {p}<{q}: {pi}")
    return data, lines, 0


def cmd_vertices(M, S, args):
    points = vertices(M, args.max_elements)
    data = _header(M) | {
        "vertices": [{"coords": {k: format_fraction(v) for k, v in x.items()}} for x in points]
    }
    unmarked = [e for e in M.poset.elements if e not in M.marking]
    lines = [f"{len(points)} vertices"]
    for x in points:
        shown = {e: x[e] for e in unmarked} or x
        lines.append("  " + _point_text(shown))
    return data, lines, 0


def cmd_regularize(M, S, args):
    regular, removed = regularize(M)
    data = _header(M) | {
        "removed_covers": [[p, q] for p, q in removed],
        "regular": _header(regular),
    }
    lines = [f"removed cover {p}<{q}" for p, q in removed] or ["no redundant covers"]
    lines.append(serialize_document(regular, S).rstrip("\n"))
    return data, lines, 0


def cmd_minkowski(M, S, args):
    summands = minkowski_markings(M)
    ok = minkowski_sum_check(M) if is_pointed(M) else None
    data = _header(M) | {
        "summands": [
            {"coefficient": format_fraction(s.coefficient),
             "marking": {a: format_fraction(v) for a, v in s.marking.items()}}
            for s in summands
        ],
        "sum_check": ok,
    }
    lines = [
        f"{format_fraction(s.coefficient)} * [{_point_text(s.marking)}]" for s in summands
    ]
    if ok is not None:
        lines.append(f"vertex sums reproduce the polyhedron: {'yes' if ok else 'no'}")
    return data, lines, 0 if ok in (True, None) else 1


def cmd_conditional_dim(M, S, args):
    if S is None:
        raise CommandError("the document has no 'condition:' lines")
    if args.point is None:
        raise CommandError("conditional-dim needs --point")
    x = parse_point(args.point, M)
    k = minimal_face_dimension(M, S, x)
    pi = partition_from_point(M, x)
    T = tiling_map(M, S, pi)
    data = _header(M) | {
        "point": {e: format_fraction(v) for e, v in x.items()},
        "blocks": [list(b) for b in pi.blocks],
        "columns": [list(b) for b in T.columns],
        "tiling_matrix": [[format_fraction(v) for v in row] for row in T.matrix],
        "kernel_dim": k,
    }
    lines = [
        f"partition: {pi}",
        "columns: " + " | ".join(" ".join(b) for b in T.columns),
        "tiling matrix:",
    ]
    lines += ["  [" + ", ".join(format_fraction(v) for v in row) + "]" for row in T.matrix]
    lines.append(f"kernel dimension: {k}")
    return data, lines, 0


def cmd_oracle_verify(M, S, args):
    rng = random.Random(args.seed) if args.seed is not None else None
    results = crosscheck.verify(M, S, rng=rng)
    ok = all(r.ok for r in results)
    data = _header(M) | {
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "ok": ok,
    }
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else "") for r in results]
    return data, lines, 0 if ok else 1


HANDLERS = {
    "check": cmd_check,
    "dim": cmd_dim,
    "faces": cmd_faces,
    "facets": cmd_facets,
    "vertices": cmd_vertices,
    "regularize": cmd_regularize,
    "minkowski": cmd_minkowski,
    "conditional-dim": cmd_conditional_dim,
    "oracle-verify": cmd_oracle_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="marked poset document (.mop); '-' reads stdin")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS, metavar="N",
                        help="refuse face enumeration above N elements (default %(default)s)")
    common.add_argument("--seed", type=int, default=None, metavar="N",
                        help="seed for randomized verification")
    common.add_argument("--point", default=None, metavar="k=v,...",
                        help="point for conditional-dim, unmarked coordinates only")
    parser = argparse.ArgumentParser(prog="markedorder", description="Marked posets and marked order polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = _read(args.file)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return 2
    try:
        M, S = parse_document(text)
        data, lines, code = HANDLERS[args.command](M, S, args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except MarkedOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
