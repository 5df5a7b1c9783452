"""Command-line front end.

Exit status is 0 on success, 1 for unparsable input or invalid parameters,
and 2 when a size guard stops a computation.  Every subcommand accepts
``--json`` for a single structured document tagged with the schema
``bicm-report/1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .analysis import SCHEMA, profile
from .betti import hochster_betti
from .complex import SimplicialComplex, alexander_dual, frame_invariant_c
from .constructions import (
    PathMatrixSpec,
    biCM_noncone,
    d_tree,
    identify_diagonals,
    path_complexes,
    path_dichotomy,
    rp2_six,
    skeleton_complex,
)
from .errors import ComplexError, GuardExceeded
from .explorer import enumerate_type
from .fvectors import f_polynomial, hilbert_series_S
from .homology import find_shelling, is_shelling
from .io import parse_complex, read_complex, serialize_complex


def _chars(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad characteristic list {text!r}") from None


def _load(path: str) -> SimplicialComplex:
    if path == "-":
        return parse_complex(sys.stdin.read())
    return read_complex(path)


def _emit(args: argparse.Namespace, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **doc}, indent=2))
    else:
        print(text)


def _fmt(seq) -> str:
    return "[" + ", ".join(map(str, seq)) + "]"


# --- subcommands ------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> None:
    cx = _load(args.file)
    prof = profile(cx, args.char, args.kmax, args.jobs)
    doc = prof.as_dict()
    lines = [
        f"n: {prof.n}",
        f"d: {prof.d}",
        f"c: {prof.c}",
        f"f: {_fmt(prof.f)}",
        f"h: {_fmt(prof.h)}",
        f"type: {_fmt(prof.type_ncs) if prof.type_ncs else 'none'}",
        f"cone apexes: {_fmt(prof.cone_apexes)}",
    ]
    for p, v in sorted(prof.verdicts.items()):
        lines.append(f"char {p}: CM={v.cm} dual CM={v.dual_cm} bi-CM={v.bicm}")
    lines += [
        f"dual facets: {prof.dual_facets}",
        f"hilbert series: {_fmt(prof.hilbert) if prof.hilbert is not None else 'none'}",
        f"grothendieck: {_fmt(prof.grothendieck) if prof.grothendieck is not None else 'none'}",
        f"cone bound: {prof.cone_bound}",
    ]
    _emit(args, doc, "\n".join(lines))


def _write_complex(args: argparse.Namespace, cx: SimplicialComplex, extra: dict | None = None) -> None:
    text = serialize_complex(cx)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    if args.json:
        doc = {"kind": "complex", "n": cx.n, "facets": [list(f) for f in cx.facets], **(extra or {})}
        print(json.dumps({"schema": SCHEMA, **doc}, indent=2))
    elif not args.output:
        sys.stdout.write(text)


def cmd_dual(args: argparse.Namespace) -> None:
    _write_complex(args, alexander_dual(_load(args.file)))


def cmd_generate(args: argparse.Namespace) -> None:
    extra: dict = {}
    what = args.family
    if what == "skeleton":
        cx = skeleton_complex(args.s, args.c)
    elif what == "tree":
        cx = d_tree(args.d, n_attach=args.attach, seed=args.seed)
        extra["seed"] = args.seed
    elif what == "pathmatrix":
        if args.identify == "full":
            cx = identify_diagonals(PathMatrixSpec.full(args.p, args.q))
        else:
            cx = path_complexes(args.p, args.q)[0 if args.which == "X" else 1]
    elif what == "rp2":
        cx = rp2_six()
    else:
        res = biCM_noncone(args.n, args.c, args.s, args.char, max_candidates=args.max_candidates)
        if not res.found:
            raise ComplexError(f"no certified non-cone among {res.candidates_tried} candidates")
        cx = res.complex
        extra["identification"] = [[list(cell) for cell in b] for b in res.spec.identification]
        extra["candidates_tried"] = res.candidates_tried
    _write_complex(args, cx, extra)


def cmd_betti(args: argparse.Namespace) -> None:
    cx = _load(args.file)
    table = hochster_betti(cx, args.char)
    doc = {
        "kind": "betti",
        "characteristic": args.char,
        "entries": [[i, j, v] for (i, j), v in sorted(table.entries.items())],
        "diagram": table.rows(),
    }
    _emit(args, doc, table.format())


def cmd_hilbert(args: argparse.Namespace) -> None:
    cx = _load(args.file)
    if cx.is_full_simplex():
        raise ComplexError("the full simplex has no dual; the series is undefined")
    series = hilbert_series_S(f_polynomial(cx), cx.n, frame_invariant_c(cx), args.kmax)
    doc = {"kind": "hilbert", "kmax": args.kmax, "coefficients": list(series)}
    _emit(args, doc, "\n".join(f"t^{k}: {a}" for k, a in enumerate(series)))


def cmd_shelling(args: argparse.Namespace) -> None:
    cx = _load(args.file)
    doc: dict = {"kind": "shelling"}
    lines = []
    if args.order is not None:
        try:
            order = [int(t) - 1 for t in args.order.split(",") if t.strip()]
        except ValueError:
            raise ComplexError(f"bad order {args.order!r}") from None
        ok = is_shelling(cx, order)
        doc["order"] = [i + 1 for i in order]
        doc["is_shelling"] = ok
        lines.append(f"order {args.order}: {'shelling' if ok else 'not a shelling'}")
    if args.search or args.order is None:
        found = find_shelling(cx)
        doc["search"] = None if found is None else [i + 1 for i in found]
        lines.append("no shelling exists" if found is None else
                     "shelling: " + ",".join(str(i + 1) for i in found))
    _emit(args, doc, "\n".join(lines))


def _parse_cells(text: str) -> set[tuple[int, int]]:
    cells = set()
    for tok in text.split():
        try:
            i, j = (int(x) for x in tok.split(","))
        except ValueError:
            raise ComplexError(f"bad cell {tok!r}; expected i,j") from None
        cells.add((i, j))
    return cells


def cmd_dichotomy(args: argparse.Namespace) -> None:
    p, q = args.p, args.q
    if p < 1 or q < 1:
        raise ComplexError("p and q must be positive")
    cells = _parse_cells(args.cells)
    bad = [c for c in cells if not (1 <= c[0] <= p and 1 <= c[1] <= q)]
    if bad:
        raise ComplexError(f"cells outside the {p} x {q} grid: {sorted(bad)}")
    path = path_dichotomy(cells, p, q)
    where = "in the given cells" if path.kind == "horizontal" else "in the complement"
    doc = {
        "kind": "dichotomy",
        "alternative": path.kind,
        "values": list(path.values),
        "cells": sorted(list(c) for c in path.cells()),
    }
    text = f"{path.kind} path {where}: values {_fmt(path.values)}, cells " + \
        " ".join(f"{i},{j}" for i, j in sorted(path.cells()))
    _emit(args, doc, text)


def cmd_search(args: argparse.Namespace) -> None:
    exhaustive = args.samples is None
    report = enumerate_type(args.n, args.c, args.s, exhaustive=exhaustive,
                            samples=args.samples or 0, seed=args.seed,
                            characteristics=args.char, max_exemplars=args.max_exemplars,
                            jobs=args.jobs)
    doc = {"kind": "search", **report.as_dict()}
    mode = "exhaustive" if exhaustive else f"sampled ({args.samples} samples, seed {args.seed})"
    lines = [
        f"type ({report.n}, {report.c}, {report.s}), {mode}",
        f"examined: {report.examined}",
        f"bi-CM: {report.bicm} (cones {report.cones}, non-cones {report.noncones})",
        "bi-CM by characteristic: " + ", ".join(f"{p}: {v}" for p, v in sorted(report.bicm_by_characteristic.items())),
        f"conjectured bound n-s <= {report.conjecture_bound}: {'holds' if report.conjecture_holds else 'VIOLATED'}",
    ]
    for label, group in (("exemplar", report.exemplars), ("characteristic-dependent", report.char_dependent)):
        for e in group:
            lines.append(f"{label} " + " | ".join(" ".join(map(str, f)) for f in e.complex.facets)
                         + f"  (bi-CM over chars {_fmt(e.characteristics)})")
    _emit(args, doc, "\n".join(lines))


# --- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors: exit 1, keeping 2 for guards
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one structured document")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (never changes output)")

    parser = _Parser(prog="bicm", description="Bi-Cohen-Macaulay simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report on a complex file")
    p.add_argument("file")
    p.add_argument("--char", type=_chars, default=(0, 2, 3, 5), help="comma-separated characteristics")
    p.add_argument("--kmax", type=int, default=8)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", parents=[common], help="write the Alexander dual")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("generate", parents=[common], help="write a named complex")
    p.add_argument("family", choices=["skeleton", "tree", "pathmatrix", "rp2", "noncone"])
    p.add_argument("--s", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--attach", type=int, default=3, help="random attachments for 'tree'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--identify", choices=["none", "full"], default="none")
    p.add_argument("--which", choices=["X", "Y"], default="X")
    p.add_argument("--char", type=_chars, default=(0, 2, 3, 5))
    p.add_argument("--max-candidates", type=int, default=1000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("file")
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series prefix")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=8)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("shelling", parents=[common], help="check or search for a shelling")
    p.add_argument("file")
    p.add_argument("--order", help="comma-separated 1-based facet positions in file order")
    p.add_argument("--search", action="store_true")
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("dichotomy", parents=[common], help="lattice-path dichotomy")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cells", default="", help='space-separated cells, e.g. "1,1 2,3"')
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("search", parents=[common], help="enumerate complexes of a given type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="default mode")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--char", type=_chars, default=(0, 2, 3, 5))
    p.add_argument("--max-exemplars", type=int, default=5)
    p.set_defaults(func=cmd_search)
    return parser


_REQUIRED = {
    "skeleton": ("s", "c"),
    "pathmatrix": ("p", "q"),
    "noncone": ("n", "c", "s"),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate":
        missing = [k for k in _REQUIRED.get(args.family, ()) if getattr(args, k) is None]
        if missing:
            print(f"bicm: error: generate {args.family} needs " + ", ".join("--" + k for k in missing),
                  file=sys.stderr)
            return 1
    try:
        args.func(args)
    except GuardExceeded as exc:
        print(f"bicm: guard exceeded: {exc}", file=sys.stderr)
        return 2
    except ComplexError as exc:
        print(f"bicm: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
