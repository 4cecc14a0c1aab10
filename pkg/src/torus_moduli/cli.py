"""Command line interface: ``torus-moduli <command> [flags]``.

All input and output is JSON with exact rationals written as strings
(``"3"``, ``"-7/2"``, ``"inf"``).  Failures print a JSON error object on
stderr and exit with a status that identifies the error family:
2 parse, 3 degenerate input, 4 not admissible, 5 outside the moduli region,
6 I/O, 7 AdS^3 operations.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import ads3, plotting, sampling
from .errors import ParseError, TorusModuliError
from .mobstruct import mobius_structure, ptolemy_regime
from .moduli import (
    equivalent,
    moduli,
    numeric_residual,
    on_circle,
    q_region,
    reconstruct,
    vector_cross_ratio,
)
from .projline import INF, format_ext, parse_ext
from .surd import QuadraticSurd
from .torus import TorusPoint, classify_quad, classify_triple

FILTERS = ("admissible", "circle", "positive-moduli")


# -- parsing -------------------------------------------------------------------


def _ext_field(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_ext(str(value))
    except ParseError:
        raise ParseError(f"{where}: cannot parse {value!r} as a rational or 'inf'") from None


def _rational_field(value, where):
    x = _ext_field(value, where)
    if x is INF:
        raise ParseError(f"{where}: expected a finite rational")
    return x


def parse_points(doc, key="points"):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"input document needs a {key!r} list")
    pts = doc[key]
    if not isinstance(pts, list):
        raise ParseError(f"{key!r} must be a list")
    out = []
    for i, p in enumerate(pts, start=1):
        if not isinstance(p, dict) or "x" not in p or "y" not in p:
            raise ParseError(f"point {i}: expected an object with 'x' and 'y'")
        out.append(TorusPoint(_ext_field(p["x"], f"point {i}.x"), _ext_field(p["y"], f"point {i}.y")))
    return tuple(out)


def _count(pts, allowed):
    if len(pts) not in allowed:
        want = " or ".join(map(str, allowed))
        raise ParseError(f"expected {want} points, got {len(pts)}")


def load_json(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError:
        raise
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


# -- formatting ----------------------------------------------------------------


def fmt(x):
    if isinstance(x, QuadraticSurd):
        return {"p": str(x.a), "q": str(x.b)}
    if isinstance(x, float):
        return repr(x)
    return format_ext(x)


def point_json(p):
    return {"x": fmt(p.x), "y": fmt(p.y)}


def map_json(g):
    return {
        "g1": [[str(v) for v in row] for row in g.g1.matrix()],
        "g2": [[str(v) for v in row] for row in g.g2.matrix()],
        "swap": g.swap,
    }


def matrix_json(m):
    return [[str(v) for v in row] for row in m]


def moduli_block(q):
    m = moduli(q)
    vx, vy = vector_cross_ratio(q)
    block = m.to_json()
    block["onCircle"] = on_circle(q)
    block["vectorCrossRatio"] = [fmt(vx), fmt(vy)]
    block["qRegion"] = q_region(vx, vy).tag.value
    if m.u > 0 and m.v > 0:
        block["ptolemy"] = ptolemy_regime(mobius_structure(q)).value
    return block


def quad_report(q):
    cls = classify_quad(q)
    doc = {"points": [point_json(p) for p in q], "label": cls.label, "dimension": cls.dimension}
    if cls.admissible:
        doc["moduli"] = moduli_block(q)
    return doc


# -- commands ------------------------------------------------------------------


def cmd_classify(args):
    pts = parse_points(load_json(args.input))
    _count(pts, (3, 4))
    if len(pts) == 3:
        cls = classify_triple(pts)
        return {"points": [point_json(p) for p in pts], "label": cls.label}
    cls = classify_quad(pts)
    return {
        "points": [point_json(p) for p in pts],
        "label": cls.label,
        "admissible": cls.admissible,
        "dimension": cls.dimension,
    }


def cmd_moduli(args):
    pts = parse_points(load_json(args.input))
    _count(pts, (4,))
    doc = {"points": [point_json(p) for p in pts]}
    doc.update(moduli_block(pts))
    return doc


def cmd_equiv(args):
    doc = load_json(args.input)
    if args.other is not None:
        first, second = parse_points(doc), parse_points(load_json(args.other))
    else:
        first, second = parse_points(doc, "first"), parse_points(doc, "second")
    _count(first, (4,))
    _count(second, (4,))
    g = equivalent(first, second, allow_swap=args.allow_swap)
    return {
        "equivalent": g is not None,
        "allowSwap": args.allow_swap,
        "witness": None if g is None else map_json(g),
        "moduli": [moduli(first).to_json(), moduli(second).to_json()],
    }


def cmd_reconstruct(args):
    if args.u is None or args.v is None:
        doc = load_json(args.input)
        u, v = _rational_field(doc.get("u"), "u"), _rational_field(doc.get("v"), "v")
    else:
        u, v = _rational_field(args.u, "--u"), _rational_field(args.v, "--v")
    rec = reconstruct(u, v, args.mode)
    out = {"u": fmt(u), "v": fmt(v), "delta": fmt(rec.delta), "mode": args.mode}
    if args.mode == "exact":
        out["sqrtOf"] = fmt(rec.delta)
    else:
        out["residual"] = repr(numeric_residual(u, v, rec))
    out["points"] = [point_json(p) for p in rec.points]
    return out


_GENERATORS = {
    "admissible": sampling.admissible_quad,
    "circle": sampling.circle_quad,
    "positive-moduli": sampling.positive_moduli_quad,
}


def sample_records(n, seed, filter_name):
    gen = _GENERATORS[filter_name]
    for i in range(n):
        rng = sampling.record_rng(seed, i)
        doc = {"index": i, "seed": seed, "filter": filter_name}
        doc.update(quad_report(gen(rng)))
        yield doc


def cmd_sample(args):
    if args.n < 1:
        raise ParseError("--n must be at least 1")
    for doc in sample_records(args.n, args.seed, args.filter):
        sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return None


def cmd_plot(args):
    bounds = tuple(Fraction(_rational_field(b, name)) for b, name in
                   ((args.xmin, "--xmin"), (args.xmax, "--xmax"), (args.ymin, "--ymin"), (args.ymax, "--ymax")))
    step = _rational_field(args.step, "--step")
    try:
        rows = plotting.region_grid(args.set, bounds, step)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if args.format == "csv":
        plotting.write_csv(args.out, rows)
    else:
        plotting.render_svg(args.out, args.set, rows, bounds)
    return {"set": args.set, "format": args.format, "out": args.out, "cells": len(rows)}


def cmd_ads3(args):
    doc = load_json(args.input)
    op = args.operation
    if op == "segre":
        lifts = []
        for p in parse_points(doc):
            w = ads3.segre(p.x, p.y)
            lifts.append({"point": point_json(p), "vector": [str(c) for c in w],
                          "class": ads3.vector_class(w).value})
        return {"lifts": lifts}
    if op == "form":
        x = ads3.vec4(*(_rational_field(c, "x") for c in doc.get("x", [])))
        y = ads3.vec4(*(_rational_field(c, "y") for c in doc.get("y", [])))
        return {"value": str(ads3.herm_form(x, y)), "classX": ads3.vector_class(x).value,
                "classY": ads3.vector_class(y).value}
    if op == "iso":
        a1 = [[_rational_field(c, "A1") for c in row] for row in doc.get("A1", [])]
        a2 = [[_rational_field(c, "A2") for c in row] for row in doc.get("A2", [])]
        m = ads3.iso_sl2sq_to_so22(a1, a2)
        return {"matrix": matrix_json(m), "jPreserved": ads3.preserves_form(m)}
    if op == "tmat":
        x, y = _rational_field(doc.get("x"), "x"), _rational_field(doc.get("y"), "y")
        m = ads3.n_T(x, y)
        image = ads3.mat_vec(m, (0, 0, 0, 1))
        return {"matrix": matrix_json(m), "jPreserved": ads3.preserves_form(m),
                "originImage": [str(c) for c in image]}
    pts = parse_points(doc)
    _count(pts, (4,))
    npts = [ads3.NPoint.of(p.x, p.y) for p in pts]
    return {"crossRatio": str(ads3.cross_ratio_via_a(*npts))}


# -- entry point ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _emit_error("PARSE_ERROR", message)
        raise SystemExit(2)


def build_parser():
    p = _Parser(prog="torus-moduli", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("--input", default=None, help="JSON input file (default: stdin)")
        return sp

    with_input(sub.add_parser("classify", help="classify a triple or quadruple"))
    with_input(sub.add_parser("moduli", help="moduli of an admissible quadruple"))

    sp = with_input(sub.add_parser("equiv", help="decide Moebius equivalence"))
    sp.add_argument("--other", default=None, help="second quadruple (else 'first'/'second' keys)")
    sp.add_argument("--allow-swap", action="store_true")

    sp = with_input(sub.add_parser("reconstruct", help="quadruple with given moduli"))
    sp.add_argument("--u")
    sp.add_argument("--v")
    sp.add_argument("--mode", choices=("exact", "numeric"), default="exact")

    sp = sub.add_parser("sample", help="seeded random quadruples, one JSON record per line")
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--filter", choices=FILTERS, default="admissible")

    sp = sub.add_parser("plot", help="region map of P or Q")
    sp.add_argument("--set", choices=("P", "Q"), default="P")
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=("svg", "csv"), default="svg")
    for name, default in (("xmin", "-3"), ("xmax", "3"), ("ymin", "-3"), ("ymax", "3")):
        sp.add_argument(f"--{name}", default=default)
    sp.add_argument("--step", default="1/50")

    sp = with_input(sub.add_parser("ads3", help="operations in the R^{2,2} model"))
    sp.add_argument("operation", choices=("segre", "form", "iso", "tmat", "xr"))
    return p


COMMANDS = {
    "classify": cmd_classify,
    "moduli": cmd_moduli,
    "equiv": cmd_equiv,
    "reconstruct": cmd_reconstruct,
    "sample": cmd_sample,
    "plot": cmd_plot,
    "ads3": cmd_ads3,
}


def _emit_error(code, message):
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")


# flags whose values may be negative fractions such as -7/3, which argparse
# would otherwise read as an option
RATIONAL_FLAGS = {"--u", "--v", "--xmin", "--xmax", "--ymin", "--ymax", "--step"}


def _join_rational_values(argv):
    out, i = [], 0
    while i < len(argv):
        if argv[i] in RATIONAL_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_rational_values(argv))
    try:
        result = COMMANDS[args.command](args)
    except TorusModuliError as exc:
        _emit_error(exc.code, str(exc))
        return exc.exit_status
    except OSError as exc:
        _emit_error("IO_ERROR", str(exc))
        return 6
    if result is not None:
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
