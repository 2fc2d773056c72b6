"""qshift command line.

Exit codes: 0 success, 1 domain error (one ``error: <Kind>: <message>`` line on
stderr), 2 usage error, 3 when ``sweep`` finds mismatches.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import canonical_fill as cf
from . import classify, qpoly, shapes, tableaux, words
from .errors import QShiftError


def _shape(args) -> shapes.SkewShape:
    return shapes.make_skew(shapes.parse_partition(args.outer), shapes.parse_partition(args.inner))


def _cells(cells) -> list[list[int]]:
    return [[c.row, c.col] for c in cells]


def _part(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_render(args) -> int:
    shape = _shape(args)
    if args.canonical:
        shape = shapes.canonicalize(shape)
    diags = shapes.diagonals(shape)
    data = {
        "outer": list(shape.outer),
        "inner": list(shape.inner),
        "ncells": shape.ncells,
        "reading_order": _cells(shapes.cells_reading_order(shape)),
        "diagonals": [{"offset": d.offset, "cells": _cells(d.cells)} for d in diags],
        "ascii": shapes.render_ascii(shape),
    }
    _emit(args, data, shapes.render_ascii(shape) or "(empty shape)\n")
    return 0


def cmd_fill(args) -> int:
    shape = _shape(args)
    t = cf.canonical_filling(shape)
    layers = cf.compute_layers(shape)
    w = tableaux.row_word(t)
    paths = {}
    for layer in layers:
        ends = []
        for comp in layer.components:
            e = cf.path_endpoints(comp)
            ends.append({"first": [e.first.row, e.first.col], "last": [e.last.row, e.last.col]})
        paths[str(layer.k)] = ends
    data = tableaux.tableau_to_json(t)
    data.update(
        layers={str(layer.k): _cells(sorted(layer.cells)) for layer in layers},
        paths=paths,
        row_word=words.format_word(w),
        valid_gsyt=tableaux.is_valid_gsyt(t),
        amenable=words.is_amenable(w),
        disconnected_layer=cf.layer_has_disconnection(shape),
    )
    text = tableaux.render_tableau(t) if shape.ncells else "(empty tableau)\n"
    text += f"content: {_part(tableaux.content(t))}\n"
    text += f"row word: {words.format_word(w)}\n"
    text += f"layers: {len(layers)}"
    if data["disconnected_layer"]:
        text += " (some layer is disconnected)"
    _emit(args, data, text)
    return 0


def cmd_word_check(args) -> int:
    w = words.parse_word(args.word)
    top = max((x.value for x in w), default=0)
    ks = [args.k] if args.k is not None else list(range(2, top + 2))
    per_k = {}
    for k in ks:
        fail = words.k_amenability_failure(w, k)
        per_k[str(k)] = {
            "k_amenable": fail is None,
            "failure": None if fail is None else {"clause": fail.clause, "j": fail.j},
            "restricted": words.format_word(words.restrict(w, k)),
        }
    if args.k is not None:
        fail = words.k_amenability_failure(w, args.k)
        verdict = fail is None
        label = f"{args.k}-amenable"
    else:
        fail = words.amenability_failure(w)
        verdict = fail is None
        label = "amenable"
    via = words.is_amenable_via_restriction(w)
    data = {
        "word": words.format_word(w),
        "amenable": words.is_amenable(w),
        "amenable_via_restriction": via,
        "per_k": per_k,
    }
    if args.profile:
        data["profiles"] = {str(i): words.count_profile(w, i) for i in range(1, top + 1)}
    text = label if verdict else f"not {label} ({fail})"
    if args.profile:
        for i in range(1, top + 1):
            text += f"\nm_{i}: " + " ".join(str(m) for m in words.count_profile(w, i))
    _emit(args, data, text)
    return 0


def cmd_enumerate(args) -> int:
    shape = _shape(args)
    if args.amenable:
        stream = tableaux.enumerate_amenable(shape)
    else:
        if args.max_letter is None:
            raise QShiftError("enumerate needs --max-letter unless --amenable is given")
        stream = tableaux.enumerate_gsyt(shape, args.max_letter)
    found = list(stream)
    if args.json:
        print(json.dumps({"count": len(found), "tableaux": [tableaux.tableau_to_json(t) for t in found]}, sort_keys=True))
        return 0
    for t in found:
        print(f"{words.format_word(tableaux.row_word(t))}    content {_part(tableaux.content(t))}")
    print(f"count: {len(found)}")
    return 0


def cmd_coeff(args) -> int:
    outer = shapes.parse_partition(args.outer)
    inner = shapes.parse_partition(args.inner)
    nu = shapes.parse_partition(args.nu)
    f = tableaux.lr_coeff(outer, inner, nu)
    _emit(args, {"outer": list(outer), "inner": list(inner), "nu": list(nu), "coefficient": f}, str(f))
    return 0


def cmd_decompose(args) -> int:
    shape = _shape(args)
    terms = tableaux.decompose(shape)
    data = {"outer": list(shape.outer), "inner": list(shape.inner),
            "terms": [{"nu": list(nu), "coefficient": f} for nu, f in terms]}
    text = " + ".join(f"{f}*Q{_part(nu)}" if f != 1 else f"Q{_part(nu)}" for nu, f in terms)
    _emit(args, data, text)
    return 0


def cmd_expand(args) -> int:
    shape = _shape(args)
    nvars = shape.ncells if args.vars is None else args.vars
    p = qpoly.expand_q(shape, nvars)
    data = qpoly.poly_to_json(p)
    data["symmetric"] = qpoly.is_symmetric(p)
    text = qpoly.format_poly(p)
    if args.verify:
        ok = qpoly.verify_decomposition(shape)
        data["decomposition_verified"] = ok
        text += f"\ndecomposition verified: {'yes' if ok else 'NO'}"
    _emit(args, data, text)
    return 0


def cmd_is_strange(args) -> int:
    shape = _shape(args)
    data = {"outer": list(shape.outer), "inner": list(shape.inner)}
    lines = []
    theorem = oracle = None
    if args.method in ("theorem", "both"):
        fam = classify.match_family(shape)
        theorem = fam is not None
        data["theorem"] = theorem
        data["family"] = None if fam is None else {"name": fam.name, **{
            k: (list(v) if isinstance(v, tuple) else v) for k, v in vars(fam).items()}}
        lines.append(f"theorem: {'strange' if theorem else 'not strange'}" + (f" ({fam})" if fam else ""))
    if args.method in ("oracle", "both"):
        oracle, count = classify.is_strange_oracle(shape)
        data["oracle"] = oracle
        data["oracle_count"] = count
        shown = f"{count}" if count < 2 else ">=2"
        lines.append(f"oracle: {'strange' if oracle else 'not strange'} (amenable fillings: {shown})")
    if theorem is not None and oracle is not None and theorem != oracle:
        data["disagreement"] = True
        lines.append("DISAGREEMENT between theorem and oracle")
        print(f"warning: theorem and oracle disagree on {shape!r}", file=sys.stderr)
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_sweep(args) -> int:
    report = classify.sweep(args.max_size, args.jobs)
    data = report.to_json(with_elapsed=args.verbose)
    text = (
        f"pairs tested: {report.pairs_tested}\n"
        f"shape classes tested: {report.shapes_tested}\n"
        f"strange by theorem: {report.strange_by_theorem}\n"
        f"strange by oracle: {report.strange_by_oracle}\n"
        f"mismatches: {len(report.mismatches)}"
    )
    for outer, inner, theorem, count in report.mismatches:
        text += f"\n  {_part(outer)}/{_part(inner)} theorem={theorem} oracle_count={count}"
    if args.verbose:
        text += f"\nelapsed: {report.elapsed:.3f}s"
    _emit(args, data, text)
    return 3 if report.mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qshift", description="Schur Q-functions on shifted skew diagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, shape=True):
        p = sub.add_parser(name, help=help)
        if shape:
            p.add_argument("--outer", required=True, help="outer strict partition, e.g. 7,5,3,2,1")
            p.add_argument("--inner", default="", help="inner strict partition (default empty)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("render", cmd_render, "draw a shifted skew diagram")
    p.add_argument("--canonical", action="store_true", help="translate to the canonical representative first")
    add("fill", cmd_fill, "canonical amenable filling by layer peeling")
    p = add("word-check", cmd_word_check, "amenability of a word", shape=False)
    p.add_argument("word", help="space separated letters, apostrophe = marked, e.g. \"1' 1\"")
    p.add_argument("--k", type=int, help="check k-amenability for this k only")
    p.add_argument("--profile", action="store_true", help="also print the m_i(j) tables")
    p = add("enumerate", cmd_enumerate, "list GSYT or amenable tableaux of a shape")
    p.add_argument("--max-letter", type=int, help="largest letter value for GSYT enumeration")
    p.add_argument("--amenable", action="store_true", help="list amenable tableaux instead")
    p = add("coeff", cmd_coeff, "shifted Littlewood-Richardson coefficient", shape=False)
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--nu", required=True)
    add("decompose", cmd_decompose, "expand Q_{outer/inner} in the Q_nu basis")
    p = add("expand", cmd_expand, "monomial expansion of Q_{outer/inner}")
    p.add_argument("--vars", type=int, help="number of variables (default: number of cells)")
    p.add_argument("--verify", action="store_true", help="also check the Q_nu decomposition")
    p = add("is-strange", cmd_is_strange, "is Q_{outer/inner} a single Q_nu?")
    p.add_argument("--method", choices=("theorem", "oracle", "both"), default="both")
    p = add("sweep", cmd_sweep, "compare classifier and oracle on all small shapes", shape=False)
    p.add_argument("--max-size", type=int, required=True, help="largest |outer| to test")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--verbose", action="store_true", help="report elapsed time")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "vars", None) is not None and args.vars < 0:
        parser.error("--vars must be nonnegative")
    if getattr(args, "max_size", None) is not None and args.max_size < 1:
        parser.error("--max-size must be at least 1")
    try:
        return args.func(args)
    except QShiftError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
