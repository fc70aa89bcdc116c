"""Command line front end.

Every subcommand loads one JSON scene file, picks named objects out of
it, runs a single library operation, and prints one JSON document to
stdout. Human-readable diagnostics go to stderr. Exit codes: 0 on
success, 1 on malformed input (bad flags, unreadable or inconsistent
scenes, dimension mismatches), 2 on mathematical failures (singular
points, non-unimodular matrices, zeros on contours, and the like),
which also emit an {"error": ...} document on stdout.

Randomized procedures take --seed (default 42) and identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from . import serialize
from .domains import FullSpace, classify_domain, word_preserves_domain
from .errors import (BudgetExhausted, DimensionMismatch, DomainNotPreserved,
                     InvalidAxis, NonInvertibleStep, NotDiagonal, NotUnimodular,
                     OutOfRange, OutsideDomain, SceneError, SingularPoint,
                     ZeroOnContour)
from .homotopy import certify_path, continuity_modulus
from .torus import commutes_with_torus, extract_diagonal, validate_exponent_matrix
from .winding import in_negative_component, make_contour, winding_index
from .words import compose, eval_word, invert_word, jacobian_det

_MATH_ERRORS = (SingularPoint, OutsideDomain, NotDiagonal, NotUnimodular,
                ZeroOnContour, InvalidAxis, BudgetExhausted, NonInvertibleStep,
                DomainNotPreserved, OutOfRange)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_point(text: str) -> np.ndarray:
    coords = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.split(",")
        if len(bits) != 2:
            raise UsageError(f'bad point component {part!r}: expected "re,im"')
        try:
            coords.append(complex(float(bits[0]), float(bits[1])))
        except ValueError:
            raise UsageError(f"bad point component {part!r}: not numbers") from None
    if not coords:
        raise UsageError("point must have at least one coordinate")
    return np.array(coords, dtype=np.complex128)


def build_parser() -> _Parser:
    parser = _Parser(prog="hologroup",
                     description="Automorphism words, winding indices, homotopy "
                                 "certification, and torus centralizers.")
    sub = parser.add_subparsers(dest="command", metavar="<command>",
                                parser_class=_Parser)

    def cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--scene", required=True, metavar="FILE",
                       help="JSON scene file")
        p.add_argument("--json-indent", type=int, default=None, metavar="N",
                       help="pretty-print output with N-space indent")
        return p

    p = cmd("eval", "evaluate a word at a point")
    p.add_argument("--word", required=True)
    p.add_argument("--point", required=True, metavar='"re,im;..."')

    p = cmd("compose", "concatenate two words (first applied first)")
    p.add_argument("--word", action="append", required=True,
                   help="word name; give this flag exactly twice")

    p = cmd("invert", "invert a word step by step")
    p.add_argument("--word", required=True)

    p = cmd("jacobian", "Jacobian determinant of a word at a point")
    p.add_argument("--word", required=True)
    p.add_argument("--point", required=True, metavar='"re,im;..."')

    p = cmd("winding-index", "winding number of a word along a contour")
    p.add_argument("--word", required=True)
    p.add_argument("--contour", required=True)

    p = cmd("negative-component", "is the word in the reversed-winding class")
    p.add_argument("--word", required=True)
    p.add_argument("--contour", required=True)

    p = cmd("homotopy-certify", "certify a path to the identity on a polydisc")
    p.add_argument("--path", required=True)
    p.add_argument("--grid", type=int, default=1001)
    p.add_argument("--radius", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=42)

    p = cmd("continuity", "modulus of continuity of a path at time step --t")
    p.add_argument("--path", required=True)
    p.add_argument("--t", type=float, required=True, help="time grid spacing dt")
    p.add_argument("--radius", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=42)

    p = cmd("centralizer", "does the word commute with all torus rotations")
    p.add_argument("--word", required=True)
    p.add_argument("--seed", type=int, default=42)

    p = cmd("extract-diagonal", "recover the diagonal of a torus-commuting word")
    p.add_argument("--word", required=True)
    p.add_argument("--seed", type=int, default=42)

    cmd("classify", "domain kind and Stein flag")

    p = cmd("preserves", "does the word map the scene domain into itself")
    p.add_argument("--word", required=True)
    p.add_argument("--seed", type=int, default=42)

    p = cmd("validate-exponents", "exact unimodularity check of an integer matrix")
    p.add_argument("--matrix", required=True)

    return parser


def _named(section: dict, name: str, what: str):
    if name not in section:
        raise SceneError(f"scene has no {what} named {name!r}")
    return section[name]


def _domain_or_fullspace(scene: serialize.Scene, n: int):
    return scene.domain if scene.domain is not None else FullSpace(n)


def _dispatch(args) -> dict:
    scene = serialize.load_scene(args.scene)
    cmd = args.command

    if cmd == "eval":
        w = _named(scene.words, args.word, "word")
        image = eval_word(w, _parse_point(args.point))
        return {"image": serialize.vector_json(image)}

    if cmd == "compose":
        if len(args.word) != 2:
            raise UsageError("compose needs exactly two --word flags")
        a = _named(scene.words, args.word[0], "word")
        b = _named(scene.words, args.word[1], "word")
        return serialize.word_to_json(compose(a, b))

    if cmd == "invert":
        w = _named(scene.words, args.word, "word")
        return serialize.word_to_json(invert_word(w))

    if cmd == "jacobian":
        w = _named(scene.words, args.word, "word")
        det = jacobian_det(w, _parse_point(args.point))
        return {"det": serialize.complex_pair(det)}

    if cmd in ("winding-index", "negative-component"):
        w = _named(scene.words, args.word, "word")
        raw = _named(scene.contours, args.contour, "contour")
        contour = make_contour(scene.domain, raw.axis, raw.p, raw.R)
        if cmd == "negative-component":
            return {"in_negative_component": in_negative_component(w, contour)}
        res = winding_index(w, contour)
        return {"index": res.index, "raw": res.raw, "samples": res.samples_used}

    if cmd == "homotopy-certify":
        path = _named(scene.paths, args.path, "path")
        rep = certify_path(path, args.grid, args.radius, seed=args.seed)
        return {"endpoint_err0": rep.endpoint_err0,
                "endpoint_err1": rep.endpoint_err1,
                "min_abs_det": rep.min_abs_det,
                "max_inverse_residual": rep.max_inverse_residual}

    if cmd == "continuity":
        path = _named(scene.paths, args.path, "path")
        modulus = continuity_modulus(path, args.t, args.radius, seed=args.seed)
        return {"dt": args.t, "modulus": modulus}

    if cmd == "centralizer":
        w = _named(scene.words, args.word, "word")
        verdict = commutes_with_torus(w, _domain_or_fullspace(scene, w.n), args.seed)
        witness = None
        if verdict.witness is not None:
            witness = {"theta": [float(t) for t in verdict.witness.theta],
                       "z": serialize.vector_json(verdict.witness.z),
                       "deviation": verdict.witness.deviation}
        return {"commutes": verdict.commutes, "witness": witness}

    if cmd == "extract-diagonal":
        w = _named(scene.words, args.word, "word")
        lam = extract_diagonal(w, _domain_or_fullspace(scene, w.n), args.seed)
        return {"lambda": serialize.vector_json(lam)}

    if cmd == "classify":
        if scene.domain is None:
            raise SceneError("scene has no domain to classify")
        c = classify_domain(scene.domain)
        return {"kind": c.kind, "is_stein": c.is_stein}

    if cmd == "preserves":
        w = _named(scene.words, args.word, "word")
        verdict = word_preserves_domain(w, _domain_or_fullspace(scene, w.n), args.seed)
        witness = None if verdict.witness is None else serialize.vector_json(verdict.witness)
        return {"preserves": verdict.preserves, "witness": witness}

    if cmd == "validate-exponents":
        matrix = _named(scene.exponent_matrices, args.matrix, "exponent matrix")
        return {"det": validate_exponent_matrix(matrix)}

    raise UsageError(f"unknown subcommand {cmd!r}")


def main(argv: Optional[list] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required (try --help)")
        result = _dispatch(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (SceneError, DimensionMismatch) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except _MATH_ERRORS as exc:
        payload = {"error": type(exc).__name__}
        if isinstance(exc, NotUnimodular):
            payload["det"] = exc.det
        else:
            payload["message"] = str(exc)
        print(serialize.dumps(payload, indent=getattr(args, "json_indent", None)))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(serialize.dumps(result, indent=args.json_indent))
    return 0
