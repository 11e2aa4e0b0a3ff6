"""The ``convexcalc`` command line."""

from __future__ import annotations

import argparse
import json
import os
import re
import shlex
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import curvecomplex, dividing, fibered, mcg, slices
from .hyperbolic import PrecisionExhausted
from .intersect import NotPrimitive, geometric_intersection, self_intersection
from .surface import Curve, EmptyWord, HomologyElement, InvalidGenus, NotSimple
from .words import WordParseError

SCHEMA = "v1"

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_PRECISION = 3
EXIT_PARSE = 4

_PRECONDITION_ERRORS = (
    NotSimple,
    NotPrimitive,
    curvecomplex.NotNonseparating,
    curvecomplex.PreconditionViolated,
    dividing.InvalidDividingSet,
    dividing.MalformedArc,
    slices.NotOnce,
    slices.NotBasic,
    slices.NotNonseparating,
    slices.BoundaryMismatch,
    slices.OvertwistedInput,
    fibered.MonodromyFixesCurve,
)
_PARSE_ERRORS = (WordParseError, EmptyWord, InvalidGenus)


@dataclass
class RunConfig:
    genus: int
    precision: int | None
    output: str  # "text", "json", "dot" or "svg"
    seed: int = 0  # no command draws random numbers; recorded for reproducibility

    def apply(self) -> None:
        if self.precision is not None:
            os.environ["CONVEXCALC_PRECISION"] = str(self.precision)


class ParseFailure(ValueError):
    pass


def _default(obj):
    if isinstance(obj, HomologyElement):
        return list(obj.vector)
    if isinstance(obj, Curve):
        return str(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def emit(command: str, payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        doc = {"schema": SCHEMA, "command": command, **payload}
        print(json.dumps(doc, default=_default, sort_keys=True, indent=2))
    else:
        print(text)


def curve(text: str, genus: int) -> Curve:
    return Curve.parse(text, genus)


def _fmt_matrix(A: np.ndarray) -> str:
    return "\n".join(" ".join(f"{int(x):3d}" for x in row) for row in A)


# -- commands -------------------------------------------------------------------------

def cmd_intersect(args) -> int:
    c1 = curve(args.curve1, args.genus)
    if args.self_:
        n = self_intersection(c1)
        emit("intersect", {"curve": str(c1), "self_intersection": n}, args.json, str(n))
        return EXIT_OK
    if args.curve2 is None:
        raise ParseFailure("a second curve is required unless --self is given")
    c2 = curve(args.curve2, args.genus)
    n = geometric_intersection(c1, c2)
    emit("intersect", {"curves": [str(c1), str(c2)], "intersection": n}, args.json, str(n))
    return EXIT_OK


def cmd_sequence(args) -> int:
    a = curve(args.from_, args.genus)
    b = curve(args.to, args.genus)
    kind = args.kind
    if kind == "rel":
        if args.via is None:
            raise ParseFailure("rel sequences need --via (the curve to avoid)")
        seq = curvecomplex.connect_rel(curve(args.via, args.genus), a, b)
    elif kind == "fact0" and args.via is not None:
        seq = curvecomplex.connect_framed(a, curve(args.via, args.genus), b)
    else:
        build = {
            "disjoint": curvecomplex.connect_disjoint,
            "once": curvecomplex.connect_once,
            "fact1": curvecomplex.connect_fact1,
            "fact0": curvecomplex.connect_fact0,
        }[kind]
        seq = build(a, b)
    report = seq.to_dict()
    lines = [str(c) for c in seq.curves]
    lines.append("verified" if report["verified"] else "FAILED: " + "; ".join(report["failures"]))
    emit("sequence", report, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_mcg(args) -> int:
    f = mcg.MappingClassWord.parse(args.word, args.genus)
    if args.action == "apply":
        if args.curve is None:
            raise ParseFailure("mcg apply needs --curve")
        c = curve(args.curve, args.genus)
        img = mcg.apply(f, c)
        emit("mcg apply", {"word": str(f), "curve": str(c), "image": str(img),
                           "homology": img.homology}, args.json, str(img))
    elif args.action == "pa-check":
        cert = mcg.pa_certificate(f, args.bound)
        emit("mcg pa-check", cert.to_dict(), args.json, cert.verdict)
    else:
        A = mcg.homology_action(f)
        emit("mcg homology", {"word": str(f), "matrix": A, "symplectic": mcg.is_symplectic(A)},
             args.json, _fmt_matrix(A))
    return EXIT_OK


def _annulus_config(args) -> dividing.AnnulusConfig:
    if args.config:
        try:
            return dividing.AnnulusConfig.parse(args.config)
        except ValueError as exc:
            raise ParseFailure(str(exc)) from None
    if args.type == "I":
        return dividing.AnnulusConfig.I(args.k)
    if args.sign is None:
        raise ParseFailure("type II needs --sign + or -")
    return dividing.AnnulusConfig.II(args.n, 1 if args.sign == "+" else -1)


def cmd_annulus(args) -> int:
    if args.action == "reduce":
        cfg = _annulus_config(args)
        end, trace = dividing.reduce_annulus(cfg, args.include_uncertain)
        payload = {"start": str(cfg), "terminal": str(end)}
        if args.trace:
            payload["trace"] = trace
        lines = [f"{t['from']} -> {t['to']}  [{t['rule']}: {t['origin']}]" for t in trace] if args.trace else []
        lines.append(str(end))
        emit("annulus reduce", payload, args.json, "\n".join(lines))
    else:
        bounds = (None, None) if args.empty else (args.kmax, args.nmax)
        graph = dividing.reachability(*bounds, include_uncertain=args.include_uncertain)
        if args.dot:
            sys.stdout.write(graph.to_dot())
            return EXIT_OK
        payload = {
            "states": [str(s) for s in graph.states],
            "terminals": sorted(str(s) for s in graph.terminals),
            "every_state_terminates": graph.every_state_terminates(),
            "edges": [[str(a), str(b), r] for a, b, r in graph.edges],
        }
        emit("annulus graph", payload, args.json, "terminals: " + ", ".join(payload["terminals"]))
    return EXIT_OK


def cmd_dividing(args) -> int:
    g = curve(args.gamma, args.genus)
    annulus_sign = 1 if args.pos_annulus else -1
    if args.mult >= 2:
        d = dividing.DividingSet.parallel(g, args.mult, annulus_sign)
    else:
        d = dividing.DividingSet(args.genus, ((g, args.mult),), annulus_sign)
    if args.trivial:
        d = dividing.DividingSet(d.genus, d.components, d.sign, args.trivial)
    e = dividing.euler_eval(d)
    payload = d.to_dict()
    payload.update({"tight": dividing.giroux_tight(d), "extremal": dividing.is_extremal(d)})
    emit("dividing euler", payload, args.json, str(e))
    return EXIT_OK


def cmd_classify(args) -> int:
    g0 = curve(args.gamma0, args.genus)
    g1 = curve(args.gamma1, args.genus)
    if args.base_case:
        rep = slices.base_case_check(g0, g1)
        text = "\n".join(f"{c['terminal']}: {c['euler_class']}" for c in rep["classes"])
    else:
        rep = slices.classify_product(g0, g1)
        text = "\n".join(f"{c['name']}: {c['euler']}" for c in rep["classes"])
        text = f"{rep['count']} classes\n" + text
    emit("classify", rep, args.json, text)
    return EXIT_OK


def parse_chain(text: str, genus: int) -> slices.SliceChain:
    """``slice <gamma0> <gamma1> <euler> <tag>`` per line; quote words with spaces.

    The Euler class is a comma-separated integer vector or an expression such
    as ``b1-a1``.  Blank lines and ``#`` comments are ignored.
    """
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = shlex.split(line)
        if parts[0] == "genus" and len(parts) == 2:
            genus = int(parts[1])
            continue
        if parts[0] != "slice" or len(parts) != 5:
            raise ParseFailure(f"line {n}: expected 'slice gamma0 gamma1 euler tag'")
        _, a, b, e, tag = parts
        c0, c1 = curve(a, genus), curve(b, genus)
        euler = _parse_euler(e, genus)
        if tag == "basic":
            s = slices.make_basic(c0, c1, 1)
            if euler != s.euler:
                s = s.flipped()
            if euler != s.euler:
                raise slices.NotBasic(f"line {n}: euler {e} is not +-([gamma1]-[gamma0])")
        else:
            s = slices.Slice(genus, c0, c1, euler, tag)
        out.append(s)
    return slices.SliceChain(out)


_TERM = re.compile(r"([+-]?)(\d*)([ab])(\d+)")


def _parse_euler(text: str, genus: int) -> HomologyElement:
    t = text.replace(" ", "")
    if t == "0":
        return HomologyElement.zero(genus)
    if "," in t or t.lstrip("-").isdigit():
        vec = tuple(int(x) for x in t.split(","))
        if len(vec) != 2 * genus:
            raise ParseFailure(f"euler vector {text!r} needs {2 * genus} entries")
        return HomologyElement(vec)
    terms = list(_TERM.finditer(t))
    if not terms or "".join(m.group(0) for m in terms) != t:
        raise ParseFailure(f"cannot parse euler class {text!r}")
    vec = [0] * (2 * genus)
    for m in terms:
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2) or 1)
        i = int(m.group(4))
        if not 1 <= i <= genus:
            raise ParseFailure(f"generator {m.group(3)}{i} does not exist in genus {genus}")
        vec[2 * (i - 1) + (0 if m.group(3) == "a" else 1)] += sign * k
    return HomologyElement(tuple(vec))


def cmd_glue_check(args) -> int:
    chain = parse_chain(Path(args.chain).read_text(), args.genus)
    verdict = slices.glue_chain(chain)
    payload = {"chain": chain.to_dict(), **verdict.to_dict()}
    emit("glue-check", payload, args.json, f"{verdict.verdict} {verdict.euler}")
    return EXIT_OK


def cmd_fibered(args) -> int:
    mt = fibered.MappingTorus.parse(args.word, args.genus)
    if args.action == "h1":
        h = fibered.mapping_torus_h1(mt)
        emit("fibered h1", h.to_dict(), args.json, str(h))
        return EXIT_OK
    if args.gamma is None:
        raise ParseFailure("fibered report needs --gamma")
    rep = fibered.extremal_report(mt, curve(args.gamma, args.genus), args.n, args.bound or None)
    text = "\n".join(f"{c['class']}: {c['status']}" for c in rep.candidates)
    text += f"\nfiber euler: {rep.fiber_euler}"
    emit("fibered report", rep.to_dict(), args.json, text)
    return EXIT_OK


def cmd_render(args) -> int:
    from .render import render_curves

    if args.what == "graph":
        bounds = (None, None) if args.empty else (args.kmax, args.nmax)
        sys.stdout.write(dividing.reachability(*bounds).to_dot())
    else:
        cs = [curve(t, args.genus) for t in args.curves]
        sys.stdout.write(render_curves(cs, args.genus))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, default=2, help="surface genus (default 2)")
    common.add_argument("--json", action="store_true", help="emit versioned JSON")
    common.add_argument("--precision", type=int, default=None,
                        help="working precision in bits (overrides CONVEXCALC_PRECISION)")
    common.add_argument("--seed", type=int, default=0, help="recorded seed; every command is deterministic")

    p = argparse.ArgumentParser(prog="convexcalc", description="Curves, dividing sets and slice calculus on closed surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("intersect", parents=[common], help="geometric intersection number")
    s.add_argument("curve1")
    s.add_argument("curve2", nargs="?")
    s.add_argument("--self", dest="self_", action="store_true", help="self-intersection of curve1")
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("sequence", parents=[common], help="curve-complex sequences with verification")
    s.add_argument("kind", choices=["disjoint", "once", "fact1", "rel", "fact0"])
    s.add_argument("--from", dest="from_", required=True)
    s.add_argument("--to", required=True)
    s.add_argument("--via", help="for rel: the curve all terms avoid; for fact0: the second term")
    s.set_defaults(func=cmd_sequence)

    s = sub.add_parser("mcg", parents=[common], help="mapping class words")
    s.add_argument("action", choices=["apply", "pa-check", "homology"])
    s.add_argument("--word", required=True, help='twist word, e.g. "Ta1^2 Tb1^-1"')
    s.add_argument("--curve")
    s.add_argument("--bound", type=int, default=8, help="curve length bound for pa-check")
    s.set_defaults(func=cmd_mcg)

    s = sub.add_parser("annulus", parents=[common], help="annulus configurations and their reductions")
    s.add_argument("action", choices=["reduce", "graph"])
    s.add_argument("--config", help='configuration such as "II_4^+" or "I_-2"')
    s.add_argument("--type", choices=["I", "II"], default="I")
    s.add_argument("--k", type=int, default=0, help="holonomy for type I")
    s.add_argument("--n", type=int, default=0, help="number of closed curves for type II")
    s.add_argument("--sign", choices=["+", "-"])
    s.add_argument("--trace", action="store_true", help="list every rule applied")
    s.add_argument("--include-uncertain", action="store_true",
                   help="also use the shift rule whose status is unsettled")
    s.add_argument("--kmax", type=int, default=6)
    s.add_argument("--nmax", type=int, default=8)
    s.add_argument("--empty", action="store_true", help="graph of the terminal states only")
    s.add_argument("--dot", action="store_true", help="print the graph in DOT format")
    s.set_defaults(func=cmd_annulus)

    s = sub.add_parser("dividing", parents=[common], help="dividing sets of parallel curves")
    s.add_argument("action", choices=["euler"])
    s.add_argument("--gamma", required=True)
    s.add_argument("--mult", type=int, default=2)
    sign = s.add_mutually_exclusive_group()
    sign.add_argument("--neg-annulus", action="store_true", help="first annulus negative (default)")
    sign.add_argument("--pos-annulus", action="store_true", help="first annulus positive")
    s.add_argument("--trivial", type=int, default=0, help="number of added contractible circles")
    s.set_defaults(func=cmd_dividing)

    s = sub.add_parser("classify", parents=[common], help="tight structures on Sigma x I")
    s.add_argument("--gamma0", required=True)
    s.add_argument("--gamma1", required=True)
    s.add_argument("--base-case", action="store_true", help="derive the once-meeting case from annulus terminals")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("glue-check", parents=[common], help="tightness of a layered slice chain")
    s.add_argument("--chain", required=True, help="file of 'slice gamma0 gamma1 euler tag' lines")
    s.set_defaults(func=cmd_glue_check)

    s = sub.add_parser("fibered", parents=[common], help="mapping tori")
    s.add_argument("action", choices=["report", "h1"])
    s.add_argument("--word", required=True)
    s.add_argument("--gamma")
    s.add_argument("--n", type=int, default=3, help="stack depth (2n copies)")
    s.add_argument("--bound", type=int, default=8, help="pa_certificate bound; 0 skips it")
    s.set_defaults(func=cmd_fibered)

    s = sub.add_parser("render", parents=[common], help="SVG of curves or DOT of the reduction graph")
    s.add_argument("what", choices=["curves", "graph"])
    s.add_argument("curves", nargs="*")
    s.add_argument("--kmax", type=int, default=6)
    s.add_argument("--nmax", type=int, default=8)
    s.add_argument("--empty", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    RunConfig(args.genus, args.precision, "json" if args.json else "text", args.seed).apply()
    try:
        return args.func(args)
    except _PARSE_ERRORS + (ParseFailure,) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PRECONDITION_ERRORS as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
