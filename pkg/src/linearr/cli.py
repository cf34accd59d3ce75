"""Command-line front end: ``python -m linearr VERB ...``.

Every verb reads an arrangement document (a path, or ``-`` for stdin) unless
it generates one, and writes one document to stdout or ``--out``. Failures
print ``{"error": {"type": ..., "message": ...}}`` to stderr and exit with
status 2 (bad usage or input) or 1 (the computation could not be completed).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import generators as gen
from .arrangement import Arrangement, ArrangementError
from .invariants import poincare, split_exponents
from .kernel import ProjLine, ProjPoint
from .render import RenderError, scene, to_svg, to_tikz
from .resolution import (
    ChainError,
    ResolutionChain,
    b6k_resolution,
    cone_extension,
    pad_pencil,
    validate_chain,
)
from .solver import DEFAULT_BUDGET, BudgetExceeded, extss_exact, extss_upper_bound
from .supersolvable import is_supersolvable
from .unexpected import DualPoints, TrialDisagreement, supersolvable_criterion, unexpected_scan

__all__ = ["SCHEMAS", "load_schema", "main", "run"]

SCHEMAS = {
    "arrangement": "linearr/arrangement/1",
    "analysis": "linearr/analysis/1",
    "extss": "linearr/extss/1",
    "chain": "linearr/chain/1",
    "unexpected": "linearr/unexpected/1",
}


def load_schema(kind: str) -> dict:
    """The JSON Schema shipped for documents of the given kind."""
    if kind not in SCHEMAS:
        raise KeyError(kind)
    text = resources.files("linearr").joinpath("data", "schemas", f"{kind}.json").read_text()
    return json.loads(text)


FAMILIES = (
    "generic",
    "paper-L",
    "pappus",
    "fermat",
    "fermat-extended",
    "near-pencil",
    "boroczky",
    "reflection-group",
    "file",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="linearr", description="Exact line arrangements and supersolvable extensions.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="arrangement JSON path, or - for stdin")
        sp.add_argument("--out", help="write to this path instead of stdout")

    g = sub.add_parser("generate", help="emit an arrangement from a named family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--group", choices=("klein", "wiman"))
    g.add_argument("--path")
    common(g, needs_input=False)

    a = sub.add_parser("analyze", help="weak combinatorics, Poincare polynomial, supersolvability")
    common(a)
    a.add_argument("--format", choices=("json", "csv"), default="json")
    a.add_argument("--extss", choices=("none", "upper", "exact"), default="none")
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    a.add_argument("--threads", type=int, default=1)

    s = sub.add_parser("solve", help="extSS, exactly or as an upper bound")
    common(s)
    s.add_argument("--mode", choices=("exact", "upper"), default="exact")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--threads", type=int, default=1)

    r = sub.add_parser("resolve", help="cone extension to a supersolvable arrangement")
    common(r)
    r.add_argument("--apex", help="apex as x,y,z (rational), default: best singular apex")
    r.add_argument("--b6k", action="store_true", help="use the Boroczky B_6k apex rule")
    r.add_argument("--pad", type=int, default=0, help="extra generic lines through the apex")
    r.add_argument("--threads", type=int, default=1)

    u = sub.add_parser("unexpected", help="unexpected-curve table for the dual points")
    common(u)
    u.add_argument("--seed", type=int)
    u.add_argument("--trials", type=int, default=3)
    u.add_argument("--degrees", help="range lo..hi (default 2..d-1)")

    v = sub.add_parser("render", help="SVG (or TikZ) picture of a real arrangement")
    common(v)
    v.add_argument("--tikz", action="store_true")
    v.add_argument("--chart", choices=("auto", "identity", "circle"), default="auto")
    v.add_argument("--show-span-line", action="store_true")
    v.add_argument("--width", type=int, default=600)
    return p


# ---------------------------------------------------------------------------
# verbs


def _read_doc(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _arrangement_doc(A: Arrangement, **annotations) -> dict:
    doc = {"schema": SCHEMAS["arrangement"], **A.to_json()}
    if annotations:
        doc["annotations"] = annotations
    return doc


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + ", ".join("--" + n for n in missing))


def _generate(args) -> dict:
    fam = args.family
    if fam == "generic":
        _require(args, "d", "seed")
        return _arrangement_doc(gen.generic_arrangement(args.d, args.seed))
    if fam == "paper-L":
        return _arrangement_doc(gen.paper_L())
    if fam == "pappus":
        P = gen.pappus_P()
        return _arrangement_doc(P, span_lines=[gen.pappus_span_line().to_json(P.field)])
    if fam in ("fermat", "fermat-extended", "boroczky"):
        _require(args, "n")
        f = {"fermat": gen.fermat, "fermat-extended": gen.fermat_extended, "boroczky": gen.boroczky}[fam]
        return _arrangement_doc(f(args.n))
    if fam == "near-pencil":
        _require(args, "d")
        return _arrangement_doc(gen.near_pencil(args.d))
    if fam == "reflection-group":
        _require(args, "group")
        return _arrangement_doc(gen.klein() if args.group == "klein" else gen.wiman())
    _require(args, "path")
    return _arrangement_doc(gen.from_file(args.path))


def _analysis(A: Arrangement, args) -> dict:
    W = A.weak_combinatorics
    P = poincare(W)
    ex = split_exponents(P)
    w = is_supersolvable(A)
    doc = {
        "schema": SCHEMAS["analysis"],
        "weak_combinatorics": W.to_json(),
        "poincare": list(P.coeffs),
        "exponents": list(ex) if ex else "NotSplit",
        "supersolvable": w is not None,
        "modular_point": w.point.to_json(A.field) if w else None,
    }
    if args.extss == "exact":
        doc["extss"] = extss_exact(A, budget=args.budget, workers=args.threads).to_json(A.field)
    elif args.extss == "upper":
        doc["extss"] = extss_upper_bound(A, workers=args.threads).to_json(A.field)
    return doc


def _parse_point(text: str, A: Arrangement) -> ProjPoint:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--apex needs three comma-separated coordinates")
    try:
        return ProjPoint(tuple(A.field(A.field.scalar_from_json(c.strip())) for c in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--apex: {exc}") from exc


def _resolve(A: Arrangement, args) -> dict:
    if args.b6k and args.apex:
        raise UsageError("--b6k and --apex are exclusive")
    if args.b6k:
        C = b6k_resolution(A)
    elif args.apex:
        C = cone_extension(A, _parse_point(args.apex, A))
    else:
        best = extss_upper_bound(A, workers=args.threads)
        C = ResolutionChain(A, best.lines, best.apex)
    if args.pad:
        C = pad_pencil(C, args.pad)
    report = validate_chain(C)
    return {"schema": SCHEMAS["chain"], **C.to_json(), "report": report.to_json(A.field)}


def _parse_degrees(text: str | None, d: int) -> range:
    if text is None:
        return range(2, d)
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError as exc:
        raise UsageError("--degrees must look like lo..hi") from exc
    if lo < 2 or hi < lo:
        raise UsageError("--degrees needs 2 <= lo <= hi")
    return range(lo, hi + 1)


def _unexpected(A: Arrangement, args) -> dict:
    if args.seed is None:
        raise UsageError("unexpected is randomized and needs --seed")
    rep = unexpected_scan(DualPoints.of(A), _parse_degrees(args.degrees, len(A)), trials=args.trials, seed=args.seed)
    doc = {"schema": SCHEMAS["unexpected"], "d": len(A), "seed": args.seed, **rep.to_json()}
    doc["criterion"] = supersolvable_criterion(A) if is_supersolvable(A) is not None else None
    return doc


def _render(A: Arrangement, doc: dict, args) -> str:
    dashed = []
    if args.show_span_line:
        for row in doc.get("annotations", {}).get("span_lines", []):
            dashed.append(ProjLine(tuple(A.field(A.field.scalar_from_json(c)) for c in row)))
    S = scene(A, chart=args.chart, dashed=dashed, show_collinearities=args.show_span_line)
    return to_tikz(S) if args.tikz else to_svg(S, args.width)


def _dispatch(args) -> str:
    if args.verb == "generate":
        out = _generate(args)
    else:
        doc = _read_doc(args.input)
        A = Arrangement.from_json(doc)
        if args.verb == "analyze":
            out = _analysis(A, args)
            if args.format == "csv":
                return A.weak_combinatorics.to_csv()
        elif args.verb == "solve":
            if args.mode == "exact":
                res = extss_exact(A, budget=args.budget, workers=args.threads)
            else:
                res = extss_upper_bound(A, workers=args.threads)
            out = {"schema": SCHEMAS["extss"], **res.to_json(A.field)}
        elif args.verb == "resolve":
            out = _resolve(A, args)
        elif args.verb == "unexpected":
            out = _unexpected(A, args)
        else:
            return _render(A, doc, args)
    return json.dumps(out, indent=1) + "\n"


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        text = _dispatch(args)
    except UsageError as exc:
        return _error("usage", str(exc), 2)
    except (ArrangementError, OSError, KeyError) as exc:
        return _error("input", str(exc), 2)
    except RenderError as exc:
        return _error("render", str(exc), 2)
    except BudgetExceeded as exc:
        return _error("budget", str(exc), 1)
    except (ChainError, TrialDisagreement, ValueError) as exc:
        return _error(type(exc).__name__, str(exc), 1)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
