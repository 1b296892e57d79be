"""Command-line front end: ``dblkit check|build|companions|invariance|univalence``.

Exit codes: 0 success, 1 a law or verdict failed, 2 unreadable or ill-formed input,
3 a construction failed, 4 a hypothesis of the requested check does not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bicat import DEFAULT_BUDGET, FinBicat, is_globally_gaunt_surrogate
from .cat import FinCat, FinFunctor, FinProfunctor
from .companions import (
    HYPOTHESES,
    check_gregarious_invariance,
    find_companions,
    gregarious_univalence_surrogate,
    hypotheses,
    is_weakly_horizontally_invariant,
)
from .constructions import (
    IdentityFunctor,
    prof_double_cat,
    span_double_cat,
    square_double_cat,
    structured_cospan_double_cat,
)
from .double import PseudoDoubleCat, set_level, univalence_surrogate
from .dsl import Module, dump, law_names, load_file
from .errors import CrossCheckFailed, DblkitError, ElaborationError, PreconditionFailed
from .report import SCHEMA_VERSION, LawReport
from ._util import jsonable
from .verity import VerityDoubleBicat, double_cat_to_verity, square_verity

OK, FAILED, BAD_INPUT, CONSTRUCTION, PRECONDITION = 0, 1, 2, 3, 4

BUILD_KINDS = ("square", "span", "cospan", "prof", "verity-of", "square-verity")


class UsageError(Exception):
    """Bad arguments that argparse cannot see (unknown law names, wrong input kind)."""


# -- helpers --------------------------------------------------------------------------


def _emit(args, human: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _load(path: str, module: Module | None = None) -> Module:
    return load_file(path, check=False, module=module)


def _target(args) -> tuple[Module, str]:
    m = _load(args.path)
    name = args.name or m.main
    if name not in m:
        raise UsageError(f"{args.path} declares no {name!r}")
    if getattr(args, "probe", None):
        _load(args.probe, module=m)
    return m, name


def select_laws(available: list[str], selectors: str | None) -> list[str] | None:
    """Law names picked by a comma-separated list of names or prefixes.

    A prefix matches at a ``-`` or ``/`` boundary, so ``L7`` picks ``L7-triangle`` and
    ``L7-pentagon`` and ``horizontal`` picks every ``horizontal/...`` law.
    """
    if not selectors:
        return None
    picked: list[str] = []
    for sel in (s.strip() for s in selectors.split(",")):
        if not sel:
            continue
        hits = [n for n in available if n == sel or n.startswith(sel + "-") or n.startswith(sel + "/")]
        if not hits:
            raise UsageError(f"no law matches {sel!r}; known laws: {', '.join(available)}")
        picked.extend(h for h in hits if h not in picked)
    return picked


def _as_verity(value, name: str) -> VerityDoubleBicat:
    if isinstance(value, VerityDoubleBicat):
        return value
    if isinstance(value, PseudoDoubleCat):
        return double_cat_to_verity(value)
    if isinstance(value, FinBicat):
        return square_verity(value)
    raise UsageError(f"{name!r} is not a Verity double bicategory, double category or bicategory")


def _yes(b) -> str:
    return {True: "yes", False: "no", None: "n/a"}[b]


# -- check ----------------------------------------------------------------------------


def cmd_check(args) -> int:
    m, name = _target(args)
    value = m[name]
    only = select_laws(law_names(value), args.laws)
    report = m.check(name, only)
    _emit(args, report.summary(), report.to_json())
    return OK if report.ok else FAILED


# -- build ----------------------------------------------------------------------------


def _main_of(path: str, kinds: tuple[type, ...], what: str):
    m = _load(path)
    for n in reversed(list(m.values)):
        if isinstance(m[n], kinds):
            return m[n]
    raise UsageError(f"{path} declares no {what}")


def _build(args):
    inputs = list(args.inputs)
    if args.base:
        inputs.insert(0, args.base)
    if not inputs:
        raise UsageError(f"build {args.kind} needs an input file")
    kw = {} if args.apex_bound is None else {"apex_bound": args.apex_bound}
    if args.kind == "square":
        C = _main_of(inputs[0], (FinCat,), "category")
        return square_double_cat(C, name=args.name or f"Sq{C.name}")
    if args.kind == "span":
        C = _main_of(inputs[0], (FinCat,), "category")
        return span_double_cat(C, name=args.name or f"Span{C.name}", **kw)
    if args.kind == "cospan":
        L = _main_of(inputs[0], (FinFunctor, FinCat), "category or functor")
        L = IdentityFunctor(L) if isinstance(L, FinCat) else L
        return structured_cospan_double_cat(L, name=args.name or f"Csp{L.tgt.name}", **kw)
    if args.kind == "prof":
        cats, functors, profs = [], [], []
        for path in inputs:
            m = _load(path)
            for v in m.values.values():
                for t, bucket in ((FinCat, cats), (FinFunctor, functors), (FinProfunctor, profs)):
                    if isinstance(v, t) and v not in bucket:
                        bucket.append(v)
        if not cats:
            raise UsageError("build prof needs at least one category")
        return prof_double_cat(cats, functors, profs, depth=args.depth, name=args.name or "Prof")
    if args.kind == "verity-of":
        D = _main_of(inputs[0], (PseudoDoubleCat,), "double category")
        return double_cat_to_verity(D, name=args.name or f"V{D.name}")
    B = _main_of(inputs[0], (FinBicat,), "bicategory")
    return square_verity(B, name=args.name or f"Sq{B.name}")


def cmd_build(args) -> int:
    value = _build(args)
    text = dump(value)
    report = Module({value.name: value}).check(value.name)
    if args.json:
        out = json.dumps(
            {"schema": SCHEMA_VERSION, "kind": args.kind, "artifact": value.name, "source": text, "report": report.to_json()},
            indent=2,
        )
    else:
        extra = []
        if isinstance(value, PseudoDoubleCat):
            extra.append(f"# set level: {set_level(value)}")
        out = text + "\n" + "\n".join(extra + [f"# {line}" for line in report.summary().splitlines()]) + "\n"
    if args.output:
        Path(args.output).write_text(out if out.endswith("\n") else out + "\n", encoding="utf-8")
        print(f"wrote {args.output}: {value.name} [{report.mode}] {'ok' if report.ok else 'FAILED'}", file=sys.stderr)
    else:
        print(out, end="" if out.endswith("\n") else "\n")
    return OK if report.ok else FAILED


# -- companions, invariance, univalence ------------------------------------------------


def _horizontals(VB: VerityDoubleBicat) -> list:
    H = VB.horb
    obs = VB.law_objects()
    return [h for x in obs for y in obs for h in H.law_cells1(x, y)]


def cmd_companions(args) -> int:
    m, name = _target(args)
    VB = _as_verity(m[name], name)
    hs = _horizontals(VB)
    if args.horizontal is not None:
        wanted = [h for h in hs if h == args.horizontal or str(h) == args.horizontal]
        if not wanted:
            raise UsageError(f"{args.horizontal!r} is not a horizontal 1-cell of {VB.name}")
        hs = wanted
    rows = [(h, find_companions(VB, h)) for h in hs]
    lines = [f"{VB.name} [{VB.mode}]"]
    for h, cps in rows:
        found = ", ".join(f"({cp.h}, {cp.v})" for cp in cps) or "none"
        lines.append(f"  {h}: {found}")
    payload = {
        "schema": SCHEMA_VERSION,
        "artifact": VB.name,
        "mode": VB.mode,
        "companions": [
            {"horizontal": jsonable(h), "pairs": [jsonable({"vertical": cp.v, "unit": cp.unit, "counit": cp.counit}) for cp in cps]}
            for h, cps in rows
        ],
    }
    _emit(args, "\n".join(lines), payload)
    return OK


def cmd_invariance(args) -> int:
    m, name = _target(args)
    VB = _as_verity(m[name], name)
    invariant = is_weakly_horizontally_invariant(VB, args.budget)
    lines = [f"{VB.name} [{VB.mode}]", f"  weakly horizontally invariant: {_yes(invariant)}"]
    payload: dict = {"schema": SCHEMA_VERSION, "artifact": VB.name, "mode": VB.mode, "invariant": invariant}
    report: LawReport | None = None
    if invariant:
        report = check_gregarious_invariance(VB, args.budget)
        lines.append("  " + report.summary().replace("\n", "\n  "))
        payload["report"] = report.to_json()
    _emit(args, "\n".join(lines), payload)
    return OK if invariant and report is not None and report.ok else FAILED


def _gregarious_layer(VB: VerityDoubleBicat, budget: int) -> dict:
    hyps = hypotheses(VB, budget)
    failing = [h for h in HYPOTHESES if not hyps[h]]
    if failing:
        return {"gregarious": None, "cross_check": "skipped", "hypotheses": hyps, "failing": failing[0]}
    verdict = gregarious_univalence_surrogate(VB, budget)
    horizontal = is_globally_gaunt_surrogate(VB.horb, budget)
    return {"gregarious": verdict, "horizontal_globally_gaunt": horizontal, "cross_check": "agree", "hypotheses": hyps}


def cmd_univalence(args) -> int:
    m, name = _target(args)
    value = m[name]
    if isinstance(value, PseudoDoubleCat):
        D = value
        verdict = univalence_surrogate(D)
        layers = {"setcat": set_level(D), "univalent": verdict.univalent, "symmetric": verdict.symmetric}
        greg = _gregarious_layer(double_cat_to_verity(D), args.budget)
        payload = {"schema": SCHEMA_VERSION, "artifact": D.name, "mode": D.mode, **layers, **greg, "details": verdict.details}
        mode = D.mode
    else:
        VB = _as_verity(value, name)
        greg = _gregarious_layer(VB, args.budget)
        if greg["gregarious"] is None:
            raise PreconditionFailed(greg["failing"], f"{VB.name}: hypothesis {greg['failing']} does not hold")
        layers = {}
        payload = {"schema": SCHEMA_VERSION, "artifact": VB.name, "mode": VB.mode, **greg}
        mode = VB.mode
    lines = [f"{payload['artifact']} [{mode}]"]
    for k, v in layers.items():
        lines.append(f"  {k}: {v if isinstance(v, str) else _yes(v)}")
    if greg["gregarious"] is None:
        lines.append(f"  gregarious: skipped ({greg['failing']} does not hold)")
    else:
        lines.append(f"  gregarious: {_yes(greg['gregarious'])} (cross-check with horizontal global gauntness: agree)")
    _emit(args, "\n".join(lines), payload)
    return OK


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dblkit", description="Finite double-category workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, probe=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget for equivalence searches")
        if probe:
            sp.add_argument("--probe", metavar="FILE", help="file with a probes declaration for the target")
            sp.add_argument("--name", help="declaration to use (default: the last one)")

    c = sub.add_parser("check", help="run the law checker on a declaration")
    c.add_argument("path")
    c.add_argument("--laws", help="comma-separated law names or prefixes")
    common(c)
    c.set_defaults(run=cmd_check)

    b = sub.add_parser("build", help="build a construction and print it as source")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("inputs", nargs="*")
    b.add_argument("--base", help="file whose last category (or functor) is the base")
    b.add_argument("--apex-bound", type=int, help="largest apex for spans and cospans of finite sets")
    b.add_argument("--depth", type=int, default=2, help="closure depth for prof")
    b.add_argument("--name", help="name of the built declaration")
    b.add_argument("-o", "--output", help="write here instead of stdout")
    common(b, probe=False)
    b.set_defaults(run=cmd_build)

    for cmd, fn, text in (
        ("companions", cmd_companions, "list companions of horizontal 1-cells"),
        ("invariance", cmd_invariance, "weak horizontal invariance verdict"),
        ("univalence", cmd_univalence, "univalence-surrogate verdicts per layer"),
    ):
        sp = sub.add_parser(cmd, help=text)
        sp.add_argument("path")
        if cmd == "companions":
            sp.add_argument("--horizontal", help="only this horizontal 1-cell")
        common(sp)
        sp.set_defaults(run=fn)
    return p


def _fail(args, code: int, kind: str, message: str, diagnostics=(), **extra) -> int:
    if getattr(args, "json", False):
        err = {"kind": kind, "message": message, **extra}
        if diagnostics:
            err["diagnostics"] = [d.to_json() for d in diagnostics]
        print(json.dumps({"schema": SCHEMA_VERSION, "error": err}, indent=2))
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except OSError as exc:
        print(f"dblkit: cannot read {exc.filename}: {exc.strerror}", file=sys.stderr)
        return _fail(args, BAD_INPUT, "io", str(exc))
    except ElaborationError as exc:
        for d in exc.diagnostics:
            try:
                text = Path(d.file).read_text(encoding="utf-8")
            except OSError:
                text = None
            print(d.render(text), file=sys.stderr)
        return _fail(args, BAD_INPUT, "elaboration", str(exc), exc.diagnostics)
    except UsageError as exc:
        print(f"dblkit: {exc}", file=sys.stderr)
        return _fail(args, BAD_INPUT, "usage", str(exc))
    except PreconditionFailed as exc:
        print(f"dblkit: precondition failed: {exc.hypothesis}\n  {exc}", file=sys.stderr)
        return _fail(args, PRECONDITION, "precondition", str(exc), hypothesis=exc.hypothesis)
    except DblkitError as exc:
        print(f"dblkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _fail(args, CONSTRUCTION, type(exc).__name__, str(exc))
    except CrossCheckFailed as exc:
        print(f"dblkit: cross-check failed: {exc}", file=sys.stderr)
        return _fail(args, FAILED, "cross-check", str(exc))


if __name__ == "__main__":
    sys.exit(main())
