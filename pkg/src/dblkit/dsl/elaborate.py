"""From syntax trees to library values.

Every declaration is checked for referential integrity before anything is built; all
problems are collected as diagnostics and raised together as one
:class:`~dblkit.errors.ElaborationError`. Identities are never written by hand: each
object ``x`` gets ``id_x`` and the unit composites are filled in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..bicat import FinBicat, PreorderMonoidBicat, ScalarBicat, bicat_laws, check_bicat_laws, co_dual, delooping, discrete_bicat
from ..cat import (
    FinCat,
    FinFunctor,
    FinProfunctor,
    FinSet,
    category_laws,
    chain,
    check_category_laws,
    check_functor,
    check_profunctor,
    constant_functor,
    cyclic_group,
    discrete,
    empty_profunctor,
    from_tables,
    functor_laws,
    hom_profunctor,
    identity_functor,
    opposite,
    profunctor_laws,
    representable_profunctor,
    terminal,
)
from ..constructions import (
    Cospan,
    IdentityFunctor,
    Span,
    SpanDoubleCat,
    StructuredCospanDoubleCat,
    finset_square_generators,
    prof_double_cat,
    span_double_cat,
    square_double_cat,
    structured_cospan_double_cat,
)
from ..double import DoubleProbe, PseudoDoubleCat, TableDoubleCat, check_double_laws, double_laws, squares_among
from ..errors import ClosureExceeded, DblkitError, ElaborationError
from ..report import LawReport
from ..verity import VerityDoubleBicat, check_verity_laws, double_cat_to_verity, verity_laws, square_verity
from .ast import ARROW, ASSIGN, ATOM, COMPOSE, ELEMENT, MAP, ORDER, SHAPE, Decl, Document, Entry
from .parser import parse
from .syntax import Diagnostic, SourceSpan

SECTIONS = {
    "category": ("objects", "identities", "arrows", "compose"),
    "functor": ("objects", "arrows"),
    "profunctor": ("elements", "actions"),
    "bicat": ("cells", "unit", "order", "compose"),
    "doublecat": (
        "horizontal",
        "horid",
        "hcomp",
        "squares",
        "vid",
        "vcomp",
        "hid",
        "hsquare",
        "lunitor",
        "runitor",
        "associator",
    ),
    "probes": ("feet", "horizontal", "options"),
}

# which library type each declaration kind produces
TYPES = {
    "category": FinCat,
    "functor": FinFunctor,
    "profunctor": FinProfunctor,
    "bicat": FinBicat,
    "doublecat": PseudoDoubleCat,
    "verity": VerityDoubleBicat,
    "probes": DoubleProbe,
}


@dataclass
class Module:
    """Elaborated declarations, in file order."""

    values: dict[str, Any] = field(default_factory=dict)
    kinds: dict[str, str] = field(default_factory=dict)
    decls: dict[str, Decl] = field(default_factory=dict)
    reports: dict[str, LawReport] = field(default_factory=dict)

    def __getitem__(self, name: str):
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values

    @property
    def main(self) -> str:
        """The last declaration other than probes; files list dependencies first."""
        names = [n for n, k in self.kinds.items() if k != "probes"]
        if not names:
            raise KeyError("no checkable declaration")
        return names[-1]

    def of_kind(self, kind: str) -> list[str]:
        return [n for n, k in self.kinds.items() if k == kind]

    def check(self, name: str | None = None, only=None) -> LawReport:
        """Law report of a declaration, computed on first use."""
        name = name or self.main
        if only is not None:
            return law_check(self.values[name], only)
        if name not in self.reports:
            self.reports[name] = law_check(self.values[name])
        return self.reports[name]


def law_check(value, only=None) -> LawReport:
    if isinstance(value, FinCat):
        rep = check_category_laws(value)
    elif isinstance(value, FinFunctor):
        rep = check_functor(value)
    elif isinstance(value, FinProfunctor):
        rep = check_profunctor(value)
    elif isinstance(value, FinBicat):
        return check_bicat_laws(value, only)
    elif isinstance(value, PseudoDoubleCat):
        rep = check_double_laws(value)
    elif isinstance(value, VerityDoubleBicat):
        return check_verity_laws(value, only)
    else:
        raise TypeError(f"nothing to check on {type(value).__name__}")
    return rep if only is None else rep.select(only)


def law_names(value) -> list[str]:
    """Names of the laws :func:`law_check` runs on ``value``, without running them."""
    for t, laws in (
        (FinCat, category_laws),
        (FinFunctor, functor_laws),
        (FinProfunctor, profunctor_laws),
        (FinBicat, bicat_laws),
        (PseudoDoubleCat, double_laws),
        (VerityDoubleBicat, verity_laws),
    ):
        if isinstance(value, t):
            return [law.name for law in laws(value)]
    raise TypeError(f"nothing to check on {type(value).__name__}")


class _Failed(Exception):
    """Abandon the current declaration; its diagnostics are already recorded."""


class Elaborator:
    def __init__(self, module: Module | None = None):
        self.module = module or Module()
        self.diags: list[Diagnostic] = []
        self.mark = 0

    # -- diagnostics -----------------------------------------------------------------
    def error(self, span: SourceSpan | None, msg: str, related=()) -> None:
        self.diags.append(Diagnostic(span, msg, related=tuple(r for r in related if r is not None)))

    def bail(self) -> None:
        if len(self.diags) > self.mark:
            raise _Failed

    def lookup(self, name, span, kind: str):
        if name not in self.module.values:
            self.error(span, f"unknown {kind} {name!r}")
            raise _Failed
        value = self.module.values[name]
        if not isinstance(value, TYPES[kind]):
            self.error(span, f"{name!r} is a {self.module.kinds[name]}, not a {kind}")
            raise _Failed
        return value

    def sections(self, d: Decl) -> None:
        allowed = SECTIONS[d.kind]
        seen: dict[str, SourceSpan | None] = {}
        for s in d.sections or ():
            if s.name not in allowed:
                self.error(s.span, f"unknown section {s.name!r} in {d.kind} (expected one of {', '.join(allowed)})")
            elif s.name in seen:
                self.error(s.span, f"duplicate section {s.name!r}", related=[seen[s.name]])
            seen[s.name] = s.span

    def entries(self, d: Decl, section: str, *forms: str) -> list[Entry]:
        out = []
        for e in d.entries(section):
            if e.form in forms:
                out.append(e)
            else:
                self.error(e.span, f"malformed entry in {section!r}")
        return out

    def names(self, d: Decl, section: str, what: str) -> dict:
        """Atoms of a section, with duplicates reported against the first occurrence."""
        out: dict = {}
        for e in self.entries(d, section, ATOM):
            (x,) = e.values
            if x in out:
                self.error(e.span, f"duplicate {what} id {x!r}", related=[out[x]])
            else:
                out[x] = e.span
        return out

    # -- driver ----------------------------------------------------------------------
    def run(self, doc: Document, check: bool = True) -> Module:
        m = self.module
        for d in doc.decls:
            if d.name in m.values:
                self.error(d.name_span, f"duplicate declaration {d.name!r}", related=[m.decls[d.name].name_span])
                continue
            before = self.mark = len(self.diags)
            if d.sections is not None:
                self.sections(d)
            try:
                value = getattr(self, f"ctor_{d.kind}" if d.ctor else f"block_{d.kind}")(d)
            except _Failed:
                continue
            except ClosureExceeded:
                raise
            except DblkitError as exc:
                if d.ctor is not None:
                    raise  # constructions report their own failures
                self.error(d.span, f"{type(exc).__name__}: {exc}")
                continue
            if len(self.diags) > before:
                continue
            m.values[d.name] = value
            m.kinds[d.name] = d.kind
            m.decls[d.name] = d
            if check and d.sections is not None and d.kind != "probes":
                m.reports[d.name] = law_check(value)
        if self.diags:
            raise ElaborationError(self.diags)
        return m

    # -- categories ------------------------------------------------------------------
    def block_category(self, d: Decl) -> FinCat:
        objects = self.names(d, "objects", "object")
        arrows: dict = {}
        spans: dict = {}
        for e in self.entries(d, "arrows", ARROW):
            f, s, t = e.values
            if f in arrows:
                self.error(e.span_of(0), f"duplicate arrow id {f!r}", related=[spans[f]])
                continue
            for i, x in ((1, s), (2, t)):
                if x not in objects:
                    self.error(e.span_of(i), f"arrow {f!r} has undeclared endpoint {x!r}")
            arrows[f] = (s, t)
            spans[f] = e.span_of(0)
        ident = {x: f"id_{x}" for x in objects}
        for e in self.entries(d, "identities", ASSIGN):
            x, i = e.values
            if x not in objects:
                self.error(e.span_of(0), f"identity named for undeclared object {x!r}")
            elif i in arrows:
                self.error(e.span_of(1), f"identity name {i!r} is already an arrow")
            else:
                ident[x] = i
        for x, i in ident.items():
            if i in arrows:
                self.error(spans[i], f"arrow id {i!r} is reserved for the identity of {x!r}")
        every = {**arrows, **{i: (x, x) for x, i in ident.items()}}
        comp: dict = {}
        cspans: dict = {}
        for e in self.entries(d, "compose", COMPOSE):
            g, f, h = e.values
            if not all(self._known_arrow(every, a, e.span_of(i)) for i, a in ((1, f), (0, g), (2, h))):
                continue
            if every[f][1] != every[g][0]:
                self.error(e.span, f"{g!r} . {f!r}: {f!r} ends at {every[f][1]!r} but {g!r} starts at {every[g][0]!r}")
                continue
            if every[h] != (every[f][0], every[g][1]):
                self.error(e.span_of(2), f"{h!r} does not go from {every[f][0]!r} to {every[g][1]!r}")
                continue
            if (f, g) in comp:
                self.error(e.span, f"duplicate composition entry for {g!r} . {f!r}", related=[cspans[(f, g)]])
                continue
            comp[(f, g)] = h
            cspans[(f, g)] = e.span
        missing = [
            (f, g) for f in arrows for g in arrows if arrows[f][1] == arrows[g][0] and (f, g) not in comp
        ]
        for f, g in missing:
            self.error(d.name_span, f"incomplete composition table: no entry for {g!r} . {f!r}")
        self.bail()
        return from_tables(list(objects), arrows, comp, name=d.name, identity=ident)

    def _known_arrow(self, arrows, a, span) -> bool:
        if a not in arrows:
            self.error(span, f"unknown arrow {a!r}")
            return False
        return True

    def ctor_category(self, d: Decl) -> FinCat:
        c = d.ctor
        args = c.args
        simple = {"finset": lambda n: FinSet(n, name=d.name), "chain": lambda n: chain(n, name=d.name)}
        if c.name in simple and len(args) == 1 and isinstance(args[0], int):
            return simple[c.name](args[0])
        if c.name == "cyclic" and len(args) == 1 and isinstance(args[0], int):
            return cyclic_group(args[0], name=d.name)
        if c.name == "terminal" and not args:
            return terminal(d.name)
        if c.name == "discrete":
            return discrete(list(args), name=d.name)
        if c.name == "opposite" and len(args) == 1:
            return opposite(self.lookup(args[0], c.arg_spans[0], "category"), name=d.name)
        return self._bad_ctor(d, "finset N, chain N, cyclic N, terminal, discrete x ..., opposite C")

    def _bad_ctor(self, d: Decl, expected: str):
        self.error(d.ctor.span, f"bad {d.kind} constructor {d.ctor.name!r}; expected one of: {expected}")
        raise _Failed

    # -- functors --------------------------------------------------------------------
    def block_functor(self, d: Decl) -> FinFunctor:
        C = self.lookup(d.params[0], d.param_spans[0], "category")
        D = self.lookup(d.params[1], d.param_spans[1], "category")
        ob = self._mapping(d, "objects", set(C.objects), set(D.objects), "object")
        ar = self._mapping(d, "arrows", set(C.arrows), set(D.arrows), "arrow")
        for x in C.objects:
            if x not in ob:
                self.error(d.name_span, f"incomplete object map: {x!r} has no image")
        if any(x not in ob for x in C.objects):
            raise _Failed
        for x in C.objects:
            i = C.identity(x)
            if i in ar and ar[i] != D.identity(ob[x]):
                self.error(d.entries("arrows")[0].span, f"identity {i!r} must map to {D.identity(ob[x])!r}")
            ar[i] = D.identity(ob[x])
        for f in C.arrows:
            if f not in ar:
                self.error(d.name_span, f"incomplete arrow map: {f!r} has no image")
            elif (D.src(ar[f]), D.tgt(ar[f])) != (ob[C.src(f)], ob[C.tgt(f)]):
                e = next(e for e in d.entries("arrows") if e.values[0] == f)
                self.error(e.span_of(1), f"{f!r} maps to {ar[f]!r}, which does not go from {ob[C.src(f)]!r} to {ob[C.tgt(f)]!r}")
        self.bail()
        return FinFunctor(C, D, ob, ar, name=d.name)

    def _mapping(self, d: Decl, section: str, dom: set, cod: set, what: str) -> dict:
        out: dict = {}
        spans: dict = {}
        for e in self.entries(d, section, MAP):
            a, b = e.values
            if a not in dom:
                self.error(e.span_of(0), f"unknown source {what} {a!r}")
            elif b not in cod:
                self.error(e.span_of(1), f"unknown target {what} {b!r}")
            elif a in out:
                self.error(e.span_of(0), f"{what} {a!r} is mapped twice", related=[spans[a]])
            else:
                out[a] = b
                spans[a] = e.span_of(0)
        return out

    def ctor_functor(self, d: Decl) -> FinFunctor:
        c = d.ctor
        C = self.lookup(d.params[0], d.param_spans[0], "category")
        D = self.lookup(d.params[1], d.param_spans[1], "category")
        if c.name == "identity" and not c.args:
            if C is not D:
                self.error(c.span, "identity functor needs equal source and target")
                raise _Failed
            F = identity_functor(C)
            return FinFunctor(C, C, F.obj_map, F.arr_map, name=d.name)
        if c.name == "constant" and len(c.args) == 1:
            if c.args[0] not in D.objects:
                self.error(c.arg_spans[0], f"unknown object {c.args[0]!r} of {D.name}")
                raise _Failed
            return constant_functor(C, D, c.args[0], name=d.name)
        return self._bad_ctor(d, "identity, constant x")

    # -- profunctors -----------------------------------------------------------------
    def block_profunctor(self, d: Decl) -> FinProfunctor:
        C = self.lookup(d.params[0], d.param_spans[0], "category")
        D = self.lookup(d.params[1], d.param_spans[1], "category")
        over: dict = {}
        spans: dict = {}
        for e in self.entries(d, "elements", ELEMENT):
            p, y, x = e.values
            if p in over:
                self.error(e.span_of(0), f"duplicate element id {p!r}", related=[spans[p]])
                continue
            if y not in D.objects:
                self.error(e.span_of(1), f"{y!r} is not an object of {D.name}")
            if x not in C.objects:
                self.error(e.span_of(2), f"{x!r} is not an object of {C.name}")
            over[p] = (y, x)
            spans[p] = e.span_of(0)
        left: dict = {}
        right: dict = {}
        for e in self.entries(d, "actions", COMPOSE):
            a, b, r = e.values
            if b in over and C.has_arrow(a) and a not in over:
                y, x = over[b]
                if C.src(a) != x:
                    self.error(e.span_of(0), f"{a!r} does not start at {x!r}")
                elif r not in over or over[r] != (y, C.tgt(a)):
                    self.error(e.span_of(2), f"{r!r} is not an element over ({y!r}, {C.tgt(a)!r})")
                elif (a, b) in right:
                    self.error(e.span, f"duplicate action entry for {a!r} . {b!r}")
                else:
                    right[(a, b)] = r
            elif a in over and D.has_arrow(b) and b not in over:
                y, x = over[a]
                if D.tgt(b) != y:
                    self.error(e.span_of(1), f"{b!r} does not end at {y!r}")
                elif r not in over or over[r] != (D.src(b), x):
                    self.error(e.span_of(2), f"{r!r} is not an element over ({D.src(b)!r}, {x!r})")
                elif (b, a) in left:
                    self.error(e.span, f"duplicate action entry for {a!r} . {b!r}")
                else:
                    left[(b, a)] = r
            else:
                self.error(e.span, f"{a!r} . {b!r} is neither an arrow acting on an element nor the reverse")
        for p, (y, x) in over.items():
            left.setdefault((D.identity(y), p), p)
            right.setdefault((C.identity(x), p), p)
            for f in C.arrows:
                if C.src(f) == x and (f, p) not in right:
                    self.error(d.name_span, f"incomplete action table: no entry for {f!r} . {p!r}")
            for u in D.arrows:
                if D.tgt(u) == y and (u, p) not in left:
                    self.error(d.name_span, f"incomplete action table: no entry for {p!r} . {u!r}")
        self.bail()
        value = {(y, x): tuple(p for p in over if over[p] == (y, x)) for y in D.objects for x in C.objects}
        return FinProfunctor(C, D, value, left, right, name=d.name)

    def ctor_profunctor(self, d: Decl) -> FinProfunctor:
        c = d.ctor
        C = self.lookup(d.params[0], d.param_spans[0], "category")
        D = self.lookup(d.params[1], d.param_spans[1], "category")
        if c.name == "hom" and not c.args:
            if C is not D:
                self.error(c.span, "hom profunctor needs equal source and target")
                raise _Failed
            return hom_profunctor(C, name=d.name)
        if c.name == "repr" and len(c.args) == 1:
            F = self.lookup(c.args[0], c.arg_spans[0], "functor")
            if (F.src, F.tgt) != (C, D):
                self.error(c.arg_spans[0], f"{F.name} does not go from {C.name} to {D.name}")
                raise _Failed
            return representable_profunctor(F, name=d.name)
        if c.name == "empty" and not c.args:
            return empty_profunctor(C, D, name=d.name)
        return self._bad_ctor(d, "hom, repr F, empty")

    # -- bicategories ----------------------------------------------------------------
    def block_bicat(self, d: Decl) -> FinBicat:
        cells = self.names(d, "cells", "1-cell")
        units = self.entries(d, "unit", ATOM)
        if len(units) != 1:
            self.error(d.name_span, "a one-object bicategory needs exactly one unit")
            raise _Failed
        (unit,) = units[0].values
        if unit not in cells:
            self.error(units[0].span, f"unit {unit!r} is not a declared 1-cell")
        le = []
        for e in self.entries(d, "order", ORDER):
            for i, a in enumerate(e.values):
                if a not in cells:
                    self.error(e.span_of(i), f"unknown 1-cell {a!r}")
            le.append(tuple(e.values))
        mult: dict = {}
        for e in self.entries(d, "compose", COMPOSE):
            b, a, c = e.values
            for i, x in ((1, a), (0, b), (2, c)):
                if x not in cells:
                    self.error(e.span_of(i), f"unknown 1-cell {x!r}")
            if (a, b) in mult:
                self.error(e.span, f"duplicate composition entry for {b!r} . {a!r}")
            mult[(a, b)] = c
        for a in cells:
            mult.setdefault((unit, a), a)
            mult.setdefault((a, unit), a)
        for a in cells:
            for b in cells:
                if (a, b) not in mult:
                    self.error(d.name_span, f"incomplete composition table: no entry for {b!r} . {a!r}")
        self.bail()
        return PreorderMonoidBicat(list(cells), le, mult, unit, name=d.name)

    def ctor_bicat(self, d: Decl) -> FinBicat:
        c = d.ctor
        if c.name == "discrete" and len(c.args) == 1:
            return discrete_bicat(self.lookup(c.args[0], c.arg_spans[0], "category"), name=d.name)
        if c.name == "delooping" and len(c.args) == 1:
            G = self.lookup(c.args[0], c.arg_spans[0], "category")
            if len(G.objects) != 1:
                self.error(c.arg_spans[0], f"{G.name} has more than one object")
                raise _Failed
            return delooping(G, name=d.name)
        if c.name == "scalar" and len(c.args) == 1 and isinstance(c.args[0], int) and c.args[0] > 0:
            return ScalarBicat(c.args[0], name=d.name)
        if c.name == "co" and len(c.args) == 1:
            B = self.lookup(c.args[0], c.arg_spans[0], "bicat")
            out = co_dual(B)
            out.name = d.name
            return out
        return self._bad_ctor(d, "discrete C, delooping G, scalar N, co B")

    # -- double categories -----------------------------------------------------------
    def block_doublecat(self, d: Decl) -> TableDoubleCat:
        if not d.params:
            self.error(d.name_span, "a doublecat block needs 'over <category>'")
            raise _Failed
        C = self.lookup(d.params[0], d.param_spans[0], "category")
        hor: dict = {}
        for e in self.entries(d, "horizontal", ARROW):
            h, x, y = e.values
            if h in hor:
                self.error(e.span_of(0), f"duplicate horizontal id {h!r}")
            for i, z in ((1, x), (2, y)):
                if z not in C.objects:
                    self.error(e.span_of(i), f"{z!r} is not an object of {C.name}")
            hor[h] = (x, y)
        sq: dict = {}
        for e in self.entries(d, "squares", SHAPE):
            n, shape = e.values
            if len(shape) != 4:
                self.error(e.span_of(1), "a square shape is (left, right, top, bottom)")
                continue
            v, w, h, k = shape
            for z, what in ((v, "vertical"), (w, "vertical"), (h, "horizontal"), (k, "horizontal")):
                known = C.has_arrow(z) if what == "vertical" else z in hor
                if not known:
                    self.error(e.span_of(1), f"square {n!r} refers to undeclared {what} id {z!r}")
            if n in sq:
                self.error(e.span_of(0), f"duplicate square id {n!r}")
            sq[n] = shape
        self.bail()

        def table(section, keys, key_ok, val_ok, what):
            out = {}
            for e in self.entries(d, section, ASSIGN):
                k, v = e.values
                if not key_ok(k):
                    self.error(e.span_of(0), f"{section}: {k!r} is not a declared {what}")
                elif not val_ok(v):
                    self.error(e.span_of(1), f"{section}: {v!r} is not declared")
                else:
                    out[k] = v
            return self._complete(d, section, out, keys)

        def pairs(section, keys, ok, val_ok):
            out = {}
            for e in self.entries(d, section, COMPOSE):
                b, a, c = e.values
                if not (ok(a) and ok(b)):
                    self.error(e.span, f"{section}: unknown operand in {b!r} . {a!r}")
                elif not val_ok(c):
                    self.error(e.span_of(2), f"{section}: {c!r} is not declared")
                else:
                    out[(a, b)] = c
            return self._complete(d, section, out, keys)

        H = lambda z: z in hor  # noqa: E731
        S = lambda z: z in sq  # noqa: E731
        V = C.has_arrow
        hpairs = [(h, k) for h in hor for k in hor if hor[h][1] == hor[k][0]]
        horid = table("horid", list(C.objects), lambda x: x in C.objects, H, "object")
        hcomp = pairs("hcomp", hpairs, H, H)
        vid = table("vid", list(hor), H, S, "horizontal id")
        vcomp = pairs("vcomp", [(s, t) for s in sq for t in sq if sq[s][3] == sq[t][2]], S, S)
        hid = table("hid", list(C.arrows), V, S, "vertical id")
        hsq = pairs("hsquare", [(s, t) for s in sq for t in sq if sq[s][1] == sq[t][0]], S, S)
        lun = table("lunitor", list(hor), H, S, "horizontal id")
        run = table("runitor", list(hor), H, S, "horizontal id")
        assoc = {}
        for e in self.entries(d, "associator", ASSIGN):
            k, v = e.values
            if not (isinstance(k, tuple) and len(k) == 3 and all(H(z) for z in k)):
                self.error(e.span_of(0), "associator: key must be three declared horizontal ids")
            elif not S(v):
                self.error(e.span_of(1), f"associator: {v!r} is not declared")
            else:
                assoc[k] = v
        triples = [(a, b, c) for a, b in hpairs for c in hor if hor[b][1] == hor[c][0]]
        self._complete(d, "associator", assoc, triples)
        self.bail()
        return TableDoubleCat(C, hor, horid, hcomp, sq, vid, vcomp, hid, hsq, lun, run, assoc, name=d.name)

    def _complete(self, d: Decl, section: str, table: dict, keys) -> dict:
        for k in keys:
            if k not in table:
                s = d.section(section)
                self.error(s.span if s else d.name_span, f"incomplete {section} table: no entry for {k!r}")
        return table

    def ctor_doublecat(self, d: Decl) -> PseudoDoubleCat:
        c = d.ctor
        opts = dict(c.options)
        known = {"apex_bound", "feet", "square_apex_bound", "depth"}
        for k in opts:
            if k not in known:
                self.error(c.span, f"unknown option {k!r}")
                raise _Failed
        kw = {k: opts[k] for k in ("apex_bound", "feet", "square_apex_bound") if k in opts}
        if c.name == "square" and len(c.args) == 1:
            return square_double_cat(self.lookup(c.args[0], c.arg_spans[0], "category"), name=d.name)
        if c.name == "span" and len(c.args) == 1:
            return span_double_cat(self.lookup(c.args[0], c.arg_spans[0], "category"), name=d.name, **kw)
        if c.name == "cospan" and len(c.args) == 1:
            arg = self.module.values.get(c.args[0])
            L = arg if isinstance(arg, FinFunctor) else IdentityFunctor(self.lookup(c.args[0], c.arg_spans[0], "category"))
            return structured_cospan_double_cat(L, name=d.name, **kw)
        if c.name == "prof" and c.args:
            cats, functors, profs = [], [], []
            for a, s in zip(c.args, c.arg_spans):
                v = self.module.values.get(a)
                bucket = {FinCat: cats, FinFunctor: functors, FinProfunctor: profs}
                for t, lst in bucket.items():
                    if isinstance(v, t):
                        lst.append(v)
                        break
                else:
                    self.error(s, f"{a!r} is not a declared category, functor or profunctor")
                    raise _Failed
            return prof_double_cat(cats, functors, profs, depth=opts.get("depth", 2), name=d.name)
        return self._bad_ctor(d, "square C, span C, cospan C|F, prof X ...")

    # -- Verity double bicategories ------------------------------------------------------
    def ctor_verity(self, d: Decl) -> VerityDoubleBicat:
        c = d.ctor
        if c.name == "squares" and len(c.args) == 1:
            return square_verity(self.lookup(c.args[0], c.arg_spans[0], "bicat"), name=d.name)
        if c.name == "of" and len(c.args) == 1:
            return double_cat_to_verity(self.lookup(c.args[0], c.arg_spans[0], "doublecat"), name=d.name)
        return self._bad_ctor(d, "squares B, of D")

    def block_verity(self, d: Decl):
        self.error(d.span, "verity declarations are written '= squares B;' or '= of D;'")
        raise _Failed

    # -- probes ----------------------------------------------------------------------
    def block_probes(self, d: Decl) -> DoubleProbe:
        D = self.lookup(d.params[0], d.param_spans[0], "doublecat")
        C = D.vcat
        feet = list(self.names(d, "feet", "object"))
        for x in feet:
            if x not in C.objects:
                raise ClosureExceeded(f"probe object {x!r} lies outside {C.name}")
        opts = {e.values[0]: e.values[1] for e in self.entries(d, "options", ASSIGN)}
        sab = opts.get("square_apex_bound", 1)
        wrap = {SpanDoubleCat: Span, StructuredCospanDoubleCat: Cospan}.get(type(D))
        declared = self.entries(d, "horizontal", ATOM)
        if declared:
            horizontal = []
            for e in declared:
                (h,) = e.values
                if wrap is not None:
                    if not (isinstance(h, tuple) and len(h) == 5):
                        self.error(e.span, "expected (src, tgt, apex, left, right)")
                        continue
                    h = wrap(*h)
                    x, y = h.src, h.tgt
                else:
                    x, y = D.hsrc(h), D.htgt(h)
                if x not in feet or y not in feet or h not in D.hor(x, y):
                    raise ClosureExceeded(f"probe horizontal {e.values[0]!r} lies outside the carrier of {D.name}")
                horizontal.append(h)
        else:
            horizontal = [h for x in feet for y in feet for h in D.hor(x, y)]
        self.bail()
        vertical = [f for x in feet for y in feet for f in C.hom(x, y)]
        if isinstance(C, FinSet):
            small = [h for h in horizontal if getattr(h, "apex", 0) <= sab]
            gens = finset_square_generators(feet)
        else:
            small, gens = horizontal, vertical
        probe = DoubleProbe(tuple(feet), tuple(vertical), tuple(horizontal), tuple(squares_among(D, small, gens)))
        D.probe = probe
        return probe

    def ctor_probes(self, d: Decl):
        self.error(d.span, "probes are declared with a block")
        raise _Failed


def elaborate(doc: Document, check: bool = True, module: Module | None = None) -> Module:
    """Elaborate every declaration of ``doc`` into ``module`` (a fresh one by default).

    With ``check`` the law report of each block declaration is computed and attached;
    reports for constructions are computed on demand by :meth:`Module.check`.
    """
    return Elaborator(module).run(doc, check)


def load(text: str, file: str = "<input>", check: bool = True, module: Module | None = None) -> Module:
    doc, diags = parse(text, file)
    if diags:
        raise ElaborationError(diags)
    return elaborate(doc, check, module)


def load_file(path, check: bool = True, module: Module | None = None) -> Module:
    p = Path(path)
    return load(p.read_text(encoding="utf-8"), str(p), check, module)
