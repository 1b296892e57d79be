"""Library values back to syntax trees.

Table-backed values print as blocks. Constructions print as the constructor call that
rebuilds them, so virtual structures (spans of finite sets, profunctors) stay finite on
the page. Dependencies are emitted first and shared by name.
"""

from __future__ import annotations

from ..bicat import CoBicat, DiscreteBicat, FinBicat, PreorderMonoidBicat, ScalarBicat
from ..cat import FinCat, FinFunctor, FinProfunctor, FinSet, hom_profunctor
from ..constructions import IdentityFunctor, ProfDoubleCat, SpanDoubleCat, SquareDoubleCat, StructuredCospanDoubleCat
from ..double import PseudoDoubleCat, TableDoubleCat, tabulate_double
from ..verity import DoubleCatVerity, SquareVerity, VerityDoubleBicat
from .ast import ARROW, ASSIGN, ATOM, COMPOSE, ELEMENT, MAP, ORDER, SHAPE, Ctor, Decl, Document, Entry, Section
from .printer import print_document


def _sec(name: str, entries) -> Section:
    return Section(name, tuple(entries))


def _atoms(xs) -> list[Entry]:
    return [Entry(ATOM, (x,)) for x in xs]


class Unparser:
    def __init__(self, materialize: bool = False):
        self.materialize = materialize
        self.decls: dict[str, Decl] = {}
        self.values: dict[str, object] = {}

    def add(self, name: str, value, build) -> str:
        if name in self.values:
            if self.values[name] is not value and self.values[name] != value:
                raise ValueError(f"two different values are both named {name!r}")
            return name
        decl = build()
        self.values[name] = value
        self.decls[name] = decl
        return name

    def document(self) -> Document:
        return Document(tuple(self.decls.values()))

    # -- dispatch --------------------------------------------------------------------
    def value(self, v) -> str:
        for t, meth in (
            (FinCat, self.category),
            (FinFunctor, self.functor),
            (FinProfunctor, self.profunctor),
            (FinBicat, self.bicat),
            (PseudoDoubleCat, self.doublecat),
            (VerityDoubleBicat, self.verity),
        ):
            if isinstance(v, t):
                return meth(v)
        raise TypeError(f"no surface syntax for {type(v).__name__}")

    # -- categories ------------------------------------------------------------------
    def category(self, C: FinCat) -> str:
        def build():
            if isinstance(C, FinSet):
                return Decl("category", C.name, ctor=Ctor("finset", (C.bound,)))
            ids = {C.identity(x) for x in C.objects}
            arrows = [f for f in C.arrows if f not in ids]
            sections = [_sec("objects", _atoms(C.objects))]
            odd = [(x, C.identity(x)) for x in C.objects if C.identity(x) != f"id_{x}"]
            if odd:
                sections.append(_sec("identities", [Entry(ASSIGN, p) for p in odd]))
            if arrows:
                sections.append(_sec("arrows", [Entry(ARROW, (f, C.src(f), C.tgt(f))) for f in arrows]))
            comp = [
                Entry(COMPOSE, (g, f, C.compose(f, g))) for f in arrows for g in arrows if C.tgt(f) == C.src(g)
            ]
            if comp:
                sections.append(_sec("compose", comp))
            return Decl("category", C.name, sections=tuple(sections))

        return self.add(C.name, C, build)

    def functor(self, F: FinFunctor) -> str:
        src, tgt = self.category(F.src), self.category(F.tgt)

        def build():
            C = F.src
            ids = {C.identity(x) for x in C.objects}
            return Decl(
                "functor",
                F.name,
                (src, tgt),
                sections=(
                    _sec("objects", [Entry(MAP, (x, F.ob(x))) for x in C.objects]),
                    _sec("arrows", [Entry(MAP, (f, F.ar(f))) for f in C.arrows if f not in ids]),
                ),
            )

        return self.add(F.name, F, build)

    def profunctor(self, P: FinProfunctor) -> str:
        src, tgt = self.category(P.src), self.category(P.tgt)

        def build():
            C, D = P.src, P.tgt
            if C is D and P == hom_profunctor(C):
                return Decl("profunctor", P.name, (src, tgt), ctor=Ctor("hom", ()))
            clash = set(P.index) & (set(C.arrows) | set(D.arrows))
            if clash:
                raise ValueError(f"{P.name}: element ids {sorted(map(repr, clash))} are also arrow ids")
            elements = [Entry(ELEMENT, (p, y, x)) for p, (y, x) in P.index.items()]
            actions = []
            for p, (y, x) in P.index.items():
                for f in C.arrows:
                    if C.src(f) == x and not C.is_identity(f):
                        actions.append(Entry(COMPOSE, (f, p, P.act_right(f, p))))
                for u in D.arrows:
                    if D.tgt(u) == y and not D.is_identity(u):
                        actions.append(Entry(COMPOSE, (p, u, P.act_left(u, p))))
            secs = [_sec("elements", elements)] + ([_sec("actions", actions)] if actions else [])
            return Decl("profunctor", P.name, (src, tgt), sections=tuple(secs))

        return self.add(P.name, P, build)

    # -- bicategories ----------------------------------------------------------------
    def bicat(self, B: FinBicat) -> str:
        if isinstance(B, DiscreteBicat):
            c = self.category(B.cat)
            return self.add(B.name, B, lambda: Decl("bicat", B.name, ctor=Ctor("discrete", (c,))))
        if isinstance(B, CoBicat):
            b = self.bicat(B.base)
            return self.add(B.name, B, lambda: Decl("bicat", B.name, ctor=Ctor("co", (b,))))
        if isinstance(B, ScalarBicat):
            return self.add(B.name, B, lambda: Decl("bicat", B.name, ctor=Ctor("scalar", (B.n,))))
        if isinstance(B, PreorderMonoidBicat):

            def build():
                u = B.unit
                cells = B.elements
                order = [Entry(ORDER, (a, b)) for a in cells for b in cells if a != b and (a, b) in B.le]
                comp = [
                    Entry(COMPOSE, (b, a, B.mult[(a, b)])) for a in cells for b in cells if u not in (a, b)
                ]
                secs = [_sec("cells", _atoms(cells)), _sec("unit", _atoms([u]))]
                if order:
                    secs.append(_sec("order", order))
                if comp:
                    secs.append(_sec("compose", comp))
                return Decl("bicat", B.name, sections=tuple(secs))

            return self.add(B.name, B, build)
        raise TypeError(f"no surface syntax for bicategory {B.name}")

    # -- double categories -----------------------------------------------------------
    def doublecat(self, D: PseudoDoubleCat) -> str:
        if isinstance(D, TableDoubleCat) or (self.materialize and D.materialized):
            return self._table(D)
        if isinstance(D, SquareDoubleCat):
            c = self.category(D.vcat)
            return self.add(D.name, D, lambda: Decl("doublecat", D.name, ctor=Ctor("square", (c,))))
        if isinstance(D, SpanDoubleCat):
            c = self.category(D.vcat)
            opts = tuple(D.options.items())
            return self.add(D.name, D, lambda: Decl("doublecat", D.name, ctor=Ctor("span", (c,), opts)))
        if isinstance(D, StructuredCospanDoubleCat):
            arg = self.category(D.L.src) if isinstance(D.L, IdentityFunctor) else self.functor(D.L)
            opts = tuple(D.options.items())
            return self.add(D.name, D, lambda: Decl("doublecat", D.name, ctor=Ctor("cospan", (arg,), opts)))
        if isinstance(D, ProfDoubleCat):
            cats, functors, profs, depth = D.seed
            args = tuple(
                [self.category(C) for C in cats]
                + [self.functor(F) for F in functors]
                + [self.profunctor(P) for P in profs]
            )
            opts = (("depth", depth),) if depth != 2 else ()
            return self.add(D.name, D, lambda: Decl("doublecat", D.name, ctor=Ctor("prof", args, opts)))
        raise TypeError(f"no surface syntax for double category {D.name}")

    def _table(self, D: PseudoDoubleCat) -> str:
        T = D if isinstance(D, TableDoubleCat) else tabulate_double(D, name=D.name)
        c = self.category(T.vcat)

        def build():
            t = T.tables()
            assign = lambda m: [Entry(ASSIGN, kv) for kv in m.items()]  # noqa: E731
            pairs = lambda m: [Entry(COMPOSE, (b, a, v)) for (a, b), v in m.items()]  # noqa: E731
            secs = [
                _sec("horizontal", [Entry(ARROW, (h, x, y)) for h, (x, y) in t["horizontal"].items()]),
                _sec("horid", assign(t["horid"])),
                _sec("hcomp", pairs(t["hcomp"])),
                _sec("squares", [Entry(SHAPE, (n, tuple(b))) for n, b in t["squares"].items()]),
                _sec("vid", assign(t["vid"])),
                _sec("vcomp", pairs(t["vcomp"])),
                _sec("hid", assign(t["hid"])),
                _sec("hsquare", pairs(t["hsquare"])),
                _sec("lunitor", assign(t["lunitor"])),
                _sec("runitor", assign(t["runitor"])),
                _sec("associator", assign(t["associator"])),
            ]
            return Decl("doublecat", D.name, (c,), sections=tuple(s for s in secs if s.entries))

        return self.add(D.name, D, build)

    # -- Verity double bicategories --------------------------------------------------
    def verity(self, VB: VerityDoubleBicat) -> str:
        if isinstance(VB, SquareVerity):
            b = self.bicat(VB.B)
            return self.add(VB.name, VB, lambda: Decl("verity", VB.name, ctor=Ctor("squares", (b,))))
        if isinstance(VB, DoubleCatVerity):
            d = self.doublecat(VB.D)
            return self.add(VB.name, VB, lambda: Decl("verity", VB.name, ctor=Ctor("of", (d,))))
        raise TypeError(f"no surface syntax for {VB.name}")


def to_document(*values, materialize: bool = False) -> Document:
    """A document declaring ``values`` and everything they refer to."""
    u = Unparser(materialize)
    for v in values:
        u.value(v)
    return u.document()


def dump(*values, materialize: bool = False) -> str:
    """Canonical text for ``values``. With ``materialize`` finite constructions print as tables."""
    return print_document(to_document(*values, materialize=materialize))
