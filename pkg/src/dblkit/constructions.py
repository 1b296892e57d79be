"""Factories for the standard double categories: squares, spans, structured cospans and
profunctors."""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from ._util import FrozenDict, memo, sort_key
from .cat import (
    FinCat,
    FinFunctor,
    FinProfunctor,
    FinSet,
    compose_functors,
    hom_profunctor,
    identity_functor,
    prof_compose,
    representable_profunctor,
)
from .double import DoubleProbe, PseudoDoubleCat, Square, check_boundary, squares_among
from .errors import ClosureExceeded, MalformedTable, MiddleMismatch
from .limits import Limits, limits_for


# ---------------------------------------------------------------------------------------
# squares


class SquareDoubleCat(PseudoDoubleCat):
    """Horizontal and vertical morphisms are both the arrows of ``C``; a square exists
    (uniquely) exactly when it commutes."""

    def __init__(self, C: FinCat, name: str | None = None):
        self.vcat = C
        self.name = name or f"Sq({C.name})"

    def hor(self, x, y):
        return self.vcat.hom(x, y)

    def hsrc(self, h):
        return self.vcat.src(h)

    def htgt(self, h):
        return self.vcat.tgt(h)

    def horid(self, x):
        return self.vcat.identity(x)

    def hcomp(self, h, k):
        return self.vcat.compose(h, k)

    def squares(self, left, right, top, bottom):
        C = self.vcat
        if C.compose(top, right) == C.compose(left, bottom):
            return (Square(left, right, top, bottom),)
        return ()

    def sqvid(self, h):
        C = self.vcat
        return Square(C.identity(C.src(h)), C.identity(C.tgt(h)), h, h)

    def sqvcomp(self, s, t):
        check_boundary(s.bottom == t.top, f"cannot stack {s} on {t}")
        C = self.vcat
        return Square(C.compose(s.left, t.left), C.compose(s.right, t.right), s.top, t.bottom)

    def sqhid(self, v):
        C = self.vcat
        return Square(v, v, C.identity(C.src(v)), C.identity(C.tgt(v)))

    def sqhcomp(self, s, t):
        check_boundary(s.right == t.left, f"cannot place {s} beside {t}")
        C = self.vcat
        return Square(s.left, t.right, C.compose(s.top, t.top), C.compose(s.bottom, t.bottom))

    def lunitor(self, h):
        return self.sqvid(h)

    def runitor(self, h):
        return self.sqvid(h)

    def associator(self, h1, h2, h3):
        return self.sqvid(self.vcat.compose_all(h1, h2, h3))


def square_double_cat(C: FinCat, name: str | None = None) -> SquareDoubleCat:
    return SquareDoubleCat(C, name)


# ---------------------------------------------------------------------------------------
# probes over skeletal finite sets


def finset_square_generators(feet: Sequence[int]) -> list:
    """Identities, the swap of 2, the map 2 -> 1 and the first point 1 -> 2 (those that
    exist among ``feet``). Square-quantified laws are probed with these as vertical sides."""
    gens = [(x, x, tuple(range(x))) for x in feet]
    if 2 in feet:
        gens.append((2, 2, (1, 0)))
    if 1 in feet and 2 in feet:
        gens += [(2, 1, (0, 0)), (1, 2, (0,))]
    return gens


def finset_probe(D: PseudoDoubleCat, feet: Sequence[int], square_apex_bound: int) -> DoubleProbe:
    C = D.vcat
    vertical = tuple(f for x in feet for y in feet for f in C.hom(x, y))
    horizontal = tuple(h for x in feet for y in feet for h in D.hor(x, y))
    small = [h for h in horizontal if h.apex <= square_apex_bound]
    squares = squares_among(D, small, finset_square_generators(feet))
    return DoubleProbe(tuple(feet), vertical, horizontal, tuple(squares))


# ---------------------------------------------------------------------------------------
# spans


def _options(apex_bound, feet, square_apex_bound) -> dict:
    """The non-default construction arguments, kept so the structure can be printed back."""
    out = {}
    if apex_bound is not None:
        out["apex_bound"] = apex_bound
    if feet is not None:
        out["feet"] = tuple(feet)
    if square_apex_bound != 1:
        out["square_apex_bound"] = square_apex_bound
    return out


class Span(NamedTuple):
    """``src <-left- apex -right-> tgt``."""

    src: Hashable
    tgt: Hashable
    apex: Hashable
    left: Hashable
    right: Hashable


class SpanDoubleCat(PseudoDoubleCat):
    """Spans in ``C`` composed by chosen pullbacks.

    Materialized when ``C`` is a table category; over skeletal finite sets the structure is
    virtual and checked on a probe of feet ``feet`` and apexes up to ``apex_bound``.
    """

    def __init__(
        self,
        C: FinCat,
        limits: Limits | None = None,
        apex_bound: int | None = None,
        feet: Sequence | None = None,
        name: str | None = None,
        square_apex_bound: int = 1,
    ):
        self.vcat = C
        self.limits = limits or limits_for(C)
        self.name = name or f"Span({C.name})"
        self.apex_bound = apex_bound
        self.options = _options(apex_bound, feet, square_apex_bound)
        if isinstance(C, FinSet):
            self.materialized = False
            bound = 2 if apex_bound is None else apex_bound
            self.apex_bound = bound
            feet = tuple(feet if feet is not None else (1, 2))
            for x in feet:
                if x > C.bound:
                    raise ClosureExceeded(f"foot {x} outside carrier bound {C.bound}")
            self.probe = finset_probe(self, feet, square_apex_bound)

    def _apexes(self):
        C = self.vcat
        if self.apex_bound is None:
            return C.objects
        return tuple(z for z in C.objects if sort_key(z) <= sort_key(self.apex_bound))

    @memo
    def hor(self, x, y):
        C = self.vcat
        return tuple(
            Span(x, y, z, l, r) for z in self._apexes() for l in C.hom(z, x) for r in C.hom(z, y)
        )

    def hsrc(self, h):
        return h.src

    def htgt(self, h):
        return h.tgt

    def horid(self, x):
        i = self.vcat.identity(x)
        return Span(x, x, x, i, i)

    @memo
    def hcomp(self, h, k):
        check_boundary(h.tgt == k.src, f"spans {h} and {k} do not compose")
        C = self.vcat
        p = self.limits.pullback(h.right, k.left)
        a, b = p.legs
        return Span(h.src, k.tgt, p.apex, C.compose(a, h.left), C.compose(b, k.right))

    def squares(self, left, right, top, bottom):
        C = self.vcat
        want_l = C.compose(top.left, left)
        want_r = C.compose(top.right, right)
        return tuple(
            Square(left, right, top, bottom, m)
            for m in C.hom(top.apex, bottom.apex)
            if C.compose(m, bottom.left) == want_l and C.compose(m, bottom.right) == want_r
        )

    def sqvid(self, h):
        C = self.vcat
        return Square(C.identity(h.src), C.identity(h.tgt), h, h, C.identity(h.apex))

    def sqvcomp(self, s, t):
        check_boundary(s.bottom == t.top, "vertical boundary mismatch")
        C = self.vcat
        return Square(C.compose(s.left, t.left), C.compose(s.right, t.right), s.top, t.bottom, C.compose(s.cell, t.cell))

    def sqhid(self, v):
        C = self.vcat
        return Square(v, v, self.horid(C.src(v)), self.horid(C.tgt(v)), v)

    @memo
    def sqhcomp(self, s, t):
        check_boundary(s.right == t.left, "horizontal boundary mismatch")
        C = self.vcat
        top, bottom = self.hcomp(s.top, t.top), self.hcomp(s.bottom, t.bottom)
        ptop = self.limits.pullback(s.top.right, t.top.left)
        pbot = self.limits.pullback(s.bottom.right, t.bottom.left)
        a, b = ptop.legs
        m = self.limits.pullback_mediator(pbot, type(ptop)(ptop.apex, (C.compose(a, s.cell), C.compose(b, t.cell))))
        return Square(s.left, t.right, top, bottom, m)

    def _globular(self, top, bottom, cell):
        C = self.vcat
        return Square(C.identity(top.src), C.identity(top.tgt), top, bottom, cell)

    @memo
    def lunitor(self, h):
        p = self.limits.pullback(self.vcat.identity(h.src), h.left)
        return self._globular(self.hcomp(self.horid(h.src), h), h, p.legs[1])

    @memo
    def runitor(self, h):
        p = self.limits.pullback(h.right, self.vcat.identity(h.tgt))
        return self._globular(self.hcomp(h, self.horid(h.tgt)), h, p.legs[0])

    @memo
    def associator(self, h1, h2, h3):
        C, L = self.vcat, self.limits
        q = L.pullback(h2.right, h3.left)  # apex of h2 h3
        p = L.pullback(h1.right, C.compose(q.legs[0], h2.left))  # apex of h1 (h2 h3)
        r = L.pullback(h1.right, h2.left)  # apex of h1 h2
        r2 = L.pullback(C.compose(r.legs[1], h2.right), h3.left)  # apex of (h1 h2) h3
        p1, p23 = p.legs
        cone = type(p)
        m1 = L.pullback_mediator(r, cone(p.apex, (p1, C.compose(p23, q.legs[0]))))
        m = L.pullback_mediator(r2, cone(p.apex, (m1, C.compose(p23, q.legs[1]))))
        top = self.hcomp(h1, self.hcomp(h2, h3))
        bottom = self.hcomp(self.hcomp(h1, h2), h3)
        return self._globular(top, bottom, m)

    def vinverse(self, s):
        C = self.vcat
        if not (C.is_identity(s.left) and C.is_identity(s.right)):
            return None
        inv = C.inverse(s.cell)
        if inv is None:
            return None
        return Square(s.left, s.right, s.bottom, s.top, inv)


def span_double_cat(
    C: FinCat,
    chosen_pullbacks: Mapping | None = None,
    apex_bound: int | None = None,
    feet: Sequence | None = None,
    name: str | None = None,
    square_apex_bound: int = 1,
) -> SpanDoubleCat:
    limits = limits_for(C, chosen_pullbacks=chosen_pullbacks)
    return SpanDoubleCat(C, limits, apex_bound, feet, name, square_apex_bound)


# ---------------------------------------------------------------------------------------
# structured cospans


class Cospan(NamedTuple):
    """``L(src) -left-> apex <-right- L(tgt)``."""

    src: Hashable
    tgt: Hashable
    apex: Hashable
    left: Hashable
    right: Hashable


class IdentityFunctor:
    """The identity on a category too large to tabulate (e.g. skeletal finite sets)."""

    def __init__(self, cat: FinCat):
        self.src = self.tgt = cat
        self.name = f"id_{cat.name}"

    def ob(self, x):
        return x

    def ar(self, f):
        return f


class StructuredCospanDoubleCat(PseudoDoubleCat):
    """Cospans ``L x -> z <- L y`` in ``L.tgt`` composed by chosen pushouts, with vertical
    morphisms from ``L.src``."""

    def __init__(
        self,
        L,
        limits: Limits | None = None,
        apex_bound: int | None = None,
        feet: Sequence | None = None,
        name: str | None = None,
        square_apex_bound: int = 1,
    ):
        self.L = L
        self.vcat = L.src
        self.C2 = L.tgt
        self.limits = limits or limits_for(self.C2)
        self.name = name or f"Csp({L.name})"
        self.apex_bound = apex_bound
        self.options = _options(apex_bound, feet, square_apex_bound)
        if isinstance(self.C2, FinSet) or isinstance(self.vcat, FinSet):
            self.materialized = False
            self.apex_bound = 2 if apex_bound is None else apex_bound
            feet = tuple(feet if feet is not None else (1, 2))
            for x in feet:
                if x > self.C2.bound:
                    raise ClosureExceeded(f"foot {x} outside carrier bound {self.C2.bound}")
            self.probe = finset_probe(self, feet, square_apex_bound)

    def _apexes(self):
        if self.apex_bound is None:
            return self.C2.objects
        return tuple(z for z in self.C2.objects if sort_key(z) <= sort_key(self.apex_bound))

    @memo
    def hor(self, x, y):
        C2, L = self.C2, self.L
        return tuple(
            Cospan(x, y, z, l, r) for z in self._apexes() for l in C2.hom(L.ob(x), z) for r in C2.hom(L.ob(y), z)
        )

    def hsrc(self, h):
        return h.src

    def htgt(self, h):
        return h.tgt

    def horid(self, x):
        lx = self.L.ob(x)
        i = self.C2.identity(lx)
        return Cospan(x, x, lx, i, i)

    @memo
    def hcomp(self, h, k):
        check_boundary(h.tgt == k.src, f"cospans {h} and {k} do not compose")
        C2 = self.C2
        p = self.limits.pushout(h.right, k.left)
        a, b = p.legs
        return Cospan(h.src, k.tgt, p.apex, C2.compose(h.left, a), C2.compose(k.right, b))

    def squares(self, left, right, top, bottom):
        C2, L = self.C2, self.L
        want_l = C2.compose(L.ar(left), bottom.left)
        want_r = C2.compose(L.ar(right), bottom.right)
        return tuple(
            Square(left, right, top, bottom, m)
            for m in C2.hom(top.apex, bottom.apex)
            if C2.compose(top.left, m) == want_l and C2.compose(top.right, m) == want_r
        )

    def sqvid(self, h):
        C1 = self.vcat
        return Square(C1.identity(h.src), C1.identity(h.tgt), h, h, self.C2.identity(h.apex))

    def sqvcomp(self, s, t):
        check_boundary(s.bottom == t.top, "vertical boundary mismatch")
        C1 = self.vcat
        return Square(
            C1.compose(s.left, t.left), C1.compose(s.right, t.right), s.top, t.bottom, self.C2.compose(s.cell, t.cell)
        )

    def sqhid(self, v):
        C1 = self.vcat
        return Square(v, v, self.horid(C1.src(v)), self.horid(C1.tgt(v)), self.L.ar(v))

    @memo
    def sqhcomp(self, s, t):
        check_boundary(s.right == t.left, "horizontal boundary mismatch")
        C2 = self.C2
        top, bottom = self.hcomp(s.top, t.top), self.hcomp(s.bottom, t.bottom)
        ptop = self.limits.pushout(s.top.right, t.top.left)
        pbot = self.limits.pushout(s.bottom.right, t.bottom.left)
        c, d = pbot.legs
        m = self.limits.pushout_mediator(ptop, type(pbot)(pbot.apex, (C2.compose(s.cell, c), C2.compose(t.cell, d))))
        return Square(s.left, t.right, top, bottom, m)

    def _globular(self, top, bottom, cell):
        C1 = self.vcat
        return Square(C1.identity(top.src), C1.identity(top.tgt), top, bottom, cell)

    @memo
    def lunitor(self, h):
        C2 = self.C2
        p = self.limits.pushout(C2.identity(self.L.ob(h.src)), h.left)
        m = self.limits.pushout_mediator(p, type(p)(h.apex, (h.left, C2.identity(h.apex))))
        return self._globular(self.hcomp(self.horid(h.src), h), h, m)

    @memo
    def runitor(self, h):
        C2 = self.C2
        p = self.limits.pushout(h.right, C2.identity(self.L.ob(h.tgt)))
        m = self.limits.pushout_mediator(p, type(p)(h.apex, (C2.identity(h.apex), h.right)))
        return self._globular(self.hcomp(h, self.horid(h.tgt)), h, m)

    @memo
    def associator(self, h1, h2, h3):
        C2, Lm = self.C2, self.limits
        q = Lm.pushout(h2.right, h3.left)  # apex of h2 h3
        q2, q3 = q.legs
        p = Lm.pushout(h1.right, C2.compose(h2.left, q2))  # apex of h1 (h2 h3)
        r = Lm.pushout(h1.right, h2.left)  # apex of h1 h2
        r1, r2 = r.legs
        r_2 = Lm.pushout(C2.compose(h2.right, r2), h3.left)  # apex of (h1 h2) h3
        s12, s3 = r_2.legs
        cocone = type(p)
        mq = Lm.pushout_mediator(q, cocone(r_2.apex, (C2.compose(r2, s12), s3)))
        m = Lm.pushout_mediator(p, cocone(r_2.apex, (C2.compose(r1, s12), mq)))
        top = self.hcomp(h1, self.hcomp(h2, h3))
        bottom = self.hcomp(self.hcomp(h1, h2), h3)
        return self._globular(top, bottom, m)

    def vinverse(self, s):
        C1 = self.vcat
        if not (C1.is_identity(s.left) and C1.is_identity(s.right)):
            return None
        inv = self.C2.inverse(s.cell)
        if inv is None:
            return None
        return Square(s.left, s.right, s.bottom, s.top, inv)


def structured_cospan_double_cat(
    L,
    chosen_pushouts: Mapping | None = None,
    apex_bound: int | None = None,
    feet: Sequence | None = None,
    name: str | None = None,
    square_apex_bound: int = 1,
) -> StructuredCospanDoubleCat:
    limits = limits_for(L.tgt, chosen_pushouts=chosen_pushouts)
    return StructuredCospanDoubleCat(L, limits, apex_bound, feet, name, square_apex_bound)


# ---------------------------------------------------------------------------------------
# profunctors


def natural_maps(P: FinProfunctor, Q: FinProfunctor, F: FinFunctor, G: FinFunctor) -> list[FrozenDict]:
    """All families ``P(d, c) -> Q(G d, F c)`` natural in both variables.

    ``F: P.src -> Q.src`` acts on the covariant side, ``G: P.tgt -> Q.tgt`` on the
    contravariant side. Backtracking, with each partial assignment checked against the
    actions among already assigned elements.
    """
    elems = list(P.index)
    targets = [Q.at(G.ob(P.index[p][0]), F.ob(P.index[p][1])) for p in elems]
    constraints: dict = {p: [] for p in elems}
    for (u, p), p2 in P.left.items():
        constraints[p].append(("l", u, p2))
        constraints[p2].append(("l-", u, p))
    for (f, p), p2 in P.right.items():
        constraints[p].append(("r", f, p2))
        constraints[p2].append(("r-", f, p))
    out: list = []
    assign: dict = {}

    def ok(p) -> bool:
        q = assign[p]
        for kind, a, other in constraints[p]:
            if other not in assign:
                continue
            if kind == "l" and assign[other] != Q.act_left(G.ar(a), q):
                return False
            if kind == "l-" and q != Q.act_left(G.ar(a), assign[other]):
                return False
            if kind == "r" and assign[other] != Q.act_right(F.ar(a), q):
                return False
            if kind == "r-" and q != Q.act_right(F.ar(a), assign[other]):
                return False
        return True

    def go(i: int) -> None:
        if i == len(elems):
            out.append(FrozenDict(assign))
            return
        p = elems[i]
        for q in targets[i]:
            assign[p] = q
            if ok(p):
                go(i + 1)
            del assign[p]

    go(0)
    return out


def is_natural_map(P, Q, F, G, phi: Mapping) -> bool:
    if set(phi) != set(P.index):
        return False
    for p, q in phi.items():
        d, c = P.index[p]
        if Q.index.get(q) != (G.ob(d), F.ob(c)):
            return False
    for (u, p), p2 in P.left.items():
        if phi[p2] != Q.act_left(G.ar(u), phi[p]):
            return False
    for (f, p), p2 in P.right.items():
        if phi[p2] != Q.act_right(F.ar(f), phi[p]):
            return False
    return True


def functor_category(cats: Iterable[FinCat], functors: Iterable[FinFunctor], name: str = "Cat") -> FinCat:
    """The category of the given categories and the closure of the given functors under
    composition (identities added)."""
    cats = list(dict.fromkeys(cats))
    arrows: dict = {}
    for C in cats:
        i = identity_functor(C)
        arrows.setdefault(i, i)
    for F in functors:
        if F.src not in cats or F.tgt not in cats:
            raise MalformedTable(f"functor {F.name} leaves the seed categories")
        arrows.setdefault(F, F)
    changed = True
    while changed:
        changed = False
        for F, G in itertools.product(list(arrows), repeat=2):
            if F.tgt == G.src:
                H = compose_functors(F, G)
                if H not in arrows:
                    arrows[H] = H
                    changed = True
    comp = {}
    for F in arrows:
        for G in arrows:
            if F.tgt == G.src:
                comp[(F, G)] = arrows[compose_functors(F, G)]
    return FinCat(
        cats,
        {F: (F.src, F.tgt) for F in arrows},
        {C: arrows[identity_functor(C)] for C in cats},
        comp,
        name=name,
    )


class ProfDoubleCat(PseudoDoubleCat):
    """Categories, functors, profunctors and natural families, checked on a seed closure.

    A square with left ``F``, right ``G``, top ``P`` and bottom ``Q`` is a family
    ``P(d, c) -> Q(G d, F c)`` natural in both variables, stored as a frozen element map.
    """

    materialized = False

    def __init__(
        self,
        cats: Sequence[FinCat],
        functors: Sequence[FinFunctor] = (),
        profunctors: Sequence[FinProfunctor] = (),
        depth: int = 2,
        name: str = "Prof",
    ):
        self.name = name
        self.vcat = functor_category(cats, functors, name=f"{name}.vert")
        self.seed = (tuple(cats), tuple(functors), tuple(profunctors), depth)
        seeds = [hom_profunctor(C) for C in self.vcat.objects]
        for P in profunctors:
            if P.src not in self.vcat.objects or P.tgt not in self.vcat.objects:
                raise MiddleMismatch(f"profunctor {P.name} leaves the seed categories")
            seeds.append(P)
        closure = list(dict.fromkeys(seeds))
        layer = list(closure)
        for _ in range(depth - 1):
            new = []
            for P in layer:
                for Q in seeds:
                    if P.tgt == Q.src:
                        R = prof_compose(P, Q)
                        if R not in closure and R not in new:
                            new.append(R)
            closure.extend(new)
            layer = new
        # squares between composites are too many to pair up; the probe keeps squares
        # between seeds, composites still enter through the coherence cells
        small = list(dict.fromkeys(seeds))
        self.probe = DoubleProbe(
            self.vcat.objects, self.vcat.arrows, tuple(closure), tuple(squares_among(self, small, self.vcat.arrows))
        )

    def hor(self, x, y):
        return tuple(P for P in self.probe.horizontal if P.src == x and P.tgt == y)

    def hsrc(self, h):
        return h.src

    def htgt(self, h):
        return h.tgt

    @memo
    def horid(self, x):
        return hom_profunctor(x)

    @memo
    def hcomp(self, h, k):
        return prof_compose(h, k)

    @memo
    def squares(self, left, right, top, bottom):
        if (left.src, right.src, left.tgt, right.tgt) != (top.src, top.tgt, bottom.src, bottom.tgt):
            return ()
        return tuple(Square(left, right, top, bottom, m) for m in natural_maps(top, bottom, left, right))

    def sqvid(self, h):
        return Square(self.vcat.identity(h.src), self.vcat.identity(h.tgt), h, h, FrozenDict({p: p for p in h.index}))

    def sqvcomp(self, s, t):
        check_boundary(s.bottom == t.top, "vertical boundary mismatch")
        C = self.vcat
        cell = FrozenDict({p: t.cell[q] for p, q in s.cell.items()})
        return Square(C.compose(s.left, t.left), C.compose(s.right, t.right), s.top, t.bottom, cell)

    def sqhid(self, v):
        H1, H2 = self.horid(v.src), self.horid(v.tgt)
        return Square(v, v, H1, H2, FrozenDict({f: v.ar(f) for f in H1.index}))

    def sqhcomp(self, s, t):
        check_boundary(s.right == t.left, "horizontal boundary mismatch")
        top, bottom = self.hcomp(s.top, t.top), self.hcomp(s.bottom, t.bottom)
        cell = {}
        for elems in top.value.values():
            for q, p in elems:
                cell[(q, p)] = bottom.classes[(t.cell[q], s.cell[p])]
        return Square(s.left, t.right, top, bottom, FrozenDict(cell))

    def _globular(self, top, bottom, cell):
        return Square(self.vcat.identity(top.src), self.vcat.identity(top.tgt), top, bottom, FrozenDict(cell))

    @memo
    def lunitor(self, h):
        top = self.hcomp(self.horid(h.src), h)
        cell = {(p, f): h.act_right(f, p) for elems in top.value.values() for p, f in elems}
        return self._globular(top, h, cell)

    @memo
    def runitor(self, h):
        top = self.hcomp(h, self.horid(h.tgt))
        cell = {(u, p): h.act_left(u, p) for elems in top.value.values() for u, p in elems}
        return self._globular(top, h, cell)

    @memo
    def associator(self, h1, h2, h3):
        top = self.hcomp(h1, self.hcomp(h2, h3))
        bottom = self.hcomp(self.hcomp(h1, h2), h3)
        cell = {}
        for elems in top.value.values():
            for (p3, p2), p1 in elems:
                cell[((p3, p2), p1)] = bottom.classes[(p3, self.hcomp(h1, h2).classes[(p2, p1)])]
        return self._globular(top, bottom, cell)

    def vinverse(self, s):
        C = self.vcat
        if not (C.is_identity(s.left) and C.is_identity(s.right)):
            return None
        inv = {q: p for p, q in s.cell.items()}
        if len(inv) != len(s.cell) or set(inv) != set(s.bottom.index):
            return None
        return Square(s.left, s.right, s.bottom, s.top, FrozenDict(inv))


def prof_double_cat(
    cats: Sequence[FinCat],
    functors: Sequence[FinFunctor] = (),
    profunctors: Sequence[FinProfunctor] = (),
    depth: int = 2,
    name: str = "Prof",
) -> ProfDoubleCat:
    return ProfDoubleCat(cats, functors, profunctors, depth, name)


__all__ = [
    "Cospan",
    "IdentityFunctor",
    "ProfDoubleCat",
    "Span",
    "SpanDoubleCat",
    "SquareDoubleCat",
    "StructuredCospanDoubleCat",
    "functor_category",
    "is_natural_map",
    "natural_maps",
    "prof_double_cat",
    "representable_profunctor",
    "span_double_cat",
    "square_double_cat",
    "structured_cospan_double_cat",
]
