"""Pseudo double categories: the interface, the L1-L7 checker, predicates and extractions.

Layout of a square::

        top h: x1 -> y1
    x1 --------> y1
    |            |
    left         right
    v            v
    x2 --------> y2
        bottom k: x2 -> y2

``sqvcomp(s, t)`` stacks ``s`` on top of ``t``; ``sqhcomp(s, t)`` puts ``s`` left of ``t``.
Horizontal composition ``hcomp(h, k)`` is h then k. The associator is a globular square
from ``h1(h2 h3)`` to ``(h1 h2)h3``; the unitors go from ``id.h`` and ``h.id`` to ``h``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from ._util import freeze, memo, sorted_ids
from .bicat import BicatProbe, FinBicat
from .cat import FinCat, is_gaunt
from .errors import BoundaryMismatch, MalformedTable, NotStrict
from .report import EXHAUSTIVE, PROBE, Law, LawReport, run_laws


class Square(NamedTuple):
    left: Hashable
    right: Hashable
    top: Hashable
    bottom: Hashable
    cell: Hashable = None

    def boundary(self) -> tuple:
        return (self.left, self.right, self.top, self.bottom)


@dataclass(frozen=True)
class DoubleProbe:
    """Finite window into a virtual double category.

    Laws about vertical and horizontal morphisms range over ``vertical`` and
    ``horizontal``. Laws quantified over squares range over ``squares`` when given, and
    otherwise over every square whose sides lie in the probe.
    """

    objects: tuple
    vertical: tuple
    horizontal: tuple
    squares: tuple | None = None

    def __post_init__(self):
        for name in ("objects", "vertical", "horizontal"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.squares is not None:
            object.__setattr__(self, "squares", tuple(self.squares))


class PseudoDoubleCat:
    """Interface for pseudo double categories.

    Subclasses implement the primitive operations below. ``materialized`` structures are
    enumerated in full by the checker; virtual ones carry a :class:`DoubleProbe`.
    """

    name: str = "D"
    materialized: bool = True
    probe: DoubleProbe | None = None
    vcat: FinCat

    # horizontal morphisms ----------------------------------------------------------
    def hor(self, x, y) -> tuple:
        raise NotImplementedError

    def hsrc(self, h):
        raise NotImplementedError

    def htgt(self, h):
        raise NotImplementedError

    def horid(self, x):
        raise NotImplementedError

    def hcomp(self, h, k):
        raise NotImplementedError

    # squares -----------------------------------------------------------------------
    def squares(self, left, right, top, bottom) -> tuple:
        raise NotImplementedError

    def sqvid(self, h) -> Square:
        raise NotImplementedError

    def sqvcomp(self, s: Square, t: Square) -> Square:
        raise NotImplementedError

    def sqhid(self, v) -> Square:
        raise NotImplementedError

    def sqhcomp(self, s: Square, t: Square) -> Square:
        raise NotImplementedError

    def lunitor(self, h) -> Square:
        raise NotImplementedError

    def runitor(self, h) -> Square:
        raise NotImplementedError

    def associator(self, h1, h2, h3) -> Square:
        raise NotImplementedError

    # derived -----------------------------------------------------------------------
    @property
    def objects(self) -> tuple:
        return self.vcat.objects

    @property
    def mode(self) -> str:
        return EXHAUSTIVE if self.materialized else PROBE

    def vinverse(self, s: Square) -> Square | None:
        """Vertical inverse of a square with identity vertical sides, if any."""
        if not (self.vcat.is_identity(s.left) and self.vcat.is_identity(s.right)):
            return None
        for t in self.squares(s.left, s.right, s.bottom, s.top):
            if self.sqvcomp(s, t) == self.sqvid(s.top) and self.sqvcomp(t, s) == self.sqvid(s.bottom):
                return t
        return None

    def sqvcomp_all(self, *squares: Square) -> Square:
        out = squares[0]
        for s in squares[1:]:
            out = self.sqvcomp(out, s)
        return out

    def globular(self, h, k) -> tuple:
        """Squares ``h => k`` with identity vertical sides."""
        x, y = self.hsrc(h), self.htgt(h)
        return self.squares(self.vcat.identity(x), self.vcat.identity(y), h, k)

    def law_objects(self) -> tuple:
        return self.probe.objects if self.probe is not None else self.objects

    def law_vertical(self) -> tuple:
        return self.probe.vertical if self.probe is not None else self.vcat.arrows

    def law_horizontal(self) -> tuple:
        if self.probe is not None:
            return self.probe.horizontal
        return tuple(h for x in self.objects for y in self.objects for h in self.hor(x, y))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} ({self.mode})>"

    def sort_key(self):
        return (self.name,)


def squares_among(D: PseudoDoubleCat, horizontal: Sequence, vertical: Sequence) -> list[Square]:
    """Every square with top and bottom in ``horizontal`` and sides in ``vertical``."""
    C = D.vcat
    out = []
    for h in horizontal:
        for k in horizontal:
            for v in vertical:
                if C.src(v) != D.hsrc(h) or C.tgt(v) != D.hsrc(k):
                    continue
                for w in vertical:
                    if C.src(w) == D.htgt(h) and C.tgt(w) == D.htgt(k):
                        out.extend(D.squares(v, w, h, k))
    return out


def check_boundary(cond: bool, message: str) -> None:
    if not cond:
        raise BoundaryMismatch(message)


# ---------------------------------------------------------------------------------------
# table-backed double categories


class TableDoubleCat(PseudoDoubleCat):
    """A materialized double category given by explicit tables of named squares."""

    def __init__(
        self,
        vcat: FinCat,
        horizontal: Mapping,
        horid: Mapping,
        hcomp: Mapping,
        squares: Mapping,
        vid: Mapping,
        vcomp: Mapping,
        hid: Mapping,
        hsquare: Mapping,
        lunitor: Mapping,
        runitor: Mapping,
        associator: Mapping,
        name: str = "D",
    ):
        self.name = name
        self.vcat = vcat
        self._hor = freeze({h: tuple(xy) for h, xy in horizontal.items()})
        self._horid = freeze(horid)
        self._hcomp = freeze(hcomp)
        self._sq = freeze({n: Square(*b, cell=n) for n, b in squares.items()})
        self._vid = freeze(vid)
        self._vcomp = freeze(vcomp)
        self._hid = freeze(hid)
        self._hsq = freeze(hsquare)
        self._lun = freeze(lunitor)
        self._run = freeze(runitor)
        self._assoc = freeze(associator)
        obs = set(vcat.objects)
        for h, (x, y) in self._hor.items():
            if x not in obs or y not in obs:
                raise MalformedTable(f"{name}: horizontal {h!r} has unknown endpoint")
        for n, s in self._sq.items():
            if not (vcat.has_arrow(s.left) and vcat.has_arrow(s.right)):
                raise MalformedTable(f"{name}: square {n!r} has unknown vertical side")
            if s.top not in self._hor or s.bottom not in self._hor:
                raise MalformedTable(f"{name}: square {n!r} has unknown horizontal side")
        for table in (self._horid, self._hcomp):
            for h in table.values():
                if h not in self._hor:
                    raise MalformedTable(f"{name}: unknown horizontal morphism {h!r}")
        for table in (self._vid, self._vcomp, self._hid, self._hsq, self._lun, self._run, self._assoc):
            for k, n in table.items():
                if n not in self._sq:
                    raise MalformedTable(f"{name}: unknown square {n!r}")

    @memo
    def hor(self, x, y):
        return tuple(sorted_ids(h for h, st in self._hor.items() if st == (x, y)))

    def hsrc(self, h):
        return self._hor[h][0]

    def htgt(self, h):
        return self._hor[h][1]

    def horid(self, x):
        return self._horid[x]

    def hcomp(self, h, k):
        return self._hcomp[(h, k)]

    @memo
    def _by_boundary(self) -> dict:
        idx = defaultdict(list)
        for n in sorted_ids(self._sq):
            s = self._sq[n]
            idx[s.boundary()].append(s)
        return {k: tuple(v) for k, v in idx.items()}

    def squares(self, left, right, top, bottom):
        return self._by_boundary().get((left, right, top, bottom), ())

    def square(self, name) -> Square:
        return self._sq[name]

    def sqvid(self, h):
        return self._sq[self._vid[h]]

    def sqvcomp(self, s, t):
        return self._sq[self._vcomp[(s.cell, t.cell)]]

    def sqhid(self, v):
        return self._sq[self._hid[v]]

    def sqhcomp(self, s, t):
        return self._sq[self._hsq[(s.cell, t.cell)]]

    def lunitor(self, h):
        return self._sq[self._lun[h]]

    def runitor(self, h):
        return self._sq[self._run[h]]

    def associator(self, h1, h2, h3):
        return self._sq[self._assoc[(h1, h2, h3)]]

    def tables(self) -> dict:
        return {
            "horizontal": dict(self._hor),
            "horid": dict(self._horid),
            "hcomp": dict(self._hcomp),
            "squares": {n: s.boundary() for n, s in self._sq.items()},
            "vid": dict(self._vid),
            "vcomp": dict(self._vcomp),
            "hid": dict(self._hid),
            "hsquare": dict(self._hsq),
            "lunitor": dict(self._lun),
            "runitor": dict(self._run),
            "associator": dict(self._assoc),
        }

    def replace(self, **tables) -> "TableDoubleCat":
        kw = self.tables()
        kw.update(tables)
        return TableDoubleCat(self.vcat, name=self.name, **kw)


def tabulate_double(D: PseudoDoubleCat, name: str | None = None) -> TableDoubleCat:
    """Snapshot a materialized double category into named tables.

    Squares are renamed ``s0, s1, ...`` in boundary order so the result prints cleanly.
    """
    if not D.materialized:
        raise ValueError(f"{D.name} is virtual and cannot be tabulated")
    C = D.vcat
    hs = list(D.law_horizontal())
    hname = {h: h if isinstance(h, str) else f"h{i}" for i, h in enumerate(hs)}
    sqs: list[Square] = []
    for v in C.arrows:
        for w in C.arrows:
            for h in D.hor(C.src(v), C.src(w)):
                for k in D.hor(C.tgt(v), C.tgt(w)):
                    sqs.extend(D.squares(v, w, h, k))
    sname = {s: (s.cell if isinstance(s.cell, str) and s.cell else f"s{i}") for i, s in enumerate(sqs)}
    if len(set(sname.values())) != len(sname):
        sname = {s: f"s{i}" for i, s in enumerate(sqs)}
    H = lambda h: hname[h]  # noqa: E731
    S = lambda s: sname[s]  # noqa: E731

    def hpairs():
        for h in hs:
            for k in hs:
                if D.htgt(h) == D.hsrc(k):
                    yield h, k

    return TableDoubleCat(
        C,
        {H(h): (D.hsrc(h), D.htgt(h)) for h in hs},
        {x: H(D.horid(x)) for x in C.objects},
        {(H(h), H(k)): H(D.hcomp(h, k)) for h, k in hpairs()},
        {S(s): (s.left, s.right, H(s.top), H(s.bottom)) for s in sqs},
        {H(h): S(D.sqvid(h)) for h in hs},
        {(S(s), S(t)): S(D.sqvcomp(s, t)) for s in sqs for t in sqs if s.bottom == t.top},
        {v: S(D.sqhid(v)) for v in C.arrows},
        {(S(s), S(t)): S(D.sqhcomp(s, t)) for s in sqs for t in sqs if s.right == t.left},
        {H(h): S(D.lunitor(h)) for h in hs},
        {H(h): S(D.runitor(h)) for h in hs},
        {
            (H(a), H(b), H(c)): S(D.associator(a, b, c))
            for a, b in hpairs()
            for c in hs
            if D.htgt(b) == D.hsrc(c)
        },
        name=name or D.name,
    )


class StrictView(PseudoDoubleCat):
    """``D`` with its unitors and associator replaced by identity squares.

    Only meaningful when ``D`` is strict; used to cross-check the strict reading of the laws.
    """

    def __init__(self, base: PseudoDoubleCat):
        self.base = base
        self.name = f"strict({base.name})"
        self.vcat = base.vcat
        self.materialized = base.materialized
        self.probe = base.probe

    def __getattr__(self, item):
        return getattr(self.base, item)

    def hor(self, x, y):
        return self.base.hor(x, y)

    def hsrc(self, h):
        return self.base.hsrc(h)

    def htgt(self, h):
        return self.base.htgt(h)

    def horid(self, x):
        return self.base.horid(x)

    def hcomp(self, h, k):
        return self.base.hcomp(h, k)

    def squares(self, *b):
        return self.base.squares(*b)

    def sqvid(self, h):
        return self.base.sqvid(h)

    def sqvcomp(self, s, t):
        return self.base.sqvcomp(s, t)

    def sqhid(self, v):
        return self.base.sqhid(v)

    def sqhcomp(self, s, t):
        return self.base.sqhcomp(s, t)

    def lunitor(self, h):
        return self.base.sqvid(h)

    def runitor(self, h):
        return self.base.sqvid(h)

    def associator(self, h1, h2, h3):
        return self.base.sqvid(self.base.hcomp(self.base.hcomp(h1, h2), h3))


# ---------------------------------------------------------------------------------------
# the law list


class _Carrier:
    """The cells a law check ranges over, with the indexes the tuple generators need."""

    def __init__(self, D: PseudoDoubleCat):
        C = D.vcat
        self.htgt = D.htgt
        self.objects = D.law_objects()
        self.vertical = D.law_vertical()
        self.horizontal = D.law_horizontal()
        self.squares: list[Square] = []
        hs_by = defaultdict(list)
        for h in self.horizontal:
            hs_by[(D.hsrc(h), D.htgt(h))].append(h)
        self.hor_from = defaultdict(list)
        for h in self.horizontal:
            self.hor_from[D.hsrc(h)].append(h)
        vs_from = defaultdict(list)
        for v in self.vertical:
            vs_from[C.src(v)].append(v)
        if D.probe is not None and D.probe.squares is not None:
            self.squares = list(D.probe.squares)
        else:
            for h in self.horizontal:
                for v in vs_from[D.hsrc(h)]:
                    for w in vs_from[D.htgt(h)]:
                        for k in hs_by[(C.tgt(v), C.tgt(w))]:
                            self.squares.extend(D.squares(v, w, h, k))
        self.by_top = defaultdict(list)
        self.by_left = defaultdict(list)
        for s in self.squares:
            self.by_top[s.top].append(s)
            self.by_left[s.left].append(s)

    def vpairs(self) -> Iterator[tuple]:
        for s in self.squares:
            for t in self.by_top[s.bottom]:
                yield (s, t)

    def hpairs(self) -> Iterator[tuple]:
        for s in self.squares:
            for t in self.by_left[s.right]:
                yield (s, t)

    def hcomposable(self, n: int) -> Iterator[tuple]:
        def go(prefix):
            if len(prefix) == n:
                yield tuple(prefix)
                return
            for h in self.hor_from[self.htgt(prefix[-1])]:
                yield from go(prefix + [h])

        for h in self.horizontal:
            yield from go([h])


def double_laws(D: PseudoDoubleCat) -> list[Law]:
    C = D.vcat
    cache: dict = {}

    def carrier() -> _Carrier:
        if "c" not in cache:
            cache["c"] = _Carrier(D)
        return cache["c"]

    vc, hc = D.sqvcomp, D.sqhcomp
    ident = C.identity

    def vertical_triples():
        vs = carrier().vertical
        for f in vs:
            for g in vs:
                if C.tgt(f) != C.src(g):
                    continue
                for h in vs:
                    if C.tgt(g) == C.src(h):
                        yield (f, g, h)

    def vertical_pairs():
        vs = carrier().vertical
        for f in vs:
            for g in vs:
                if C.tgt(f) == C.src(g):
                    yield (f, g)

    def squares1():
        return ((s,) for s in carrier().squares)

    def vtriples():
        car = carrier()
        for s, t in car.vpairs():
            for u in car.by_top[t.bottom]:
                yield (s, t, u)

    def htriples():
        car = carrier()
        for s, t in car.hpairs():
            for u in car.by_left[t.right]:
                yield (s, t, u)

    def interchange():
        car = carrier()
        for t1, t2 in car.vpairs():
            for s1 in car.by_left[t1.right]:
                for s2 in car.by_top[s1.bottom]:
                    if s2.left == t2.right:
                        yield (t1, t2, s1, s2)

    def coherence():
        car = carrier()
        for h in car.horizontal:
            yield ("lunitor", h)
            yield ("runitor", h)
        for hs in car.hcomposable(3):
            yield ("associator",) + hs

    def vbound(s, t):
        r = vc(s, t)
        return r.boundary() == (C.compose(s.left, t.left), C.compose(s.right, t.right), s.top, t.bottom)

    def hbound(s, t):
        r = hc(s, t)
        return r.boundary() == (s.left, t.right, D.hcomp(s.top, t.top), D.hcomp(s.bottom, t.bottom))

    def coherence_bound(kind, *hs):
        sq = getattr(D, kind)(*hs)
        x, y = D.hsrc(hs[0]), D.htgt(hs[-1])
        if kind == "lunitor":
            top = D.hcomp(D.horid(x), hs[0])
        elif kind == "runitor":
            top = D.hcomp(hs[0], D.horid(y))
        else:
            h1, h2, h3 = hs
            top = D.hcomp(h1, D.hcomp(h2, h3))
        bottom = hs[0] if kind != "associator" else D.hcomp(D.hcomp(hs[0], hs[1]), hs[2])
        return sq.boundary() == (ident(x), ident(y), top, bottom)

    def lnat(s):
        return vc(hc(D.sqhid(s.left), s), D.lunitor(s.bottom)) == vc(D.lunitor(s.top), s)

    def rnat(s):
        return vc(hc(s, D.sqhid(s.right)), D.runitor(s.bottom)) == vc(D.runitor(s.top), s)

    def anat(s1, s2, s3):
        lhs = vc(hc(s1, hc(s2, s3)), D.associator(s1.bottom, s2.bottom, s3.bottom))
        rhs = vc(D.associator(s1.top, s2.top, s3.top), hc(hc(s1, s2), s3))
        return lhs == rhs

    def invertible(kind, *hs):
        return D.vinverse(getattr(D, kind)(*hs)) is not None

    def triangle(h, k):
        i = D.horid(D.htgt(h))
        lhs = vc(D.associator(h, i, k), hc(D.runitor(h), D.sqvid(k)))
        return lhs == hc(D.sqvid(h), D.lunitor(k))

    def pentagon(h1, h2, h3, h4):
        c = D.hcomp
        lhs = vc(D.associator(h1, h2, c(h3, h4)), D.associator(c(h1, h2), h3, h4))
        rhs = D.sqvcomp_all(
            hc(D.sqvid(h1), D.associator(h2, h3, h4)),
            D.associator(h1, c(h2, h3), h4),
            hc(D.associator(h1, h2, h3), D.sqvid(h4)),
        )
        return lhs == rhs

    return [
        Law(
            "L1-identity",
            lambda: ((f,) for f in carrier().vertical),
            lambda f: C.compose(ident(C.src(f)), f) == f and C.compose(f, ident(C.tgt(f))) == f,
        ),
        Law(
            "L1-associativity",
            vertical_triples,
            lambda f, g, h: C.compose(C.compose(f, g), h) == C.compose(f, C.compose(g, h)),
        ),
        Law("L2-boundaries", lambda: carrier().vpairs(), vbound),
        Law(
            "L2-unit",
            squares1,
            lambda s: vc(D.sqvid(s.top), s) == s and vc(s, D.sqvid(s.bottom)) == s,
        ),
        Law("L2-associativity", vtriples, lambda s, t, u: vc(vc(s, t), u) == vc(s, vc(t, u))),
        Law(
            "L3-hid-identity",
            lambda: ((x,) for x in carrier().objects),
            lambda x: D.sqhid(ident(x)) == D.sqvid(D.horid(x)),
        ),
        Law(
            "L3-hid-composition",
            vertical_pairs,
            lambda v, w: D.sqhid(C.compose(v, w)) == vc(D.sqhid(v), D.sqhid(w)),
        ),
        Law("L4-boundaries", lambda: carrier().hpairs(), hbound),
        Law(
            "L4-hcomp-identity",
            lambda: carrier().hcomposable(2),
            lambda h, k: hc(D.sqvid(h), D.sqvid(k)) == D.sqvid(D.hcomp(h, k)),
        ),
        Law(
            "L4-interchange",
            interchange,
            lambda t1, t2, s1, s2: hc(vc(t1, t2), vc(s1, s2)) == vc(hc(t1, s1), hc(t2, s2)),
        ),
        Law("L5-coherence-boundaries", coherence, coherence_bound),
        Law("L5-lunitor-natural", squares1, lnat),
        Law("L5-runitor-natural", squares1, rnat),
        Law("L5-associator-natural", htriples, anat),
        Law("L6-invertible", coherence, invertible),
        Law("L7-triangle", lambda: carrier().hcomposable(2), triangle),
        Law("L7-pentagon", lambda: carrier().hcomposable(4), pentagon),
    ]


def check_double_laws(D: PseudoDoubleCat, only: Iterable[str] | None = None) -> LawReport:
    """Check L1-L7. Exhaustive for materialized inputs, over the probe set otherwise."""
    return run_laws(D.name, D.mode, double_laws(D), only)


def check_strict_double_laws(D: PseudoDoubleCat, only: Iterable[str] | None = None) -> LawReport:
    """The same law list with identity squares substituted for unitors and associator."""
    return run_laws(D.name, D.mode, double_laws(StrictView(D)), only)


# ---------------------------------------------------------------------------------------
# predicates


def is_strict(D: PseudoDoubleCat) -> bool:
    """Every unitor and associator component is a vertical identity square."""
    car = _Carrier(D)
    for h in car.horizontal:
        for sq in (D.lunitor(h), D.runitor(h)):
            if sq.top != sq.bottom or sq != D.sqvid(sq.top):
                return False
    for hs in car.hcomposable(3):
        sq = D.associator(*hs)
        if sq.top != sq.bottom or sq != D.sqvid(sq.top):
            return False
    return True


STRICT_DOUBLE_SETCAT = "strict_double_setcat"
PSEUDO_DOUBLE_SETCAT = "pseudo_double_setcat"
NEITHER = "neither"


def set_level(D: PseudoDoubleCat) -> str:
    """Set-level classification. Virtual carriers are never demonstrated to be sets."""
    if not D.materialized:
        return NEITHER
    return STRICT_DOUBLE_SETCAT if is_strict(D) else PSEUDO_DOUBLE_SETCAT


def globular_cat(D: PseudoDoubleCat, x, y) -> FinCat:
    """Horizontal morphisms x -> y and squares with identity vertical sides, under vertical
    composition."""
    hs = tuple(h for h in D.law_horizontal() if D.hsrc(h) == x and D.htgt(h) == y)
    arrows = {}
    for h in hs:
        for k in hs:
            for s in D.globular(h, k):
                arrows[s] = (h, k)
    comp = {(s, t): D.sqvcomp(s, t) for s in arrows for t in arrows if s.bottom == t.top}
    return FinCat(hs, arrows, {h: D.sqvid(h) for h in hs}, comp, name=f"{D.name}[{x},{y}]")


def horizontal_cat(D: PseudoDoubleCat) -> FinCat:
    """Objects and horizontal morphisms. Only a category when ``D`` is strict."""
    if not is_strict(D):
        raise NotStrict(f"{D.name}: horizontal composition is only associative up to iso")
    hs = D.law_horizontal()
    arrows = {h: (D.hsrc(h), D.htgt(h)) for h in hs}
    comp = {(h, k): D.hcomp(h, k) for h in hs for k in hs if D.htgt(h) == D.hsrc(k)}
    return FinCat(D.law_objects(), arrows, {x: D.horid(x) for x in D.law_objects()}, comp, name=f"hor({D.name})")


@dataclass
class UnivalenceVerdict:
    univalent: bool
    symmetric: bool
    details: dict = field(default_factory=dict)


def univalence_surrogate(D: PseudoDoubleCat, require_symmetric: bool = False) -> UnivalenceVerdict:
    """Gauntness surrogates for univalence and symmetric univalence.

    Univalent: the vertical category and every globular category are gaunt. Symmetric
    additionally needs finitely many horizontal morphisms (the set condition), a gaunt
    horizontal category and gaunt hom categories of the underlying vertical 2-category.
    The horizontal category only exists for strict ``D``; for non-strict ``D`` symmetry is
    reported false, or :class:`NotStrict` is raised if ``require_symmetric`` is set.
    """
    details: dict = {}
    obs = D.law_objects()
    details["vertical_gaunt"] = is_gaunt(D.vcat)
    details["globular_gaunt"] = all(is_gaunt(globular_cat(D, x, y)) for x in obs for y in obs)
    univalent = details["vertical_gaunt"] and details["globular_gaunt"]
    details["horizontal_set"] = D.materialized
    strict = is_strict(D)
    details["strict"] = strict
    if not strict:
        if require_symmetric:
            raise NotStrict(f"{D.name}: symmetric univalence needs a strict horizontal category")
        details["horizontal_gaunt"] = None
        details["vertical_homs_gaunt"] = None
        return UnivalenceVerdict(univalent, False, details)
    details["horizontal_gaunt"] = is_gaunt(horizontal_cat(D))
    V = VerticalTwoCat(D)
    details["vertical_homs_gaunt"] = all(is_gaunt(V.hom_cat(x, y)) for x in obs for y in obs)
    symmetric = (
        details["horizontal_set"] and univalent and details["horizontal_gaunt"] and details["vertical_homs_gaunt"]
    )
    return UnivalenceVerdict(univalent, symmetric, details)


# ---------------------------------------------------------------------------------------
# underlying bicategories


class HorizontalBicat(FinBicat):
    """Objects, horizontal morphisms and globular squares of ``D``, with D's coherence."""

    def __init__(self, D: PseudoDoubleCat):
        self.D = D
        self.name = f"hor({D.name})"
        self.materialized = D.materialized
        if D.probe is not None:
            self.probe = BicatProbe(D.probe.objects, D.probe.horizontal)

    @property
    def objects(self):
        return self.D.objects

    def cells1(self, x, y):
        return self.D.hor(x, y)

    def src1(self, f):
        return self.D.hsrc(f)

    def tgt1(self, f):
        return self.D.htgt(f)

    def cells2(self, f, g):
        return self.D.globular(f, g)

    def src2(self, a):
        return a.top

    def tgt2(self, a):
        return a.bottom

    def id1(self, x):
        return self.D.horid(x)

    def comp1(self, f, g):
        return self.D.hcomp(f, g)

    def id2(self, f):
        return self.D.sqvid(f)

    def vcomp2(self, a, b):
        return self.D.sqvcomp(a, b)

    def hcomp2(self, a, b):
        return self.D.sqhcomp(a, b)

    def lunitor(self, f):
        return self.D.lunitor(f)

    def runitor(self, f):
        return self.D.runitor(f)

    def associator(self, f, g, h):
        return self.D.associator(f, g, h)

    def inverse2(self, a):
        return self.D.vinverse(a)


def underlying_horizontal_bicat(D: PseudoDoubleCat) -> HorizontalBicat:
    return HorizontalBicat(D)


class VerticalTwoCat(FinBicat):
    """Objects, vertical morphisms and squares with horizontal identity sides.

    A 2-cell ``v => w`` is a square with left ``v`` and right ``w``; 2-cells along one hom
    compose with the horizontal square composition, corrected by the left unitor at the
    horizontal identities, and whiskering along 1-cells is vertical square composition.
    """

    def __init__(self, D: PseudoDoubleCat):
        self.D = D
        self.name = f"ver({D.name})"
        self.materialized = D.materialized
        if D.probe is not None:
            self.probe = BicatProbe(D.probe.objects, D.probe.vertical)

    @property
    def objects(self):
        return self.D.objects

    def cells1(self, x, y):
        return self.D.vcat.hom(x, y)

    def src1(self, f):
        return self.D.vcat.src(f)

    def tgt1(self, f):
        return self.D.vcat.tgt(f)

    def cells2(self, f, g):
        x, y = self.D.vcat.src(f), self.D.vcat.tgt(f)
        return self.D.squares(f, g, self.D.horid(x), self.D.horid(y))

    def src2(self, a):
        return a.left

    def tgt2(self, a):
        return a.right

    def id1(self, x):
        return self.D.vcat.identity(x)

    def comp1(self, f, g):
        return self.D.vcat.compose(f, g)

    def id2(self, f):
        return self.D.sqhid(f)

    @memo
    def _lun_inv(self, x):
        inv = self.D.vinverse(self.D.lunitor(self.D.horid(x)))
        if inv is None:
            raise ValueError(f"left unitor at horid({x!r}) is not invertible")
        return inv

    def vcomp2(self, a, b):
        D = self.D
        x, y = D.hsrc(a.top), D.hsrc(a.bottom)
        return D.sqvcomp_all(self._lun_inv(x), D.sqhcomp(a, b), D.lunitor(D.horid(y)))

    def hcomp2(self, a, b):
        return self.D.sqvcomp(a, b)

    def lunitor(self, f):
        return self.D.sqhid(f)

    def runitor(self, f):
        return self.D.sqhid(f)

    def associator(self, f, g, h):
        return self.D.sqhid(self.D.vcat.compose_all(f, g, h))


def underlying_vertical_two_cat(D: PseudoDoubleCat) -> VerticalTwoCat:
    return VerticalTwoCat(D)


__all__ = [n for n in dir() if not n.startswith("_") and n not in {"annotations"}]
