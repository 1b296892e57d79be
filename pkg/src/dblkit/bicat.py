"""Finite bicategories, their coherence checker, duals and adjoint equivalences.

1-cells compose diagrammatically: ``comp1(f, g)`` is f then g. The associator runs
``f(gh) => (fg)h``; the unitors are ``id.f => f`` (left) and ``f.id => f`` (right).
``f <| a`` and ``a |> g`` are the whiskerings ``hcomp2(id2(f), a)`` and ``hcomp2(a, id2(g))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from ._util import freeze, memo, sorted_ids
from .cat import FinCat, check_category_laws, is_gaunt
from .errors import BudgetExceeded, MalformedTable
from .report import EXHAUSTIVE, PROBE, Law, LawReport, run_laws

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class BicatProbe:
    """A finite window into a bicategory whose carriers are not enumerated in full."""

    objects: tuple
    cells1: tuple

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "cells1", tuple(self.cells1))


class FinBicat:
    """Interface shared by every bicategory in the library.

    Subclasses provide the primitive operations; everything else is derived. When
    ``materialized`` is false the structure must carry a :class:`BicatProbe`.
    """

    name: str = "B"
    materialized: bool = True
    probe: BicatProbe | None = None

    # primitive data ----------------------------------------------------------------
    @property
    def objects(self) -> tuple:
        raise NotImplementedError

    def cells1(self, x, y) -> tuple:
        raise NotImplementedError

    def src1(self, f):
        raise NotImplementedError

    def tgt1(self, f):
        raise NotImplementedError

    def cells2(self, f, g) -> tuple:
        raise NotImplementedError

    def src2(self, a):
        raise NotImplementedError

    def tgt2(self, a):
        raise NotImplementedError

    def id1(self, x):
        raise NotImplementedError

    def comp1(self, f, g):
        raise NotImplementedError

    def id2(self, f):
        raise NotImplementedError

    def vcomp2(self, a, b):
        raise NotImplementedError

    def hcomp2(self, a, b):
        raise NotImplementedError

    def lunitor(self, f):
        raise NotImplementedError

    def runitor(self, f):
        raise NotImplementedError

    def associator(self, f, g, h):
        raise NotImplementedError

    # derived -----------------------------------------------------------------------
    def inverse2(self, a):
        f, g = self.src2(a), self.tgt2(a)
        for b in self.cells2(g, f):
            if self.vcomp2(a, b) == self.id2(f) and self.vcomp2(b, a) == self.id2(g):
                return b
        return None

    def lwhisker(self, f, a):
        """``f <| a``."""
        return self.hcomp2(self.id2(f), a)

    def rwhisker(self, a, g):
        """``a |> g``."""
        return self.hcomp2(a, self.id2(g))

    def vcomp_all(self, *cells):
        out = cells[0]
        for c in cells[1:]:
            out = self.vcomp2(out, c)
        return out

    def law_objects(self) -> tuple:
        return self.probe.objects if self.probe is not None else self.objects

    def law_cells1(self, x, y) -> tuple:
        if self.probe is None:
            return self.cells1(x, y)
        return tuple(f for f in self.probe.cells1 if self.src1(f) == x and self.tgt1(f) == y)

    def all_cells1(self) -> Iterator:
        for x in self.law_objects():
            for y in self.law_objects():
                yield from self.law_cells1(x, y)

    def hom_cat(self, x, y) -> FinCat:
        objs = self.law_cells1(x, y)
        arrows, comp = {}, {}
        for f in objs:
            for g in objs:
                for a in self.cells2(f, g):
                    arrows[a] = (f, g)
        for a, (f, g) in arrows.items():
            for b, (g2, h) in arrows.items():
                if g2 == g:
                    comp[(a, b)] = self.vcomp2(a, b)
        return FinCat(objs, arrows, {f: self.id2(f) for f in objs}, comp, name=f"{self.name}({x},{y})")

    @property
    def mode(self) -> str:
        return EXHAUSTIVE if self.materialized else PROBE

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"

    def sort_key(self):
        return (self.name,)


# ---------------------------------------------------------------------------------------
# concrete bicategories


class TableBicat(FinBicat):
    """A bicategory given by explicit tables. 2-cell ids are unique across all homs."""

    def __init__(
        self,
        objects: Sequence,
        cells1: Mapping,
        cells2: Mapping,
        id1: Mapping,
        comp1: Mapping,
        id2: Mapping,
        vcomp2: Mapping,
        hcomp2: Mapping,
        lunitor: Mapping,
        runitor: Mapping,
        associator: Mapping,
        name: str = "B",
    ):
        self.name = name
        self._objects = tuple(objects)
        self._c1 = freeze(cells1)
        self._c2 = freeze(cells2)
        self._id1 = freeze(id1)
        self._comp1 = freeze(comp1)
        self._id2 = freeze(id2)
        self._vcomp2 = freeze(vcomp2)
        self._hcomp2 = freeze(hcomp2)
        self._lun = freeze(lunitor)
        self._run = freeze(runitor)
        self._assoc = freeze(associator)
        obs = set(self._objects)
        for f, (x, y) in self._c1.items():
            if x not in obs or y not in obs:
                raise MalformedTable(f"{name}: 1-cell {f!r} has unknown endpoint")
        for a, (f, g) in self._c2.items():
            if f not in self._c1 or g not in self._c1:
                raise MalformedTable(f"{name}: 2-cell {a!r} has unknown boundary")
        for table in (self._vcomp2, self._hcomp2):
            for k, v in table.items():
                if v not in self._c2 or any(c not in self._c2 for c in k):
                    raise MalformedTable(f"{name}: 2-cell table mentions unknown cell in {k!r} -> {v!r}")
        for table in (self._lun, self._run, self._assoc, self._id2):
            for v in table.values():
                if v not in self._c2:
                    raise MalformedTable(f"{name}: coherence table mentions unknown 2-cell {v!r}")

    @property
    def objects(self):
        return self._objects

    @memo
    def cells1(self, x, y):
        return tuple(sorted_ids(f for f, st in self._c1.items() if st == (x, y)))

    def src1(self, f):
        return self._c1[f][0]

    def tgt1(self, f):
        return self._c1[f][1]

    @memo
    def cells2(self, f, g):
        return tuple(sorted_ids(a for a, st in self._c2.items() if st == (f, g)))

    def src2(self, a):
        return self._c2[a][0]

    def tgt2(self, a):
        return self._c2[a][1]

    def id1(self, x):
        return self._id1[x]

    def comp1(self, f, g):
        return self._comp1[(f, g)]

    def id2(self, f):
        return self._id2[f]

    def vcomp2(self, a, b):
        return self._vcomp2[(a, b)]

    def hcomp2(self, a, b):
        return self._hcomp2[(a, b)]

    def lunitor(self, f):
        return self._lun[f]

    def runitor(self, f):
        return self._run[f]

    def associator(self, f, g, h):
        return self._assoc[(f, g, h)]

    def replace(self, **tables) -> "TableBicat":
        """Copy with some tables swapped out (used to build deliberately broken instances)."""
        kw = dict(
            objects=self._objects,
            cells1=self._c1,
            cells2=self._c2,
            id1=self._id1,
            comp1=self._comp1,
            id2=self._id2,
            vcomp2=self._vcomp2,
            hcomp2=self._hcomp2,
            lunitor=self._lun,
            runitor=self._run,
            associator=self._assoc,
            name=self.name,
        )
        kw.update(tables)
        return TableBicat(**kw)


def tabulate(B: FinBicat, name: str | None = None) -> TableBicat:
    """Snapshot a materialized bicategory into explicit tables."""
    if not B.materialized:
        raise ValueError(f"{B.name} is virtual and cannot be tabulated")
    c1 = {f: (x, y) for x in B.objects for y in B.objects for f in B.cells1(x, y)}
    c2 = {}
    for x in B.objects:
        for y in B.objects:
            for f in B.cells1(x, y):
                for g in B.cells1(x, y):
                    for a in B.cells2(f, g):
                        c2[a] = (f, g)
    vcomp = {(a, b): B.vcomp2(a, b) for a, (f, g) in c2.items() for b, (g2, h) in c2.items() if g == g2}
    hcomp = {
        (a, b): B.hcomp2(a, b)
        for a, (f, _) in c2.items()
        for b, (g, _) in c2.items()
        if c1[f][1] == c1[g][0]
    }
    comp1 = {(f, g): B.comp1(f, g) for f in c1 for g in c1 if c1[f][1] == c1[g][0]}
    assoc = {}
    for f in c1:
        for g in c1:
            if c1[f][1] != c1[g][0]:
                continue
            for h in c1:
                if c1[g][1] == c1[h][0]:
                    assoc[(f, g, h)] = B.associator(f, g, h)
    return TableBicat(
        B.objects,
        c1,
        c2,
        {x: B.id1(x) for x in B.objects},
        comp1,
        {f: B.id2(f) for f in c1},
        vcomp,
        hcomp,
        {f: B.lunitor(f) for f in c1},
        {f: B.runitor(f) for f in c1},
        assoc,
        name=name or B.name,
    )


def bicat_tables(B: FinBicat) -> dict:
    """All tables of a materialized bicategory as plain dicts, for equality tests."""
    T = tabulate(B)
    return {
        "objects": T._objects,
        "cells1": dict(T._c1),
        "cells2": dict(T._c2),
        "id1": dict(T._id1),
        "comp1": dict(T._comp1),
        "id2": dict(T._id2),
        "vcomp2": dict(T._vcomp2),
        "hcomp2": dict(T._hcomp2),
        "lunitor": dict(T._lun),
        "runitor": dict(T._run),
        "associator": dict(T._assoc),
    }


class DiscreteBicat(FinBicat):
    """A category viewed as a bicategory with only identity 2-cells ``("id", f)``."""

    def __init__(self, cat: FinCat, name: str | None = None):
        self.cat = cat
        self.name = name or f"disc({cat.name})"

    @property
    def objects(self):
        return self.cat.objects

    def cells1(self, x, y):
        return self.cat.hom(x, y)

    def src1(self, f):
        return self.cat.src(f)

    def tgt1(self, f):
        return self.cat.tgt(f)

    def cells2(self, f, g):
        return (("id", f),) if f == g else ()

    def src2(self, a):
        return a[1]

    def tgt2(self, a):
        return a[1]

    def id1(self, x):
        return self.cat.identity(x)

    def comp1(self, f, g):
        return self.cat.compose(f, g)

    def id2(self, f):
        return ("id", f)

    def vcomp2(self, a, b):
        if a != b:
            raise ValueError(f"2-cells {a!r}, {b!r} do not compose")
        return a

    def hcomp2(self, a, b):
        return ("id", self.cat.compose(a[1], b[1]))

    def lunitor(self, f):
        return ("id", f)

    def runitor(self, f):
        return ("id", f)

    def associator(self, f, g, h):
        return ("id", self.cat.compose_all(f, g, h))

    def inverse2(self, a):
        return a


def discrete_bicat(cat: FinCat, name: str | None = None) -> DiscreteBicat:
    return DiscreteBicat(cat, name)


class PreorderMonoidBicat(FinBicat):
    """One-object bicategory from a finite preordered monoid.

    1-cells are the elements, there is a 2-cell ``(a, b)`` exactly when ``a <= b``, and
    horizontal composition is the monoid product. The monoid must be strictly associative
    and unital, so all coherence cells are identities.
    """

    OBJ = "*"

    def __init__(
        self,
        elements: Sequence[Hashable],
        le: Iterable[tuple],
        mult: Mapping[tuple, Hashable],
        unit: Hashable,
        name: str = "M",
    ):
        self.name = name
        self.elements = tuple(elements)
        rel = {(a, a) for a in self.elements} | set(le)
        while True:
            extra = {(a, d) for (a, b) in rel for (c, d) in rel if b == c} - rel
            if not extra:
                break
            rel |= extra
        self.le = frozenset(rel)
        self.mult = freeze(mult)
        self.unit = unit
        for a, b in self.le:
            if a not in self.elements or b not in self.elements:
                raise MalformedTable(f"{name}: order mentions unknown element")
        for (a, b), c in self.mult.items():
            if c not in self.elements:
                raise MalformedTable(f"{name}: product {a!r}*{b!r} = {c!r} is not an element")

    @property
    def objects(self):
        return (self.OBJ,)

    def cells1(self, x, y):
        return self.elements

    def src1(self, f):
        return self.OBJ

    def tgt1(self, f):
        return self.OBJ

    def cells2(self, f, g):
        return ((f, g),) if (f, g) in self.le else ()

    def src2(self, a):
        return a[0]

    def tgt2(self, a):
        return a[1]

    def id1(self, x):
        return self.unit

    def comp1(self, f, g):
        return self.mult[(f, g)]

    def id2(self, f):
        return (f, f)

    def vcomp2(self, a, b):
        if a[1] != b[0]:
            raise ValueError("2-cells do not compose")
        return (a[0], b[1])

    def hcomp2(self, a, b):
        return (self.mult[(a[0], b[0])], self.mult[(a[1], b[1])])

    def lunitor(self, f):
        return (self.mult[(self.unit, f)], f)

    def runitor(self, f):
        return (self.mult[(f, self.unit)], f)

    def associator(self, f, g, h):
        m = self.mult
        return (m[(f, m[(g, h)])], m[(m[(f, g)], h)])

    def inverse2(self, a):
        b = (a[1], a[0])
        return b if b in self.le else None


def delooping(group_cat: FinCat, name: str | None = None) -> PreorderMonoidBicat:
    """The one-object bicategory of a monoid (a one-object category) with discrete homs."""
    (x,) = group_cat.objects
    els = group_cat.hom(x, x)
    mult = {(a, b): group_cat.compose(a, b) for a in els for b in els}
    return PreorderMonoidBicat(els, (), mult, group_cat.identity(x), name=name or f"B{group_cat.name}")


class ScalarBicat(FinBicat):
    """One object, one 1-cell ``e`` and 2-cells ``Z/n``; both 2-cell compositions add.

    For ``n > 1`` this is the smallest bicategory that is not locally gaunt.
    """

    OBJ = "*"
    E = "e"

    def __init__(self, n: int = 2, name: str | None = None):
        self.n = n
        self.name = name or f"Scalar{n}"

    @property
    def objects(self):
        return (self.OBJ,)

    def cells1(self, x, y):
        return (self.E,)

    def src1(self, f):
        return self.OBJ

    def tgt1(self, f):
        return self.OBJ

    def cells2(self, f, g):
        return tuple(range(self.n))

    def src2(self, a):
        return self.E

    def tgt2(self, a):
        return self.E

    def id1(self, x):
        return self.E

    def comp1(self, f, g):
        return self.E

    def id2(self, f):
        return 0

    def vcomp2(self, a, b):
        return (a + b) % self.n

    def hcomp2(self, a, b):
        return (a + b) % self.n

    def lunitor(self, f):
        return 0

    def runitor(self, f):
        return 0

    def associator(self, f, g, h):
        return 0

    def inverse2(self, a):
        return (-a) % self.n


class CoBicat(FinBicat):
    """``co(B)``: every 2-cell reversed. Coherence cells are the inverses of B's."""

    def __init__(self, base: FinBicat, name: str | None = None):
        self.base = base
        self.name = name or f"co({base.name})"
        self.materialized = base.materialized
        self.probe = base.probe

    @property
    def objects(self):
        return self.base.objects

    def cells1(self, x, y):
        return self.base.cells1(x, y)

    def src1(self, f):
        return self.base.src1(f)

    def tgt1(self, f):
        return self.base.tgt1(f)

    def cells2(self, f, g):
        return self.base.cells2(g, f)

    def src2(self, a):
        return self.base.tgt2(a)

    def tgt2(self, a):
        return self.base.src2(a)

    def id1(self, x):
        return self.base.id1(x)

    def comp1(self, f, g):
        return self.base.comp1(f, g)

    def id2(self, f):
        return self.base.id2(f)

    def vcomp2(self, a, b):
        return self.base.vcomp2(b, a)

    def hcomp2(self, a, b):
        return self.base.hcomp2(a, b)

    def _inv(self, a):
        b = self.base.inverse2(a)
        if b is None:
            raise ValueError(f"coherence cell {a!r} of {self.base.name} is not invertible")
        return b

    @memo
    def lunitor(self, f):
        return self._inv(self.base.lunitor(f))

    @memo
    def runitor(self, f):
        return self._inv(self.base.runitor(f))

    @memo
    def associator(self, f, g, h):
        return self._inv(self.base.associator(f, g, h))

    def inverse2(self, a):
        return self.base.inverse2(a)


def co_dual(B: FinBicat) -> FinBicat:
    if isinstance(B, CoBicat):
        return B.base
    if isinstance(B, DiscreteBicat):
        return B
    return CoBicat(B)


# ---------------------------------------------------------------------------------------
# laws


def _composable(B: FinBicat, n: int) -> Iterator[tuple]:
    """Composable n-tuples of (probe) 1-cells."""
    obs = B.law_objects()
    for path in itertools.product(obs, repeat=n + 1):
        for cells in itertools.product(*(B.law_cells1(path[i], path[i + 1]) for i in range(n))):
            yield cells


def _cells2_from(B: FinBicat, f) -> Iterator[tuple]:
    x, y = B.src1(f), B.tgt1(f)
    for g in B.law_cells1(x, y):
        for a in B.cells2(f, g):
            yield a, g


def _all_cells2(B: FinBicat) -> Iterator:
    for f in B.all_cells1():
        for a, _ in _cells2_from(B, f):
            yield a


def bicat_laws(B: FinBicat) -> list[Law]:
    v, h = B.vcomp2, B.hcomp2

    def vpairs():
        for a in _all_cells2(B):
            for b, _ in _cells2_from(B, B.tgt2(a)):
                yield (a, b)

    def vtriples():
        for a, b in vpairs():
            for c, _ in _cells2_from(B, B.tgt2(b)):
                yield (a, b, c)

    def cells2_of(fs):
        # every choice of a 2-cell out of each 1-cell in fs
        return itertools.product(*(list(a for a, _ in _cells2_from(B, f)) for f in fs))

    def hpairs():
        for f, g in _composable(B, 2):
            yield from cells2_of((f, g))

    def interchange_tuples():
        for f, g in _composable(B, 2):
            for a, f2 in _cells2_from(B, f):
                for a2, _ in _cells2_from(B, f2):
                    for b, g2 in _cells2_from(B, g):
                        for b2, _ in _cells2_from(B, g2):
                            yield (a, a2, b, b2)

    def triples():
        for fs in _composable(B, 3):
            yield from cells2_of(fs)

    def coherence_cells():
        for f in B.all_cells1():
            yield ("lunitor", f)
            yield ("runitor", f)
        for fs in _composable(B, 3):
            yield ("associator",) + fs

    def coherence_typed(kind, *fs):
        cell = getattr(B, kind)(*fs)
        if kind == "lunitor":
            (f,) = fs
            want = (B.comp1(B.id1(B.src1(f)), f), f)
        elif kind == "runitor":
            (f,) = fs
            want = (B.comp1(f, B.id1(B.tgt1(f))), f)
        else:
            f, g, k = fs
            want = (B.comp1(f, B.comp1(g, k)), B.comp1(B.comp1(f, g), k))
        return (B.src2(cell), B.tgt2(cell)) == want

    def lunitor_natural(a):
        f, g = B.src2(a), B.tgt2(a)
        ix = B.id2(B.id1(B.src1(f)))
        return v(h(ix, a), B.lunitor(g)) == v(B.lunitor(f), a)

    def runitor_natural(a):
        f, g = B.src2(a), B.tgt2(a)
        iy = B.id2(B.id1(B.tgt1(f)))
        return v(h(a, iy), B.runitor(g)) == v(B.runitor(f), a)

    def assoc_natural(a, b, c):
        s = (B.src2(a), B.src2(b), B.src2(c))
        t = (B.tgt2(a), B.tgt2(b), B.tgt2(c))
        return v(h(a, h(b, c)), B.associator(*t)) == v(B.associator(*s), h(h(a, b), c))

    def triangle(f, g):
        i = B.id1(B.tgt1(f))
        lhs = v(B.associator(f, i, g), B.rwhisker(B.runitor(f), g))
        return lhs == B.lwhisker(f, B.lunitor(g))

    def pentagon(f, g, k, m):
        c = B.comp1
        lhs = v(B.associator(f, g, c(k, m)), B.associator(c(f, g), k, m))
        rhs = B.vcomp_all(
            B.lwhisker(f, B.associator(g, k, m)),
            B.associator(f, c(g, k), m),
            B.rwhisker(B.associator(f, g, k), m),
        )
        return lhs == rhs

    return [
        Law(
            "2cell-boundaries",
            lambda: ((a,) for a in _all_cells2(B)),
            lambda a: B.src1(B.src2(a)) == B.src1(B.tgt2(a)) and B.tgt1(B.src2(a)) == B.tgt1(B.tgt2(a)),
        ),
        Law(
            "comp1-endpoints",
            lambda: _composable(B, 2),
            lambda f, g: B.src1(B.comp1(f, g)) == B.src1(f) and B.tgt1(B.comp1(f, g)) == B.tgt1(g),
        ),
        Law(
            "vcomp-boundaries",
            vpairs,
            lambda a, b: B.src2(v(a, b)) == B.src2(a) and B.tgt2(v(a, b)) == B.tgt2(b),
        ),
        Law(
            "vcomp-identity",
            lambda: ((a,) for a in _all_cells2(B)),
            lambda a: v(B.id2(B.src2(a)), a) == a and v(a, B.id2(B.tgt2(a))) == a,
        ),
        Law("vcomp-associativity", vtriples, lambda a, b, c: v(v(a, b), c) == v(a, v(b, c))),
        Law(
            "hcomp-boundaries",
            hpairs,
            lambda a, b: B.src2(h(a, b)) == B.comp1(B.src2(a), B.src2(b))
            and B.tgt2(h(a, b)) == B.comp1(B.tgt2(a), B.tgt2(b)),
        ),
        Law(
            "hcomp-identity",
            lambda: _composable(B, 2),
            lambda f, g: h(B.id2(f), B.id2(g)) == B.id2(B.comp1(f, g)),
        ),
        Law(
            "interchange",
            interchange_tuples,
            lambda a, a2, b, b2: h(v(a, a2), v(b, b2)) == v(h(a, b), h(a2, b2)),
        ),
        Law("coherence-boundaries", coherence_cells, coherence_typed),
        Law("lunitor-natural", lambda: ((a,) for a in _all_cells2(B)), lunitor_natural),
        Law("runitor-natural", lambda: ((a,) for a in _all_cells2(B)), runitor_natural),
        Law("associator-natural", triples, assoc_natural),
        Law(
            "coherence-invertible",
            coherence_cells,
            lambda kind, *fs: B.inverse2(getattr(B, kind)(*fs)) is not None,
        ),
        Law("triangle", lambda: _composable(B, 2), triangle),
        Law("pentagon", lambda: _composable(B, 4), pentagon),
    ]


def check_bicat_laws(B: FinBicat, only: Iterable[str] | None = None) -> LawReport:
    return run_laws(B.name, B.mode, bicat_laws(B), only)


# ---------------------------------------------------------------------------------------
# adjoint equivalences and gauntness surrogates


@dataclass(frozen=True)
class AdjointEquivalence:
    """``l: x -> y`` and ``r: y -> x`` with ``unit: id_x => l.r`` and ``counit: r.l => id_y``."""

    x: Hashable
    y: Hashable
    l: Hashable
    r: Hashable
    unit: Hashable
    counit: Hashable
    name: str = field(default="", compare=False)


def triangle_composites(B: FinBicat, ae: AdjointEquivalence) -> tuple:
    """The two triangle composites; both must be identity 2-cells."""
    l, r = ae.l, ae.r
    inv = B.inverse2
    t1 = B.vcomp_all(
        inv(B.lunitor(l)),
        B.rwhisker(ae.unit, l),
        inv(B.associator(l, r, l)),
        B.lwhisker(l, ae.counit),
        B.runitor(l),
    )
    t2 = B.vcomp_all(
        inv(B.runitor(r)),
        B.lwhisker(r, ae.unit),
        B.associator(r, l, r),
        B.rwhisker(ae.counit, r),
        B.lunitor(r),
    )
    return t1, t2


def is_adjoint_equivalence(B: FinBicat, ae: AdjointEquivalence) -> bool:
    try:
        if B.src1(ae.l) != ae.x or B.tgt1(ae.l) != ae.y or B.src1(ae.r) != ae.y or B.tgt1(ae.r) != ae.x:
            return False
        if (B.src2(ae.unit), B.tgt2(ae.unit)) != (B.id1(ae.x), B.comp1(ae.l, ae.r)):
            return False
        if (B.src2(ae.counit), B.tgt2(ae.counit)) != (B.comp1(ae.r, ae.l), B.id1(ae.y)):
            return False
        if B.inverse2(ae.unit) is None or B.inverse2(ae.counit) is None:
            return False
        t1, t2 = triangle_composites(B, ae)
        return t1 == B.id2(ae.l) and t2 == B.id2(ae.r)
    except (KeyError, ValueError, TypeError):
        return False


def _invertible(B: FinBicat, f, g) -> list:
    return [a for a in B.cells2(f, g) if B.inverse2(a) is not None]


def find_adjoint_equivalences(B: FinBicat, x, y, budget: int = DEFAULT_BUDGET) -> list[AdjointEquivalence]:
    """Every adjoint equivalence ``x -> y``, ordered by (l, r, unit, counit) ids.

    Candidates for unit and counit are restricted to invertible 2-cells first. The number
    of candidate tuples is bounded up front; exceeding ``budget`` raises rather than
    returning a partial list.
    """
    ls, rs = B.law_cells1(x, y), B.law_cells1(y, x)
    plan = []
    total = 0
    for l in ls:
        for r in rs:
            units = _invertible(B, B.id1(x), B.comp1(l, r))
            if not units:
                continue
            counits = _invertible(B, B.comp1(r, l), B.id1(y))
            total += len(units) * len(counits)
            if total > budget:
                raise BudgetExceeded(f"adjoint equivalence search {x!r}->{y!r} needs more than {budget} candidates")
            plan.append((l, r, units, counits))
    out = []
    for l, r, units, counits in plan:
        for eta in units:
            for eps in counits:
                ae = AdjointEquivalence(x, y, l, r, eta, eps)
                if is_adjoint_equivalence(B, ae):
                    out.append(ae)
    return out


def is_locally_gaunt(B: FinBicat) -> bool:
    """Every invertible 2-cell is an identity."""
    for a in _all_cells2(B):
        if B.inverse2(a) is not None and not (B.src2(a) == B.tgt2(a) and a == B.id2(B.src2(a))):
            return False
    return True


def isomorphic_1cells(B: FinBicat, f, g) -> bool:
    return bool(_invertible(B, f, g))


def is_globally_gaunt_surrogate(B: FinBicat, budget: int = DEFAULT_BUDGET) -> bool:
    """No adjoint equivalence between distinct objects, and every self-equivalence of an
    object has both 1-cells isomorphic to the identity."""
    obs = B.law_objects()
    for x in obs:
        for y in obs:
            aes = find_adjoint_equivalences(B, x, y, budget)
            if x != y and aes:
                return False
            if x == y:
                ix = B.id1(x)
                for ae in aes:
                    if not (isomorphic_1cells(B, ae.l, ix) and isomorphic_1cells(B, ae.r, ix)):
                        return False
    return True


def is_bisetcategory(B: FinBicat) -> bool:
    """Objects and 1-cells form finite, decidable sets: true exactly for materialized data."""
    return B.materialized


def is_strict(B: FinBicat) -> bool:
    """Unitors and associators are identity 2-cells (which forces strict 1-cell composition)."""
    for f in B.all_cells1():
        for cell in (B.lunitor(f), B.runitor(f)):
            if B.src2(cell) != B.tgt2(cell) or cell != B.id2(f):
                return False
    for fs in _composable(B, 3):
        a = B.associator(*fs)
        if B.src2(a) != B.tgt2(a) or a != B.id2(B.src2(a)):
            return False
    return True


def is_two_setcategory(B: FinBicat) -> bool:
    """A strict 2-category whose objects form a set."""
    return is_bisetcategory(B) and is_strict(B)


def hom_categories_ok(B: FinBicat) -> bool:
    return all(check_category_laws(B.hom_cat(x, y)).ok for x in B.law_objects() for y in B.law_objects())


def homs_gaunt(B: FinBicat) -> bool:
    return all(is_gaunt(B.hom_cat(x, y)) for x in B.law_objects() for y in B.law_objects())


__all__ = [n for n in dir() if not n.startswith("_") and n not in {"annotations"}]
