"""Finite categories, functors, natural transformations and profunctors.

Composition is written diagrammatically throughout: ``compose(f, g)`` is "f then g" and is
defined when ``tgt(f) == src(g)``. The (co)limit searches here are deliberately brute force;
they are the reference against which the fast paths in :mod:`dblkit.limits` are tested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from ._util import FrozenDict, freeze, memo, sort_key, sorted_ids
from .errors import ClosureExceeded, MalformedTable, MiddleMismatch
from .report import EXHAUSTIVE, PROBE, Law, LawReport, run_laws

Obj = Hashable
Arrow = Hashable


class FinCat:
    """A finite category given by explicit tables.

    ``arrows`` maps arrow id to ``(src, tgt)``; ``comp`` maps ``(f, g)`` to the id of
    "f then g". Construction only checks referential integrity; the category laws are
    checked by :func:`check_category_laws`.
    """

    def __init__(
        self,
        objects: Iterable[Obj],
        arrows: Mapping[Arrow, tuple[Obj, Obj]],
        identity: Mapping[Obj, Arrow],
        comp: Mapping[tuple[Arrow, Arrow], Arrow],
        name: str = "C",
    ):
        self.name = name
        self._objects = tuple(objects)
        self._arrows = FrozenDict({a: tuple(st) for a, st in arrows.items()})
        self._identity = freeze(identity)
        self._comp = freeze(comp)
        obs = set(self._objects)
        if len(obs) != len(self._objects):
            raise MalformedTable(f"{name}: duplicate object ids")
        for a, (s, t) in self._arrows.items():
            if s not in obs or t not in obs:
                raise MalformedTable(f"{name}: arrow {a!r} has unknown endpoint")
        for x, i in self._identity.items():
            if x not in obs:
                raise MalformedTable(f"{name}: identity for unknown object {x!r}")
            if i not in self._arrows:
                raise MalformedTable(f"{name}: identity of {x!r} is unknown arrow {i!r}")
        for x in self._objects:
            if x not in self._identity:
                raise MalformedTable(f"{name}: object {x!r} has no identity")
        for (f, g), h in self._comp.items():
            for a in (f, g, h):
                if a not in self._arrows:
                    raise MalformedTable(f"{name}: composition table mentions unknown arrow {a!r}")

    # -- basic interface -------------------------------------------------------------
    @property
    def objects(self) -> tuple:
        return self._objects

    @property
    def arrows(self) -> tuple:
        return tuple(self._arrows)

    @property
    def comp_table(self) -> Mapping[tuple[Arrow, Arrow], Arrow]:
        return self._comp

    def src(self, f: Arrow) -> Obj:
        return self._arrows[f][0]

    def tgt(self, f: Arrow) -> Obj:
        return self._arrows[f][1]

    def has_arrow(self, f: Arrow) -> bool:
        return f in self._arrows

    def identity(self, x: Obj) -> Arrow:
        return self._identity[x]

    def is_identity(self, f: Arrow) -> bool:
        s, t = self.src(f), self.tgt(f)
        return s == t and self.identity(s) == f

    def compose(self, f: Arrow, g: Arrow) -> Arrow:
        """f then g. Raises KeyError if the table has no entry."""
        return self._comp[(f, g)]

    def try_compose(self, f: Arrow, g: Arrow) -> Arrow | None:
        try:
            return self.compose(f, g)
        except (KeyError, ValueError):
            return None

    def compose_all(self, *fs: Arrow) -> Arrow:
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(out, f)
        return out

    @cached_property
    def _hom_index(self) -> dict[tuple[Obj, Obj], tuple]:
        idx: dict[tuple[Obj, Obj], list] = {}
        for a, st in self._arrows.items():
            idx.setdefault(st, []).append(a)
        return {k: tuple(sorted_ids(v)) for k, v in idx.items()}

    def hom(self, x: Obj, y: Obj) -> tuple:
        return self._hom_index.get((x, y), ())

    def inverse(self, f: Arrow) -> Arrow | None:
        x, y = self.src(f), self.tgt(f)
        for g in self.hom(y, x):
            if self.try_compose(f, g) == self.identity(x) and self.try_compose(g, f) == self.identity(y):
                return g
        return None

    # -- value semantics -------------------------------------------------------------
    def _key(self):
        return (self._objects, self._arrows, self._identity, self._comp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCat):
            return NotImplemented
        if self is other:
            return True
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = self.__dict__["_hash"] = hash((self._objects, self._arrows, self._identity))
            return h

    def __repr__(self) -> str:
        return f"<FinCat {self.name}: {len(self.objects)} objects, {len(self._arrows)} arrows>"

    def sort_key(self):
        return (self.name, len(self.objects))


class FinSet(FinCat):
    """Skeletal finite sets ``{0, ..., bound}``.

    An arrow ``n -> m`` is ``(n, m, values)`` with ``values`` a tuple of length ``n``.
    Arrows are generated on demand, so large bounds are fine as long as nobody asks for
    ``arrows`` or a big hom-set.
    """

    def __init__(self, bound: int, name: str | None = None):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        self.name = name or f"FinSet{bound}"
        self.bound = bound
        self._objects = tuple(range(bound + 1))

    @cached_property
    def _arrows(self) -> FrozenDict:  # type: ignore[override]
        return FrozenDict({f: (f[0], f[1]) for n in self._objects for m in self._objects for f in self.hom(n, m)})

    @property
    def comp_table(self):
        return _LazyComp(self)

    def src(self, f):
        return f[0]

    def tgt(self, f):
        return f[1]

    def has_arrow(self, f) -> bool:
        return (
            isinstance(f, tuple)
            and len(f) == 3
            and f[0] in range(self.bound + 1)
            and f[1] in range(self.bound + 1)
            and len(f[2]) == f[0]
            and all(0 <= v < f[1] for v in f[2])
        )

    def identity(self, x):
        if not 0 <= x <= self.bound:
            raise ClosureExceeded(f"object {x} outside FinSet bound {self.bound}")
        return (x, x, tuple(range(x)))

    def is_identity(self, f) -> bool:
        return f[0] == f[1] and f[2] == tuple(range(f[0]))

    def compose(self, f, g):
        if f[1] != g[0]:
            raise ValueError(f"not composable: {f} then {g}")
        gv = g[2]
        return (f[0], g[1], tuple(gv[i] for i in f[2]))

    @memo
    def hom(self, x, y):
        if not (0 <= x <= self.bound and 0 <= y <= self.bound):
            return ()
        return tuple((x, y, vals) for vals in itertools.product(range(y), repeat=x))

    def inverse(self, f):
        n, m, vals = f
        if n != m or sorted(vals) != list(range(n)):
            return None
        inv = [0] * n
        for i, v in enumerate(vals):
            inv[v] = i
        return (m, n, tuple(inv))

    def _key(self):
        return ("FinSet", self.bound)

    def __hash__(self) -> int:
        return hash(("FinSet", self.bound))

    def __repr__(self) -> str:
        return f"<FinSet {{0..{self.bound}}}>"


class _LazyComp(Mapping):
    """Composition table of a FinSet, computed on access."""

    def __init__(self, cat: FinSet):
        self.cat = cat

    def __getitem__(self, key):
        f, g = key
        if f[1] != g[0]:
            raise KeyError(key)
        return self.cat.compose(f, g)

    def __iter__(self):
        for f in self.cat.arrows:
            for y in self.cat.objects:
                for g in self.cat.hom(f[1], y):
                    yield (f, g)

    def __len__(self):
        return sum(1 for _ in self)


# ---------------------------------------------------------------------------------------
# standard small categories


def from_tables(
    objects: Sequence[Obj],
    arrows: Mapping[Arrow, tuple[Obj, Obj]],
    comp: Mapping[tuple[Arrow, Arrow], Arrow] | None = None,
    name: str = "C",
    identity: Mapping[Obj, Arrow] | None = None,
) -> FinCat:
    """Build a FinCat, synthesising identities (``id_x``) and their composites."""
    arrows = dict(arrows)
    ident = dict(identity or {})
    for x in objects:
        if x not in ident:
            i = f"id_{x}"
            if i in arrows:
                raise MalformedTable(f"{name}: arrow id {i!r} clashes with a synthesised identity")
            ident[x] = i
        arrows.setdefault(ident[x], (x, x))
    table = dict(comp or {})
    for a, (s, t) in arrows.items():
        table.setdefault((ident[s], a), a)
        table.setdefault((a, ident[t]), a)
    return FinCat(objects, arrows, ident, table, name=name)


def terminal(name: str = "One") -> FinCat:
    return from_tables(["*"], {}, name=name)


def walking_arrow(name: str = "Two") -> FinCat:
    return from_tables(["a", "b"], {"f": ("a", "b")}, name=name)


def walking_iso(name: str = "Iso") -> FinCat:
    return from_tables(
        ["a", "b"],
        {"f": ("a", "b"), "g": ("b", "a")},
        {("f", "g"): "id_a", ("g", "f"): "id_b"},
        name=name,
    )


def discrete(objects: Sequence[Obj], name: str = "Disc") -> FinCat:
    return from_tables(list(objects), {}, name=name)


def poset(elements: Sequence[Obj], le: Iterable[tuple[Obj, Obj]], name: str = "P") -> FinCat:
    """Thin category of a partial order; ``le`` need only generate the order."""
    elements = list(elements)
    rel = {(x, x) for x in elements} | set(le)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise MalformedTable(f"{name}: {a!r} and {b!r} are not antisymmetric")
    ident = {x: f"id_{x}" for x in elements}
    name_of = {(a, b): ident[a] if a == b else f"{a}_{b}" for a, b in rel}
    arrows = {name_of[r]: r for r in rel}
    comp = {
        (name_of[(a, b)], name_of[(b2, c)]): name_of[(a, c)]
        for (a, b) in rel
        for (b2, c) in rel
        if b == b2
    }
    return FinCat(elements, arrows, ident, comp, name=name)


def chain(n: int, name: str | None = None) -> FinCat:
    xs = [f"x{i}" for i in range(n)]
    return poset(xs, [(xs[i], xs[i + 1]) for i in range(n - 1)], name=name or f"Chain{n}")


def group(elements: Sequence[str], mult: Mapping[tuple[str, str], str], unit: str, name: str = "G") -> FinCat:
    """One-object category of a finite group (or monoid); ``mult[(a, b)]`` is a then b."""
    arrows = {g: ("*", "*") for g in elements}
    return FinCat(["*"], arrows, {"*": unit}, dict(mult), name=name)


def cyclic_group(n: int, name: str | None = None) -> FinCat:
    els = [f"g{i}" for i in range(n)]
    mult = {(els[i], els[j]): els[(i + j) % n] for i in range(n) for j in range(n)}
    return group(els, mult, els[0], name=name or f"Z{n}")


def disjoint_union(c1: FinCat, c2: FinCat, name: str | None = None) -> FinCat:
    """Coproduct of categories; ids are tagged with 0/1 only when they would clash."""
    clash = (set(c1.objects) & set(c2.objects)) or (set(c1.arrows) & set(c2.arrows))
    tag = (lambda i, x: (i, x)) if clash else (lambda i, x: x)
    objects, arrows, ident, comp = [], {}, {}, {}
    for i, c in enumerate((c1, c2)):
        objects += [tag(i, x) for x in c.objects]
        ident.update({tag(i, x): tag(i, c.identity(x)) for x in c.objects})
        arrows.update({tag(i, a): (tag(i, c.src(a)), tag(i, c.tgt(a))) for a in c.arrows})
        comp.update({(tag(i, f), tag(i, g)): tag(i, h) for (f, g), h in c.comp_table.items()})
    return FinCat(objects, arrows, ident, comp, name=name or f"{c1.name}+{c2.name}")


def opposite(cat: FinCat, name: str | None = None) -> FinCat:
    arrows = {a: (cat.tgt(a), cat.src(a)) for a in cat.arrows}
    comp = {(g, f): h for (f, g), h in cat.comp_table.items()}
    ident = {x: cat.identity(x) for x in cat.objects}
    return FinCat(cat.objects, arrows, ident, comp, name=name or f"op({cat.name})")


# ---------------------------------------------------------------------------------------
# law checking


def _composable_pairs(cat: FinCat) -> Iterator[tuple]:
    for f in cat.arrows:
        for y in cat.objects:
            for g in cat.hom(cat.tgt(f), y):
                yield (f, g)


def _composable_triples(cat: FinCat) -> Iterator[tuple]:
    for f, g in _composable_pairs(cat):
        for z in cat.objects:
            for h in cat.hom(cat.tgt(g), z):
                yield (f, g, h)


def category_laws(cat: FinCat) -> list[Law]:
    c = cat.try_compose

    def endpoints(f, g):
        h = c(f, g)
        return h is not None and cat.src(h) == cat.src(f) and cat.tgt(h) == cat.tgt(g)

    def table_entries():
        for (f, g) in cat.comp_table:
            yield (f, g)

    return [
        Law(
            "identity-endpoints",
            lambda: ((x,) for x in cat.objects),
            lambda x: cat.src(cat.identity(x)) == x and cat.tgt(cat.identity(x)) == x,
        ),
        Law("composition-total", lambda: _composable_pairs(cat), lambda f, g: c(f, g) is not None),
        Law(
            "composition-domain",
            table_entries,
            lambda f, g: cat.tgt(f) == cat.src(g),
            "comp(f, g) is only defined for composable pairs",
        ),
        Law("composite-endpoints", lambda: _composable_pairs(cat), endpoints),
        Law("left-identity", lambda: ((f,) for f in cat.arrows), lambda f: c(cat.identity(cat.src(f)), f) == f),
        Law("right-identity", lambda: ((f,) for f in cat.arrows), lambda f: c(f, cat.identity(cat.tgt(f))) == f),
        Law(
            "associativity",
            lambda: _composable_triples(cat),
            lambda f, g, h: c(f, g) is not None
            and c(g, h) is not None
            and c(c(f, g), h) == c(f, c(g, h))
            and c(c(f, g), h) is not None,
        ),
    ]


FINSET_WINDOW = 3


def check_category_laws(cat: FinCat) -> LawReport:
    """Check of the category axioms; one result per law.

    Exhaustive, except for a large :class:`FinSet`: composition there is the same rule at every
    size, so the laws run on the full subcategory of objects up to :data:`FINSET_WINDOW` and the
    report is marked as a probe.
    """
    if isinstance(cat, FinSet) and cat.bound > FINSET_WINDOW:
        return run_laws(cat.name, PROBE, category_laws(FinSet(FINSET_WINDOW)))
    return run_laws(cat.name, EXHAUSTIVE, category_laws(cat))


def find_isomorphisms(cat: FinCat, x: Obj, y: Obj) -> list[tuple[Arrow, Arrow]]:
    """All pairs ``(f, g)`` with ``f: x -> y`` and ``g`` its two-sided inverse, in id order."""
    out = []
    ix, iy = cat.identity(x), cat.identity(y)
    for f in cat.hom(x, y):
        for g in cat.hom(y, x):
            if cat.try_compose(f, g) == ix and cat.try_compose(g, f) == iy:
                out.append((f, g))
    return out


def is_gaunt(cat: FinCat) -> bool:
    """Every isomorphism is an identity. Stands in for univalence on finite, set-level data."""
    for x in cat.objects:
        for y in cat.objects:
            for f, g in find_isomorphisms(cat, x, y):
                if not (x == y and f == g == cat.identity(x)):
                    return False
    return True


# ---------------------------------------------------------------------------------------
# functors and natural transformations


@dataclass(frozen=True)
class FinFunctor:
    src: FinCat
    tgt: FinCat
    obj_map: FrozenDict
    arr_map: FrozenDict
    name: str = field(default="F", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "obj_map", freeze(self.obj_map))
        object.__setattr__(self, "arr_map", freeze(self.arr_map))

    def ob(self, x):
        return self.obj_map[x]

    def ar(self, f):
        return self.arr_map[f]

    def __repr__(self) -> str:
        return f"<FinFunctor {self.name}: {self.src.name} -> {self.tgt.name}>"

    def sort_key(self):
        return (self.name, self.src.name, self.tgt.name)


def identity_functor(cat: FinCat) -> FinFunctor:
    return FinFunctor(cat, cat, {x: x for x in cat.objects}, {a: a for a in cat.arrows}, name=f"id_{cat.name}")


def compose_functors(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """F then G."""
    if F.tgt != G.src:
        raise MalformedTable(f"cannot compose {F.name} with {G.name}")
    return FinFunctor(
        F.src,
        G.tgt,
        {x: G.ob(F.ob(x)) for x in F.src.objects},
        {a: G.ar(F.ar(a)) for a in F.src.arrows},
        name=f"{G.name}.{F.name}",
    )


def constant_functor(src: FinCat, tgt: FinCat, obj: Obj, name: str = "K") -> FinFunctor:
    i = tgt.identity(obj)
    return FinFunctor(src, tgt, {x: obj for x in src.objects}, {a: i for a in src.arrows}, name=name)


def functor_laws(F: FinFunctor) -> list[Law]:
    C, D = F.src, F.tgt

    def total(a):
        return a in F.arr_map

    return [
        Law("object-map-total", lambda: ((x,) for x in C.objects), lambda x: x in F.obj_map and F.ob(x) in D.objects),
        Law("arrow-map-total", lambda: ((a,) for a in C.arrows), lambda a: total(a) and D.has_arrow(F.ar(a))),
        Law(
            "preserves-endpoints",
            lambda: ((a,) for a in C.arrows),
            lambda a: D.src(F.ar(a)) == F.ob(C.src(a)) and D.tgt(F.ar(a)) == F.ob(C.tgt(a)),
        ),
        Law(
            "preserves-identities",
            lambda: ((x,) for x in C.objects),
            lambda x: F.ar(C.identity(x)) == D.identity(F.ob(x)),
        ),
        Law(
            "preserves-composition",
            lambda: _composable_pairs(C),
            lambda f, g: F.ar(C.compose(f, g)) == D.compose(F.ar(f), F.ar(g)),
        ),
    ]


def check_functor(F: FinFunctor) -> LawReport:
    return run_laws(F.name, EXHAUSTIVE, functor_laws(F))


@dataclass(frozen=True)
class FinNatTrans:
    src: FinFunctor
    tgt: FinFunctor
    components: FrozenDict
    name: str = field(default="alpha", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", freeze(self.components))

    def __getitem__(self, x):
        return self.components[x]


def check_natural(alpha: FinNatTrans) -> LawReport:
    F, G = alpha.src, alpha.tgt
    C, D = F.src, F.tgt

    laws = [
        Law(
            "component-endpoints",
            lambda: ((x,) for x in C.objects),
            lambda x: D.src(alpha[x]) == F.ob(x) and D.tgt(alpha[x]) == G.ob(x),
        ),
        Law(
            "naturality",
            lambda: ((f,) for f in C.arrows),
            lambda f: D.compose(F.ar(f), alpha[C.tgt(f)]) == D.compose(alpha[C.src(f)], G.ar(f)),
        ),
    ]
    return run_laws(alpha.name, EXHAUSTIVE, laws)


# ---------------------------------------------------------------------------------------
# (co)limits by exhaustive search


@dataclass(frozen=True)
class Cone:
    """A cone (or cocone) with apex ``apex`` and legs in the order of the diagram's feet."""

    apex: Obj
    legs: tuple


Cocone = Cone


def _pullback_cones(cat: FinCat, f: Arrow, g: Arrow) -> list[Cone]:
    x, y = cat.src(f), cat.src(g)
    order = {o: i for i, o in enumerate(cat.objects)}
    cones = [
        Cone(p, (a, b))
        for p in cat.objects
        for a in cat.hom(p, x)
        for b in cat.hom(p, y)
        if cat.compose(a, f) == cat.compose(b, g)
    ]
    cones.sort(key=lambda c: (order[c.apex], sort_key(c.legs)))
    return cones


def pullback_mediators(cat: FinCat, target: Cone, competitor: Cone) -> list[Arrow]:
    a, b = target.legs
    c, d = competitor.legs
    return [m for m in cat.hom(competitor.apex, target.apex) if cat.compose(m, a) == c and cat.compose(m, b) == d]


def pushout_mediators(cat: FinCat, target: Cone, competitor: Cone) -> list[Arrow]:
    a, b = target.legs
    c, d = competitor.legs
    return [m for m in cat.hom(target.apex, competitor.apex) if cat.compose(a, m) == c and cat.compose(b, m) == d]


def is_pullback(cat: FinCat, f: Arrow, g: Arrow, cone: Cone, cones: list[Cone] | None = None) -> bool:
    """Universal property by enumeration: exactly one mediating arrow from every cone."""
    a, b = cone.legs
    if cat.compose(a, f) != cat.compose(b, g):
        return False
    for other in cones if cones is not None else _pullback_cones(cat, f, g):
        if len(pullback_mediators(cat, cone, other)) != 1:
            return False
    return True


def pullback(cat: FinCat, f: Arrow, g: Arrow) -> Cone | None:
    """Canonical pullback of the cospan ``f: x -> z <- y: g``, or None if there is none.

    Cones are tried by apex position in ``cat.objects`` and then by legs in id order; the
    first terminal one wins, so the answer is a function of the input.
    """
    if cat.tgt(f) != cat.tgt(g):
        raise ValueError("pullback needs a cospan")
    cones = _pullback_cones(cat, f, g)
    for cone in cones:
        if is_pullback(cat, f, g, cone, cones):
            return cone
    return None


def _pushout_cocones(cat: FinCat, f: Arrow, g: Arrow) -> list[Cone]:
    x, y = cat.tgt(f), cat.tgt(g)
    order = {o: i for i, o in enumerate(cat.objects)}
    cocones = [
        Cone(p, (a, b))
        for p in cat.objects
        for a in cat.hom(x, p)
        for b in cat.hom(y, p)
        if cat.compose(f, a) == cat.compose(g, b)
    ]
    cocones.sort(key=lambda c: (order[c.apex], sort_key(c.legs)))
    return cocones


def is_pushout(cat: FinCat, f: Arrow, g: Arrow, cocone: Cone, cocones: list[Cone] | None = None) -> bool:
    a, b = cocone.legs
    if cat.compose(f, a) != cat.compose(g, b):
        return False
    for other in cocones if cocones is not None else _pushout_cocones(cat, f, g):
        if len(pushout_mediators(cat, cocone, other)) != 1:
            return False
    return True


def pushout(cat: FinCat, f: Arrow, g: Arrow) -> Cone | None:
    """Canonical pushout of the span ``x <- z -> y`` given as ``f: z -> x``, ``g: z -> y``."""
    if cat.src(f) != cat.src(g):
        raise ValueError("pushout needs a span")
    cocones = _pushout_cocones(cat, f, g)
    for cocone in cocones:
        if is_pushout(cat, f, g, cocone, cocones):
            return cocone
    return None


# ---------------------------------------------------------------------------------------
# profunctors


@dataclass(frozen=True)
class FinProfunctor:
    """A profunctor ``src -|-> tgt``, i.e. a functor ``op(tgt) x src -> Set``.

    ``value[(d, c)]`` lists the elements over ``d`` in ``tgt`` and ``c`` in ``src``; read an
    element as a heteromorphism ``d ~> c``. ``left[(u, p)]`` precomposes a ``tgt``-arrow
    ``u: d' -> d``, ``right[(f, p)]`` postcomposes a ``src``-arrow ``f: c -> c'``.
    Element ids are unique across the whole profunctor.
    """

    src: FinCat
    tgt: FinCat
    value: FrozenDict
    left: FrozenDict
    right: FrozenDict
    name: str = field(default="P", compare=False)
    classes: FrozenDict | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "value", FrozenDict({k: tuple(v) for k, v in self.value.items()}))
        object.__setattr__(self, "left", freeze(self.left))
        object.__setattr__(self, "right", freeze(self.right))
        if self.classes is not None:
            object.__setattr__(self, "classes", freeze(self.classes))

    def at(self, d, c) -> tuple:
        return self.value.get((d, c), ())

    @cached_property
    def index(self) -> dict:
        """Element id -> (d, c)."""
        return {p: k for k, ps in self.value.items() for p in ps}

    @property
    def elements(self) -> tuple:
        return tuple(self.index)

    def act_left(self, u, p):
        return self.left[(u, p)]

    def act_right(self, f, p):
        return self.right[(f, p)]

    def __repr__(self) -> str:
        return f"<FinProfunctor {self.name}: {self.src.name} -|-> {self.tgt.name}>"

    def sort_key(self):
        return (self.name, self.src.name, self.tgt.name)


def profunctor_laws(P: FinProfunctor) -> list[Law]:
    C, D = P.src, P.tgt

    def left_pairs():
        for p, (d, c) in P.index.items():
            for d2 in D.objects:
                for u in D.hom(d2, d):
                    yield (u, p)

    def right_pairs():
        for p, (d, c) in P.index.items():
            for c2 in C.objects:
                for f in C.hom(c, c2):
                    yield (f, p)

    def left_ok(u, p):
        d, c = P.index[p]
        return P.index.get(P.act_left(u, p)) == (D.src(u), c)

    def right_ok(f, p):
        d, c = P.index[p]
        return P.index.get(P.act_right(f, p)) == (d, C.tgt(f))

    def left_comp():
        for u, p in left_pairs():
            for d3 in D.objects:
                for u2 in D.hom(d3, D.src(u)):
                    yield (u2, u, p)

    def right_comp():
        for f, p in right_pairs():
            for c3 in C.objects:
                for f2 in C.hom(C.tgt(f), c3):
                    yield (f, f2, p)

    def mixed():
        for u, p in left_pairs():
            c = P.index[p][1]
            for c2 in C.objects:
                for f in C.hom(c, c2):
                    yield (u, f, p)

    return [
        Law(
            "indices-declared",
            lambda: ((k,) for k in P.value),
            lambda k: k[0] in D.objects and k[1] in C.objects,
        ),
        Law("elements-unique", lambda: [()], lambda: len(P.index) == sum(len(v) for v in P.value.values())),
        Law("left-action-typed", left_pairs, left_ok),
        Law("right-action-typed", right_pairs, right_ok),
        Law(
            "left-identity",
            lambda: ((p,) for p in P.index),
            lambda p: P.act_left(D.identity(P.index[p][0]), p) == p,
        ),
        Law(
            "right-identity",
            lambda: ((p,) for p in P.index),
            lambda p: P.act_right(C.identity(P.index[p][1]), p) == p,
        ),
        Law(
            "left-composition",
            left_comp,
            lambda u2, u, p: P.act_left(D.compose(u2, u), p) == P.act_left(u2, P.act_left(u, p)),
        ),
        Law(
            "right-composition",
            right_comp,
            lambda f, f2, p: P.act_right(C.compose(f, f2), p) == P.act_right(f2, P.act_right(f, p)),
        ),
        Law(
            "actions-commute",
            mixed,
            lambda u, f, p: P.act_right(f, P.act_left(u, p)) == P.act_left(u, P.act_right(f, p)),
        ),
    ]


def check_profunctor(P: FinProfunctor) -> LawReport:
    return run_laws(P.name, EXHAUSTIVE, profunctor_laws(P))


def hom_profunctor(cat: FinCat, name: str | None = None) -> FinProfunctor:
    """The identity profunctor ``cat -|-> cat``: elements over (d, c) are arrows d -> c."""
    value = {(d, c): cat.hom(d, c) for d in cat.objects for c in cat.objects}
    left = {(u, f): cat.compose(u, f) for f in cat.arrows for u in cat.arrows if cat.tgt(u) == cat.src(f)}
    right = {(g, f): cat.compose(f, g) for f in cat.arrows for g in cat.arrows if cat.tgt(f) == cat.src(g)}
    return FinProfunctor(cat, cat, value, left, right, name=name or f"hom_{cat.name}")


def representable_profunctor(F: FinFunctor, name: str | None = None) -> FinProfunctor:
    """The profunctor ``F.src -|-> F.tgt`` with elements over (y, x) the arrows ``y -> F(x)``.

    Elements are tagged ``(g, x)`` because the same arrow can lie over several ``x``.
    """
    C1, C2 = F.src, F.tgt
    value = {(y, x): tuple((g, x) for g in C2.hom(y, F.ob(x))) for y in C2.objects for x in C1.objects}
    left, right = {}, {}
    for (y, x), els in value.items():
        for g, _ in els:
            for u in C2.arrows:
                if C2.tgt(u) == y:
                    left[(u, (g, x))] = (C2.compose(u, g), x)
            for f in C1.arrows:
                if C1.src(f) == x:
                    right[(f, (g, x))] = (C2.compose(g, F.ar(f)), C1.tgt(f))
    return FinProfunctor(C1, C2, value, left, right, name=name or f"repr({F.name})")


class DisjointSet:
    def __init__(self, items: Iterable = ()):
        self.parent: dict = {}
        for x in items:
            self.parent[x] = x

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def prof_compose(P: FinProfunctor, Q: FinProfunctor, name: str | None = None) -> FinProfunctor:
    """Coend composite ``P then Q`` of ``P: C -|-> D`` and ``Q: D -|-> E``.

    Elements over (e, c) are classes of pairs ``(q, p)`` with ``q`` over (e, d) and ``p``
    over (d, c), modulo ``(q.f, p) ~ (q, f.p)``. Each class is named by its least pair.
    """
    if P.tgt != Q.src:
        raise MiddleMismatch(f"{P.name}: {P.src.name} -|-> {P.tgt.name} vs {Q.name}: {Q.src.name} -|-> {Q.tgt.name}")
    C, D, E = P.src, P.tgt, Q.tgt
    pairs = [
        (q, p)
        for e in E.objects
        for c in C.objects
        for d in D.objects
        for q in Q.at(e, d)
        for p in P.at(d, c)
    ]
    ds = DisjointSet(pairs)
    for f in D.arrows:
        d, d2 = D.src(f), D.tgt(f)
        for e in E.objects:
            for q in Q.at(e, d):
                qf = Q.act_right(f, q)
                for c in C.objects:
                    for p in P.at(d2, c):
                        ds.union((qf, p), (q, P.act_left(f, p)))
    rep: dict = {}
    for cls in ds.classes():
        least = min(cls, key=sort_key)
        for pair in cls:
            rep[pair] = least
    value: dict = {(e, c): [] for e in E.objects for c in C.objects}
    for pair, r in rep.items():
        if pair == r:
            q, p = pair
            value[(Q.index[q][0], P.index[p][1])].append(r)
    value = {k: tuple(sorted_ids(v)) for k, v in value.items()}
    left, right = {}, {}
    for (e, c), els in value.items():
        for q, p in els:
            for w in E.arrows:
                if E.tgt(w) == e:
                    left[(w, (q, p))] = rep[(Q.act_left(w, q), p)]
            for g in C.arrows:
                if C.src(g) == c:
                    right[(g, (q, p))] = rep[(q, P.act_right(g, p))]
    return FinProfunctor(C, E, value, left, right, name=name or f"({P.name};{Q.name})", classes=rep)


def coend_class(composite: FinProfunctor, q, p):
    """Representative of the class of ``(q, p)`` in a composite built by :func:`prof_compose`."""
    if composite.classes is None:
        raise ValueError(f"{composite.name} is not a coend composite")
    return composite.classes[(q, p)]


def empty_profunctor(src: FinCat, tgt: FinCat, name: str = "0") -> FinProfunctor:
    return FinProfunctor(src, tgt, {(d, c): () for d in tgt.objects for c in src.objects}, {}, {}, name=name)


def set_profunctor(elements: Sequence, name: str = "S", over: FinCat | None = None) -> FinProfunctor:
    """A profunctor ``1 -|-> 1``, i.e. just a finite set."""
    one = over or terminal()
    (x,) = one.objects
    return FinProfunctor(
        one,
        one,
        {(x, x): tuple(elements)},
        {(one.identity(x), e): e for e in elements},
        {(one.identity(x), e): e for e in elements},
        name=name,
    )


def profunctor_bijection(P: FinProfunctor, Q: FinProfunctor) -> dict | None:
    """Some natural bijection between ``P`` and ``Q`` (same categories), by backtracking search.

    Returns an element map or None. Exponential in the worst case; meant as an oracle on
    small instances.
    """
    if P.src != Q.src or P.tgt != Q.tgt:
        return None
    keys = list(P.value)
    if any(len(P.at(*k)) != len(Q.at(*k)) for k in keys) or set(P.value) != set(Q.value):
        return None
    order = [p for k in keys for p in P.at(*k)]
    assign: dict = {}
    used: set = set()

    def consistent() -> bool:
        for p, q in assign.items():
            d, c = P.index[p]
            for u in P.tgt.arrows:
                if P.tgt.tgt(u) == d:
                    p2 = P.act_left(u, p)
                    if p2 in assign and assign[p2] != Q.act_left(u, q):
                        return False
            for f in P.src.arrows:
                if P.src.src(f) == c:
                    p2 = P.act_right(f, p)
                    if p2 in assign and assign[p2] != Q.act_right(f, q):
                        return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for q in Q.at(*P.index[p]):
            if q in used:
                continue
            assign[p] = q
            used.add(q)
            if consistent() and go(i + 1):
                return True
            del assign[p]
            used.discard(q)
        return False

    return dict(assign) if go(0) else None


def is_natural_bijection(P: FinProfunctor, Q: FinProfunctor, m: Mapping) -> bool:
    """``m`` is a componentwise bijection P -> Q commuting with both actions."""
    if set(m) != set(P.index):
        return False
    if len(set(m.values())) != len(m) or set(m.values()) != set(Q.index):
        return False
    for p, q in m.items():
        if P.index[p] != Q.index[q]:
            return False
    for (u, p), p2 in P.left.items():
        if m[p2] != Q.act_left(u, m[p]):
            return False
    for (f, p), p2 in P.right.items():
        if m[p2] != Q.act_right(f, m[p]):
            return False
    return True


def all_profunctor_maps(P: FinProfunctor, Q: FinProfunctor, index_map) -> Iterator[dict]:
    """Every family of functions ``P(d, c) -> Q(index_map(d, c))``, unfiltered."""
    elems = list(P.index)
    targets = [Q.at(*index_map(*P.index[p])) for p in elems]
    for choice in itertools.product(*targets):
        yield dict(zip(elems, choice))


__all__ = [name for name in dir() if not name.startswith("_") and name not in {"annotations", "Any"}]
