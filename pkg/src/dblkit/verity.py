"""Verity double bicategories: two bicategories on one set of objects, linked by squares.

A square ``Square(left=v1, right=v2, top=h1, bottom=h2, cell)`` has horizontal 1-cells
``h1: x1 -> x2`` and ``h2: y1 -> y2`` and vertical 1-cells ``v1: x1 -> y1`` and
``v2: x2 -> y2``. ``sqvcomp`` stacks along a horizontal edge (composing the vertical
sides), ``sqhcomp`` places side by side (composing the horizontal sides).

Whiskerings move one side of a square along a 2-cell of the matching bicategory:

* ``lwhisker(t, s)`` with ``t: v1 => v2`` and ``s.left == v2`` gives left side ``v1``;
* ``rwhisker(t, s)`` with ``t: w1 => w2`` and ``s.right == w1`` gives right side ``w2``;
* ``uwhisker(t, s)`` with ``t: h1 => h2`` and ``s.top == h2`` gives top ``h1``;
* ``dwhisker(t, s)`` with ``t: k1 => k2`` and ``s.bottom == k1`` gives bottom ``k2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._util import FrozenDict, memo, sorted_ids
from .bicat import (
    FinBicat,
    _all_cells2,
    _cells2_from,
    _composable,
    bicat_laws,
    co_dual,
    discrete_bicat,
)
from .double import PseudoDoubleCat, Square, check_boundary, underlying_horizontal_bicat
from .report import EXHAUSTIVE, PROBE, Law, LawReport, run_laws


class VerityDoubleBicat:
    """Interface shared by every Verity double bicategory.

    ``horb`` and ``verb`` are the horizontal and vertical bicategories; subclasses supply
    the squares and the square operations.
    """

    name: str = "VB"
    horb: FinBicat
    verb: FinBicat

    def squares(self, left, right, top, bottom) -> tuple:
        raise NotImplementedError

    def sqhid(self, h) -> Square:
        """``(id, id, h, h)``."""
        raise NotImplementedError

    def sqvid(self, v) -> Square:
        """``(v, v, id, id)``."""
        raise NotImplementedError

    def sqvcomp(self, s: Square, t: Square) -> Square:
        raise NotImplementedError

    def sqhcomp(self, s: Square, t: Square) -> Square:
        raise NotImplementedError

    def lwhisker(self, t, s: Square) -> Square:
        raise NotImplementedError

    def rwhisker(self, t, s: Square) -> Square:
        raise NotImplementedError

    def uwhisker(self, t, s: Square) -> Square:
        raise NotImplementedError

    def dwhisker(self, t, s: Square) -> Square:
        raise NotImplementedError

    # derived -------------------------------------------------------------------------
    @property
    def objects(self) -> tuple:
        return self.horb.objects

    @property
    def materialized(self) -> bool:
        return self.horb.materialized and self.verb.materialized

    @property
    def mode(self) -> str:
        return EXHAUSTIVE if self.materialized else PROBE

    def law_objects(self) -> tuple:
        return self.horb.law_objects()

    def hor(self, x, y) -> tuple:
        return self.horb.law_cells1(x, y)

    def ver(self, x, y) -> tuple:
        return self.verb.law_cells1(x, y)

    def all_squares(self) -> Iterator[Square]:
        obs = self.law_objects()
        for x1, x2, y1, y2 in itertools.product(obs, repeat=4):
            for h in self.hor(x1, x2):
                for k in self.hor(y1, y2):
                    for v in self.ver(x1, y1):
                        for w in self.ver(x2, y2):
                            yield from self.squares(v, w, h, k)

    def sqvcomp_all(self, *squares: Square) -> Square:
        out = squares[0]
        for s in squares[1:]:
            out = self.sqvcomp(out, s)
        return out

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


# ---------------------------------------------------------------------------------------
# laws


class _Squares:
    """All (probe) squares of a VB, indexed for pair enumeration."""

    def __init__(self, VB: VerityDoubleBicat):
        self.all = list(VB.all_squares())
        self.by_top: dict = {}
        self.by_left: dict = {}
        for s in self.all:
            self.by_top.setdefault(s.top, []).append(s)
            self.by_left.setdefault(s.left, []).append(s)

    def vpairs(self):
        for s in self.all:
            for t in self.by_top.get(s.bottom, ()):
                yield s, t

    def hpairs(self):
        for s in self.all:
            for t in self.by_left.get(s.right, ()):
                yield s, t

    def vtriples(self):
        for s, t in self.vpairs():
            for u in self.by_top.get(t.bottom, ()):
                yield s, t, u

    def htriples(self):
        for s, t in self.hpairs():
            for u in self.by_left.get(t.right, ()):
                yield s, t, u


def _into(B: FinBicat, g) -> Iterator:
    """2-cells of B (within the probe) ending at ``g``."""
    for f in B.law_cells1(B.src1(g), B.tgt1(g)):
        yield from B.cells2(f, g)


def _from(B: FinBicat, f) -> Iterator:
    for a, _ in _cells2_from(B, f):
        yield a


def verity_laws(VB: VerityDoubleBicat) -> list[Law]:
    H, V = VB.horb, VB.verb
    cache: dict = {}

    def sq() -> _Squares:
        if "sq" not in cache:
            cache["sq"] = _Squares(VB)
        return cache["sq"]

    def squares():
        return ((s,) for s in sq().all)

    # tuples pairing a 2-cell with a square it can act on
    def left_cells():
        for s in sq().all:
            for t in _into(V, s.left):
                yield t, s

    def right_cells():
        for s in sq().all:
            for t in _from(V, s.right):
                yield t, s

    def up_cells():
        for s in sq().all:
            for t in _into(H, s.top):
                yield t, s

    def down_cells():
        for s in sq().all:
            for t in _from(H, s.bottom):
                yield t, s

    def left_pairs():
        for t2, s in left_cells():
            for t1 in _into(V, V.src2(t2)):
                yield t1, t2, s

    def right_pairs():
        for t1, s in right_cells():
            for t2 in _from(V, V.tgt2(t1)):
                yield t1, t2, s

    def up_pairs():
        for t2, s in up_cells():
            for t1 in _into(H, H.src2(t2)):
                yield t1, t2, s

    def down_pairs():
        for t1, s in down_cells():
            for t2 in _from(H, H.tgt2(t1)):
                yield t1, t2, s

    def two_sides(first, second):
        def gen():
            for t, s in first():
                for u in second(s):
                    yield t, u, s

        return gen

    from_v_right = lambda s: _from(V, s.right)  # noqa: E731
    into_h_top = lambda s: _into(H, s.top)  # noqa: E731
    from_h_bottom = lambda s: _from(H, s.bottom)  # noqa: E731

    def whiskered_vpairs(side):
        # (t, s1, s2): a 2-cell on the given side of s1 or s2, for the compatibility laws
        def gen():
            for s1, s2 in sq().vpairs():
                for t in side(s1, s2):
                    yield t, s1, s2

        return gen

    def whiskered_hpairs(side):
        def gen():
            for s1, s2 in sq().hpairs():
                for t in side(s1, s2):
                    yield t, s1, s2

        return gen

    def hcells():
        for x in H.law_objects():
            for y in H.law_objects():
                for h in H.law_cells1(x, y):
                    yield (h,)

    def vcells():
        for x in V.law_objects():
            for y in V.law_objects():
                for v in V.law_cells1(x, y):
                    yield (v,)

    def h2cells():
        return ((a,) for a in _all_cells2(H))

    def v2cells():
        return ((a,) for a in _all_cells2(V))

    # predicates ----------------------------------------------------------------------
    def in_slot(s):
        return s in VB.squares(s.left, s.right, s.top, s.bottom)

    def hid_boundary(h):
        s = VB.sqhid(h)
        x, y = H.src1(h), H.tgt1(h)
        return s.boundary() == (V.id1(x), V.id1(y), h, h) and in_slot(s)

    def vid_boundary(v):
        s = VB.sqvid(v)
        x, y = V.src1(v), V.tgt1(v)
        return s.boundary() == (v, v, H.id1(x), H.id1(y)) and in_slot(s)

    def hid_vid(x):
        return VB.sqhid(H.id1(x)) == VB.sqvid(V.id1(x))

    def vcomp_boundary(s, t):
        u = VB.sqvcomp(s, t)
        return u.boundary() == (V.comp1(s.left, t.left), V.comp1(s.right, t.right), s.top, t.bottom) and in_slot(u)

    def hcomp_boundary(s, t):
        u = VB.sqhcomp(s, t)
        return u.boundary() == (s.left, t.right, H.comp1(s.top, t.top), H.comp1(s.bottom, t.bottom)) and in_slot(u)

    def lw_boundary(t, s):
        u = VB.lwhisker(t, s)
        return u.boundary() == (V.src2(t), s.right, s.top, s.bottom) and in_slot(u)

    def rw_boundary(t, s):
        u = VB.rwhisker(t, s)
        return u.boundary() == (s.left, V.tgt2(t), s.top, s.bottom) and in_slot(u)

    def uw_boundary(t, s):
        u = VB.uwhisker(t, s)
        return u.boundary() == (s.left, s.right, H.src2(t), s.bottom) and in_slot(u)

    def dw_boundary(t, s):
        u = VB.dwhisker(t, s)
        return u.boundary() == (s.left, s.right, s.top, H.tgt2(t)) and in_slot(u)

    def lw_identity(s):
        return VB.lwhisker(V.id2(s.left), s) == s

    def rw_identity(s):
        return VB.rwhisker(V.id2(s.right), s) == s

    def uw_identity(s):
        return VB.uwhisker(H.id2(s.top), s) == s

    def dw_identity(s):
        return VB.dwhisker(H.id2(s.bottom), s) == s

    def lw_comp(t1, t2, s):
        return VB.lwhisker(V.vcomp2(t1, t2), s) == VB.lwhisker(t1, VB.lwhisker(t2, s))

    def rw_comp(t1, t2, s):
        return VB.rwhisker(V.vcomp2(t1, t2), s) == VB.rwhisker(t2, VB.rwhisker(t1, s))

    def uw_comp(t1, t2, s):
        return VB.uwhisker(H.vcomp2(t1, t2), s) == VB.uwhisker(t1, VB.uwhisker(t2, s))

    def dw_comp(t1, t2, s):
        return VB.dwhisker(H.vcomp2(t1, t2), s) == VB.dwhisker(t2, VB.dwhisker(t1, s))

    def commute(f, g):
        def holds(t, u, s):
            return f(t, g(u, s)) == g(u, f(t, s))

        return holds

    def hid_natural(t):
        return VB.uwhisker(t, VB.sqhid(H.tgt2(t))) == VB.dwhisker(t, VB.sqhid(H.src2(t)))

    def vid_natural(t):
        return VB.lwhisker(t, VB.sqvid(V.tgt2(t))) == VB.rwhisker(t, VB.sqvid(V.src2(t)))

    def hid_comp(h, k):
        return VB.sqhid(H.comp1(h, k)) == VB.sqhcomp(VB.sqhid(h), VB.sqhid(k))

    def vid_comp(v, w):
        return VB.sqvid(V.comp1(v, w)) == VB.sqvcomp(VB.sqvid(v), VB.sqvid(w))

    def vunit_left(s):
        lhs = VB.rwhisker(V.lunitor(s.right), VB.sqvcomp(VB.sqhid(s.top), s))
        return lhs == VB.lwhisker(V.lunitor(s.left), s)

    def vunit_right(s):
        lhs = VB.rwhisker(V.runitor(s.right), VB.sqvcomp(s, VB.sqhid(s.bottom)))
        return lhs == VB.lwhisker(V.runitor(s.left), s)

    def vassoc(s, t, u):
        lhs = VB.lwhisker(V.associator(s.left, t.left, u.left), VB.sqvcomp(VB.sqvcomp(s, t), u))
        rhs = VB.rwhisker(V.associator(s.right, t.right, u.right), VB.sqvcomp(s, VB.sqvcomp(t, u)))
        return lhs == rhs

    def hunit_left(s):
        lhs = VB.dwhisker(H.lunitor(s.bottom), VB.sqhcomp(VB.sqvid(s.left), s))
        return lhs == VB.uwhisker(H.lunitor(s.top), s)

    def hunit_right(s):
        lhs = VB.dwhisker(H.runitor(s.bottom), VB.sqhcomp(s, VB.sqvid(s.right)))
        return lhs == VB.uwhisker(H.runitor(s.top), s)

    def hassoc(s, t, u):
        lhs = VB.uwhisker(H.associator(s.top, t.top, u.top), VB.sqhcomp(VB.sqhcomp(s, t), u))
        rhs = VB.dwhisker(H.associator(s.bottom, t.bottom, u.bottom), VB.sqhcomp(s, VB.sqhcomp(t, u)))
        return lhs == rhs

    def interchange():
        S = sq()
        for s1, s2 in S.vpairs():
            for t1 in S.by_left.get(s1.right, ()):
                for t2 in S.by_top.get(t1.bottom, ()):
                    if t2.left == s2.right:
                        yield s1, s2, t1, t2

    def interchange_holds(s1, s2, t1, t2):
        lhs = VB.sqhcomp(VB.sqvcomp(s1, s2), VB.sqvcomp(t1, t2))
        return lhs == VB.sqvcomp(VB.sqhcomp(s1, t1), VB.sqhcomp(s2, t2))

    # compatibility of whiskering with the two compositions
    def v_lw_first(t, s1, s2):
        return VB.sqvcomp(VB.lwhisker(t, s1), s2) == VB.lwhisker(V.rwhisker(t, s2.left), VB.sqvcomp(s1, s2))

    def v_lw_second(t, s1, s2):
        return VB.sqvcomp(s1, VB.lwhisker(t, s2)) == VB.lwhisker(V.lwhisker(s1.left, t), VB.sqvcomp(s1, s2))

    def v_rw_first(t, s1, s2):
        return VB.sqvcomp(VB.rwhisker(t, s1), s2) == VB.rwhisker(V.rwhisker(t, s2.right), VB.sqvcomp(s1, s2))

    def v_rw_second(t, s1, s2):
        return VB.sqvcomp(s1, VB.rwhisker(t, s2)) == VB.rwhisker(V.lwhisker(s1.right, t), VB.sqvcomp(s1, s2))

    def v_uw(t, s1, s2):
        return VB.sqvcomp(VB.uwhisker(t, s1), s2) == VB.uwhisker(t, VB.sqvcomp(s1, s2))

    def v_dw(t, s1, s2):
        return VB.sqvcomp(s1, VB.dwhisker(t, s2)) == VB.dwhisker(t, VB.sqvcomp(s1, s2))

    def v_middle(t, s1, s2):
        # t: k1 => k2 with s1 ending at k1 and s2 starting at k2
        return VB.sqvcomp(VB.dwhisker(t, s1), s2) == VB.sqvcomp(s1, VB.uwhisker(t, s2))

    def h_uw_first(t, s1, s2):
        return VB.sqhcomp(VB.uwhisker(t, s1), s2) == VB.uwhisker(H.rwhisker(t, s2.top), VB.sqhcomp(s1, s2))

    def h_uw_second(t, s1, s2):
        return VB.sqhcomp(s1, VB.uwhisker(t, s2)) == VB.uwhisker(H.lwhisker(s1.top, t), VB.sqhcomp(s1, s2))

    def h_dw_first(t, s1, s2):
        return VB.sqhcomp(VB.dwhisker(t, s1), s2) == VB.dwhisker(H.rwhisker(t, s2.bottom), VB.sqhcomp(s1, s2))

    def h_dw_second(t, s1, s2):
        return VB.sqhcomp(s1, VB.dwhisker(t, s2)) == VB.dwhisker(H.lwhisker(s1.bottom, t), VB.sqhcomp(s1, s2))

    def h_lw(t, s1, s2):
        return VB.sqhcomp(VB.lwhisker(t, s1), s2) == VB.lwhisker(t, VB.sqhcomp(s1, s2))

    def h_rw(t, s1, s2):
        return VB.sqhcomp(s1, VB.rwhisker(t, s2)) == VB.rwhisker(t, VB.sqhcomp(s1, s2))

    def h_middle(t, s1, s2):
        return VB.sqhcomp(VB.rwhisker(t, s1), s2) == VB.sqhcomp(s1, VB.lwhisker(t, s2))

    # the middle laws act on a 2-cell between the shared edges, so pair them up here
    def v_middle_tuples():
        S = sq()
        for s1 in S.all:
            for t in _from(H, s1.bottom):
                for s2 in S.by_top.get(H.tgt2(t), ()):
                    yield t, s1, s2

    def h_middle_tuples():
        S = sq()
        for s1 in S.all:
            for t in _from(V, s1.right):
                for s2 in S.by_left.get(V.tgt2(t), ()):
                    yield t, s1, s2

    objects = lambda: ((x,) for x in VB.law_objects())  # noqa: E731
    hpairs1 = lambda: _composable(H, 2)  # noqa: E731
    vpairs1 = lambda: _composable(V, 2)  # noqa: E731

    laws = [Law(f"horizontal/{law.name}", law.tuples, law.holds, law.describe) for law in bicat_laws(H)]
    laws += [Law(f"vertical/{law.name}", law.tuples, law.holds, law.describe) for law in bicat_laws(V)]
    laws += [
        Law("square-slots", squares, in_slot),
        Law("hid-boundary", hcells, hid_boundary),
        Law("vid-boundary", vcells, vid_boundary),
        Law("hid-vid", objects, hid_vid),
        Law("vcomp-boundary", lambda: sq().vpairs(), vcomp_boundary),
        Law("hcomp-boundary", lambda: sq().hpairs(), hcomp_boundary),
        Law("lwhisker-boundary", left_cells, lw_boundary),
        Law("rwhisker-boundary", right_cells, rw_boundary),
        Law("uwhisker-boundary", up_cells, uw_boundary),
        Law("dwhisker-boundary", down_cells, dw_boundary),
        Law("lwhisker-identity", squares, lw_identity),
        Law("rwhisker-identity", squares, rw_identity),
        Law("uwhisker-identity", squares, uw_identity),
        Law("dwhisker-identity", squares, dw_identity),
        Law("lwhisker-composition", left_pairs, lw_comp),
        Law("rwhisker-composition", right_pairs, rw_comp),
        Law("uwhisker-composition", up_pairs, uw_comp),
        Law("dwhisker-composition", down_pairs, dw_comp),
        Law("whiskers-commute-lr", two_sides(left_cells, from_v_right), commute(VB.lwhisker, VB.rwhisker)),
        Law("whiskers-commute-ud", two_sides(up_cells, from_h_bottom), commute(VB.uwhisker, VB.dwhisker)),
        Law("whiskers-commute-lu", two_sides(left_cells, into_h_top), commute(VB.lwhisker, VB.uwhisker)),
        Law("whiskers-commute-ld", two_sides(left_cells, from_h_bottom), commute(VB.lwhisker, VB.dwhisker)),
        Law("whiskers-commute-ru", two_sides(right_cells, into_h_top), commute(VB.rwhisker, VB.uwhisker)),
        Law("whiskers-commute-rd", two_sides(right_cells, from_h_bottom), commute(VB.rwhisker, VB.dwhisker)),
        Law("hid-natural", h2cells, hid_natural),
        Law("vid-natural", v2cells, vid_natural),
        Law("hid-composition", hpairs1, hid_comp),
        Law("vid-composition", vpairs1, vid_comp),
        Law("vcomp-unit-left", squares, vunit_left),
        Law("vcomp-unit-right", squares, vunit_right),
        Law("vcomp-associativity", lambda: sq().vtriples(), vassoc),
        Law("hcomp-unit-left", squares, hunit_left),
        Law("hcomp-unit-right", squares, hunit_right),
        Law("hcomp-associativity", lambda: sq().htriples(), hassoc),
        Law("interchange", interchange, interchange_holds),
        Law("vcomp-lwhisker-first", whiskered_vpairs(lambda s1, s2: _into(V, s1.left)), v_lw_first),
        Law("vcomp-lwhisker-second", whiskered_vpairs(lambda s1, s2: _into(V, s2.left)), v_lw_second),
        Law("vcomp-rwhisker-first", whiskered_vpairs(lambda s1, s2: _from(V, s1.right)), v_rw_first),
        Law("vcomp-rwhisker-second", whiskered_vpairs(lambda s1, s2: _from(V, s2.right)), v_rw_second),
        Law("vcomp-uwhisker", whiskered_vpairs(lambda s1, s2: _into(H, s1.top)), v_uw),
        Law("vcomp-dwhisker", whiskered_vpairs(lambda s1, s2: _from(H, s2.bottom)), v_dw),
        Law("vcomp-middle", v_middle_tuples, v_middle),
        Law("hcomp-uwhisker-first", whiskered_hpairs(lambda s1, s2: _into(H, s1.top)), h_uw_first),
        Law("hcomp-uwhisker-second", whiskered_hpairs(lambda s1, s2: _into(H, s2.top)), h_uw_second),
        Law("hcomp-dwhisker-first", whiskered_hpairs(lambda s1, s2: _from(H, s1.bottom)), h_dw_first),
        Law("hcomp-dwhisker-second", whiskered_hpairs(lambda s1, s2: _from(H, s2.bottom)), h_dw_second),
        Law("hcomp-lwhisker", whiskered_hpairs(lambda s1, s2: _into(V, s1.left)), h_lw),
        Law("hcomp-rwhisker", whiskered_hpairs(lambda s1, s2: _from(V, s2.right)), h_rw),
        Law("hcomp-middle", h_middle_tuples, h_middle),
    ]
    return laws


def check_verity_laws(VB: VerityDoubleBicat, only: Iterable[str] | None = None) -> LawReport:
    return run_laws(VB.name, VB.mode, verity_laws(VB), only)


# ---------------------------------------------------------------------------------------
# saturation


@dataclass(frozen=True)
class Saturation:
    horizontally: bool
    vertically: bool
    # square -> 2-cell, present for each direction that is bijective
    h_inverse: FrozenDict | None = None
    v_inverse: FrozenDict | None = None


def cell_to_square_h(VB: VerityDoubleBicat, t) -> Square:
    """A horizontal 2-cell ``h1 => h2`` as the square ``(id, id, h1, h2)``."""
    return VB.uwhisker(t, VB.sqhid(VB.horb.tgt2(t)))


def cell_to_square_v(VB: VerityDoubleBicat, t) -> Square:
    """A vertical 2-cell ``v1 => v2`` as the square ``(v1, v2, id, id)``."""
    return VB.lwhisker(t, VB.sqvid(VB.verb.tgt2(t)))


def _bijection(B: FinBicat, to_square, slot) -> FrozenDict | None:
    inverse = {}
    for x in B.law_objects():
        for y in B.law_objects():
            cells = B.law_cells1(x, y)
            for f in cells:
                for g in cells:
                    image = {}
                    for t in B.cells2(f, g):
                        image.setdefault(to_square(t), t)
                    if len(image) != len(B.cells2(f, g)) or set(image) != set(slot(x, y, f, g)):
                        return None
                    inverse.update(image)
    return FrozenDict(inverse)


def saturation(VB: VerityDoubleBicat) -> Saturation:
    H, V = VB.horb, VB.verb
    h_inv = _bijection(
        H, lambda t: cell_to_square_h(VB, t), lambda x, y, f, g: VB.squares(V.id1(x), V.id1(y), f, g)
    )
    v_inv = _bijection(
        V, lambda t: cell_to_square_v(VB, t), lambda x, y, f, g: VB.squares(f, g, H.id1(x), H.id1(y))
    )
    return Saturation(h_inv is not None, v_inv is not None, h_inv, v_inv)


def is_weak_double_cat(VB: VerityDoubleBicat) -> bool:
    s = saturation(VB)
    return s.horizontally and s.vertically


def square_to_vertical_cell(VB: VerityDoubleBicat, s: Square, sat: Saturation | None = None):
    """Inverse of :func:`cell_to_square_v`; needs vertical saturation."""
    sat = sat or saturation(VB)
    if sat.v_inverse is None:
        raise ValueError(f"{VB.name} is not vertically saturated")
    return sat.v_inverse[s]


# ---------------------------------------------------------------------------------------
# squares in a bicategory


class SquareVerity(VerityDoubleBicat):
    """Squares ``(v, w, h, k)`` are 2-cells ``h.w => v.k`` of ``B``; the vertical bicategory
    is ``co(B)``, so vertical 2-cells act by precomposition with the reversed cell."""

    def __init__(self, B: FinBicat, name: str | None = None):
        self.B = B
        self.horb = B
        self.verb = co_dual(B)
        self.name = name or f"SqV({B.name})"

    @memo
    def squares(self, left, right, top, bottom):
        B = self.B
        if (B.src1(top), B.tgt1(top), B.src1(bottom), B.tgt1(bottom)) != (
            B.src1(left),
            B.src1(right),
            B.tgt1(left),
            B.tgt1(right),
        ):
            return ()
        return tuple(
            Square(left, right, top, bottom, a) for a in B.cells2(B.comp1(top, right), B.comp1(left, bottom))
        )

    def _sq(self, s: Square, cell) -> Square:
        return Square(s.left, s.right, s.top, s.bottom, cell)

    def sqhid(self, h):
        B = self.B
        return Square(B.id1(B.src1(h)), B.id1(B.tgt1(h)), h, h, B.vcomp2(B.runitor(h), B.inverse2(B.lunitor(h))))

    def sqvid(self, v):
        B = self.B
        return Square(v, v, B.id1(B.src1(v)), B.id1(B.tgt1(v)), B.vcomp2(B.lunitor(v), B.inverse2(B.runitor(v))))

    @memo
    def sqvcomp(self, s, t):
        check_boundary(s.bottom == t.top, "vertical boundary mismatch")
        B = self.B
        inv = B.inverse2
        cell = B.vcomp_all(
            B.associator(s.top, s.right, t.right),
            B.rwhisker(s.cell, t.right),
            inv(B.associator(s.left, s.bottom, t.right)),
            B.lwhisker(s.left, t.cell),
            B.associator(s.left, t.left, t.bottom),
        )
        return Square(B.comp1(s.left, t.left), B.comp1(s.right, t.right), s.top, t.bottom, cell)

    @memo
    def sqhcomp(self, s, t):
        check_boundary(s.right == t.left, "horizontal boundary mismatch")
        B = self.B
        inv = B.inverse2
        cell = B.vcomp_all(
            inv(B.associator(s.top, t.top, t.right)),
            B.lwhisker(s.top, t.cell),
            B.associator(s.top, s.right, t.bottom),
            B.rwhisker(s.cell, t.bottom),
            inv(B.associator(s.left, s.bottom, t.bottom)),
        )
        return Square(s.left, t.right, B.comp1(s.top, t.top), B.comp1(s.bottom, t.bottom), cell)

    # a vertical 2-cell t: v1 => v2 of co(B) is a 2-cell v2 => v1 of B
    def lwhisker(self, t, s):
        B = self.B
        return Square(B.tgt2(t), s.right, s.top, s.bottom, B.vcomp2(s.cell, B.rwhisker(t, s.bottom)))

    def rwhisker(self, t, s):
        B = self.B
        return Square(s.left, B.src2(t), s.top, s.bottom, B.vcomp2(B.lwhisker(s.top, t), s.cell))

    def uwhisker(self, t, s):
        B = self.B
        return Square(s.left, s.right, B.src2(t), s.bottom, B.vcomp2(B.rwhisker(t, s.right), s.cell))

    def dwhisker(self, t, s):
        B = self.B
        return Square(s.left, s.right, s.top, B.tgt2(t), B.vcomp2(s.cell, B.lwhisker(s.left, t)))


def square_verity(B: FinBicat, name: str | None = None) -> SquareVerity:
    return SquareVerity(B, name)


# ---------------------------------------------------------------------------------------
# pseudo double categories as Verity double bicategories


class DoubleCatVerity(VerityDoubleBicat):
    """``D`` transposed: the horizontal bicategory is the discrete one on D's vertical
    category and the vertical bicategory is D's horizontal bicategory.

    A square ``(v, w, h, k)`` here is the square of D with top ``v``, bottom ``w``, left
    ``h`` and right ``k``; it is stored whole in ``cell``. Horizontal 2-cells are
    identities, so whiskering by them changes nothing. Vertical 2-cells are globular
    squares of D and act by vertical composition in D.
    """

    def __init__(self, D: PseudoDoubleCat, name: str | None = None):
        self.D = D
        self.horb = discrete_bicat(D.vcat, name=f"disc({D.vcat.name})")
        self.verb = underlying_horizontal_bicat(D)
        self.name = name or f"V({D.name})"

    @property
    def materialized(self) -> bool:
        return self.D.materialized

    def _wrap(self, s: Square) -> Square:
        return Square(s.top, s.bottom, s.left, s.right, s)

    @memo
    def squares(self, left, right, top, bottom):
        return tuple(self._wrap(s) for s in self.D.squares(top, bottom, left, right))

    def sqhid(self, h):
        return self._wrap(self.D.sqhid(h))

    def sqvid(self, v):
        return self._wrap(self.D.sqvid(v))

    def sqvcomp(self, s, t):
        return self._wrap(self.D.sqhcomp(s.cell, t.cell))

    def sqhcomp(self, s, t):
        return self._wrap(self.D.sqvcomp(s.cell, t.cell))

    def lwhisker(self, t, s):
        return self._wrap(self.D.sqvcomp(t, s.cell))

    def rwhisker(self, t, s):
        return self._wrap(self.D.sqvcomp(s.cell, t))

    def uwhisker(self, t, s):
        check_boundary(t == ("id", s.top), "horizontal 2-cells here are identities")
        return s

    def dwhisker(self, t, s):
        check_boundary(t == ("id", s.bottom), "horizontal 2-cells here are identities")
        return s


def double_cat_to_verity(D: PseudoDoubleCat, name: str | None = None) -> DoubleCatVerity:
    return DoubleCatVerity(D, name)


def squares_of(VB: VerityDoubleBicat) -> list[Square]:
    return sorted_ids(VB.all_squares())


__all__ = [
    "DoubleCatVerity",
    "Saturation",
    "SquareVerity",
    "VerityDoubleBicat",
    "cell_to_square_h",
    "cell_to_square_v",
    "check_verity_laws",
    "double_cat_to_verity",
    "is_weak_double_cat",
    "saturation",
    "square_to_vertical_cell",
    "square_verity",
    "squares_of",
    "verity_laws",
]
