"""Companion pairs, gregarious equivalences and weak horizontal invariance.

A horizontal ``h: x -> y`` and a vertical ``v: x -> y`` are companions when a unit
square ``(v, id_y, h, id_y)`` and a counit square ``(id_x, v, id_x, h)`` paste, in both
directions, to identity squares once the unitors are whiskered away. All the checks
here are exhaustive over the (probe) cells of a finite Verity double bicategory, and the
propositions are gated on their hypotheses rather than assuming them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator

from ._util import memo
from .bicat import (
    DEFAULT_BUDGET,
    AdjointEquivalence,
    FinBicat,
    find_adjoint_equivalences,
    is_adjoint_equivalence,
    is_globally_gaunt_surrogate,
    is_locally_gaunt,
    triangle_composites,
)
from .double import Square
from .errors import BoundaryMismatch, ConstructionFailed, CrossCheckFailed, PreconditionFailed
from .report import Law, LawReport, run_laws
from .verity import SquareVerity, VerityDoubleBicat, saturation, square_to_vertical_cell


@dataclass(frozen=True)
class CompanionPair:
    h: Hashable
    v: Hashable
    unit: Square
    counit: Square


@dataclass(frozen=True)
class GregariousEquivalence:
    horizontal: AdjointEquivalence
    vertical: AdjointEquivalence
    companion: CompanionPair

    @property
    def x(self):
        return self.horizontal.x

    @property
    def y(self):
        return self.horizontal.y


def _ends(B: FinBicat, f) -> tuple:
    return B.src1(f), B.tgt1(f)


def companion_composites(VB: VerityDoubleBicat, cp: CompanionPair) -> tuple[Square, Square]:
    """Counit beside unit and counit above unit, with unitors whiskered off the edges.

    The pair is a companion pair exactly when these are ``sqhid(h)`` and ``sqvid(v)``.
    """
    H, V = VB.horb, VB.verb
    side = VB.sqhcomp(cp.counit, cp.unit)
    side = VB.dwhisker(H.runitor(cp.h), VB.uwhisker(H.inverse2(H.lunitor(cp.h)), side))
    stack = VB.sqvcomp(cp.counit, cp.unit)
    stack = VB.rwhisker(V.runitor(cp.v), VB.lwhisker(V.inverse2(V.lunitor(cp.v)), stack))
    return side, stack


def _check_shape(VB: VerityDoubleBicat, cp: CompanionPair) -> None:
    H, V = VB.horb, VB.verb
    x, y = _ends(H, cp.h)
    if _ends(V, cp.v) != (x, y):
        raise BoundaryMismatch(f"{cp.h!r} and {cp.v!r} have different endpoints")
    if cp.unit.boundary() != (cp.v, V.id1(y), cp.h, H.id1(y)):
        raise BoundaryMismatch("unit square has the wrong boundary")
    if cp.counit.boundary() != (V.id1(x), cp.v, H.id1(x), cp.h):
        raise BoundaryMismatch("counit square has the wrong boundary")


def is_companion_pair(VB: VerityDoubleBicat, cp: CompanionPair) -> bool:
    _check_shape(VB, cp)
    side, stack = companion_composites(VB, cp)
    return side == VB.sqhid(cp.h) and stack == VB.sqvid(cp.v)


def find_companions(VB: VerityDoubleBicat, h) -> list[CompanionPair]:
    """Every companion pair on ``h``, over the (probe) vertical 1-cells with its endpoints."""
    H, V = VB.horb, VB.verb
    x, y = _ends(H, h)
    out = []
    for v in VB.ver(x, y):
        for unit in VB.squares(v, V.id1(y), h, H.id1(y)):
            for counit in VB.squares(V.id1(x), v, H.id1(x), h):
                cp = CompanionPair(h, v, unit, counit)
                if is_companion_pair(VB, cp):
                    out.append(cp)
    return out


def identity_companion(VB: VerityDoubleBicat, x) -> CompanionPair:
    sq = VB.sqhid(VB.horb.id1(x))
    return CompanionPair(VB.horb.id1(x), VB.verb.id1(x), sq, sq)


def square_companion(VB: SquareVerity, f) -> CompanionPair:
    """``(f, f)`` in squares of a bicategory; unit and counit are identity 2-cells."""
    B = VB.B
    x, y = B.src1(f), B.tgt1(f)
    ix, iy = B.id1(x), B.id1(y)
    unit = Square(f, iy, f, iy, B.id2(B.comp1(f, iy)))
    counit = Square(ix, f, ix, f, B.id2(B.comp1(ix, f)))
    return CompanionPair(f, f, unit, counit)


def compose_companions(VB: VerityDoubleBicat, cp1: CompanionPair, cp2: CompanionPair) -> CompanionPair:
    """Companion pair on ``h1.h2`` and ``v1.v2`` pasted from the two given pairs."""
    H, V = VB.horb, VB.verb
    x, y = _ends(H, cp1.h)
    y2, z = _ends(H, cp2.h)
    if y != y2:
        raise BoundaryMismatch(f"{cp1.h!r} and {cp2.h!r} do not compose")
    top = VB.dwhisker(H.lunitor(cp2.h), VB.sqhcomp(cp1.unit, VB.sqhid(cp2.h)))
    unit = VB.rwhisker(V.lunitor(V.id1(z)), VB.sqvcomp(top, cp2.unit))
    right = VB.lwhisker(V.inverse2(V.runitor(cp1.v)), VB.sqvcomp(VB.sqvid(cp1.v), cp2.counit))
    counit = VB.uwhisker(H.inverse2(H.lunitor(H.id1(x))), VB.sqhcomp(cp1.counit, right))
    return CompanionPair(H.comp1(cp1.h, cp2.h), V.comp1(cp1.v, cp2.v), unit, counit)


# ---------------------------------------------------------------------------------------
# hypotheses


HYPOTHESES = (
    "vertically_saturated",
    "horizontal_locally_gaunt",
    "vertical_locally_gaunt",
    "weakly_horizontally_invariant",
)


_CHECKS = {
    "vertically_saturated": lambda VB, budget: saturation(VB).vertically,
    "horizontal_locally_gaunt": lambda VB, budget: is_locally_gaunt(VB.horb),
    "vertical_locally_gaunt": lambda VB, budget: is_locally_gaunt(VB.verb),
    "weakly_horizontally_invariant": lambda VB, budget: is_weakly_horizontally_invariant(VB, budget),
}


def hypotheses(VB: VerityDoubleBicat, budget: int = DEFAULT_BUDGET) -> dict[str, bool]:
    return {name: _CHECKS[name](VB, budget) for name in HYPOTHESES}


def _gate(VB: VerityDoubleBicat, needed: tuple[str, ...], budget: int = DEFAULT_BUDGET) -> None:
    for name in needed:
        if not _CHECKS[name](VB, budget):
            raise PreconditionFailed(name, f"{VB.name}: hypothesis {name} does not hold")


def check_companion_uniqueness(VB: VerityDoubleBicat, h) -> bool:
    """All vertical companions of ``h`` are the same 1-cell."""
    _gate(VB, HYPOTHESES[:3])
    return len({cp.v for cp in find_companions(VB, h)}) <= 1


# ---------------------------------------------------------------------------------------
# adjoint equivalences and their companions


def vertical_mate(VB: VerityDoubleBicat, t, cp_h: CompanionPair, cp_k: CompanionPair, sat=None):
    """A horizontal 2-cell ``t: h => k`` as the vertical 2-cell ``k' => h'`` between companions."""
    V = VB.verb
    s = VB.sqvcomp(VB.dwhisker(t, cp_h.counit), cp_k.unit)
    s = VB.rwhisker(V.runitor(cp_h.v), VB.lwhisker(V.inverse2(V.lunitor(cp_k.v)), s))
    return square_to_vertical_cell(VB, s, sat)


def companion_of_adjoint_equivalence(
    VB: VerityDoubleBicat, adj: AdjointEquivalence, cp_l: CompanionPair, cp_r: CompanionPair
) -> AdjointEquivalence:
    """The vertical adjoint equivalence on the companions of ``adj.l`` and ``adj.r``.

    Unit and counit are the mates of the inverted horizontal counit and unit.
    """
    sat = saturation(VB)
    if not sat.vertically:
        raise PreconditionFailed("vertically_saturated")
    H, V = VB.horb, VB.verb
    if cp_l.h != adj.l or cp_r.h != adj.r:
        raise BoundaryMismatch("companion pairs do not sit on the adjoint equivalence")
    for cp in (cp_l, cp_r):
        if not is_companion_pair(VB, cp):
            raise ConstructionFailed(f"({cp.h!r}, {cp.v!r}) is not a companion pair")
    x, y = adj.x, adj.y
    lr = compose_companions(VB, cp_l, cp_r)
    rl = compose_companions(VB, cp_r, cp_l)
    unit = vertical_mate(VB, H.inverse2(adj.unit), lr, identity_companion(VB, x), sat)
    counit = vertical_mate(VB, H.inverse2(adj.counit), identity_companion(VB, y), rl, sat)
    out = AdjointEquivalence(x, y, cp_l.v, cp_r.v, unit, counit)
    if not is_adjoint_equivalence(V, out):
        for i, t in enumerate(triangle_composites(V, out), 1):
            if not (V.src2(t) == V.tgt2(t) and t == V.id2(V.src2(t))):
                raise ConstructionFailed(f"triangle {i} fails for ({cp_l.v!r}, {cp_r.v!r})")
        raise ConstructionFailed(f"({cp_l.v!r}, {cp_r.v!r}) is not a vertical adjoint equivalence")
    return out


# ---------------------------------------------------------------------------------------
# gregarious equivalences


def identity_adjoint_equivalence(B: FinBicat, x) -> AdjointEquivalence:
    i = B.id1(x)
    lam = B.lunitor(i)
    return AdjointEquivalence(x, x, i, i, B.inverse2(lam), lam)


def identity_gregarious(VB: VerityDoubleBicat, x) -> GregariousEquivalence:
    return GregariousEquivalence(
        identity_adjoint_equivalence(VB.horb, x),
        identity_adjoint_equivalence(VB.verb, x),
        identity_companion(VB, x),
    )


def is_gregarious_equivalence(VB: VerityDoubleBicat, ge: GregariousEquivalence) -> bool:
    hz, vt, cp = ge.horizontal, ge.vertical, ge.companion
    if (hz.x, hz.y) != (vt.x, vt.y):
        raise BoundaryMismatch("horizontal and vertical equivalences have different endpoints")
    if cp.h != hz.l or cp.v != vt.l:
        return False
    return is_adjoint_equivalence(VB.horb, hz) and is_adjoint_equivalence(VB.verb, vt) and is_companion_pair(VB, cp)


class _Search:
    """Memoised searches shared by the invariance and univalence checks."""

    def __init__(self, VB: VerityDoubleBicat, budget: int):
        self.VB = VB
        self.budget = budget

    @memo
    def horizontal(self, x, y) -> tuple:
        return tuple(find_adjoint_equivalences(self.VB.horb, x, y, self.budget))

    @memo
    def vertical(self, x, y) -> tuple:
        return tuple(find_adjoint_equivalences(self.VB.verb, x, y, self.budget))

    @memo
    def companions(self, h) -> tuple:
        return tuple(find_companions(self.VB, h))

    def gregarious(self, x, y) -> Iterator[GregariousEquivalence]:
        for hz in self.horizontal(x, y):
            for cp in self.companions(hz.l):
                for vt in self.vertical(x, y):
                    if vt.l == cp.v:
                        yield GregariousEquivalence(hz, vt, cp)


def find_gregarious_equivalences(VB: VerityDoubleBicat, x, y, budget: int = DEFAULT_BUDGET) -> list:
    return list(_Search(VB, budget).gregarious(x, y))


def is_weakly_horizontally_invariant(VB: VerityDoubleBicat, budget: int = DEFAULT_BUDGET) -> bool:
    """Every horizontal adjoint equivalence has a companion."""
    search = _Search(VB, budget)
    obs = VB.law_objects()
    return all(search.companions(ae.l) for x in obs for y in obs for ae in search.horizontal(x, y))


def gregarious_invariance_laws(VB: VerityDoubleBicat, budget: int = DEFAULT_BUDGET) -> list[Law]:
    search = _Search(VB, budget)
    H = VB.horb

    def cells():
        for x in VB.law_objects():
            for y in VB.law_objects():
                for h in H.law_cells1(x, y):
                    yield (h,)

    def holds(h):
        x, y = _ends(H, h)
        adjoint = any(ae.l == h for ae in search.horizontal(x, y))
        gregarious = any(ge.horizontal.l == h for ge in search.gregarious(x, y))
        return adjoint == gregarious

    return [Law("adjoint-iff-gregarious", cells, holds)]


def check_gregarious_invariance(VB: VerityDoubleBicat, budget: int = DEFAULT_BUDGET) -> LawReport:
    """A horizontal 1-cell is an adjoint equivalence iff it is part of a gregarious one.

    Hypotheses (checked): weak horizontal invariance, vertical saturation and local
    gauntness of both bicategories.
    """
    _gate(VB, HYPOTHESES, budget)
    return run_laws(VB.name, VB.mode, gregarious_invariance_laws(VB, budget))


def _is_identity_equivalence(B: FinBicat, ae: AdjointEquivalence) -> bool:
    return ae.x == ae.y and ae.l == B.id1(ae.x) and ae.r == B.id1(ae.x)


def gregarious_univalence_surrogate(VB: VerityDoubleBicat, budget: int = DEFAULT_BUDGET) -> bool:
    """No gregarious equivalence between distinct objects, and only identities on each.

    Gated on local gauntness, vertical saturation and weak horizontal invariance. Under
    those hypotheses the verdict must equal global gauntness of the horizontal
    bicategory; a disagreement raises :class:`CrossCheckFailed`.
    """
    _gate(VB, HYPOTHESES, budget)
    search = _Search(VB, budget)
    obs = VB.law_objects()
    verdict = True
    for x in obs:
        for y in obs:
            for ge in search.gregarious(x, y):
                if x != y or not (
                    _is_identity_equivalence(VB.horb, ge.horizontal) and _is_identity_equivalence(VB.verb, ge.vertical)
                ):
                    verdict = False
    horizontal = is_globally_gaunt_surrogate(VB.horb, budget)
    if verdict != horizontal:
        raise CrossCheckFailed(
            f"{VB.name}: gregarious surrogate {verdict} but horizontal global gauntness {horizontal}"
        )
    return verdict


__all__ = [
    "CompanionPair",
    "GregariousEquivalence",
    "HYPOTHESES",
    "check_companion_uniqueness",
    "check_gregarious_invariance",
    "companion_composites",
    "companion_of_adjoint_equivalence",
    "compose_companions",
    "find_companions",
    "find_gregarious_equivalences",
    "gregarious_invariance_laws",
    "gregarious_univalence_surrogate",
    "hypotheses",
    "identity_adjoint_equivalence",
    "identity_companion",
    "identity_gregarious",
    "is_companion_pair",
    "is_gregarious_equivalence",
    "is_weakly_horizontally_invariant",
    "square_companion",
    "vertical_mate",
]
