"""Chosen pullbacks and pushouts.

A :class:`Limits` object fixes one (co)limit per (co)span and computes mediating arrows.
The generic implementation defers to the exhaustive searches in :mod:`dblkit.cat`; skeletal
finite sets get closed formulas that must agree with the search (tested on small bounds).
"""

from __future__ import annotations

from typing import Mapping

from .cat import (
    Cone,
    DisjointSet,
    FinCat,
    FinSet,
    pullback,
    pullback_mediators,
    pushout,
    pushout_mediators,
)
from .errors import ClosureExceeded, ConstructionFailed, MissingPullback, MissingPushout


class Limits:
    """Canonical pullbacks/pushouts in ``cat``, optionally overridden by ``chosen`` cones.

    Overrides are validated: a chosen cone must be isomorphic, through the mediating arrow,
    to the canonical one.
    """

    def __init__(
        self,
        cat: FinCat,
        chosen_pullbacks: Mapping | None = None,
        chosen_pushouts: Mapping | None = None,
    ):
        self.cat = cat
        self._pb: dict = {}
        self._po: dict = {}
        for (f, g), cone in (chosen_pullbacks or {}).items():
            canon = self._canonical_pullback(f, g)
            m = self.pullback_mediator(canon, cone)
            if self.cat.inverse(m) is None or not self._commutes_pb(f, g, cone):
                raise MissingPullback(f"chosen cone for {(f, g)!r} is not a pullback")
            self._pb[(f, g)] = cone
        for (f, g), cocone in (chosen_pushouts or {}).items():
            canon = self._canonical_pushout(f, g)
            m = self.pushout_mediator(canon, cocone)
            if self.cat.inverse(m) is None or not self._commutes_po(f, g, cocone):
                raise MissingPushout(f"chosen cocone for {(f, g)!r} is not a pushout")
            self._po[(f, g)] = cocone

    def _commutes_pb(self, f, g, cone: Cone) -> bool:
        a, b = cone.legs
        return self.cat.compose(a, f) == self.cat.compose(b, g)

    def _commutes_po(self, f, g, cocone: Cone) -> bool:
        a, b = cocone.legs
        return self.cat.compose(f, a) == self.cat.compose(g, b)

    # -- pullbacks ---------------------------------------------------------------
    def _canonical_pullback(self, f, g) -> Cone:
        cone = pullback(self.cat, f, g)
        if cone is None:
            raise MissingPullback(f"no pullback of {f!r}, {g!r} in {self.cat.name}")
        return cone

    def pullback(self, f, g) -> Cone:
        """Pullback of ``f: x -> z <- y: g``; legs go to x and y in that order."""
        try:
            return self._pb[(f, g)]
        except KeyError:
            cone = self._pb[(f, g)] = self._canonical_pullback(f, g)
            return cone

    def pullback_mediator(self, cone: Cone, competitor: Cone):
        """The unique ``m`` with ``m;a = c`` and ``m;b = d``."""
        ms = pullback_mediators(self.cat, cone, competitor)
        if len(ms) != 1:
            raise ConstructionFailed(f"{len(ms)} mediating arrows into {cone!r}")
        return ms[0]

    # -- pushouts ----------------------------------------------------------------
    def _canonical_pushout(self, f, g) -> Cone:
        cocone = pushout(self.cat, f, g)
        if cocone is None:
            raise MissingPushout(f"no pushout of {f!r}, {g!r} in {self.cat.name}")
        return cocone

    def pushout(self, f, g) -> Cone:
        """Pushout of ``x <- z -> y`` given as ``f: z -> x``, ``g: z -> y``."""
        try:
            return self._po[(f, g)]
        except KeyError:
            cocone = self._po[(f, g)] = self._canonical_pushout(f, g)
            return cocone

    def pushout_mediator(self, cocone: Cone, competitor: Cone):
        """The unique ``m`` with ``a;m = c`` and ``b;m = d``."""
        ms = pushout_mediators(self.cat, cocone, competitor)
        if len(ms) != 1:
            raise ConstructionFailed(f"{len(ms)} mediating arrows out of {cocone!r}")
        return ms[0]


class FinSetLimits(Limits):
    """Closed-form (co)limits in skeletal finite sets.

    Pullback elements are the matching pairs in row-major order; pushout classes are
    numbered by first appearance scanning the left foot, then the right foot.
    """

    cat: FinSet

    def _canonical_pullback(self, f, g) -> Cone:
        (n1, m1, fv), (n2, m2, gv) = f, g
        if m1 != m2:
            raise ValueError("pullback needs a cospan")
        pairs = [(a, b) for a in range(n1) for b in range(n2) if fv[a] == gv[b]]
        p = len(pairs)
        if p > self.cat.bound:
            raise ClosureExceeded(f"pullback apex {p} exceeds bound {self.cat.bound}")
        return Cone(p, ((p, n1, tuple(a for a, _ in pairs)), (p, n2, tuple(b for _, b in pairs))))

    def pullback_mediator(self, cone: Cone, competitor: Cone):
        (p, _, av), (_, _, bv) = cone.legs
        (q, _, cv), (_, _, dv) = competitor.legs
        where = {pair: i for i, pair in enumerate(zip(av, bv))}
        try:
            return (q, p, tuple(where[pair] for pair in zip(cv, dv)))
        except KeyError as exc:
            raise ConstructionFailed(f"competitor does not factor through {cone!r}") from exc

    def _canonical_pushout(self, f, g) -> Cone:
        (z1, x, fv), (z2, y, gv) = f, g
        if z1 != z2:
            raise ValueError("pushout needs a span")
        ds = DisjointSet([("x", i) for i in range(x)] + [("y", j) for j in range(y)])
        for i in range(z1):
            ds.union(("x", fv[i]), ("y", gv[i]))
        number: dict = {}
        for e in ds.parent:
            number.setdefault(ds.find(e), len(number))
        p = len(number)
        if p > self.cat.bound:
            raise ClosureExceeded(f"pushout apex {p} exceeds bound {self.cat.bound}")
        a = (x, p, tuple(number[ds.find(("x", i))] for i in range(x)))
        b = (y, p, tuple(number[ds.find(("y", j))] for j in range(y)))
        return Cone(p, (a, b))

    def pushout_mediator(self, cocone: Cone, competitor: Cone):
        (x, p, av), (y, _, bv) = cocone.legs
        (_, q, cv), (_, _, dv) = competitor.legs
        out: list = [None] * p
        for i in range(x):
            if out[av[i]] is None:
                out[av[i]] = cv[i]
            elif out[av[i]] != cv[i]:
                raise ConstructionFailed("competitor does not factor")
        for j in range(y):
            if out[bv[j]] is None:
                out[bv[j]] = dv[j]
            elif out[bv[j]] != dv[j]:
                raise ConstructionFailed("competitor does not factor")
        if any(v is None for v in out):
            raise ConstructionFailed("pushout leg not jointly surjective")
        return (p, q, tuple(out))


def limits_for(cat: FinCat, **chosen) -> Limits:
    if isinstance(cat, FinSet):
        return FinSetLimits(cat, **chosen)
    return Limits(cat, **chosen)
