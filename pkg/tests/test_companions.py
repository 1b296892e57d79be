from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dblkit.bicat import ScalarBicat, delooping, discrete_bicat, find_adjoint_equivalences, is_adjoint_equivalence
from dblkit.cat import chain, constant_functor, cyclic_group, hom_profunctor, terminal, walking_arrow, walking_iso
from dblkit.constructions import prof_double_cat, representable_profunctor, span_double_cat, square_double_cat
from dblkit.companions import (
    CompanionPair,
    check_companion_uniqueness,
    check_gregarious_invariance,
    companion_composites,
    companion_of_adjoint_equivalence,
    compose_companions,
    find_companions,
    find_gregarious_equivalences,
    gregarious_univalence_surrogate,
    hypotheses,
    identity_companion,
    identity_gregarious,
    is_companion_pair,
    is_gregarious_equivalence,
    is_weakly_horizontally_invariant,
    square_companion,
)
from dblkit.errors import BoundaryMismatch, PreconditionFailed
from dblkit.verity import SquareVerity, double_cat_to_verity, square_verity
from test_bicat import CORPUS, truncated_sum

ALL = [square_verity(B) for B in CORPUS] + [
    double_cat_to_verity(square_double_cat(walking_arrow())),
    double_cat_to_verity(square_double_cat(walking_iso())),
    double_cat_to_verity(span_double_cat(cyclic_group(2))),
]


class Lonely(SquareVerity):
    """Drops every square with ``f`` on a side unless it is an identity-like square."""

    def squares(self, left, right, top, bottom):
        if "f" in (left, right, top, bottom) and not (left == right or top == bottom):
            return ()
        return super().squares(left, right, top, bottom)


def pairs_of(VB):
    H = VB.horb
    for f in H.all_cells1():
        for g in H.all_cells1():
            if H.tgt1(f) == H.src1(g):
                yield f, g


@pytest.mark.parametrize("VB", ALL, ids=lambda VB: VB.name)
def test_identity_companions(VB):
    for x in VB.objects:
        cp = identity_companion(VB, x)
        assert is_companion_pair(VB, cp)
        assert is_gregarious_equivalence(VB, identity_gregarious(VB, x))


@pytest.mark.parametrize("B", CORPUS, ids=lambda B: B.name)
def test_every_cell_is_its_own_companion(B):
    VB = square_verity(B)
    for f in B.all_cells1():
        cp = square_companion(VB, f)
        assert cp.v == f
        assert is_companion_pair(VB, cp)
        assert cp in find_companions(VB, f)


def test_composites_are_identity_squares():
    VB = square_verity(delooping(cyclic_group(2)))
    (g,) = [f for f in VB.horb.all_cells1() if f != VB.horb.id1("*")]
    first, second = companion_composites(VB, square_companion(VB, g))
    assert first == VB.sqhid(g)
    assert second == VB.sqvid(g)


def test_wrong_unit_is_not_a_companion():
    VB = square_verity(ScalarBicat(2))
    cp = square_companion(VB, "e")
    assert not is_companion_pair(VB, CompanionPair("e", "e", cp.unit._replace(cell=1), cp.counit))


def test_misshapen_pair_is_rejected():
    VB = square_verity(discrete_bicat(walking_arrow()))
    cp = identity_companion(VB, "a")
    with pytest.raises(BoundaryMismatch):
        is_companion_pair(VB, CompanionPair("f", "f", cp.unit, cp.counit))


@pytest.mark.parametrize("VB", ALL, ids=lambda VB: VB.name)
def test_companions_compose(VB):
    for f, g in pairs_of(VB):
        for c1 in find_companions(VB, f):
            for c2 in find_companions(VB, g):
                cp = compose_companions(VB, c1, c2)
                assert cp.h == VB.horb.comp1(f, g)
                assert is_companion_pair(VB, cp)


@pytest.mark.parametrize("VB", ALL, ids=lambda VB: VB.name)
def test_adjoint_equivalences_transfer_to_companions(VB):
    H = VB.horb
    seen = 0
    for x in VB.objects:
        for y in VB.objects:
            for ae in find_adjoint_equivalences(H, x, y):
                for cl in find_companions(VB, ae.l):
                    for cr in find_companions(VB, ae.r):
                        out = companion_of_adjoint_equivalence(VB, ae, cl, cr)
                        assert (out.l, out.r) == (cl.v, cr.v)
                        assert is_adjoint_equivalence(VB.verb, out)
                        seen += 1
    assert seen >= len(VB.objects)


def test_gregarious_counts():
    counts = {VB.name: sum(len(find_gregarious_equivalences(VB, x, y)) for x in VB.objects for y in VB.objects) for VB in ALL}
    assert counts == {
        "SqV(disc(Two))": 2,
        "SqV(disc(Chain3))": 3,
        "SqV(disc(Iso))": 4,
        "SqV(BZ2)": 2,
        "SqV(Trunc)": 1,
        "SqV(Scalar2)": 8,
        "V(Sq(Two))": 2,
        "V(Sq(Iso))": 4,
        "V(Span(Z2))": 8,
    }


def test_hypotheses_of_the_corpus():
    assert all(hypotheses(square_verity(discrete_bicat(chain(3)))).values())
    assert not hypotheses(square_verity(ScalarBicat(2)))["horizontal_locally_gaunt"]
    assert not hypotheses(double_cat_to_verity(span_double_cat(cyclic_group(2))))["vertical_locally_gaunt"]


@pytest.mark.parametrize(
    "VB, gaunt",
    [
        (square_verity(discrete_bicat(walking_arrow())), True),
        (square_verity(discrete_bicat(chain(3))), True),
        (square_verity(discrete_bicat(walking_iso())), False),
        (square_verity(delooping(cyclic_group(2))), False),
        (square_verity(truncated_sum()), True),
        (double_cat_to_verity(square_double_cat(terminal())), True),
        (double_cat_to_verity(square_double_cat(walking_iso())), False),
    ],
    ids=lambda v: getattr(v, "name", str(v)),
)
def test_gregarious_univalence_matches_horizontal_gauntness(VB, gaunt):
    assert check_gregarious_invariance(VB).ok
    assert gregarious_univalence_surrogate(VB) is gaunt


def test_hypotheses_are_enforced():
    with pytest.raises(PreconditionFailed) as err:
        gregarious_univalence_surrogate(square_verity(ScalarBicat(2)))
    assert err.value.hypothesis == "horizontal_locally_gaunt"
    with pytest.raises(PreconditionFailed) as err:
        check_gregarious_invariance(double_cat_to_verity(span_double_cat(cyclic_group(2))))
    assert err.value.hypothesis == "vertical_locally_gaunt"


def test_missing_companions_break_invariance():
    VB = Lonely(discrete_bicat(walking_iso()))
    assert find_companions(VB, "f") == []
    assert not is_weakly_horizontally_invariant(VB)
    with pytest.raises(PreconditionFailed) as err:
        check_gregarious_invariance(VB)
    assert err.value.hypothesis == "weakly_horizontally_invariant"


def test_companions_are_unique_when_gaunt():
    VB = square_verity(discrete_bicat(chain(3)))
    for f in VB.horb.all_cells1():
        assert check_companion_uniqueness(VB, f)


def test_representable_is_a_companion():
    two = walking_arrow()
    K = constant_functor(two, two, "b")
    R = representable_profunctor(K)
    VB = double_cat_to_verity(prof_double_cat([two], [K], [hom_profunctor(two), R]))
    assert R in [cp.v for cp in find_companions(VB, K)]
    assert hom_profunctor(two) in [cp.v for cp in find_companions(VB, VB.horb.id1(two))]


@settings(max_examples=6, deadline=None)
@given(st.integers(1, 3))
def test_scalar_companions_are_the_invertible_squares(n):
    VB = square_verity(ScalarBicat(n))
    # every 2-cell of Z/n is invertible, so each unit has exactly one matching counit
    assert len(find_companions(VB, "e")) == n

