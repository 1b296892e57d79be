from __future__ import annotations

import pytest

from dblkit.cat import (
    Cone,
    FinSet,
    chain,
    check_profunctor,
    constant_functor,
    cyclic_group,
    discrete,
    empty_profunctor,
    hom_profunctor,
    identity_functor,
    prof_compose,
    set_profunctor,
    terminal,
    walking_arrow,
    walking_iso,
)
from dblkit.constructions import (
    Cospan,
    IdentityFunctor,
    functor_category,
    is_natural_map,
    natural_maps,
    prof_double_cat,
    representable_profunctor,
    span_double_cat,
    square_double_cat,
    structured_cospan_double_cat,
)
from dblkit.double import check_double_laws, is_strict, set_level, univalence_surrogate
from dblkit.errors import ClosureExceeded, MiddleMismatch
from dblkit.limits import limits_for


def unit_pullbacks_on_the_nose(C) -> bool:
    L = limits_for(C)
    for g in C.arrows:
        x, y = C.tgt(g), C.src(g)
        if L.pullback(C.identity(x), g) != Cone(y, (g, C.identity(y))):
            return False
        if L.pullback(g, C.identity(x)) != Cone(y, (C.identity(y), g)):
            return False
    return True


def test_square_double_cat_commuting_condition():
    D = square_double_cat(chain(3))
    C = D.vcat
    for v in C.arrows:
        for w in C.arrows:
            for h in D.hor(C.src(v), C.src(w)):
                for k in D.hor(C.tgt(v), C.tgt(w)):
                    commutes = C.compose(h, w) == C.compose(v, k)
                    assert len(D.squares(v, w, h, k)) == int(commutes)


def test_square_double_cat_of_point():
    D = square_double_cat(terminal())
    assert D.hor("*", "*") == ("id_*",)
    assert len(D.squares("id_*", "id_*", "id_*", "id_*")) == 1


@pytest.mark.parametrize(
    "C",
    [terminal(), walking_arrow(), chain(3), cyclic_group(2), walking_iso(), discrete(["x", "y"])],
    ids=lambda C: C.name,
)
def test_span_strict_iff_unit_pullbacks_on_the_nose(C):
    S = span_double_cat(C)
    assert check_double_laws(S).ok
    assert is_strict(S) == unit_pullbacks_on_the_nose(C)


def test_span_over_point_is_trivial_and_strict():
    S = span_double_cat(terminal())
    assert len(S.hor("*", "*")) == 1
    assert is_strict(S)
    assert set_level(S) == "strict_double_setcat"


def test_span_over_gaunt_base():
    # pullbacks in a gaunt category are unique on the nose, so the span double category is strict
    v = univalence_surrogate(span_double_cat(chain(3)))
    assert v.univalent
    assert v.details["strict"]


def test_span_foot_outside_bound():
    with pytest.raises(ClosureExceeded):
        span_double_cat(FinSet(4), feet=(1, 5))


def test_cospan_unitor_is_a_nontrivial_mediator():
    D = structured_cospan_double_cat(IdentityFunctor(FinSet(16)))
    h = Cospan(1, 1, 2, (1, 2, (1,)), (1, 2, (0,)))
    lam = D.lunitor(h)
    assert lam.cell == (2, 2, (1, 0))
    assert lam.bottom == h and lam.top != h
    assert not is_strict(D)


def test_cospan_probe_laws():
    D = structured_cospan_double_cat(IdentityFunctor(FinSet(16)))
    rep = check_double_laws(D)
    assert rep.ok, rep.summary()
    assert rep.mode == "probe"


def test_cospan_over_point():
    one = terminal()
    D = structured_cospan_double_cat(IdentityFunctor(one))
    assert check_double_laws(D).ok
    assert is_strict(D)
    assert len(D.hor("*", "*")) == 1


def test_cospans_along_a_functor():
    two = walking_arrow()
    D = structured_cospan_double_cat(constant_functor(terminal(), two, "a"))
    rep = check_double_laws(D)
    assert rep.ok and rep.mode == "exhaustive"


def test_prof_over_point():
    one = terminal()
    P = set_profunctor(["p0", "p1"], "P")
    D = prof_double_cat([one], [], [P, empty_profunctor(one, one)])
    rep = check_double_laws(D)
    assert rep.ok, rep.summary()
    assert rep.mode == "probe"
    assert set_level(D) == "neither"
    lam = D.lunitor(P)
    assert dict(lam.cell) == {("p0", "id_*"): "p0", ("p1", "id_*"): "p1"}
    assert len(D.hcomp(P, P).index) == 4


def test_prof_identity_is_hom_and_sqhid_acts_on_homs():
    two = walking_arrow()
    K = constant_functor(two, two, "b")
    D = prof_double_cat([two], [K], [])
    assert D.horid(two) == hom_profunctor(two)
    s = D.sqhid(K)
    assert dict(s.cell) == {f: K.ar(f) for f in hom_profunctor(two).index}


def test_prof_seed_over_two():
    two = walking_arrow()
    K = constant_functor(two, two, "b")
    D = prof_double_cat([two], [K], [hom_profunctor(two), representable_profunctor(K)])
    rep = check_double_laws(D)
    assert rep.ok, rep.summary()


def test_prof_associators_are_bijections():
    one = terminal()
    P, Q = set_profunctor(["p0", "p1"], "P"), set_profunctor(["q"], "Q")
    D = prof_double_cat([one], [], [P, Q])
    for h1 in (P, Q):
        for h2 in (P, Q):
            for h3 in (P, Q):
                cell = D.associator(h1, h2, h3).cell
                assert len(set(cell.values())) == len(cell) == len(D.hcomp(D.hcomp(h1, h2), h3).index)


def test_empty_profunctor_absorbs():
    one = terminal()
    E = empty_profunctor(one, one)
    P = set_profunctor(["p"], "P")
    D = prof_double_cat([one], [], [P, E])
    assert len(D.hcomp(P, E).index) == 0
    assert len(D.hcomp(E, P).index) == 0


def test_prof_rejects_foreign_profunctor():
    with pytest.raises(MiddleMismatch):
        prof_double_cat([terminal()], [], [hom_profunctor(walking_arrow())])


def test_representable_profunctors():
    one, two = terminal(), walking_arrow()
    R1 = representable_profunctor(identity_functor(one))
    assert [len(v) for v in R1.value.values()] == [1]
    R2 = representable_profunctor(identity_functor(two))
    H = hom_profunctor(two)
    assert {k: tuple(g for g, _ in v) for k, v in R2.value.items()} == dict(H.value)
    assert check_profunctor(R2).ok
    R3 = representable_profunctor(constant_functor(two, two, "a"))
    assert R3.at("b", "b") == ()


def test_natural_maps_between_set_profunctors():
    one = terminal()
    P, Q = set_profunctor(["p0", "p1"], "P"), set_profunctor(["q0", "q1", "q2"], "Q")
    I = identity_functor(one)
    maps = natural_maps(P, Q, I, I)
    assert len(maps) == 9
    assert all(is_natural_map(P, Q, I, I, m) for m in maps)
    composite = prof_compose(P, Q)
    assert len(composite.index) == 6


def test_functor_category_closes_under_composition():
    two = walking_arrow()
    K = constant_functor(two, two, "a")
    C = functor_category([two], [K])
    assert len(C.arrows) == 2
    # a constant functor is idempotent
    assert C.compose(K, K) == K
