from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dblkit.cat import (
    Cone,
    FinCat,
    FinFunctor,
    FinNatTrans,
    FinSet,
    chain,
    check_category_laws,
    check_functor,
    check_natural,
    check_profunctor,
    compose_functors,
    constant_functor,
    cyclic_group,
    discrete,
    disjoint_union,
    empty_profunctor,
    find_isomorphisms,
    from_tables,
    hom_profunctor,
    identity_functor,
    is_gaunt,
    is_natural_bijection,
    is_pullback,
    is_pushout,
    opposite,
    prof_compose,
    profunctor_bijection,
    pullback,
    pushout,
    representable_profunctor,
    set_profunctor,
    terminal,
    walking_arrow,
    walking_iso,
)
from dblkit.errors import MalformedTable, MiddleMismatch
from dblkit.limits import FinSetLimits, Limits


def test_walking_arrow_is_a_category():
    rep = check_category_laws(walking_arrow())
    assert rep.ok
    assert rep.mode == "exhaustive"


def test_redirected_identity_composite_violates_left_identity():
    two = walking_arrow()
    table = dict(two.comp_table)
    table[("id_a", "f")] = "id_b"
    bad = FinCat(two.objects, {a: (two.src(a), two.tgt(a)) for a in two.arrows}, {"a": "id_a", "b": "id_b"}, table)
    rep = check_category_laws(bad)
    assert rep["left-identity"].counterexample == ("f",)
    assert rep["left-identity"].failures == 1


def broken_assoc() -> FinCat:
    # a -f-> b -g-> c -h-> d plus a second arrow k: a -> d that (f;g);h lands on
    return from_tables(
        ["a", "b", "c", "d"],
        {"f": ("a", "b"), "g": ("b", "c"), "h": ("c", "d"), "fg": ("a", "c"), "gh": ("b", "d"), "fgh": ("a", "d"), "k": ("a", "d")},
        {("f", "g"): "fg", ("g", "h"): "gh", ("fg", "h"): "k", ("f", "gh"): "fgh"},
    )


def test_broken_associativity_reports_exactly_that_triple():
    rep = check_category_laws(broken_assoc())
    assoc = rep["associativity"]
    assert assoc.counterexample == ("f", "g", "h")
    assert assoc.failures == 1
    assert [r.name for r in rep.violations()] == ["associativity"]
    assert not assoc.ok


def test_unknown_arrow_in_table_is_malformed():
    with pytest.raises(MalformedTable):
        from_tables(["a"], {}, {("id_a", "ghost"): "id_a"})


@pytest.mark.parametrize("cat", [terminal(), walking_arrow(), walking_iso(), chain(3), cyclic_group(2), FinSet(2), chain(4)])
def test_library_categories_pass(cat):
    assert check_category_laws(cat).ok


def test_find_isomorphisms():
    assert find_isomorphisms(walking_arrow(), "a", "b") == []
    assert find_isomorphisms(walking_iso(), "a", "b") == [("f", "g")]
    assert ("id_a", "id_a") in find_isomorphisms(walking_arrow(), "a", "a")


def test_gaunt():
    assert is_gaunt(walking_arrow())
    assert not is_gaunt(walking_iso())
    assert is_gaunt(disjoint_union(terminal(), terminal()))
    assert not is_gaunt(FinSet(2))
    assert not is_gaunt(cyclic_group(2))


def test_finset_pullback_of_terminal_maps():
    S = FinSet(4)
    cone = pullback(S, (2, 1, (0, 0)), (2, 1, (0, 0)))
    assert cone == Cone(4, ((4, 2, (0, 0, 1, 1)), (4, 2, (0, 1, 0, 1))))


def test_pullback_along_identity_has_apex_of_other_foot():
    two = walking_arrow()
    assert pullback(two, "id_b", "f") == Cone("a", ("f", "id_a"))
    assert pullback(two, "id_b", "id_b") == Cone("b", ("id_b", "id_b"))


def test_finset_pushout_of_points():
    cone = pushout(FinSet(3), (0, 1, ()), (0, 1, ()))
    assert cone.apex == 2
    assert pushout(walking_arrow(), "id_a", "id_a").apex == "a"


def test_missing_pushout():
    # two parallel arrows out of a with no common target beyond themselves
    c = from_tables(["a", "b", "c"], {"f": ("a", "b"), "g": ("a", "c")})
    assert pushout(c, "f", "g") is None
    assert pullback(discrete(["x", "y"]), "id_x", "id_x") == Cone("x", ("id_x", "id_x"))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_fast_finset_limits_agree_with_search(n):
    S = FinSet(4)
    fast = FinSetLimits(S)
    for f in S.hom(n, 2):
        for g in S.hom(2 - (n == 2), 2):
            cone = fast.pullback(f, g)
            assert is_pullback(S, f, g, cone)
            assert cone == pullback(S, f, g)
    for f in S.hom(n, 2):
        for g in S.hom(n, 1):
            cocone = fast.pushout(f, g)
            assert is_pushout(S, f, g, cocone)
            assert cocone == pushout(S, f, g)


def test_chosen_pullback_must_be_a_pullback():
    S = FinSet(4)
    f = g = (2, 1, (0, 0))
    swapped = Cone(4, ((4, 2, (0, 1, 0, 1)), (4, 2, (0, 0, 1, 1))))
    lim = FinSetLimits(S, chosen_pullbacks={(f, g): swapped})
    assert lim.pullback(f, g) == swapped
    with pytest.raises(Exception):
        Limits(S, chosen_pullbacks={(f, g): Cone(2, ((2, 2, (0, 1)), (2, 2, (0, 1))))})


def test_functor_and_nat_trans():
    two = walking_arrow()
    F = FinFunctor(two, two, {"a": "a", "b": "b"}, {"id_a": "id_a", "id_b": "id_b", "f": "f"})
    assert F == identity_functor(two)
    assert check_functor(compose_functors(F, F)).ok
    Ka, Kb = constant_functor(two, two, "a"), constant_functor(two, two, "b")
    assert check_natural(FinNatTrans(Ka, Kb, {"a": "f", "b": "f"})).ok
    assert not check_natural(FinNatTrans(Ka, F, {"a": "id_a", "b": "id_a"})).ok


def test_opposite_is_involutive():
    c = chain(3)
    assert opposite(opposite(c)) == c
    assert check_category_laws(opposite(c)).ok


def test_coend_over_point_is_product():
    P = set_profunctor(["p0", "p1"], "P")
    Q = set_profunctor(["q0", "q1", "q2"], "Q")
    R = prof_compose(P, Q)
    assert len(R.at("*", "*")) == 6
    assert check_profunctor(R).ok


def test_hom_profunctor_is_unit():
    two = walking_arrow()
    H = hom_profunctor(two)
    R = representable_profunctor(identity_functor(two))
    for P in (H, R):
        assert check_profunctor(P).ok
        for Q in (H, R):
            m = profunctor_bijection(prof_compose(P, Q), Q)
            assert m is not None and is_natural_bijection(prof_compose(P, Q), Q, m)
    assert {k: len(v) for k, v in R.value.items()} == {k: len(v) for k, v in H.value.items()}


def test_empty_composite_and_mismatch():
    two = walking_arrow()
    E = empty_profunctor(two, two)
    assert all(not v for v in prof_compose(E, hom_profunctor(two)).value.values())
    with pytest.raises(MiddleMismatch):
        prof_compose(hom_profunctor(two), hom_profunctor(terminal()))


def test_representable_of_constant_has_empty_slots():
    two = walking_arrow()
    R = representable_profunctor(constant_functor(two, two, "a"))
    assert R.at("b", "a") == ()
    assert R.at("a", "b") == (("id_a", "b"),)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_finset_pullbacks_are_universal(n1, n2, data):
    S = FinSet(4)
    m = data.draw(st.integers(1, 2))
    f = data.draw(st.sampled_from(S.hom(n1, m)))
    g = data.draw(st.sampled_from(S.hom(n2, m)))
    cone = FinSetLimits(S).pullback(f, g)
    assert is_pullback(S, f, g, cone)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "z", "w"]), min_size=0, max_size=3, unique=True))
def test_find_isomorphisms_is_inverse_closed(objs):
    c = disjoint_union(walking_iso(), discrete(objs or ["u"]))
    for x, y in itertools.product(c.objects, repeat=2):
        fwd = find_isomorphisms(c, x, y)
        back = find_isomorphisms(c, y, x)
        assert sorted((g, f) for f, g in fwd) == sorted(back)
