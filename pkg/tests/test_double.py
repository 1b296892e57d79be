from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dblkit.bicat import check_bicat_laws, is_bisetcategory, is_locally_gaunt, is_two_setcategory
from dblkit.cat import FinSet, chain, cyclic_group, disjoint_union, terminal, walking_arrow, walking_iso
from dblkit.constructions import Span, span_double_cat, square_double_cat
from dblkit.double import (
    NEITHER,
    PSEUDO_DOUBLE_SETCAT,
    STRICT_DOUBLE_SETCAT,
    StrictView,
    TableDoubleCat,
    check_double_laws,
    check_strict_double_laws,
    double_laws,
    globular_cat,
    is_strict,
    set_level,
    tabulate_double,
    underlying_horizontal_bicat,
    underlying_vertical_two_cat,
    univalence_surrogate,
)
from dblkit.errors import BoundaryMismatch, MalformedTable, NotStrict


def scalar_double(n: int, assoc: int = 0) -> TableDoubleCat:
    """One object, one horizontal loop ``e`` with ``e e = e`` and globular squares Z/n."""
    sq = {f"s{i}": ("id_*", "id_*", "e", "e") for i in range(n)}
    add = {(f"s{i}", f"s{j}"): f"s{(i + j) % n}" for i in range(n) for j in range(n)}
    return TableDoubleCat(
        terminal(),
        {"e": ("*", "*")},
        {"*": "e"},
        {("e", "e"): "e"},
        sq,
        {"e": "s0"},
        add,
        {"id_*": "s0"},
        add,
        {"e": "s0"},
        {"e": "s0"},
        {("e", "e", "e"): f"s{assoc}"},
        name=f"Scalar{n}",
    )


def test_square_double_cat_of_two():
    D = square_double_cat(walking_arrow())
    rep = check_double_laws(D)
    assert rep.ok, rep.summary()
    assert rep.mode == "exhaustive"
    assert len(tabulate_double(D).tables()["squares"]) == 6
    assert is_strict(D)
    assert set_level(D) == STRICT_DOUBLE_SETCAT


def test_trivial_double_category():
    D = square_double_cat(terminal())
    assert check_double_laws(D).ok
    assert is_strict(D)
    V = underlying_vertical_two_cat(D)
    H = underlying_horizontal_bicat(D)
    for B in (V, H):
        assert check_bicat_laws(B).ok
        assert list(B.objects) == ["*"]
        (f,) = B.cells1("*", "*")
        assert len(B.cells2(f, f)) == 1


def test_scalar_double_categories():
    for n in (1, 2, 3):
        assert check_double_laws(scalar_double(n)).ok


def test_wrong_associator_gives_pentagon_counterexample():
    rep = check_double_laws(scalar_double(2, assoc=1))
    assert rep["L7-pentagon"].counterexample == ("e", "e", "e", "e")
    assert rep["L7-triangle"].counterexample == ("e", "e")
    assert rep["L5-associator-natural"].ok
    # the bad component is a genuine square, so only coherence laws notice
    assert {r.name for r in rep.violations()} == {"L7-triangle", "L7-pentagon"}


def test_counterexamples_replay():
    bad = scalar_double(3, assoc=2)
    laws = {law.name: law for law in double_laws(bad)}
    rep = check_double_laws(bad)
    assert rep.violations()
    for r in rep.violations():
        assert not laws[r.name].replay(r.counterexample)
    assert laws["L7-pentagon"].replay(("e",) * 4) is False


def test_unknown_square_in_table_is_malformed():
    T = scalar_double(2)
    with pytest.raises(MalformedTable):
        T.replace(lunitor={"e": "s9"})


def test_boundary_mismatch_on_vertical_composite():
    S = span_double_cat(cyclic_group(2))
    hs = S.hor("*", "*")
    s, t = S.sqvid(hs[0]), S.sqvid(hs[1])
    with pytest.raises(BoundaryMismatch):
        S.sqvcomp(s, t)


def test_span_over_finite_sets_is_weakly_unital():
    S = span_double_cat(FinSet(16))
    assert S.mode == "probe"
    h = Span(2, 2, 2, (2, 2, (1, 0)), (2, 2, (0, 1)))
    lam = S.lunitor(h)
    # the composite with the identity span has the same apex size but different legs
    assert lam.top.apex == h.apex and lam.top != h
    assert lam.cell == (2, 2, (1, 0))
    assert not is_strict(S)
    assert set_level(S) == NEITHER


def test_span_over_finite_sets_probe_laws():
    S = span_double_cat(FinSet(16))
    rep = check_double_laws(S)
    assert rep.ok, rep.summary()
    assert rep.mode == "probe"


def test_materialized_span_is_pseudo_setcat():
    base = disjoint_union(cyclic_group(2), chain(4))
    assert len(base.objects) == 5
    S = span_double_cat(base)
    rep = check_double_laws(S)
    assert rep.ok and rep.mode == "exhaustive"
    assert not is_strict(S)
    assert set_level(S) == PSEUDO_DOUBLE_SETCAT
    assert is_bisetcategory(underlying_horizontal_bicat(S))
    assert is_two_setcategory(underlying_vertical_two_cat(S))


def test_strict_view_agrees_on_strict_inputs():
    for C in (walking_arrow(), chain(3), walking_iso()):
        D = square_double_cat(C)
        full = {r.name: r.ok for r in check_double_laws(D)}
        strict = {r.name: r.ok for r in check_strict_double_laws(D)}
        assert full == strict
        assert check_double_laws(StrictView(D)).ok


def test_univalence_of_squares():
    v = univalence_surrogate(square_double_cat(chain(3)))
    assert v.univalent and v.symmetric
    v = univalence_surrogate(square_double_cat(walking_iso()))
    assert not v.univalent
    assert not v.details["vertical_gaunt"]


def test_symmetric_univalence_requires_strictness():
    S = span_double_cat(disjoint_union(cyclic_group(2), chain(2)))
    assert not univalence_surrogate(S).symmetric
    with pytest.raises(NotStrict):
        univalence_surrogate(S, require_symmetric=True)


def test_underlying_vertical_of_two():
    V = underlying_vertical_two_cat(square_double_cat(walking_arrow()))
    assert check_bicat_laws(V).ok
    assert all(len(V.cells2(f, f)) == 1 for x in V.objects for y in V.objects for f in V.cells1(x, y))
    assert V.cells1("a", "b") == ("f",)


def test_univalent_double_cat_has_locally_gaunt_horizontal_bicat():
    D = square_double_cat(chain(3))
    assert univalence_surrogate(D).univalent
    assert is_locally_gaunt(underlying_horizontal_bicat(D))


def test_span_probe_extractions_pass():
    S = span_double_cat(FinSet(16), apex_bound=1)
    H = underlying_horizontal_bicat(S)
    rep = check_bicat_laws(H)
    assert rep.ok and rep.mode == "probe"


def test_globular_category_of_span_over_z2():
    S = span_double_cat(cyclic_group(2))
    G = globular_cat(S, "*", "*")
    # four spans, each globular square an isomorphism
    assert len(G.objects) == 4
    assert len(G.arrows) == 8


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([walking_arrow(), chain(3), walking_iso(), cyclic_group(2), terminal()]))
def test_square_double_cats_are_strict_setcats(C):
    D = square_double_cat(C)
    assert check_double_laws(D).ok
    assert set_level(D) == STRICT_DOUBLE_SETCAT


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3))
def test_scalar_coherence_iff_trivial_associator(n, a):
    a %= n
    assert check_double_laws(scalar_double(n, assoc=a)).ok == (a == 0)
