from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dblkit.bicat import (
    AdjointEquivalence,
    CoBicat,
    PreorderMonoidBicat,
    ScalarBicat,
    bicat_tables,
    check_bicat_laws,
    co_dual,
    delooping,
    discrete_bicat,
    find_adjoint_equivalences,
    hom_categories_ok,
    is_adjoint_equivalence,
    is_globally_gaunt_surrogate,
    is_locally_gaunt,
    is_strict,
    is_two_setcategory,
    tabulate,
)
from dblkit.cat import chain, cyclic_group, opposite, terminal, walking_arrow, walking_iso
from dblkit.errors import BudgetExceeded


def truncated_sum(n: int = 3) -> PreorderMonoidBicat:
    els = list(range(n))
    return PreorderMonoidBicat(
        els, [(i, i + 1) for i in range(n - 1)], {(a, b): min(a + b, n - 1) for a in els for b in els}, 0, name="Trunc"
    )


CORPUS = [
    discrete_bicat(walking_arrow()),
    discrete_bicat(chain(3)),
    discrete_bicat(walking_iso()),
    delooping(cyclic_group(2)),
    truncated_sum(),
    ScalarBicat(2),
]


@pytest.mark.parametrize("B", CORPUS, ids=lambda B: B.name)
def test_corpus_bicategories_pass(B):
    rep = check_bicat_laws(B)
    assert rep.ok, rep.summary()
    assert hom_categories_ok(B)


def test_broken_associator_is_caught():
    T = tabulate(ScalarBicat(2))
    assoc = dict(T._assoc)
    assoc[("e", "e", "e")] = 1
    rep = check_bicat_laws(T.replace(associator=assoc))
    bad = {r.name for r in rep.violations()}
    assert "pentagon" in bad
    assert rep["pentagon"].counterexample == ("e", "e", "e", "e")


def test_co_is_involutive_and_reverses_homs():
    for B in CORPUS:
        assert bicat_tables(CoBicat(CoBicat(B))) == bicat_tables(B)
        assert check_bicat_laws(CoBicat(B)).ok
        for x in B.objects:
            for y in B.objects:
                assert CoBicat(B).hom_cat(x, y) == opposite(B.hom_cat(x, y), name=CoBicat(B).hom_cat(x, y).name)
    d = discrete_bicat(walking_arrow())
    assert co_dual(d) is d


def test_adjoint_equivalences_discrete():
    B = discrete_bicat(walking_arrow())
    (ae,) = find_adjoint_equivalences(B, "a", "a")
    assert (ae.l, ae.r) == ("id_a", "id_a")
    assert find_adjoint_equivalences(B, "a", "b") == []


def test_delooping_of_z2_has_both_cells_as_equivalences():
    B = delooping(cyclic_group(2))
    assert sorted(ae.l for ae in find_adjoint_equivalences(B, "*", "*")) == ["g0", "g1"]
    assert is_locally_gaunt(B)
    assert not is_globally_gaunt_surrogate(B)


def test_gauntness_surrogates():
    assert is_locally_gaunt(discrete_bicat(chain(3)))
    assert is_globally_gaunt_surrogate(discrete_bicat(chain(3)))
    assert not is_globally_gaunt_surrogate(discrete_bicat(walking_iso()))
    assert not is_locally_gaunt(ScalarBicat(2))
    assert is_globally_gaunt_surrogate(truncated_sum())


def test_strictness():
    assert is_two_setcategory(discrete_bicat(terminal()))
    assert is_strict(truncated_sum())


def test_budget():
    with pytest.raises(BudgetExceeded):
        find_adjoint_equivalences(ScalarBicat(5), "*", "*", budget=3)


def test_bad_witness_rejected():
    B = ScalarBicat(2)
    assert is_adjoint_equivalence(B, AdjointEquivalence("*", "*", "e", "e", 1, 1))
    assert not is_adjoint_equivalence(B, AdjointEquivalence("*", "*", "e", "e", 1, 0))


@pytest.mark.parametrize("B", CORPUS, ids=lambda B: B.name)
def test_co_preserves_equivalence_count(B):
    for x in B.objects:
        for y in B.objects:
            found = find_adjoint_equivalences(B, x, y)
            assert len(found) == len(find_adjoint_equivalences(CoBicat(B), x, y))
            assert all(is_adjoint_equivalence(B, ae) for ae in found)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 4))
def test_scalar_bicategories_satisfy_laws(n):
    B = ScalarBicat(n)
    assert check_bicat_laws(B).ok
    assert len(find_adjoint_equivalences(B, "*", "*")) == n
