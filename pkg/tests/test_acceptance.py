"""Acceptance suite: ten end-to-end criteria, each with a wall-clock limit.

Every criterion prints one ``criterion N: PASS|FAIL`` line; ``conftest.py`` repeats the lines
in the terminal summary. Run directly with ``python tests/test_acceptance.py`` for the lines
alone.
"""

from __future__ import annotations

import sys
import time
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from test_bicat import CORPUS as BICATS  # noqa: E402
from test_double import scalar_double  # noqa: E402

from dblkit.bicat import (  # noqa: E402
    discrete_bicat,
    is_bisetcategory,
    is_globally_gaunt_surrogate,
    is_locally_gaunt,
    is_two_setcategory,
)
from dblkit.cat import (  # noqa: E402
    FinSet,
    chain,
    constant_functor,
    cyclic_group,
    disjoint_union,
    hom_profunctor,
    is_natural_bijection,
    is_pullback,
    is_pushout,
    profunctor_bijection,
    set_profunctor,
    terminal,
    walking_arrow,
    walking_iso,
)
from dblkit.companions import (  # noqa: E402
    HYPOTHESES,
    check_companion_uniqueness,
    check_gregarious_invariance,
    compose_companions,
    find_companions,
    gregarious_univalence_surrogate,
    hypotheses,
    identity_companion,
    is_companion_pair,
    is_weakly_horizontally_invariant,
    square_companion,
)
from dblkit.constructions import prof_double_cat, representable_profunctor, span_double_cat, square_double_cat  # noqa: E402
from dblkit.double import (  # noqa: E402
    NEITHER,
    check_double_laws,
    is_strict,
    set_level,
    underlying_horizontal_bicat,
    underlying_vertical_two_cat,
    univalence_surrogate,
)
from dblkit.limits import limits_for  # noqa: E402
from dblkit.verity import double_cat_to_verity, saturation, square_verity  # noqa: E402

CRITERIA = {
    1: ("square double categories are strict and lawful", 5),
    2: ("spans of finite sets are lawful on probes and not strictly unital", 30),
    3: ("univalence surrogate classification of squares and spans", 10),
    4: ("underlying horizontal and vertical structures", 10),
    5: ("saturation of square and transposed Verity structures", 10),
    6: ("companion suite", 20),
    7: ("companion uniqueness and weak horizontal invariance", 20),
    8: ("gregarious univalence agrees with horizontal global gauntness", 30),
    9: ("profunctor coherence bijections and limit universal properties", 30),
    10: ("presentation language round trip and diagnostics", 5),
}

RESULTS: dict[int, str] = {}


# -- shared corpora -------------------------------------------------------------------


def gaunt_bases():
    return [terminal(), walking_arrow(), chain(3)]


def materialized_doubles():
    return [
        square_double_cat(terminal()),
        square_double_cat(walking_arrow()),
        square_double_cat(walking_iso()),
        square_double_cat(chain(3)),
        span_double_cat(chain(3)),
        span_double_cat(cyclic_group(2)),
        span_double_cat(disjoint_union(cyclic_group(2), chain(2))),
        scalar_double(2),
    ]


def prof_seed_over_two():
    two = walking_arrow()
    K = constant_functor(two, two, "b")
    return prof_double_cat([two], [K], [hom_profunctor(two), representable_profunctor(K)], name="ProfTwo"), K


def verity_corpus():
    vbs = [square_verity(B) for B in BICATS]
    vbs += [double_cat_to_verity(D) for D in materialized_doubles()]
    return vbs


# -- criteria -------------------------------------------------------------------------


def criterion_1():
    for C in [terminal(), walking_arrow(), walking_iso(), chain(3)]:
        D = square_double_cat(C)
        rep = check_double_laws(D)
        assert rep.ok and rep.mode == "exhaustive", rep.summary()
        assert is_strict(D), D.name


def criterion_2():
    S = span_double_cat(FinSet(16), apex_bound=2)
    rep = check_double_laws(S)
    assert rep.mode == "probe"
    assert rep.ok, rep.summary()
    hs = S.law_horizontal()
    assert all(h.apex <= 2 for h in hs)
    moved = [h for h in hs if S.lunitor(h).top != h or S.runitor(h).top != h]
    assert moved, "every unitor component on the probe is an identity"
    assert not is_strict(S)


def criterion_3():
    got, want = {}, {}
    for C in gaunt_bases():
        v = univalence_surrogate(square_double_cat(C))
        got[f"Sq({C.name})"] = (v.univalent, v.symmetric)
        want[f"Sq({C.name})"] = (True, True)
        v = univalence_surrogate(span_double_cat(C))
        got[f"Span({C.name})"] = (v.univalent, v.symmetric)
        want[f"Span({C.name})"] = (True, False)
    wrong = {k: got[k] for k in want if got[k] != want[k]}
    assert not wrong, f"(univalent, symmetric) differs from the expected classification: {wrong}"


def criterion_4():
    for D in materialized_doubles():
        assert D.materialized and set_level(D) != NEITHER, D.name
        assert check_double_laws(D).ok, D.name
        H, V = underlying_horizontal_bicat(D), underlying_vertical_two_cat(D)
        assert is_two_setcategory(V), D.name
        assert is_bisetcategory(H), D.name
        if univalence_surrogate(D).univalent:
            assert is_locally_gaunt(H), D.name


def criterion_5():
    for B in BICATS:
        sat = saturation(square_verity(B))
        assert (sat.horizontally, sat.vertically) == (True, True), B.name
    for D in materialized_doubles() + [prof_seed_over_two()[0]]:
        assert saturation(double_cat_to_verity(D)).vertically, D.name


def criterion_6():
    prof, K = prof_seed_over_two()
    vbs = verity_corpus() + [double_cat_to_verity(prof)]
    for VB in vbs:
        for x in VB.law_objects():
            assert is_companion_pair(VB, identity_companion(VB, x)), (VB.name, x)
    for B in BICATS:
        VB = square_verity(B)
        for f in VB.horb.all_cells1():
            assert is_companion_pair(VB, square_companion(VB, f)), (VB.name, f)
    # a functor has its representable profunctor as companion
    VB = double_cat_to_verity(prof)
    R = representable_profunctor(K)
    pairs = [cp for cp in find_companions(VB, K) if cp.v == R]
    assert pairs and all(is_companion_pair(VB, cp) for cp in pairs)
    # composites of companions are companions
    VB = square_verity(discrete_bicat(chain(3)))
    H = VB.horb
    for f, g in product(H.all_cells1(), repeat=2):
        if H.tgt1(f) == H.src1(g):
            cp = compose_companions(VB, square_companion(VB, f), square_companion(VB, g))
            assert is_companion_pair(VB, cp), (f, g)
    cp = compose_companions(VB, identity_companion(VB, "x0"), identity_companion(VB, "x0"))
    assert is_companion_pair(VB, cp)


def criterion_7():
    for VB in verity_corpus():
        hyps = hypotheses(VB)
        if all(hyps.values()):
            for h in VB.horb.all_cells1():
                assert check_companion_uniqueness(VB, h), (VB.name, h)
        if is_globally_gaunt_surrogate(VB.horb):
            assert is_weakly_horizontally_invariant(VB), VB.name
    for B in BICATS:
        assert is_weakly_horizontally_invariant(square_verity(B)), B.name


def criterion_8():
    checked = 0
    for VB in verity_corpus():
        if not all(hypotheses(VB)[h] for h in HYPOTHESES):
            continue
        assert gregarious_univalence_surrogate(VB) == is_globally_gaunt_surrogate(VB.horb), VB.name
        assert check_gregarious_invariance(VB).ok, VB.name
        checked += 1
    assert checked >= 5


def criterion_9():
    one, two = terminal(), walking_arrow()
    K = constant_functor(two, two, "b")
    seeds = {
        one: [set_profunctor(["p0", "p1"], "P"), set_profunctor(["q"], "Q"), hom_profunctor(one)],
        two: [hom_profunctor(two), representable_profunctor(K)],
    }
    assert sum(len(v) for v in seeds.values()) >= 5
    for C, profs in seeds.items():
        D = prof_double_cat([C], [K] if C is two else [], profs)
        for P in profs:
            for s in (D.lunitor(P), D.runitor(P)):
                assert is_natural_bijection(s.top, s.bottom, s.cell), P.name
                assert profunctor_bijection(s.top, s.bottom) is not None
        for P, Q, R in product(profs, repeat=3):
            a = D.associator(P, Q, R)
            assert is_natural_bijection(a.top, a.bottom, a.cell), (P.name, Q.name, R.name)
            assert profunctor_bijection(a.top, a.bottom) is not None
    S = FinSet(4)
    L = limits_for(S)
    spans = cospans = 0
    for n, m, k in product(range(3), repeat=3):
        for f in S.hom(n, k):
            for g in S.hom(m, k):
                assert is_pullback(S, f, g, L.pullback(f, g)), (f, g)
                spans += 1
        for f in S.hom(k, n):
            for g in S.hom(k, m):
                assert is_pushout(S, f, g, L.pushout(f, g)), (f, g)
                cospans += 1
    assert spans >= 20 and cospans >= 20


def criterion_10():
    import test_dsl

    sources = test_dsl.SOURCES
    assert len(sources) >= 15
    for path in sources:
        test_dsl.test_golden(path)
        test_dsl.test_parse_print_parse(path)
        for mutate in test_dsl.MUTATIONS:
            text, at = mutate(test_dsl._strip_comments(path.read_text()))
            diags = test_dsl.parse(text, path.name)[1]
            assert diags, (path.name, mutate.__name__)
            test_dsl._assert_well_placed(text, diags)


# -- runner ---------------------------------------------------------------------------


def run_criterion(n: int) -> tuple[bool, str]:
    title, limit = CRITERIA[n]
    fn = globals()[f"criterion_{n}"]
    t0 = time.perf_counter()
    error = None
    try:
        fn()
    except AssertionError as exc:
        error = exc
    dt = time.perf_counter() - t0
    ok = error is None and dt < limit
    reason = ""
    if error is not None:
        reason = f": {str(error.args[0]).splitlines()[0]}" if error.args else ": assertion failed"
    elif dt >= limit:
        reason = ": over the time limit"
    line = f"criterion {n:2}: {'PASS' if ok else 'FAIL'} {title} ({dt:.2f}s, limit {limit}s){reason}"
    RESULTS[n] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA), ids=[f"criterion_{n:02}" for n in sorted(CRITERIA)])
def test_criterion(n):
    ok, line = run_criterion(n)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
