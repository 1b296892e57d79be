from __future__ import annotations

import re
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dblkit.bicat import DiscreteBicat, ScalarBicat, co_dual
from dblkit.cat import FinSet, chain, constant_functor, hom_profunctor, walking_arrow, walking_iso
from dblkit.constructions import IdentityFunctor, prof_double_cat, span_double_cat, square_double_cat, structured_cospan_double_cat
from dblkit.dsl import EXTENSIONS, canonical, dump, load, load_file, parse, print_document
from dblkit.errors import ClosureExceeded, ElaborationError
from dblkit.verity import DoubleCatVerity, SquareVerity

CORPUS = Path(__file__).parent / "corpus"
SOURCES = sorted(p for p in CORPUS.iterdir() if p.suffix in EXTENSIONS)
# elaborating and law-checking these is slow; they are parsed and printed but not checked here
SLOW = {"span_finset.dblcat", "cospan.dblcat"}
BROKEN = {"broken.fincat": ("associativity", ("a", "a", "b")), "scalar_bad.dblcat": ("L7-triangle", ("e", "e"))}


def ids(paths):
    return [p.name for p in paths]


def test_corpus_is_large_enough():
    assert len(SOURCES) >= 15
    assert {p.suffix for p in SOURCES} == set(EXTENSIONS)


@pytest.mark.parametrize("path", SOURCES, ids=ids(SOURCES))
def test_golden(path):
    text = path.read_text()
    golden = (CORPUS / "golden" / f"{path.name}.txt").read_text()
    assert canonical(text, path.name) == golden
    # canonical text is a fixed point
    assert canonical(golden) == golden


@pytest.mark.parametrize("path", SOURCES, ids=ids(SOURCES))
def test_parse_print_parse(path):
    doc, diags = parse(path.read_text(), path.name)
    assert diags == []
    again, diags = parse(print_document(doc))
    assert diags == []
    assert again == doc


@pytest.mark.parametrize("path", [p for p in SOURCES if p.name not in SLOW], ids=ids([p for p in SOURCES if p.name not in SLOW]))
def test_corpus_checks(path):
    report = load_file(path).check()
    if path.name in BROKEN:
        law, cex = BROKEN[path.name]
        assert not report.ok
        assert report[law].counterexample == cex
    else:
        assert report.ok, report.summary()


# -- seeded syntax errors -------------------------------------------------------------


def _insert_dollar(t):
    i = t.index("{") + 1 if "{" in t else t.index("=") + 1
    return t[:i] + " $" + t[i:], i + 1


def _drop_first_semicolon(t):
    i = t.index(";") if ";" in t else t.index("}")
    return t[:i] + t[i + 1 :], None


def _drop_last_brace(t):
    i = t.rindex("}") if "}" in t else t.rindex(";")
    return t[:i] + t[i + 1 :], None


def _fat_arrow(t):
    for old in ("->", ":", "="):
        if old in t:
            return t.replace(old, "=>", 1), None


def _open_paren(t):
    i = t.index(":") + 1 if "{" in t else t.index("=") + 1
    return t[:i] + " (" + t[i:], None


def _drop_colon(t):
    if ":" not in t:
        return t.replace("=", "", 1), None
    i = t.index(":")
    return t[:i] + t[i + 1 :], None


MUTATIONS = [_insert_dollar, _drop_first_semicolon, _drop_last_brace, _fat_arrow, _open_paren, _drop_colon]


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines()) + "\n"


def _assert_well_placed(text, diags):
    for d in diags:
        assert 0 <= d.span.start <= d.span.end <= len(text)
        before = text[: d.span.start]
        assert d.line == before.count("\n") + 1
        assert d.column == d.span.start - (before.rfind("\n") + 1) + 1
        m = re.search(r"found '(.*)'$", d.message)
        if m:
            assert d.span.slice(text) == m.group(1)
        m = re.match(r"unexpected character '(.)'", d.message)
        if m:
            assert d.span.slice(text) == m.group(1)


@pytest.mark.parametrize("mutate", MUTATIONS, ids=[m.__name__.strip("_") for m in MUTATIONS])
@pytest.mark.parametrize("path", SOURCES, ids=ids(SOURCES))
def test_seeded_syntax_errors(path, mutate):
    text, at = mutate(_strip_comments(path.read_text()))
    _, diags = parse(text, path.name)
    assert diags, f"{mutate.__name__} went unnoticed in {path.name}"
    _assert_well_placed(text, diags)
    if at is not None:
        assert any(d.span.start == at for d in diags)
    with pytest.raises(ElaborationError):
        load(text, path.name)


def test_diagnostic_rendering():
    text = "category C {\n  objects: a, b\n  arrows: f: a -> b;\n}\n"
    _, diags = parse(text, "c.fincat")
    assert len(diags) == 1
    d = diags[0]
    assert (d.line, d.column) == (3, 3)
    assert d.message == "expected ',' or ';', found 'arrows'"
    assert d.render(text).splitlines() == [
        "c.fincat:3:3: error: expected ',' or ';', found 'arrows'",
        "    arrows: f: a -> b;",
        "    ^^^^^^",
    ]
    assert d.to_json()["start"] == text.index("arrows")


def test_recovery_keeps_later_declarations():
    text = "category A { objects: x $ y; }\ncategory B { objects: z; }\ncategory C = chain 2;\n"
    doc, diags = parse(text)
    assert diags[0].message == "unexpected character '$'"
    assert doc.names() == ["A", "B", "C"]


def test_unterminated_string():
    text = 'category A { objects: "x; }\n'
    _, diags = parse(text)
    assert diags[0].message == "unterminated string"
    assert diags[0].span.slice(text) == '"x; }'


TOKENS = ["category", "doublecat", "A", "x", "1", "{", "}", "(", ")", ":", ";", ",", ".", "=", "->", "~>", "-|->", "<=", "with", "$", '"s"', "#c\n"]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(TOKENS), max_size=40))
def test_parser_never_crashes(words):
    text = " ".join(words)
    _, diags = parse(text)
    _assert_well_placed(text, diags)


# -- elaboration errors ---------------------------------------------------------------


def _diags(text):
    with pytest.raises(ElaborationError) as exc:
        load(text, "t")
    return text, exc.value.diagnostics


def test_incomplete_composition_table():
    text, ds = _diags("category C {\n  objects: a, b, c;\n  arrows: f: a -> b, g: b -> c;\n}\n")
    assert [d.message for d in ds] == ["incomplete composition table: no entry for 'g' . 'f'"]
    assert ds[0].span.slice(text) == "C"


def test_duplicate_arrow_points_at_both():
    text, ds = _diags("category C { objects: a; arrows: f: a -> a, f: a -> a; compose: f . f = f; }")
    d = ds[0]
    assert d.message == "duplicate arrow id 'f'"
    assert d.span.start == text.rindex("f: a")
    assert [r.start for r in d.related] == [text.index("f: a")]


def test_undeclared_horizontal_id():
    text, ds = _diags(
        "category One { objects: *; }\n"
        "doublecat D over One { horizontal: e: * -> *; horid: * = e; hcomp: e . e = e;\n"
        "  squares: n: (id_*, id_*, e, k); }\n"
    )
    assert any(d.message == "square 'n' refers to undeclared horizontal id 'k'" for d in ds)


def test_unknown_reference_and_wrong_kind():
    text, ds = _diags("category A = chain 2;\nbicat B = discrete Nope;\nverity V = squares A;\n")
    msgs = [d.message for d in ds]
    assert "unknown category 'Nope'" in msgs
    assert "'A' is a category, not a bicat" in msgs


def test_functor_must_preserve_endpoints():
    text, ds = _diags(
        "category Two { objects: a, b; arrows: f: a -> b; }\n"
        "functor F: Two -> Two { objects: a -> b, b -> a; arrows: f -> f; }\n"
    )
    assert ds[0].message == "'f' maps to 'f', which does not go from 'b' to 'a'"


def test_probe_outside_carrier():
    text = "category S = finset 3;\ndoublecat D = span S;\nprobes P for D { feet: 1, 7; }\n"
    with pytest.raises(ClosureExceeded):
        load(text)


def test_bad_constructor_is_a_diagnostic():
    _, ds = _diags("category C = chian 3;\n")
    assert ds[0].message.startswith("bad category constructor 'chian'")


def test_unknown_section():
    text, ds = _diags("category C { objects: a; arows: f: a -> a; }")
    assert ds[0].message.startswith("unknown section 'arows' in category")
    assert ds[0].span.slice(text).startswith("arows")


# -- values ---------------------------------------------------------------------------


def _values():
    two, iso = walking_arrow(), walking_iso()
    K = constant_functor(two, two, "b")
    return [
        two,
        iso,
        chain(3),
        FinSet(5),
        K,
        hom_profunctor(two),
        DiscreteBicat(iso),
        co_dual(DiscreteBicat(two)),
        ScalarBicat(3),
        square_double_cat(iso),
        span_double_cat(chain(3)),
        span_double_cat(FinSet(6), apex_bound=2),
        structured_cospan_double_cat(IdentityFunctor(FinSet(6)), apex_bound=2),
        prof_double_cat([two], [K], [hom_profunctor(two)]),
        SquareVerity(DiscreteBicat(two)),
        DoubleCatVerity(square_double_cat(iso)),
    ]


@pytest.mark.parametrize("value", _values(), ids=lambda v: f"{type(v).__name__}-{v.name}")
def test_value_round_trip(value):
    text = dump(value)
    module = load(text, check=False)
    back = module[value.name]
    assert type(back) is type(value)
    assert dump(back) == text


def test_materialized_table_reloads():
    D = square_double_cat(walking_arrow())
    text = dump(D, materialize=True)
    assert "hcomp:" in text
    module = load(text)
    assert module.check().ok
    assert dump(module[D.name]) == text
