"""Recursive-descent parser with error recovery.

Errors never escape as exceptions: :func:`parse` returns the tree it managed to build
together with every diagnostic. A bad entry is skipped up to the next ``,`` or ``;``, and
a bad declaration up to the next top-level keyword.
"""

from __future__ import annotations

from .ast import ARROW, ASSIGN, ATOM, COMPOSE, ELEMENT, KINDS, MAP, ORDER, SHAPE, Ctor, Decl, Document, Entry, Section
from .syntax import Diagnostic, SourceSpan, Token, tokenize

ARROWS = {"functor": "->", "profunctor": "-|->"}


class _Abort(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


def _join(a: SourceSpan, b: SourceSpan) -> SourceSpan:
    return SourceSpan(a.file, a.line, a.column, a.start, max(a.end, b.end))


class Parser:
    def __init__(self, text: str, file: str = "<input>"):
        self.text = text
        self.file = file
        self.toks, self.diags = tokenize(text, file)
        self.pos = 0

    # -- token plumbing --------------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind == "PUNCT" and t.text == text

    def at_word(self, word: str) -> bool:
        return self.tok.kind == "IDENT" and self.tok.text == word

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.pos += 1
        return t

    def fail(self, msg: str, tok: Token | None = None):
        t = tok or self.tok
        what = "end of input" if t.kind == "EOF" else repr(t.text)
        raise _Abort(Diagnostic(t.span, f"{msg}, found {what}"))

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def name(self, what: str = "a name") -> Token:
        if self.tok.kind not in ("IDENT", "STRING"):
            self.fail(f"expected {what}")
        return self.advance()

    # -- values ----------------------------------------------------------------------
    def value(self) -> tuple:
        t = self.tok
        if t.kind in ("IDENT", "INT", "STRING"):
            self.advance()
            return t.value, t.span
        if self.at("("):
            start = self.advance().span
            items = []
            while not self.at(")"):
                v, _ = self.value()
                items.append(v)
                if not self.at(","):
                    break
                self.advance()
            end = self.expect(")").span
            return tuple(items), _join(start, end)
        self.fail("expected a value")

    # -- entries and sections --------------------------------------------------------
    def entry(self) -> Entry:
        first, s0 = self.value()
        if self.at(":"):
            self.advance()
            second, s1 = self.value()
            if self.at("->") or self.at("~>"):
                form = ARROW if self.advance().text == "->" else ELEMENT
                third, s2 = self.value()
                return Entry(form, (first, second, third), _join(s0, s2), (s0, s1, s2))
            if isinstance(second, tuple):
                return Entry(SHAPE, (first, second), _join(s0, s1), (s0, s1))
            self.fail("expected '->' or '~>'")
        if self.at("."):
            self.advance()
            second, s1 = self.value()
            self.expect("=")
            third, s2 = self.value()
            return Entry(COMPOSE, (first, second, third), _join(s0, s2), (s0, s1, s2))
        for sym, form in (("->", MAP), ("=", ASSIGN), ("<=", ORDER)):
            if self.at(sym):
                self.advance()
                second, s1 = self.value()
                return Entry(form, (first, second), _join(s0, s1), (s0, s1))
        return Entry(ATOM, (first,), s0, (s0,))

    def skip_entry(self) -> None:
        depth = 0
        while self.tok.kind != "EOF":
            if depth == 0 and (self.at(",") or self.at(";") or self.at("}")):
                return
            if self.at("("):
                depth += 1
            elif self.at(")"):
                depth = max(0, depth - 1)
            self.advance()

    def section(self) -> Section:
        head = self.name("a section name")
        self.expect(":")
        entries = []
        while not self.at(";"):
            if self.at("}") or self.tok.kind == "EOF":
                self.fail("expected ';' to end the section")
            try:
                entries.append(self.entry())
                if not (self.at(",") or self.at(";")):
                    self.fail("expected ',' or ';'")
            except _Abort as e:
                self.diags.append(e.diag)
                self.skip_entry()
                if self.at("}") or self.tok.kind == "EOF":
                    break
            if self.at(","):
                self.advance()
        end = self.tok.span
        if self.at(";"):
            self.advance()
        return Section(head.value, tuple(entries), _join(head.span, end))

    def ctor(self) -> Ctor:
        head = self.name("a constructor name")
        args, spans = [], []
        while not (self.at(";") or self.at_word("with")):
            if self.tok.kind == "EOF" or self.at("}") or self.at("{"):
                self.fail("expected ';'")
            v, s = self.value()
            args.append(v)
            spans.append(s)
        opts = []
        if self.at_word("with"):
            self.advance()
            while True:
                key = self.name("an option name")
                self.expect("=")
                v, _ = self.value()
                opts.append((key.value, v))
                if not self.at(","):
                    break
                self.advance()
        end = self.expect(";").span
        return Ctor(head.value, tuple(args), tuple(opts), _join(head.span, end), tuple(spans))

    # -- declarations ----------------------------------------------------------------
    def decl(self) -> Decl:
        kw = self.tok
        if kw.kind != "IDENT" or kw.text not in KINDS:
            self.fail("expected a declaration (" + ", ".join(KINDS) + ")")
        self.advance()
        kind = kw.text
        name = self.name()
        params, pspans = [], []
        if kind in ARROWS:
            self.expect(":")
            v, s = self.value()
            params.append(v)
            pspans.append(s)
            self.expect(ARROWS[kind])
            v, s = self.value()
            params.append(v)
            pspans.append(s)
        elif kind == "doublecat" and self.at_word("over"):
            self.advance()
            t = self.name()
            params.append(t.value)
            pspans.append(t.span)
        elif kind == "probes":
            if not self.at_word("for"):
                self.fail("expected 'for'")
            self.advance()
            t = self.name()
            params.append(t.value)
            pspans.append(t.span)
        if self.at("="):
            self.advance()
            c = self.ctor()
            return Decl(kind, name.value, tuple(params), None, c, _join(kw.span, c.span), name.span, tuple(pspans))
        self.expect("{")
        sections = []
        while not self.at("}"):
            if self.tok.kind == "EOF":
                self.fail("expected '}'")
            try:
                sections.append(self.section())
            except _Abort as e:
                self.diags.append(e.diag)
                self.skip_entry()
                if self.at(";") or self.at(","):
                    self.advance()
        end = self.advance().span
        return Decl(kind, name.value, tuple(params), tuple(sections), None, _join(kw.span, end), name.span, tuple(pspans))

    def skip_decl(self) -> None:
        depth = 0
        while self.tok.kind != "EOF":
            if self.at("{"):
                depth += 1
            elif self.at("}"):
                depth -= 1
                if depth <= 0:
                    self.advance()
                    return
            elif depth == 0 and self.at(";"):
                self.advance()
                return
            elif depth == 0 and self.tok.kind == "IDENT" and self.tok.text in KINDS:
                return
            self.advance()

    def document(self) -> Document:
        decls = []
        while self.tok.kind != "EOF":
            start = self.pos
            try:
                decls.append(self.decl())
            except _Abort as e:
                self.diags.append(e.diag)
                if self.pos == start:
                    self.advance()
                self.skip_decl()
        return Document(tuple(decls))


def parse(text: str, file: str = "<input>") -> tuple[Document, list[Diagnostic]]:
    """Parse ``text``; the document holds every declaration that parsed cleanly enough."""
    p = Parser(text, file)
    doc = p.document()
    return doc, sorted(p.diags, key=lambda d: d.span.start)
