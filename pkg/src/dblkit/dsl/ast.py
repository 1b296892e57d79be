"""Syntax tree of presentation files.

Values are plain Python data: ``str`` for names, ``int`` for numerals and ``tuple`` for
parenthesised groups. Spans are carried alongside but never take part in equality, so a
tree parsed from printed text compares equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .syntax import SourceSpan

Value = Union[str, int, tuple]

# entry forms, named after how they are written
ATOM = "atom"  # x
ARROW = "arrow"  # f: a -> b
ELEMENT = "element"  # p: d ~> c
SHAPE = "shape"  # s: (v, w, h, k)
COMPOSE = "compose"  # g . f = h
MAP = "map"  # a -> b
ASSIGN = "assign"  # a = b
ORDER = "order"  # a <= b

FORMS = (ATOM, ARROW, ELEMENT, SHAPE, COMPOSE, MAP, ASSIGN, ORDER)

KINDS = ("category", "functor", "profunctor", "bicat", "doublecat", "verity", "probes")


@dataclass(frozen=True)
class Entry:
    form: str
    values: tuple
    span: SourceSpan | None = field(default=None, compare=False, repr=False)
    spans: tuple = field(default=(), compare=False, repr=False)

    def span_of(self, i: int) -> SourceSpan | None:
        return self.spans[i] if i < len(self.spans) else self.span


@dataclass(frozen=True)
class Section:
    name: str
    entries: tuple[Entry, ...]
    span: SourceSpan | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Ctor:
    """``= name arg ... [with key = value, ...]``"""

    name: str
    args: tuple
    options: tuple[tuple[str, Value], ...] = ()
    span: SourceSpan | None = field(default=None, compare=False, repr=False)
    arg_spans: tuple = field(default=(), compare=False, repr=False)

    def option(self, key: str, default=None):
        return dict(self.options).get(key, default)


@dataclass(frozen=True)
class Decl:
    """One top-level declaration.

    ``params`` holds the header operands: ``(src, tgt)`` for functors and profunctors,
    ``(base,)`` for a table double category (``over base``) and ``(target,)`` for probes
    (``for target``). Exactly one of ``sections`` and ``ctor`` is set.
    """

    kind: str
    name: str
    params: tuple = ()
    sections: tuple[Section, ...] | None = None
    ctor: Ctor | None = None
    span: SourceSpan | None = field(default=None, compare=False, repr=False)
    name_span: SourceSpan | None = field(default=None, compare=False, repr=False)
    param_spans: tuple = field(default=(), compare=False, repr=False)

    def section(self, name: str) -> Section | None:
        for s in self.sections or ():
            if s.name == name:
                return s
        return None

    def entries(self, name: str) -> tuple[Entry, ...]:
        s = self.section(name)
        return s.entries if s else ()


@dataclass(frozen=True)
class Document:
    decls: tuple[Decl, ...]

    def __getitem__(self, name: str) -> Decl:
        for d in self.decls:
            if d.name == name:
                return d
        raise KeyError(name)

    def names(self) -> list[str]:
        return [d.name for d in self.decls]
