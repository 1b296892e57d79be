"""Presentation language: parse, print and elaborate ``.fincat``, ``.dblcat`` and ``.vdb`` files.

Composition entries read ``g . f = h``: first ``f``, then ``g``.
"""

from __future__ import annotations

from .ast import Ctor, Decl, Document, Entry, Section
from .elaborate import Module, elaborate, law_check, law_names, load, load_file
from .parser import parse
from .printer import print_decl, print_document
from .syntax import Diagnostic, SourceSpan
from .unparse import dump, to_document

EXTENSIONS = (".fincat", ".dblcat", ".vdb")


def canonical(text: str, file: str = "<input>") -> str:
    """Reprint ``text`` canonically; raises on syntax errors."""
    from ..errors import ElaborationError

    doc, diags = parse(text, file)
    if diags:
        raise ElaborationError(diags)
    return print_document(doc)


__all__ = [
    "EXTENSIONS",
    "Ctor",
    "Decl",
    "Diagnostic",
    "Document",
    "Entry",
    "Module",
    "Section",
    "SourceSpan",
    "canonical",
    "dump",
    "elaborate",
    "law_check",
    "law_names",
    "load",
    "load_file",
    "parse",
    "print_decl",
    "print_document",
    "to_document",
]
