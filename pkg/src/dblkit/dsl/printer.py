"""Canonical text for syntax trees.

The printed form is fixed: two-space indentation, one section per line, entries on one
line when they fit in :data:`WIDTH` columns and one per line otherwise, a blank line between
declarations. Parsing printed text gives back an equal tree.
"""

from __future__ import annotations

from .ast import ARROW, ASSIGN, ATOM, COMPOSE, ELEMENT, MAP, ORDER, SHAPE, Ctor, Decl, Document, Entry, Value
from .syntax import IDENT_RE, quote

WIDTH = 88
RESERVED = frozenset({"with", "over", "for"})


def show(v: Value) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans have no surface syntax")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return v if IDENT_RE.match(v) and v not in RESERVED else quote(v)
    if isinstance(v, tuple):
        inner = ", ".join(show(x) for x in v)
        return f"({inner},)" if len(v) == 1 else f"({inner})"
    raise TypeError(f"no surface syntax for {type(v).__name__} {v!r}")


def show_entry(e: Entry) -> str:
    v = [show(x) for x in e.values]
    if e.form == ATOM:
        return v[0]
    if e.form == ARROW:
        return f"{v[0]}: {v[1]} -> {v[2]}"
    if e.form == ELEMENT:
        return f"{v[0]}: {v[1]} ~> {v[2]}"
    if e.form == SHAPE:
        return f"{v[0]}: {v[1]}"
    if e.form == COMPOSE:
        return f"{v[0]} . {v[1]} = {v[2]}"
    if e.form == MAP:
        return f"{v[0]} -> {v[1]}"
    if e.form == ASSIGN:
        return f"{v[0]} = {v[1]}"
    if e.form == ORDER:
        return f"{v[0]} <= {v[1]}"
    raise ValueError(f"unknown entry form {e.form!r}")


def show_ctor(c: Ctor) -> str:
    out = " ".join([c.name, *(show(a) for a in c.args)])
    if c.options:
        out += " with " + ", ".join(f"{k} = {show(v)}" for k, v in c.options)
    return out


def _header(d: Decl) -> str:
    head = f"{d.kind} {show(d.name)}"
    if d.kind == "functor":
        head += f": {show(d.params[0])} -> {show(d.params[1])}"
    elif d.kind == "profunctor":
        head += f": {show(d.params[0])} -|-> {show(d.params[1])}"
    elif d.kind == "doublecat" and d.params:
        head += f" over {show(d.params[0])}"
    elif d.kind == "probes":
        head += f" for {show(d.params[0])}"
    return head


def print_decl(d: Decl) -> str:
    head = _header(d)
    if d.ctor is not None:
        return f"{head} = {show_ctor(d.ctor)};\n"
    lines = [head + " {"]
    for s in d.sections or ():
        items = [show_entry(e) for e in s.entries]
        one = f"  {show(s.name)}: {', '.join(items)};"
        if len(one) <= WIDTH or len(items) <= 1:
            lines.append(one.replace(": ;", ":;"))
        else:
            lines.append(f"  {show(s.name)}:")
            lines.extend(f"    {item}," for item in items[:-1])
            lines.append(f"    {items[-1]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def print_document(doc: Document) -> str:
    return "\n".join(print_decl(d) for d in doc.decls)
