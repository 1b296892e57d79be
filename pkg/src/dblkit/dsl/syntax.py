"""Source positions, diagnostics and the tokenizer."""

from __future__ import annotations

import re
from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range ``[start, end)`` with the 1-based line/column of ``start``."""

    file: str
    line: int
    column: int
    start: int
    end: int

    def slice(self, text: str) -> str:
        return text[self.start : self.end]

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    span: SourceSpan
    message: str
    severity: str = ERROR
    related: tuple[SourceSpan, ...] = ()

    @property
    def file(self) -> str:
        return self.span.file

    @property
    def line(self) -> int:
        return self.span.line

    @property
    def column(self) -> int:
        return self.span.column

    def render(self, text: str | None = None) -> str:
        out = f"{self.span}: {self.severity}: {self.message}"
        for r in self.related:
            out += f"\n{r}: note: also here"
        if text is not None:
            line = text.splitlines()[self.line - 1] if text.splitlines() else ""
            width = max(1, min(self.span.end, self.span.start + len(line)) - self.span.start)
            out += f"\n  {line}\n  {' ' * (self.column - 1)}{'^' * width}"
        return out

    def to_json(self) -> dict:
        return {
            "file": self.file,
            "line": self.line,
            "column": self.column,
            "start": self.span.start,
            "end": self.span.end,
            "severity": self.severity,
            "message": self.message,
        }


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, STRING, PUNCT or EOF
    text: str
    span: SourceSpan

    @property
    def value(self):
        if self.kind == "INT":
            return int(self.text)
        if self.kind == "STRING":
            return _unquote(self.text)
        return self.text


PUNCT = ("-|->", "->", "~>", "<=", "{", "}", "(", ")", ":", ";", ",", ".", "=")

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<STRING>"(?:[^"\\\n]|\\.)*")
  | (?P<INT>-?[0-9]+)(?![A-Za-z_])
  | (?P<IDENT>[A-Za-z_*][A-Za-z0-9_*']*)
  | (?P<PUNCT>-\|->|->|~>|<=|[{}():;,.=])
    """,
    re.VERBOSE,
)

IDENT_RE = re.compile(r"[A-Za-z_*][A-Za-z0-9_*']*\Z")

_ESCAPES = {"n": "\n", "t": "\t", '"': '"', "\\": "\\"}


def _unquote(text: str) -> str:
    body = text[1:-1]
    return re.sub(r"\\(.)", lambda m: _ESCAPES.get(m.group(1), m.group(1)), body)


def quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t") + '"'


class _Lines:
    """Offset to (line, column) lookup."""

    def __init__(self, text: str):
        self.starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def locate(self, offset: int) -> tuple[int, int]:
        lo, hi = 0, len(self.starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - self.starts[lo] + 1


def make_span(lines: _Lines, file: str, start: int, end: int) -> SourceSpan:
    line, col = lines.locate(start)
    return SourceSpan(file, line, col, start, end)


def tokenize(text: str, file: str = "<input>") -> tuple[list[Token], list[Diagnostic]]:
    """Split ``text`` into tokens. Unknown characters become diagnostics and are skipped."""
    lines = _Lines(text)
    toks: list[Token] = []
    diags: list[Diagnostic] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            end = pos + 1
            if text[pos] == '"':
                nl = text.find("\n", pos)
                end = len(text) if nl < 0 else nl
                msg = "unterminated string"
            else:
                msg = f"unexpected character {text[pos]!r}"
            diags.append(Diagnostic(make_span(lines, file, pos, end), msg))
            pos = end
            continue
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(Token(kind, m.group(), make_span(lines, file, m.start(), m.end())))
        pos = m.end()
    toks.append(Token("EOF", "", make_span(lines, file, len(text), len(text))))
    return toks, diags
