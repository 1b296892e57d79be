"""Law reports: the common result type of every checker.

A checker is a list of :class:`Law` objects. Each law owns the tuples it ranges over and a
predicate; running it records the first counterexample. Because the predicate is kept, any
counterexample can be replayed later against the same structure.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from ._util import jsonable

SCHEMA_VERSION = 1

EXHAUSTIVE = "exhaustive"
PROBE = "probe"


@dataclass
class Law:
    name: str
    tuples: Callable[[], Iterable[tuple]]
    holds: Callable[..., bool]
    describe: str = ""

    def check(self, stop_at_first: bool = False) -> "LawResult":
        checked = failures = 0
        cex = None
        error = ""
        for tup in self.tuples():
            checked += 1
            try:
                ok = self.holds(*tup)
            except Exception as exc:  # a crashing law is a failing law, with the reason kept
                ok = False
                if cex is None:
                    error = f"{type(exc).__name__}: {exc}"
            if not ok:
                failures += 1
                if cex is None:
                    cex = tup
                if stop_at_first:
                    break
        return LawResult(self.name, "fail" if failures else "pass", cex, checked, failures, error)

    def replay(self, tup: Sequence) -> bool:
        """True if the law holds on ``tup``; exceptions count as failure."""
        try:
            return bool(self.holds(*tup))
        except Exception:
            return False


@dataclass
class LawResult:
    name: str
    status: str
    counterexample: tuple | None
    checked: int
    failures: int = 0
    error: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "status": self.status,
            "counterexample": jsonable(self.counterexample),
            "checked": self.checked,
        }
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class LawReport:
    artifact: str
    mode: str
    laws: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.laws)

    def violations(self) -> list[LawResult]:
        return [r for r in self.laws if not r.ok]

    def __iter__(self):
        return iter(self.laws)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.laws:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self) -> list[str]:
        return [r.name for r in self.laws]

    def select(self, names: Iterable[str]) -> "LawReport":
        wanted = set(names)
        return LawReport(self.artifact, self.mode, [r for r in self.laws if r.name in wanted])

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "artifact": self.artifact,
            "mode": self.mode,
            "ok": self.ok,
            "laws": [r.to_json() for r in self.laws],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def summary(self) -> str:
        lines = [f"{self.artifact} [{self.mode}]"]
        for r in self.laws:
            line = f"  {r.status.upper():4} {r.name} ({r.checked} checked)"
            if r.counterexample is not None:
                line += f" counterexample={r.counterexample!r}"
            lines.append(line)
        return "\n".join(lines)


def run_laws(
    artifact: str,
    mode: str,
    laws: Sequence[Law],
    only: Iterable[str] | None = None,
) -> LawReport:
    wanted = None if only is None else set(only)
    selected = [law for law in laws if wanted is None or law.name in wanted]
    n = threads()
    if n > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(Law.check, selected))
    else:
        results = [law.check() for law in selected]
    return LawReport(artifact, mode, results)


def threads() -> int:
    """Worker cap for law checking, from ``DBLKIT_THREADS`` (default 1: run laws in turn).

    Results keep the order of the law list whatever the setting.
    """
    try:
        return max(1, int(os.environ.get("DBLKIT_THREADS", "1")))
    except ValueError:
        return 1


def find_law(laws: Sequence[Law], name: str) -> Law:
    for law in laws:
        if law.name == name:
            return law
    raise KeyError(name)
