"""Small helpers shared by every module: deterministic ordering, frozen maps, memoisation."""

from __future__ import annotations

import functools
from typing import Any, Callable, Hashable, Iterable, Mapping, TypeVar

T = TypeVar("T")


def sort_key(x: Any) -> tuple:
    """Total order over the ids we use (ints, strings, nested tuples, named tuples).

    Plain ``sorted`` chokes on mixed types, and string order would put ``10`` before ``2``.
    """
    if x is None:
        return (0,)
    if isinstance(x, bool):
        return (1, int(x))
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, len(x), tuple(sort_key(e) for e in x))
    if isinstance(x, frozenset):
        return (4, tuple(sorted((sort_key(e) for e in x))))
    key = getattr(x, "sort_key", None)
    if callable(key):
        return (5, key())
    return (6, repr(x))


def sorted_ids(xs: Iterable[T]) -> list[T]:
    return sorted(xs, key=sort_key)


class FrozenDict(dict):
    """A hashable, read-only dict. Used for functor and profunctor tables."""

    __slots__ = ("_hash",)

    def __hash__(self) -> int:  # type: ignore[override]
        try:
            return self._hash
        except AttributeError:
            h = hash(tuple(sorted(self.items(), key=lambda kv: sort_key(kv[0]))))
            self._hash = h
            return h

    def _readonly(self, *args, **kwargs):
        raise TypeError("FrozenDict is immutable")

    __setitem__ = __delitem__ = clear = pop = popitem = setdefault = update = _readonly  # type: ignore

    def __reduce__(self):
        return (FrozenDict, (dict(self),))

    def __repr__(self) -> str:
        return f"FrozenDict({dict.__repr__(self)})"


def freeze(m: Mapping) -> FrozenDict:
    return m if isinstance(m, FrozenDict) else FrozenDict(m)


def memo(method: Callable[..., T]) -> Callable[..., T]:
    """Per-instance memoisation for methods with hashable arguments.

    The cache lives on the instance, so values die with it (``functools.cache``
    on a method would pin every instance forever).
    """
    name = method.__name__

    @functools.wraps(method)
    def wrapper(self, *args: Hashable):
        try:
            cache = self.__dict__["_memo"]
        except KeyError:
            cache = self.__dict__["_memo"] = {}
        key = (name, args)
        try:
            return cache[key]
        except KeyError:
            value = cache[key] = method(self, *args)
            return value

    return wrapper


def jsonable(x: Any) -> Any:
    """Best-effort conversion of ids/counterexamples into JSON values."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if hasattr(x, "_asdict"):
        return {k: jsonable(v) for k, v in x._asdict().items()}
    if isinstance(x, Mapping):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [jsonable(e) for e in x]
    if isinstance(x, (set, frozenset)):
        return [jsonable(e) for e in sorted_ids(x)]
    name = getattr(x, "name", None)
    if isinstance(name, str):
        return name
    return repr(x)
