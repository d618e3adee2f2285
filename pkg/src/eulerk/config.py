"""Size limits for group construction and homomorphism search.

Limits live in a context variable so concurrent callers can scope their
own overrides with :func:`limits`.
"""

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace

DEFAULT_MAX_ORDER = 36
DEFAULT_MAX_HOM_PAIR = DEFAULT_MAX_ORDER * DEFAULT_MAX_ORDER
DEFAULT_MAX_SEARCH = 1 << 26


@dataclass(frozen=True)
class Limits:
    max_order: int = DEFAULT_MAX_ORDER
    # bound on |G| * |H| for a homomorphism search G -> H
    max_hom_pair: int = DEFAULT_MAX_HOM_PAIR
    # bound on the number of generator-image tuples a search may visit
    max_search: int = DEFAULT_MAX_SEARCH

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.max_hom_pair < 1 or self.max_search < 1:
            raise ValueError("limits must be positive")


def _env_limits():
    raw = os.environ.get("EULERK_MAX_ORDER")
    if raw is None:
        return Limits()
    try:
        n = int(raw)
        return Limits(max_order=n, max_hom_pair=max(DEFAULT_MAX_HOM_PAIR, n * n))
    except ValueError as exc:
        raise ValueError(f"bad EULERK_MAX_ORDER={raw!r}") from exc


_current = contextvars.ContextVar("eulerk_limits", default=None)


def get_limits():
    lim = _current.get()
    if lim is None:
        lim = _env_limits()
    return lim


@contextlib.contextmanager
def limits(**overrides):
    """Temporarily override fields of the active :class:`Limits`."""
    token = _current.set(replace(get_limits(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
