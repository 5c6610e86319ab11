"""Enumeration budget shared by the combinatorial constructions.

``RNK_MAX_CELLS`` caps how many cells may be enumerated (default 10**7).
Inside ``budget()`` the count is cumulative over the whole computation;
outside it each enumeration is checked on its own.
"""
import os
from contextlib import contextmanager

DEFAULT_MAX_CELLS = 10**7


class CellLimitExceeded(RuntimeError):
    pass


_state = {"used": 0, "active": False}


def max_cells() -> int:
    raw = os.environ.get("RNK_MAX_CELLS")
    return int(raw) if raw else DEFAULT_MAX_CELLS


def charge(n: int) -> None:
    limit = max_cells()
    if _state["active"]:
        _state["used"] += n
        n = _state["used"]
    if n > limit:
        raise CellLimitExceeded(f"enumeration exceeded RNK_MAX_CELLS={limit} ({n} cells)")


@contextmanager
def budget():
    saved = dict(_state)
    _state.update(used=0, active=True)
    try:
        yield
    finally:
        _state.update(saved)
