"""The nu-Greedy order: like nu-Tamari, but the east step jumps to the hit point."""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Optional

from .paths import (
    LatticePath,
    NuDyckPath,
    NuMismatch,
    _as_path,
    _check_row,
    _left_area,
    _row_positions,
    _word_from_left_area,
    enumerate_nu_dyck,
)
from .posetcore import FinitePoset
from .tamari import _splice_up, is_staircase_nu

__all__ = ["greedy_up", "greedy_up_covers", "greedy_leq", "greedy_poset"]

DEFAULT_SIZE_CAP = 20000


def _greedy_words(word: str, bounds) -> list[tuple[int, str]]:
    out = []
    for i, (r, _t, h) in enumerate(_row_positions(word, bounds), start=1):
        w = _splice_up(word, r, h)
        if w is not None:
            out.append((i, w))
    return out


def greedy_up(d: NuDyckPath, i: int) -> Optional[NuDyckPath]:
    """Move the east step before ``r_i`` to just after the hit point ``h_i``.

    ``r_i`` is by definition followed by a north step, so the only condition
    left to check is the preceding east step.
    """
    _check_row(d, i)
    r, _t, h = d.rows[i - 1]
    w = _splice_up(d.word, r, h)
    return None if w is None else NuDyckPath._trusted(d.nu, w)


def greedy_up_covers(d: NuDyckPath) -> list[tuple[int, NuDyckPath]]:
    return [(i, NuDyckPath._trusted(d.nu, w)) for i, w in _greedy_words(d.word, d.nu.bounds)]


def greedy_poset(nu, max_size: Optional[int] = DEFAULT_SIZE_CAP) -> FinitePoset:
    nu = _as_path(nu)
    elements = [d.la for d in enumerate_nu_dyck(nu)]

    def covers(la):
        word = _word_from_left_area(la, nu.n_east)
        return [_left_area(w) for _, w in _greedy_words(word, nu.bounds)]

    return FinitePoset.from_cover_function(elements, covers, max_size=max_size)


_lock = threading.Lock()


@lru_cache(maxsize=64)
def _cached_poset(nu_word: str) -> FinitePoset:
    return greedy_poset(LatticePath(nu_word))


def greedy_leq(d: NuDyckPath, e: NuDyckPath, method: str = "closure") -> bool:
    """``d <=_G e``.

    ``method="distance"`` applies the two-distance criterion and is only
    valid for Dyck paths; the default walks the greedy closure.
    """
    if d.nu != e.nu:
        raise NuMismatch(f"{d.nu.word} != {e.nu.word}")
    if method == "distance":
        from .distance import greedy_leq_by_distance

        return greedy_leq_by_distance(d, e)
    if method == "auto" and is_staircase_nu(d.nu):
        from .distance import greedy_leq_by_distance

        return greedy_leq_by_distance(d, e)
    if method not in ("auto", "closure"):
        raise ValueError(f"unknown method {method!r}")
    with _lock:
        poset = _cached_poset(d.nu.word)
    return poset.leq(d.la, e.la)
