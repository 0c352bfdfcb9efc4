"""Covering moves of the nu-Tamari order and order comparison.

Going up at row ``i`` splits ``D = d E t f`` where the ``E`` is the step into
the right-hand point ``r_i`` and ``t`` runs from ``r_i`` to the touch point
``t_i``; the cover is ``d t E f``.  Going down is the inverse splice, which is
only a cover when the touch and hit points of the row coincide and ``r_i`` has
nonzero horizontal distance.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from .paths import (
    LatticePath,
    NuDyckPath,
    NuMismatch,
    _as_path,
    _check_row,
    _horiz_vector,
    _left_area,
    _row_positions,
    _word_from_left_area,
    enumerate_nu_dyck,
)
from .posetcore import FinitePoset

__all__ = [
    "Direction",
    "CoverMove",
    "tamari_up",
    "tamari_down",
    "up_covers",
    "down_covers",
    "cover_moves",
    "tamari_leq",
    "tamari_poset",
    "is_staircase_nu",
]


class Direction(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class CoverMove:
    row: int
    direction: Direction
    source: NuDyckPath
    target: NuDyckPath


# -- raw word-level moves ---------------------------------------------------


def _splice_up(word: str, r: int, dest: int) -> Optional[str]:
    """Move the east step ending at position ``r`` to just after ``dest``."""
    if r == 0 or word[r - 1] != "E":
        return None
    return word[: r - 1] + word[r:dest] + "E" + word[dest:]


def _splice_down(word: str, r: int, dest: int) -> str:
    """Move the east step leaving position ``dest`` to just before ``r``."""
    return word[:r] + "E" + word[r:dest] + word[dest + 1:]


def _up_words(word: str, bounds) -> list[tuple[int, str]]:
    out = []
    for i, (r, t, _h) in enumerate(_row_positions(word, bounds), start=1):
        w = _splice_up(word, r, t)
        if w is not None:
            out.append((i, w))
    return out


def _down_words(word: str, bounds) -> list[tuple[int, str]]:
    hz = _horiz_vector(word, bounds)
    out = []
    for i, (r, t, h) in enumerate(_row_positions(word, bounds), start=1):
        if t == h and hz[r] != 0:
            out.append((i, _splice_down(word, r, t)))
    return out


# -- public API -------------------------------------------------------------


def tamari_up(d: NuDyckPath, i: int) -> Optional[NuDyckPath]:
    _check_row(d, i)
    r, t, _ = d.rows[i - 1]
    w = _splice_up(d.word, r, t)
    return None if w is None else NuDyckPath._trusted(d.nu, w)


def tamari_down(d: NuDyckPath, i: int) -> Optional[NuDyckPath]:
    _check_row(d, i)
    r, t, h = d.rows[i - 1]
    if t != h or d.horiz[r] == 0:
        return None
    return NuDyckPath._trusted(d.nu, _splice_down(d.word, r, t))


def up_covers(d: NuDyckPath) -> list[tuple[int, NuDyckPath]]:
    return [(i, NuDyckPath._trusted(d.nu, w)) for i, w in _up_words(d.word, d.nu.bounds)]


def down_covers(d: NuDyckPath) -> list[tuple[int, NuDyckPath]]:
    return [(i, NuDyckPath._trusted(d.nu, w)) for i, w in _down_words(d.word, d.nu.bounds)]


def cover_moves(d: NuDyckPath) -> list[CoverMove]:
    """All up and down covers of ``d`` as explicit moves."""
    moves = [CoverMove(i, Direction.UP, d, e) for i, e in up_covers(d)]
    moves += [CoverMove(i, Direction.DOWN, d, e) for i, e in down_covers(d)]
    return moves


def is_staircase_nu(nu) -> bool:
    w = nu.word if hasattr(nu, "word") else str(nu)
    return w == "NE" * (len(w) // 2)


_poset_lock = threading.Lock()


@lru_cache(maxsize=64)
def _cached_poset(nu_word: str) -> FinitePoset:
    return tamari_poset(LatticePath(nu_word))


def tamari_poset(nu, max_size: int | None = 20000) -> FinitePoset:
    """The nu-Tamari poset on all nu-Dyck paths, keyed by left area vector."""
    nu = _as_path(nu)
    elements = [d.la for d in enumerate_nu_dyck(nu)]

    def covers(la):
        word = _word_from_left_area(la, nu.n_east)
        return [_left_area(w) for _, w in _up_words(word, nu.bounds)]

    return FinitePoset.from_cover_function(elements, covers, max_size=max_size)


def tamari_leq(d: NuDyckPath, e: NuDyckPath, method: str = "auto") -> bool:
    """``d <=_T e``.

    With ``method="auto"`` Dyck paths (staircase nu) use the touch-distance
    criterion and everything else goes through the reachability closure of a
    cached per-nu poset.  ``"closure"`` forces the latter.
    """
    if d.nu != e.nu:
        raise NuMismatch(f"{d.nu.word} != {e.nu.word}")
    if method not in ("auto", "closure"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto" and is_staircase_nu(d.nu):
        from .distance import touch_distance_vector

        return all(a <= b for a, b in zip(touch_distance_vector(d), touch_distance_vector(e)))
    with _poset_lock:
        poset = _cached_poset(d.nu.word)
    return poset.leq(d.la, e.la)
