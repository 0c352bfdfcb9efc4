"""In/out-degrees in the nu-Tamari order and the algorithms built around them.

``out_degree`` counts up-covers (right-hand points preceded by an east step)
and ``in_degree`` counts down-covers (rows whose touch and hit points coincide
with nonzero horizontal distance).  The staircase algorithm finds the largest
``N^a (EN)^s E^b`` path above nu; ``s`` is both the maximal in-degree and the
maximal out-degree.  The area algorithm and the Dyck path algorithm walk down
from the top element to a path of maximal in-degree, one on right area vectors
and one on the paths themselves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .paths import (
    NuDyckPath,
    _as_path,
    _horiz_vector,
    _iter_left_areas,
    _row_positions,
    _word_from_left_area,
    maximal_path,
    path_from_left_area,
)
from .posetcore import FinitePoset, SizeCapExceeded, restrict
from .tamari import _splice_down, tamari_poset

__all__ = [
    "StaircaseResult",
    "TraceStep",
    "AlgorithmTrace",
    "out_degree",
    "in_degree",
    "staircase_algorithm",
    "area_algorithm",
    "dyck_path_algorithm",
    "degree_table",
    "max_out_set",
    "max_in_set",
    "subposet",
    "in_subposet",
    "out_subposet",
    "stair_checkpoints",
    "ones_from",
]

DEFAULT_SIZE_CAP = 20000


@dataclass(frozen=True)
class StaircaseResult:
    size: int
    xi: NuDyckPath
    processed: tuple[int, ...]


class TraceStep(NamedTuple):
    i: int
    j: int
    h: int
    ra: tuple[int, ...]


@dataclass
class AlgorithmTrace:
    """Steps of the area / Dyck path algorithm.

    With retention switched off ``steps`` stays empty and only ``n_steps`` is
    counted.
    """

    start: tuple[int, ...]
    steps: list[TraceStep] = field(default_factory=list)
    n_steps: int = 0
    retained: bool = True

    def __len__(self) -> int:
        return self.n_steps

    def record(self, step: TraceStep) -> None:
        self.n_steps += 1
        if self.retained:
            self.steps.append(step)


# -- degrees ----------------------------------------------------------------


def _out_degree(word: str) -> int:
    return sum(1 for p in range(1, len(word)) if word[p] == "N" and word[p - 1] == "E")


def _in_degree(word: str, bounds) -> int:
    hz = _horiz_vector(word, bounds)
    return sum(1 for r, t, h in _row_positions(word, bounds) if t == h and hz[r] != 0)


def out_degree(d: NuDyckPath) -> int:
    return _out_degree(d.word)


def in_degree(d: NuDyckPath) -> int:
    return _in_degree(d.word, d.nu.bounds)


# -- staircase --------------------------------------------------------------


def staircase_algorithm(nu) -> StaircaseResult:
    """Size and shape of the maximal staircase path weakly above ``nu``."""
    nu = _as_path(nu)
    lam = list(nu.left_area)
    i = 1
    while True:
        d = next((k for k, v in enumerate(lam) if v >= i), None)
        if d is None:
            break
        lam[d] = i
        extra = [k for k in range(len(lam)) if k != d and lam[k] == i]
        if extra:
            lam = [0] * len(extra) + [v for k, v in enumerate(lam) if k not in extra]
        i += 1
    size = i - 1
    a = nu.n_north - size
    b = nu.n_east - size
    xi = NuDyckPath(nu, _as_path("N" * a + "EN" * size + "E" * b))
    return StaircaseResult(size, xi, tuple(lam))


# -- area / Dyck path algorithms -------------------------------------------


def _area_choice(ra: list[int]) -> Optional[tuple[int, int, int]]:
    """``(i, j, h)`` for the next area-algorithm step (1-based), or None."""
    n = len(ra)
    for i in range(n - 1, -1, -1):
        v = ra[i]
        if v == 0:
            continue
        j = i + 1
        while j < n and ra[j] > v:
            j += 1
        if j < n and ra[j] == v:
            h = j + 1
            while h < n and ra[h] >= v:
                h += 1
            return i + 1, j + 1, h + 1
    return None


def area_algorithm(nu, trace: bool = True) -> tuple[NuDyckPath, AlgorithmTrace]:
    nu = _as_path(nu)
    ra = list(nu.left_area)
    tr = AlgorithmTrace(start=tuple(ra), retained=trace)
    while True:
        choice = _area_choice(ra)
        if choice is None:
            break
        i, j, h = choice
        for k in range(j - 1, h - 1):
            ra[k] -= 1
        tr.record(TraceStep(i, j, h, tuple(ra)))
    la = tuple(b - a for a, b in zip(ra, nu.left_area))
    return path_from_left_area(la, nu), tr


def dyck_path_algorithm(nu, trace: bool = True) -> tuple[NuDyckPath, AlgorithmTrace]:
    nu = _as_path(nu)
    bounds = nu.bounds
    word = maximal_path(nu).word
    tr = AlgorithmTrace(start=nu.left_area, retained=trace)
    while True:
        hz = _horiz_vector(word, bounds)
        rows = list(_row_positions(word, bounds))
        pick = None
        for i in range(len(rows), 0, -1):
            r, t, h = rows[i - 1]
            if t != h and hz[r] != 0:
                pick = i
                break
        if pick is None:
            break
        t = rows[pick - 1][1]
        # t_i is followed by a north step, so it is the right-hand point of a higher row
        j = next(k for k, (r, _, _) in enumerate(rows, start=1) if r == t)
        rj, tj, hj = rows[j - 1]
        assert tj == hj and hz[rj] != 0, "Dyck path algorithm: down move at j must exist"
        h_row = word.count("N", 0, hj) + 1
        word = _splice_down(word, rj, tj)
        ra = tuple(b - a for a, b in zip(_la(word), nu.left_area))
        tr.record(TraceStep(pick, j, h_row, ra))
    return NuDyckPath._trusted(nu, word), tr


def _la(word):
    return _as_path(word).left_area


# -- maximal-degree sets ------------------------------------------------------


class DegreeRow(NamedTuple):
    la: tuple[int, ...]
    word: str
    in_degree: int
    out_degree: int


def degree_table(nu, max_size: Optional[int] = None) -> list[DegreeRow]:
    """In- and out-degree of every nu-Dyck path, in lexicographic LA order."""
    nu = _as_path(nu)
    bounds = nu.bounds
    rows = []
    for la in _iter_left_areas(nu.left_area):
        if max_size is not None and len(rows) >= max_size:
            raise SizeCapExceeded(f"more than {max_size} {nu.word}-Dyck paths")
        w = _word_from_left_area(la, nu.n_east)
        rows.append(DegreeRow(la, w, _in_degree(w, bounds), _out_degree(w)))
    return rows


def max_out_set(nu, max_size: Optional[int] = DEFAULT_SIZE_CAP) -> set[NuDyckPath]:
    nu = _as_path(nu)
    table = degree_table(nu, max_size)
    top = max(r.out_degree for r in table)
    return {NuDyckPath._trusted(nu, r.word) for r in table if r.out_degree == top}


def max_in_set(nu, max_size: Optional[int] = DEFAULT_SIZE_CAP) -> set[NuDyckPath]:
    nu = _as_path(nu)
    table = degree_table(nu, max_size)
    top = max(r.in_degree for r in table)
    return {NuDyckPath._trusted(nu, r.word) for r in table if r.in_degree == top}


def subposet(poset: FinitePoset, keep) -> FinitePoset:
    """Induced subposet; ``keep`` may hold paths or their area vectors."""
    keys = [k.la if isinstance(k, NuDyckPath) else k for k in keep]
    return restrict(poset, keys)


def in_subposet(nu, max_size: Optional[int] = DEFAULT_SIZE_CAP) -> FinitePoset:
    return subposet(tamari_poset(nu, max_size), max_in_set(nu, max_size))


def out_subposet(nu, max_size: Optional[int] = DEFAULT_SIZE_CAP) -> FinitePoset:
    return subposet(tamari_poset(nu, max_size), max_out_set(nu, max_size))


# -- staircase checkpoints ------------------------------------------------------


def ones_from(i: int, length: int) -> tuple[int, ...]:
    """``(0, ..., 0, 1, ..., 1)`` with the first 1 at 1-based index ``i``.

    Indices past the end give the zero vector.
    """
    return tuple(1 if k >= i else 0 for k in range(1, length + 1))


def stair_checkpoints(nu) -> dict[int, NuDyckPath]:
    """``k -> D^(k)``: the path just before the first step that picks a row below ``k``.

    ``k`` runs over ``1..sN+1``; ``D^(1)`` is the terminal path.
    """
    nu = _as_path(nu)
    start = maximal_path(nu)
    _, tr = area_algorithm(nu, trace=True)
    states = [start.la]
    for step in tr.steps:
        states.append(tuple(b - a for a, b in zip(step.ra, nu.left_area)))
    out = {}
    for k in range(1, nu.n_north + 2):
        idx = next((s for s, step in enumerate(tr.steps) if step.i < k), len(tr.steps))
        out[k] = path_from_left_area(states[idx], nu)
    return out
