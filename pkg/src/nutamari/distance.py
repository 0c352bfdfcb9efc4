"""Touch and hit distance vectors on Dyck paths (nu a staircase ``(NE)^k``).

The distance from ``r_i`` to ``t_i`` (or ``h_i``) is half the length of the
subpath between them.  Both points sit on the same diagonal, so that is just
the number of north steps in between.
"""
from __future__ import annotations

from enum import Enum

from .paths import NuDyckPath, PathError, _row_positions, parse_path, path_from_left_area
from .tamari import is_staircase_nu

__all__ = [
    "DistanceKind",
    "DistanceVector",
    "NotStaircaseNu",
    "HeightMismatch",
    "MoveUndefined",
    "IterationOutOfRange",
    "touch_distance_vector",
    "hit_distance_vector",
    "tamari_leq_by_distance",
    "greedy_leq_by_distance",
    "gup_distance_update",
    "phibar_distance_step",
    "phibar_stage_distances",
    "dyck_path",
]


class NotStaircaseNu(PathError):
    pass


class HeightMismatch(PathError):
    pass


class MoveUndefined(PathError):
    pass


class IterationOutOfRange(PathError):
    pass


class DistanceKind(Enum):
    TOUCH = "touch"
    HIT = "hit"


class DistanceVector(tuple):
    """Per-row distances, bottom row first; compares equal to a plain tuple."""

    kind: DistanceKind

    def __new__(cls, entries, kind: DistanceKind):
        obj = super().__new__(cls, entries)
        obj.kind = kind
        return obj

    def dominated_by(self, other) -> bool:
        """Componentwise ``<=`` (tuple ``<=`` stays lexicographic)."""
        return all(a <= b for a, b in zip(self, other))


def _require_dyck(d: NuDyckPath) -> None:
    if not is_staircase_nu(d.nu):
        raise NotStaircaseNu(f"nu = {d.nu.word} is not a staircase (NE)^k")


def _norths_between(word: str, a: int, b: int) -> int:
    return word.count("N", a, b)


def _distances(word: str, bounds) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dt, dh = [], []
    for r, t, h in _row_positions(word, bounds):
        dt.append(_norths_between(word, r, t))
        dh.append(_norths_between(word, r, h))
    return tuple(dt), tuple(dh)


def touch_distance_vector(d: NuDyckPath) -> DistanceVector:
    _require_dyck(d)
    return DistanceVector(_distances(d.word, d.nu.bounds)[0], DistanceKind.TOUCH)


def hit_distance_vector(d: NuDyckPath) -> DistanceVector:
    _require_dyck(d)
    return DistanceVector(_distances(d.word, d.nu.bounds)[1], DistanceKind.HIT)


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _same_height(d: NuDyckPath, e: NuDyckPath) -> None:
    _require_dyck(d)
    _require_dyck(e)
    if d.n_north != e.n_north:
        raise HeightMismatch(f"heights {d.n_north} and {e.n_north} differ")


def tamari_leq_by_distance(d: NuDyckPath, e: NuDyckPath) -> bool:
    _same_height(d, e)
    return _leq(touch_distance_vector(d), touch_distance_vector(e))


def greedy_leq_by_distance(d: NuDyckPath, e: NuDyckPath) -> bool:
    _same_height(d, e)
    td, hd = _distances(d.word, d.nu.bounds)
    te, he = _distances(e.word, e.nu.bounds)
    return _leq(td, te) and _leq(hd, he)


def gup_distance_update(d: NuDyckPath, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Predict the distance vectors of ``greedy_up(d, i)`` from those of ``d``.

    Touch entries gain ``l(r_i, h_i)`` exactly where ``t_j = r_i``; hit entries
    gain it where ``h_j`` is the point just before ``r_i``.
    """
    _require_dyck(d)
    rows = d.rows
    if not 1 <= i <= len(rows):
        raise MoveUndefined(f"row {i} out of range")
    r, _t, h = rows[i - 1]
    if r == 0 or d.word[r - 1] != "E":
        raise MoveUndefined(f"greedy_up({d.word}, {i}) is undefined")
    bump = _norths_between(d.word, r, h)
    dt, dh = _distances(d.word, d.nu.bounds)
    new_t = tuple(v + bump if tj == r else v for v, (_, tj, _) in zip(dt, rows))
    new_h = tuple(v + bump if hj == r - 1 else v for v, (_, _, hj) in zip(dh, rows))
    return new_t, new_h


def _staircase_bounds(height: int) -> tuple[int, ...]:
    return tuple(range(height)) + (height,)


def phibar_stage_distances(d: NuDyckPath, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Distance vectors of the ``i``-th NE-pair phi-bar iterate.

    The last ``2i`` steps of the iterate are the finished ``(NE)^i`` tail.
    Hit points of rows ``2..mn-i`` are taken on the prefix before that tail
    (its endpoint counts as a hit); row 1 and the tail rows use the whole
    path.  Touch distances are the plain ones.
    """
    _require_dyck(d)
    height = d.n_north
    if not 0 <= i <= height or not d.word.endswith("NE" * i):
        raise IterationOutOfRange(f"{d.word} does not end with (NE)^{i}")
    dt, dh = _distances(d.word, d.nu.bounds)
    top = height - i
    _, dh_prefix = _distances(d.word[: len(d.word) - 2 * i], _staircase_bounds(top))
    stage = tuple(dh[j] if j == 0 or j >= top else dh_prefix[j] for j in range(height))
    return dt, stage


def phibar_distance_step(d: NuDyckPath, i: int, m: int, n: int):
    """Predicted distance vectors of the next iterate in the NE-pair phi-bar loop.

    ``d`` is the ``i``-th iterate (``0 <= i < n``) of the loop on a Dyck path
    of height ``m*n``; the pivot row is ``i*m - i + 1``.  Inputs and outputs
    follow the convention of :func:`phibar_stage_distances`.
    """
    _require_dyck(d)
    mn = m * n
    if d.n_north != mn:
        raise HeightMismatch(f"expected height {mn}, got {d.n_north}")
    if not 0 <= i < n:
        raise IterationOutOfRange(f"iteration {i} outside 0..{n - 1}")
    rows = d.rows
    dt, dh = phibar_stage_distances(d, i)
    k = i * m - i + 1
    _, tk, hk = rows[k - 1]
    x_of = lambda pos: d.word.count("E", 0, pos)  # noqa: E731
    new_t, new_h = [], []
    for j in range(1, mn + 1):
        _, tj, hj = rows[j - 1]
        if j >= mn - i:
            new_t.append(1)
            new_h.append(mn - j + 1)
            continue
        if j >= k:
            new_t.append(dt[j])  # entry j+1 (1-based) of the previous vector
        elif x_of(tj) >= x_of(tk):
            new_t.append(dt[j - 1] - 1)
        else:
            new_t.append(dt[j - 1])
        if j == 1:
            new_h.append(mn)
        elif j >= k:
            new_h.append(dh[j])
        elif x_of(hj) >= x_of(hk):
            new_h.append(dh[j - 1] - 1)
        else:
            new_h.append(dh[j - 1])
    return tuple(new_t), tuple(new_h)


def dyck_path(word: str) -> NuDyckPath:
    """Convenience constructor for a Dyck path given by its word."""
    p = parse_path(word)
    nu = parse_path("NE" * p.n_north)
    return path_from_left_area(p.left_area, nu)
