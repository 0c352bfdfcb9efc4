"""Lattice paths over {N, E}, nu-Dyck paths and their area vectors.

A path is stored as its step word.  Rows are indexed from 1 at the bottom:
row ``i`` is the row entered by the ``i``-th north step, and the right-hand
point ``r_i`` is the point just before that step.  Area vectors are always
stored bottom row first.

Most functions come in two layers.  The public ones take :class:`LatticePath`
and :class:`NuDyckPath` objects and validate their inputs; the underscored
helpers work on raw ``(word, bounds)`` pairs and are what the exhaustive sweeps
call in their inner loops.  ``bounds`` is the tuple ``maxX(0..sN)``: the
largest x-coordinate allowed on each height, i.e. the left area vector of nu
with ``sE`` appended.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Step",
    "LatticePath",
    "NuDyckPath",
    "GridPoint",
    "PathError",
    "InvalidCharacter",
    "EmptyWord",
    "PointNotOnPath",
    "RowOutOfRange",
    "NotWeaklyIncreasing",
    "AboveViolation",
    "NuMismatch",
    "parse_path",
    "left_area_vector",
    "right_area_vector",
    "horizontal_distance",
    "horizontal_distance_vector",
    "right_hand_point",
    "touch_point",
    "hit_point",
    "path_from_left_area",
    "reverse_path",
    "shift_down",
    "maximal_path",
    "minimal_path",
    "enumerate_nu_dyck",
    "count_nu_dyck",
    "to_json",
]


class Step:
    """The two step letters."""

    N = "N"
    E = "E"


class PathError(ValueError):
    pass


class InvalidCharacter(PathError):
    pass


class EmptyWord(PathError):
    pass


class PointNotOnPath(PathError):
    pass


class RowOutOfRange(PathError, IndexError):
    pass


class NotWeaklyIncreasing(PathError):
    pass


class AboveViolation(PathError):
    """A path (or area vector) dips strictly below its bounding path."""


class NuMismatch(PathError):
    pass


class GridPoint(NamedTuple):
    x: int
    y: int

    @property
    def index(self) -> int:
        """Position of the point along any monotone path through it."""
        return self.x + self.y


@dataclass(frozen=True)
class LatticePath:
    """A word over ``{N, E}`` read as a path from ``(0, 0)``."""

    word: str

    def __post_init__(self):
        bad = set(self.word) - {"N", "E"}
        if bad:
            raise InvalidCharacter(f"unexpected step symbol(s) {sorted(bad)!r}")

    @property
    def n_east(self) -> int:
        return self.word.count("E")

    @property
    def n_north(self) -> int:
        return self.word.count("N")

    # short aliases
    sE = n_east
    sN = n_north

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def points(self) -> list[GridPoint]:
        pts = [GridPoint(0, 0)]
        x = y = 0
        for s in self.word:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append(GridPoint(x, y))
        return pts

    @cached_property
    def left_area(self) -> tuple[int, ...]:
        return _left_area(self.word)

    @cached_property
    def bounds(self) -> tuple[int, ...]:
        """``maxX(y)`` for ``y = 0..sN`` when this path is used as nu."""
        return self.left_area + (self.n_east,)


def parse_path(word: str) -> LatticePath:
    """Parse a step word; whitespace is ignored, case is not."""
    if not isinstance(word, str):
        raise TypeError("path word must be a string")
    compact = "".join(word.split())
    if not compact:
        raise EmptyWord("empty path word")
    return LatticePath(compact)


def _as_path(p) -> LatticePath:
    if isinstance(p, LatticePath):
        return p
    if isinstance(p, NuDyckPath):
        return p.path
    return LatticePath("".join(str(p).split()))


def _left_area(word: str) -> tuple[int, ...]:
    la = []
    x = 0
    for s in word:
        if s == "E":
            x += 1
        else:
            la.append(x)
    return tuple(la)


def _word_from_left_area(la: Sequence[int], n_east: int) -> str:
    parts = []
    prev = 0
    for v in la:
        parts.append("E" * (v - prev))
        parts.append("N")
        prev = v
    parts.append("E" * (n_east - prev))
    return "".join(parts)


def _is_above(la: Sequence[int], bounds: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(la, bounds))


@dataclass(frozen=True)
class NuDyckPath:
    """A path weakly above ``nu`` with the same endpoints.

    Equality and hashing go through ``(nu.word, path.word)``; since the word
    and the left area vector determine each other, the area vector is an
    equivalent key.
    """

    nu: LatticePath
    path: LatticePath
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            return
        nu, d = self.nu, self.path
        if (d.n_east, d.n_north) != (nu.n_east, nu.n_north):
            raise PathError(
                f"endpoint mismatch: path ends at {(d.n_east, d.n_north)}, "
                f"nu ends at {(nu.n_east, nu.n_north)}"
            )
        if not _is_above(d.left_area, nu.left_area):
            raise AboveViolation(f"{d.word} is not weakly above {nu.word}")

    @classmethod
    def _trusted(cls, nu: LatticePath, word: str) -> "NuDyckPath":
        return cls(nu, LatticePath(word), _checked=False)

    @property
    def word(self) -> str:
        return self.path.word

    @property
    def n_east(self) -> int:
        return self.nu.n_east

    @property
    def n_north(self) -> int:
        return self.nu.n_north

    @property
    def la(self) -> tuple[int, ...]:
        return self.path.left_area

    @property
    def ra(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.la, self.nu.left_area))

    @cached_property
    def horiz(self) -> tuple[int, ...]:
        return tuple(_horiz_vector(self.word, self.nu.bounds))

    @cached_property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        """Word positions ``(r_i, t_i, h_i)`` for every row, bottom first."""
        return tuple(_row_positions(self.word, self.nu.bounds))

    def __str__(self) -> str:
        return self.word


# -- raw helpers ------------------------------------------------------------


def _horiz_vector(word: str, bounds: Sequence[int]) -> list[int]:
    out = [bounds[0]]
    x = y = 0
    for s in word:
        if s == "E":
            x += 1
        else:
            y += 1
        out.append(bounds[y] - x)
    return out


def _row_positions(word: str, bounds: Sequence[int]):
    """Yield ``(r, t, h)`` word positions for each row of ``word``.

    Horizontal distance drops by exactly one on an east step and never drops
    on a north step, so scanning forward for the first equal value is exact.
    """
    hz = _horiz_vector(word, bounds)
    last = len(word)
    for p, s in enumerate(word):
        if s != "N":
            continue
        v = hz[p]
        t = h = -1
        q = p + 1
        while q <= last:
            if hz[q] == v:
                if t < 0:
                    t = q
                if q == last or word[q] == "E":
                    h = q
                    break
            q += 1
        yield p, t, h


def _point_at(word: str, pos: int) -> GridPoint:
    e = word.count("E", 0, pos)
    return GridPoint(e, pos - e)


# -- public operations --------------------------------------------------------


def left_area_vector(d) -> tuple[int, ...]:
    """x-coordinate of each right-hand point, bottom row first."""
    return _as_path(d).left_area


def right_area_vector(d: NuDyckPath) -> tuple[int, ...]:
    """Horizontal distance of each right-hand point, bottom row first."""
    return d.ra


def horizontal_distance(d: NuDyckPath, p) -> int:
    p = GridPoint(*p)
    pos = p.index
    if not (0 <= pos <= len(d.word)) or _point_at(d.word, pos) != p:
        raise PointNotOnPath(f"{tuple(p)} is not on {d.word}")
    return d.nu.bounds[p.y] - p.x


def horizontal_distance_vector(d: NuDyckPath) -> tuple[int, ...]:
    return d.horiz


def _check_row(d: NuDyckPath, i: int) -> None:
    if not 1 <= i <= d.n_north:
        raise RowOutOfRange(f"row {i} outside 1..{d.n_north}")


def right_hand_point(d: NuDyckPath, i: int) -> GridPoint:
    _check_row(d, i)
    return _point_at(d.word, d.rows[i - 1][0])


def touch_point(d: NuDyckPath, i: int) -> GridPoint:
    _check_row(d, i)
    return _point_at(d.word, d.rows[i - 1][1])


def hit_point(d: NuDyckPath, i: int) -> GridPoint:
    _check_row(d, i)
    return _point_at(d.word, d.rows[i - 1][2])


def path_from_left_area(la: Sequence[int], nu) -> NuDyckPath:
    nu = _as_path(nu)
    la = tuple(int(v) for v in la)
    if len(la) != nu.n_north:
        raise PathError(f"area vector has {len(la)} entries, nu has {nu.n_north} rows")
    if any(v < 0 for v in la) or any(a > b for a, b in zip(la, la[1:])):
        raise NotWeaklyIncreasing(f"{la} is not a weakly increasing vector of naturals")
    if not _is_above(la, nu.left_area):
        raise AboveViolation(f"{la} exceeds {nu.left_area}")
    return NuDyckPath._trusted(nu, _word_from_left_area(la, nu.n_east))


def reverse_path(nu) -> LatticePath:
    """Read the word backwards, swapping N and E."""
    w = _as_path(nu).word
    return LatticePath(w[::-1].translate(str.maketrans("NE", "EN")))


def shift_down(d: NuDyckPath) -> NuDyckPath:
    la = d.la
    if len(la) <= 1:
        return d
    return path_from_left_area(la[1:] + la[-1:], d.nu)


def maximal_path(nu) -> NuDyckPath:
    """``N^sN E^sE``, the top element of the nu-Tamari order."""
    nu = _as_path(nu)
    return NuDyckPath._trusted(nu, "N" * nu.n_north + "E" * nu.n_east)


def minimal_path(nu) -> NuDyckPath:
    nu = _as_path(nu)
    return NuDyckPath._trusted(nu, nu.word)


def _iter_left_areas(caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Weakly increasing vectors bounded by ``caps``, in lexicographic order."""
    k = len(caps)
    if k == 0:
        yield ()
        return
    cur = [0] * k

    def rec(i, lo):
        if i == k:
            yield tuple(cur)
            return
        for v in range(lo, caps[i] + 1):
            cur[i] = v
            yield from rec(i + 1, v)

    yield from rec(0, 0)


def enumerate_nu_dyck(nu) -> Iterator[NuDyckPath]:
    nu = _as_path(nu)
    for la in _iter_left_areas(nu.left_area):
        yield NuDyckPath._trusted(nu, _word_from_left_area(la, nu.n_east))


def _count_left_areas(caps: Sequence[int]) -> int:
    if not caps:
        return 1
    width = max(caps) + 1
    # ways[v] = number of valid prefixes ending with value v
    ways = [1 if v <= caps[0] else 0 for v in range(width)]
    for cap in caps[1:]:
        acc = 0
        nxt = [0] * width
        for v in range(width):
            acc += ways[v]
            nxt[v] = acc if v <= cap else 0
        ways = nxt
    return sum(ways)


def count_nu_dyck(nu) -> int:
    """Number of nu-Dyck paths, by a prefix-sum DP over the rows."""
    return _count_left_areas(_as_path(nu).left_area)


def to_json(d: NuDyckPath) -> dict:
    return {"nu": d.nu.word, "word": d.word, "la": list(d.la)}
