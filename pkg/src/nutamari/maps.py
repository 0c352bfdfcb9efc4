"""Maps between maximal-degree m-Dyck paths and (m-1)-Dyck paths.

``phi_out`` subtracts the staircase shape from a path of maximal out-degree.
``phi_in`` pulls every right-hand point left by the number of hit points
strictly to its left (``hat``), then drops the ``n`` trailing east steps.
``pi_embed`` turns an m-Dyck path of height n into a Dyck path of height mn by
repeating every north step, and ``bar_phi`` is ``phi_in`` transported along it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .degrees import _in_degree, _out_degree, staircase_algorithm
from .paths import (
    LatticePath,
    NuDyckPath,
    PathError,
    _left_area,
    _row_positions,
    path_from_left_area,
)

__all__ = [
    "MDyckShape",
    "NotInMaxOutSet",
    "NotInMaxInSet",
    "MNotAtLeastTwo",
    "NotInEmbeddedMaxInSet",
    "NotInImage",
    "m_dyck_nu",
    "d_minus",
    "phi_out",
    "phi_out_inverse",
    "hat",
    "hat_subtractions",
    "phi_in",
    "phi_in_inverse",
    "pi_embed",
    "pi_inverse",
    "bar_phi",
    "bar_phi_iterates",
    "bijection_record",
]


class NotInMaxOutSet(PathError):
    pass


class NotInMaxInSet(PathError):
    pass


class MNotAtLeastTwo(PathError):
    pass


class NotInEmbeddedMaxInSet(PathError):
    pass


class NotInImage(PathError):
    """A Dyck path whose north runs cannot be grouped into blocks of m."""


@dataclass(frozen=True)
class MDyckShape:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n, m >= 1, got n={self.n}, m={self.m}")

    @property
    def nu(self) -> LatticePath:
        return m_dyck_nu(self.n, self.m)

    def lowered(self) -> "MDyckShape":
        return MDyckShape(self.n, self.m - 1)


def m_dyck_nu(n: int, m: int) -> LatticePath:
    return LatticePath(("N" + "E" * m) * n)


def _shape_of(nu: LatticePath) -> MDyckShape:
    n = nu.n_north
    if n == 0 or nu.n_east % n or nu.word != ("N" + "E" * (nu.n_east // n)) * n:
        raise PathError(f"{nu.word} is not of the form (NE^m)^n")
    return MDyckShape(n, nu.n_east // n)


def _shape_m2(d: NuDyckPath) -> MDyckShape:
    shape = _shape_of(d.nu)
    if shape.m < 2:
        raise MNotAtLeastTwo(f"m = {shape.m}; the target would need m - 1 >= 1")
    return shape


# -- out-degree side ----------------------------------------------------------


def d_minus(d: NuDyckPath) -> NuDyckPath:
    """Subtract the left area vector of the maximal staircase from ``d``."""
    xi = staircase_algorithm(d.nu).xi
    la = tuple(a - b for a, b in zip(d.la, xi.la))
    if any(v < 0 for v in la) or any(a > b for a, b in zip(la, la[1:])):
        raise NotInMaxOutSet(f"{d.word} minus {xi.word} is not an area vector")
    return path_from_left_area(la, d.nu)


def phi_out(d: NuDyckPath) -> NuDyckPath:
    shape = _shape_m2(d)
    if _out_degree(d.word) != shape.n - 1:
        raise NotInMaxOutSet(f"{d.word} does not have maximal out-degree {shape.n - 1}")
    return path_from_left_area(d_minus(d).la, shape.lowered().nu)


def phi_out_inverse(x: NuDyckPath, m: Optional[int] = None) -> NuDyckPath:
    """Add the staircase ``(0, 1, ..., n-1)`` back; the target is ``(NE^(m'+1))^n``."""
    shape = _shape_of(x.nu)
    target = m_dyck_nu(shape.n, shape.m + 1 if m is None else m)
    return path_from_left_area(tuple(v + k for k, v in enumerate(x.la)), target)


# -- in-degree side -----------------------------------------------------------


def hat_subtractions(d: NuDyckPath) -> tuple[int, ...]:
    """Per row, how many hit points lie strictly left of ``r_i``."""
    hit_x = sorted(d.word.count("E", 0, h) for _r, _t, h in d.rows)
    out = []
    for x in d.la:
        out.append(sum(1 for hx in hit_x if hx < x))
    return tuple(out)


def hat(d: NuDyckPath) -> NuDyckPath:
    la = tuple(a - s for a, s in zip(d.la, hat_subtractions(d)))
    return path_from_left_area(la, d.nu)


def phi_in(d: NuDyckPath) -> NuDyckPath:
    shape = _shape_m2(d)
    if _in_degree(d.word, d.nu.bounds) != shape.n - 1:
        raise NotInMaxInSet(f"{d.word} does not have maximal in-degree {shape.n - 1}")
    return path_from_left_area(hat(d).la, shape.lowered().nu)


def phi_in_inverse(x: NuDyckPath) -> NuDyckPath:
    """Rebuild the maximal in-degree path by re-inserting one east step per row.

    Going from the top row down, the path gains an east step right after its
    hit point ``h_(i-1)`` (computed over the current nu), and nu gains an
    east step in row ``i``.
    """
    shape = _shape_of(x.nu)
    n = shape.n
    nu_la = list(x.nu.left_area)
    n_east = x.nu.n_east
    word = x.word
    for i in range(n + 1, 1, -1):
        bounds = tuple(nu_la) + (n_east,)
        h = list(_row_positions(word, bounds))[i - 2][2]
        word = word[:h] + "E" + word[h:]
        for k in range(i - 1, n):
            nu_la[k] += 1
        n_east += 1
    return NuDyckPath(m_dyck_nu(n, shape.m + 1), LatticePath(word))


# -- pi embedding -------------------------------------------------------------


def pi_embed(d: NuDyckPath) -> NuDyckPath:
    shape = _shape_of(d.nu)
    word = d.word.replace("N", "N" * shape.m)
    nu = LatticePath("NE" * (shape.n * shape.m))
    return NuDyckPath._trusted(nu, word)


def pi_inverse(d: NuDyckPath, m: int) -> NuDyckPath:
    """Collapse each block of ``m`` consecutive rows back to one row."""
    la = d.la
    if m < 1 or len(la) % m:
        raise NotInImage(f"height {len(la)} is not a multiple of m = {m}")
    blocks = [la[k : k + m] for k in range(0, len(la), m)]
    if any(len(set(b)) != 1 for b in blocks):
        raise NotInImage(f"{d.word} is not pi of an {m}-Dyck path")
    n = len(blocks)
    return path_from_left_area(tuple(b[0] for b in blocks), m_dyck_nu(n, m))


def _check_embedded(d: NuDyckPath, n: int, m: int) -> None:
    if d.nu.word != "NE" * (n * m):
        raise NotInEmbeddedMaxInSet(f"{d.nu.word} is not (NE)^{n * m}")
    try:
        pre = pi_inverse(d, m)
    except (NotInImage, PathError) as exc:
        raise NotInEmbeddedMaxInSet(str(exc)) from None
    if _in_degree(pre.word, pre.nu.bounds) != n - 1:
        raise NotInEmbeddedMaxInSet(f"pi^-1({d.word}) does not have maximal in-degree")


def _row_info(word: str, k: int) -> tuple[int, int]:
    """``(r_k, h_k)`` word positions for a Dyck path."""
    bounds = tuple(range(word.count("N"))) + (word.count("E"),)
    r, _t, h = list(_row_positions(word, bounds))[k - 1]
    return r, h


def _drop_east_after(word: str, h: int) -> str:
    if h == len(word):
        if word[-1] != "E":
            raise PathError(f"{word} does not end with an east step")
        return word[:-1]
    return word[:h] + word[h + 1:]


def bar_phi_iterates(d: NuDyckPath, m: int, n: int, variant: str = "east") -> list[str]:
    """The words ``D^0, ..., D^n`` of the iterative bar-phi loop."""
    if variant not in ("east", "ne"):
        raise ValueError(f"unknown variant {variant!r}")
    _check_embedded(d, n, m)
    words = [d.word]
    word = d.word
    for i in range(n):
        if variant == "east":
            _r, h = _row_info(word, i * m + 1)
            word = _drop_east_after(word, h) + "E"
        else:
            # the (NE)^i tail is finished; hit points are taken on the prefix,
            # whose endpoint counts as a hit just like a path's final point
            prefix = word[: len(word) - 2 * i]
            k = i * m - i + 1
            r, h = _row_info(prefix, k)
            prefix = _drop_east_after(prefix, h)
            word = prefix[:r] + prefix[r + 1:] + "NE" * (i + 1)
        words.append(word)
    return words


def bar_phi(d: NuDyckPath, m: int, n: int, variant: str = "east") -> NuDyckPath:
    """``pi . phi_in . pi^-1`` computed directly on height-mn Dyck paths."""
    if m < 2:
        raise MNotAtLeastTwo(f"m = {m}")
    last = bar_phi_iterates(d, m, n, variant)[-1]
    if variant == "east":
        if not last.endswith("E" * n):
            raise PathError(f"{last} does not end in E^{n}")
        la = _left_area(last[: len(last) - n])
        la = tuple(v for k, v in enumerate(la) if k % m != 0)
    else:
        if not last.endswith("NE" * n):
            raise PathError(f"{last} does not end in (NE)^{n}")
        la = _left_area(last[: len(last) - 2 * n])
    height = (m - 1) * n
    return path_from_left_area(la, LatticePath("NE" * height))


def bijection_record(n: int, m: int, direction: str, ok: bool, witness=None) -> dict:
    if isinstance(witness, NuDyckPath):
        witness = witness.word
    elif isinstance(witness, tuple):
        witness = [w.word if isinstance(w, NuDyckPath) else w for w in witness]
    return {"nm": [n, m], "direction": direction, "ok": bool(ok), "witness": witness}

