"""Finite posets with bitset reachability, Hasse reduction and isomorphism search.

Elements are arbitrary hashable keys; internally everything is indexed by
position in ``elements``.  ``up[i]`` is a Python int whose bit ``j`` is set iff
``elements[i] <= elements[j]``.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Optional, Sequence

__all__ = [
    "FinitePoset",
    "PosetError",
    "CycleDetected",
    "SizeCapExceeded",
    "ElementNotInPoset",
    "MapNotBijective",
    "build_poset",
    "restrict",
    "is_isomorphic",
    "verify_order_iso",
]


class PosetError(Exception):
    pass


class CycleDetected(PosetError):
    pass


class SizeCapExceeded(PosetError):
    pass


class ElementNotInPoset(PosetError, KeyError):
    pass


class MapNotBijective(PosetError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reduce(up: Sequence[int]) -> list[tuple[int, int]]:
    """Transitive reduction of a reflexive-transitive relation given as bitsets."""
    strict = [m & ~(1 << i) for i, m in enumerate(up)]
    covers = []
    for i, s in enumerate(strict):
        shadow = 0
        for j in _bits(s):
            shadow |= strict[j]
        for j in _bits(s & ~shadow):
            covers.append((i, j))
    return covers


class FinitePoset:
    """An immutable finite poset.

    Build one with :meth:`from_cover_function` (or :func:`build_poset`) or
    :meth:`from_up_sets`; the constructor itself expects an already closed
    relation.
    """

    def __init__(self, elements: Sequence[Hashable], up: Sequence[int], generators=None):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("duplicate elements")
        self.up = tuple(up)
        self.covers = _reduce(self.up)
        # the edges the poset was generated from, when it came from a cover function
        self.generators = list(generators) if generators is not None else list(self.covers)
        self._down = None
        self._levels = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_cover_function(
        cls,
        elements: Iterable[Hashable],
        cover_fn: Callable[[Hashable], Iterable[Hashable]],
        max_size: Optional[int] = None,
    ) -> "FinitePoset":
        elements = list(elements)
        if max_size is not None and len(elements) > max_size:
            raise SizeCapExceeded(f"{len(elements)} elements exceeds cap {max_size}")
        index = {e: i for i, e in enumerate(elements)}
        succ = [[] for _ in elements]
        edges = []
        for i, e in enumerate(elements):
            for f in cover_fn(e):
                try:
                    j = index[f]
                except KeyError:
                    raise ElementNotInPoset(f"cover target {f!r} not among the elements") from None
                if j not in succ[i]:
                    succ[i].append(j)
                    edges.append((i, j))
        return cls(elements, _closure(succ), generators=edges)

    @classmethod
    def from_up_sets(cls, elements, up) -> "FinitePoset":
        return cls(elements, up)

    # -- queries ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, key) -> bool:
        return key in self.index

    def __iter__(self):
        return iter(self.elements)

    def _idx(self, key) -> int:
        try:
            return self.index[key]
        except KeyError:
            raise ElementNotInPoset(f"{key!r} not in poset") from None

    def leq(self, a, b) -> bool:
        return bool((self.up[self._idx(a)] >> self._idx(b)) & 1)

    def leq_index(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @property
    def down(self) -> tuple[int, ...]:
        if self._down is None:
            down = [0] * len(self)
            for i, m in enumerate(self.up):
                for j in _bits(m):
                    down[j] |= 1 << i
            self._down = tuple(down)
        return self._down

    def cover_pairs(self) -> list[tuple[Hashable, Hashable]]:
        return [(self.elements[i], self.elements[j]) for i, j in self.covers]

    def upper_covers(self, key) -> list:
        i = self._idx(key)
        return [self.elements[b] for a, b in self.covers if a == i]

    def lower_covers(self, key) -> list:
        i = self._idx(key)
        return [self.elements[a] for a, b in self.covers if b == i]

    def relation_count(self) -> int:
        """Number of pairs ``x <= y`` (reflexive pairs included)."""
        return sum(bin(m).count("1") for m in self.up)

    def minimal_elements(self) -> list:
        return [e for i, e in enumerate(self.elements) if self.down[i] == 1 << i]

    def maximal_elements(self) -> list:
        return [e for i, e in enumerate(self.elements) if self.up[i] == 1 << i]

    @property
    def levels(self) -> tuple[int, ...]:
        """Cover-steps on a longest chain from a minimal element."""
        if self._levels is None:
            lower = [[] for _ in self.elements]
            for a, b in self.covers:
                lower[b].append(a)
            # sorting by down-set size is a linear extension
            order = sorted(range(len(self)), key=lambda i: bin(self.down[i]).count("1"))
            lvl = [0] * len(self)
            for i in order:
                if lower[i]:
                    lvl[i] = 1 + max(lvl[a] for a in lower[i])
            self._levels = tuple(lvl)
        return self._levels

    def dual(self) -> "FinitePoset":
        """The same elements with the order reversed."""
        return FinitePoset(self.elements, self.down)

    # -- export -----------------------------------------------------------

    def to_dot(
        self,
        name: str = "poset",
        label: Callable[[Hashable], str] = str,
        edge_label: Optional[Callable[[Hashable, Hashable], Optional[str]]] = None,
    ) -> str:
        try:
            order = sorted(range(len(self)), key=lambda i: self.elements[i])
        except TypeError:
            order = list(range(len(self)))
        node_id = {i: f"n{k}" for k, i in enumerate(order)}
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        for i in order:
            lines.append(f'  {node_id[i]} [label="{label(self.elements[i])}"];')
        by_level = {}
        for i in order:
            by_level.setdefault(self.levels[i], []).append(node_id[i])
        for lvl in sorted(by_level):
            lines.append("  { rank=same; " + " ".join(by_level[lvl]) + "; }")
        pos = {i: k for k, i in enumerate(order)}
        for a, b in sorted(self.covers, key=lambda e: (pos[e[0]], pos[e[1]])):
            attr = ""
            if edge_label is not None:
                text = edge_label(self.elements[a], self.elements[b])
                if text is not None:
                    attr = f' [label="{text}"]'
            lines.append(f"  {node_id[a]} -> {node_id[b]}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _closure(succ: Sequence[Sequence[int]]) -> list[int]:
    n = len(succ)
    indeg = [0] * n
    for outs in succ:
        for j in outs:
            indeg[j] += 1
    stack = [i for i in range(n) if indeg[i] == 0]
    topo = []
    while stack:
        i = stack.pop()
        topo.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if len(topo) != n:
        raise CycleDetected("cover relation contains a cycle")
    up = [0] * n
    for i in reversed(topo):
        m = 1 << i
        for j in succ[i]:
            m |= up[j]
        up[i] = m
    return up


def build_poset(elements, cover_fn, max_size: Optional[int] = None) -> FinitePoset:
    return FinitePoset.from_cover_function(elements, cover_fn, max_size=max_size)


def restrict(poset: FinitePoset, keep: Iterable[Hashable]) -> FinitePoset:
    """Induced subposet on ``keep``; covers are recomputed, never filtered."""
    keep = set(keep)
    missing = [k for k in keep if k not in poset.index]
    if missing:
        raise ElementNotInPoset(f"{missing[0]!r} not in poset")
    old = [i for i, e in enumerate(poset.elements) if e in keep]
    new_of = {i: k for k, i in enumerate(old)}
    mask = 0
    for i in old:
        mask |= 1 << i
    up = []
    for i in old:
        m = 0
        for j in _bits(poset.up[i] & mask):
            m |= 1 << new_of[j]
        up.append(m)
    return FinitePoset([poset.elements[i] for i in old], up)


# -- isomorphism --------------------------------------------------------------


def _signatures(p: FinitePoset) -> list[tuple]:
    n_up = [0] * len(p)
    n_down = [0] * len(p)
    for a, b in p.covers:
        n_up[a] += 1
        n_down[b] += 1
    base = [
        (p.levels[i], n_down[i], n_up[i], bin(p.down[i]).count("1"), bin(p.up[i]).count("1"))
        for i in range(len(p))
    ]
    uppers = [[] for _ in range(len(p))]
    lowers = [[] for _ in range(len(p))]
    for a, b in p.covers:
        uppers[a].append(base[b])
        lowers[b].append(base[a])
    return [(base[i], tuple(sorted(uppers[i])), tuple(sorted(lowers[i]))) for i in range(len(p))]


def is_isomorphic(p: FinitePoset, q: FinitePoset, max_size: int = 5000) -> Optional[dict]:
    """Return an order isomorphism ``p -> q`` as a dict of keys, or ``None``."""
    if max(len(p), len(q)) > max_size:
        raise SizeCapExceeded(f"posets larger than {max_size} elements")
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None
    sp, sq = _signatures(p), _signatures(q)
    if Counter(sp) != Counter(sq):
        return None
    buckets = {}
    for j, s in enumerate(sq):
        buckets.setdefault(s, []).append(j)
    # rare signatures first, ties by level so neighbours get fixed early
    order = sorted(range(len(p)), key=lambda i: (len(buckets[sp[i]]), p.levels[i], i))
    image = [-1] * len(p)
    used = [False] * len(q)
    mapped: list[int] = []

    def consistent(i, j):
        ui, di = p.up[i], p.down[i]
        uj, dj = q.up[j], q.down[j]
        for a in mapped:
            b = image[a]
            if ((ui >> a) & 1) != ((uj >> b) & 1) or ((di >> a) & 1) != ((dj >> b) & 1):
                return False
        return True

    def search(k):
        if k == len(order):
            return True
        i = order[k]
        for j in buckets[sp[i]]:
            if used[j] or not consistent(i, j):
                continue
            image[i] = j
            used[j] = True
            mapped.append(i)
            if search(k + 1):
                return True
            mapped.pop()
            used[j] = False
            image[i] = -1
        return False

    if not search(0):
        return None
    return {p.elements[i]: q.elements[image[i]] for i in range(len(p))}


def verify_order_iso(p: FinitePoset, q: FinitePoset, mapping) -> tuple[bool, Optional[tuple]]:
    """Check ``x <= y  <=>  f(x) <= f(y)`` for all pairs.

    Returns ``(True, None)`` or ``(False, (x, y))`` for the first violating
    pair in element order.
    """
    f = mapping if callable(mapping) else mapping.__getitem__
    try:
        image = [q.index[f(e)] for e in p.elements]
    except KeyError as exc:
        raise MapNotBijective(f"image {exc.args[0]!r} is not an element of the codomain") from None
    if len(set(image)) != len(image) or len(image) != len(q):
        raise MapNotBijective("map is not a bijection onto the codomain")
    for i in range(len(p)):
        for j in range(len(p)):
            if p.leq_index(i, j) != q.leq_index(image[i], image[j]):
                return False, (p.elements[i], p.elements[j])
    return True, None
