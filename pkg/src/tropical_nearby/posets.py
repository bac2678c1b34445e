"""Finite posets with their Möbius functions and Stanley G-polynomials."""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import NotEulerian, NotGraded, UnknownElement, ValidationError
from .exact_math import UnivarPoly

_T_MINUS_1 = UnivarPoly.from_coeffs([-1, 1])


class FinitePoset:
    """Poset on ``0..n-1`` generated by a list of relations ``lo < hi``.

    The relations need not be covers; the order is their reflexive-transitive
    closure.  ``labels`` optionally names the elements (an interval keeps the
    labels of its parent so callers can map back).
    """

    def __init__(self, n: int, relations: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None):
        self.n = int(n)
        self.labels = list(labels) if labels is not None else list(range(self.n))
        if len(self.labels) != self.n:
            raise ValidationError("label list does not match the number of elements")
        up = [set() for _ in range(self.n)]
        for lo, hi in relations:
            self._check(lo)
            self._check(hi)
            if lo == hi:
                continue
            up[lo].add(hi)
        order = self._toposort(up)
        below = [set([i]) for i in range(self.n)]
        for x in order:
            for y in up[x]:
                below[y] |= below[x]
        self._below = [frozenset(b) for b in below]
        self._above = [frozenset(y for y in range(self.n) if x in self._below[y]) for x in range(self.n)]
        self.covers = sorted(
            (x, y)
            for y in range(self.n)
            for x in self._below[y]
            if x != y and len(self._below[y] & self._above[x]) == 2
        )
        self._lower_covers = [[] for _ in range(self.n)]
        for x, y in self.covers:
            self._lower_covers[y].append(x)
        self._mobius: dict = {}
        self._g: dict = {}
        self._rank = None

    def _check(self, x):
        if not (isinstance(x, int) and 0 <= x < self.n):
            raise UnknownElement(f"no element {x!r} in a poset of size {self.n}")

    def _toposort(self, up):
        indeg = [0] * self.n
        for x in range(self.n):
            for y in up[x]:
                indeg[y] += 1
        stack = [x for x in range(self.n) if indeg[x] == 0]
        order = []
        while stack:
            x = stack.pop()
            order.append(x)
            for y in up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        if len(order) != self.n:
            raise ValidationError("relations contain a cycle; not a partial order")
        return order

    # order queries -------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        return x in self._below[y]

    def down(self, y: int) -> frozenset:
        return self._below[y]

    def up(self, x: int) -> frozenset:
        return self._above[x]

    def minimal(self) -> list[int]:
        return [x for x in range(self.n) if len(self._below[x]) == 1]

    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if len(self._above[x]) == 1]

    @property
    def bottom(self) -> int | None:
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    @property
    def top(self) -> int | None:
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    # grading ---------------------------------------------------------------

    @property
    def rank(self) -> dict[int, int] | None:
        """Rank function if the poset is graded (all covers raise rank by one
        and all maximal elements share a rank), else ``None``."""
        if self._rank is None:
            order = sorted(range(self.n), key=lambda x: len(self._below[x]))
            rk = {}
            for x in order:
                rk[x] = max((rk[z] + 1 for z in self._lower_covers[x]), default=0)
            graded = all(rk[y] == rk[x] + 1 for x, y in self.covers)
            tops = {rk[x] for x in self.maximal()}
            self._rank = rk if graded and len(tops) <= 1 else False
        return self._rank or None

    def is_graded(self) -> bool:
        return self.rank is not None

    def height(self) -> int:
        rk = self.rank
        if rk is None:
            raise NotGraded("poset is not graded")
        return max(rk.values(), default=0)

    # Möbius function ---------------------------------------------------------

    def mobius(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        key = (x, y)
        if key in self._mobius:
            return self._mobius[key]
        if x == y:
            val = 1
        elif x not in self._below[y]:
            val = 0
        else:
            val = -sum(self.mobius(x, z) for z in self._below[y] if z != y and x in self._below[z])
        self._mobius[key] = val
        return val

    # constructions -----------------------------------------------------------

    def interval(self, x: int, y: int) -> "FinitePoset":
        if not self.leq(x, y):
            raise ValidationError(f"{x} is not below {y}")
        elems = sorted(z for z in self._below[y] if x in self._below[z])
        index = {z: i for i, z in enumerate(elems)}
        rel = [(index[a], index[b]) for a, b in self.covers if a in index and b in index]
        return FinitePoset(len(elems), rel, [self.labels[z] for z in elems])

    def open_interval(self, x: int, y: int) -> "FinitePoset":
        elems = sorted(z for z in self._below[y] if x in self._below[z] and z not in (x, y))
        index = {z: i for i, z in enumerate(elems)}
        rel = [(index[a], index[b]) for a, b in self.covers if a in index and b in index]
        return FinitePoset(len(elems), rel, [self.labels[z] for z in elems])

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.n, [(b, a) for a, b in self.covers], self.labels)

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.n == other.n and self._below == other._below and self.labels == other.labels

    def __repr__(self):
        return f"FinitePoset(n={self.n}, covers={self.covers})"

    # Eulerian posets and G ---------------------------------------------------

    def _require_bounded_graded(self):
        rk = self.rank
        if rk is None or self.bottom is None or self.top is None:
            raise NotGraded("expected a graded poset with a minimum and a maximum")
        return rk

    def g_interval(self, x: int, y: int) -> UnivarPoly:
        """G-polynomial of the interval ``[x, y]`` (assumed Eulerian)."""
        key = (x, y)
        if key in self._g:
            return self._g[key]
        rk = self.rank
        n = rk[y] - rk[x]
        if n == 0:
            val = UnivarPoly.from_coeffs([1])
        else:
            acc = UnivarPoly()
            for z in self._above[x]:
                if z != x and z in self._below[y]:
                    acc = acc + _T_MINUS_1 ** (rk[z] - rk[x]) * self.g_interval(z, y)
            val = -acc.truncate_below(n / 2)
        self._g[key] = val
        return val

    def g_polynomial(self) -> UnivarPoly:
        if not is_eulerian(self):
            raise NotEulerian("G-polynomial requires an Eulerian poset")
        return self.g_interval(self.bottom, self.top)


def is_eulerian(poset: FinitePoset) -> bool:
    rk = poset._require_bounded_graded()
    for y in range(poset.n):
        for x in poset.down(y):
            if poset.mobius(x, y) != (-1) ** (rk[y] - rk[x]):
                return False
    return True


def mobius(poset: FinitePoset, x: int, y: int) -> int:
    return poset.mobius(x, y)


def g_polynomial(poset: FinitePoset) -> UnivarPoly:
    return poset.g_polynomial()


def dual(poset: FinitePoset) -> FinitePoset:
    return poset.dual()


def mobius_inversion_check(
    poset: FinitePoset,
    h: Mapping[int, int] | Callable[[int], int],
    g: Mapping[int, int] | None = None,
) -> bool:
    """Check ``h(z) = sum_{y<=z} mu(y,z) g(y)`` where ``g(y) = sum_{x<=y} h(x)``.

    Passing ``g`` explicitly replaces the summed table, which lets callers
    test a corrupted table.
    """
    hf = h if callable(h) else (lambda x: h.get(x, 0))
    if g is None:
        g = {y: sum(hf(x) for x in poset.down(y)) for y in range(poset.n)}
    return all(
        hf(z) == sum(poset.mobius(y, z) * g.get(y, 0) for y in poset.down(z))
        for z in range(poset.n)
    )


def order_complex_reduced_euler(poset: FinitePoset) -> int:
    """Reduced Euler characteristic of the order complex (chains of the poset)."""
    # chains[x][k]: chains with top element x and k+1 elements
    order = sorted(range(poset.n), key=lambda x: len(poset.down(x)))
    chains: dict[int, list[int]] = {}
    for x in order:
        counts = [1]
        for z in poset.down(x):
            if z == x:
                continue
            for k, c in enumerate(chains[z]):
                if k + 1 >= len(counts):
                    counts.append(0)
                counts[k + 1] += c
        chains[x] = counts
    total = -1
    for counts in chains.values():
        total += sum((-1) ** k * c for k, c in enumerate(counts))
    return total


# ---------------------------------------------------------------------------
# standard examples
# ---------------------------------------------------------------------------


def boolean_algebra(r: int) -> FinitePoset:
    """Subsets of an ``r``-element set ordered by inclusion (bitmask labels)."""
    n = 1 << r
    rel = [(s, s | (1 << i)) for s in range(n) for i in range(r) if not s & (1 << i)]
    return FinitePoset(n, rel)


def chain(k: int) -> FinitePoset:
    return FinitePoset(k, [(i, i + 1) for i in range(k - 1)])


def poset_from_json(obj: Mapping) -> FinitePoset:
    try:
        return FinitePoset(int(obj["elements"]), [tuple(c) for c in obj["covers"]])
    except (KeyError, TypeError, ValueError) as exc:
        from .errors import ParseError

        raise ParseError(f"bad poset encoding: {exc}") from exc


def all_intervals(poset: FinitePoset):
    for x, y in itertools.product(range(poset.n), repeat=2):
        if poset.leq(x, y):
            yield x, y
