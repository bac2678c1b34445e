"""Matroids with their lattices of flats and Bergman fans.

Subsets of the ground set ``{0, ..., n}`` are stored as bitmasks throughout.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidMatroid, LoopError, NotAFlat, ParseError
from .exact_math import UnivarPoly, exact_divide
from .posets import FinitePoset, order_complex_reduced_euler


def _mask(s: Iterable[int]) -> int:
    m = 0
    for i in s:
        m |= 1 << i
    return m


def _elems(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _popcount(m: int) -> int:
    return bin(m).count("1")


class Matroid:
    """Matroid on ``range(ground)`` given by its bases."""

    def __init__(self, ground: int, bases: Iterable[Iterable[int]], validate: bool = True):
        self.ground = int(ground)
        if self.ground < 0:
            raise InvalidMatroid("ground set size must be non-negative")
        masks = set()
        for b in bases:
            b = list(b)
            if any(not (isinstance(x, int) and 0 <= x < self.ground) for x in b):
                raise InvalidMatroid(f"basis {b} is not a subset of the ground set")
            if len(set(b)) != len(b):
                raise InvalidMatroid(f"basis {b} repeats an element")
            masks.add(_mask(b))
        if not masks:
            raise InvalidMatroid("a matroid needs at least one basis")
        sizes = {_popcount(m) for m in masks}
        if len(sizes) != 1:
            raise InvalidMatroid("bases have different sizes")
        self.bases = frozenset(masks)
        self.full_rank = sizes.pop()
        if validate:
            self._check_exchange()
        self._rank_cache: dict[int, int] = {}

    def _check_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in _elems(b1 & ~b2):
                    base = b1 & ~(1 << x)
                    if not any(base | (1 << y) in self.bases for y in _elems(b2 & ~b1)):
                        raise InvalidMatroid(
                            f"basis exchange fails for {_elems(b1)}, {_elems(b2)} at element {x}"
                        )

    # constructors ------------------------------------------------------------

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        if not 0 <= r <= n:
            raise InvalidMatroid(f"U({r},{n}) needs 0 <= r <= n")
        return cls(n, itertools.combinations(range(n), r), validate=False)

    @classmethod
    def graphic(cls, edges: Sequence[Sequence[int]]) -> "Matroid":
        """Cycle matroid of a multigraph; ground element ``i`` is edge ``i``."""
        edges = [tuple(e) for e in edges]
        vertices = sorted({v for e in edges for v in e})

        def is_forest(sub):
            parent = {v: v for v in vertices}

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            for i in sub:
                a, b = find(edges[i][0]), find(edges[i][1])
                if a == b:
                    return False
                parent[a] = b
            return True

        for r in range(len(vertices), -1, -1):
            bases = [s for s in itertools.combinations(range(len(edges)), r) if is_forest(s)]
            if bases:
                return cls(len(edges), bases, validate=False)
        return cls(len(edges), [()], validate=False)

    @classmethod
    def from_json(cls, obj: Mapping) -> "Matroid":
        try:
            if "uniform" in obj:
                r, n = obj["uniform"]
                return cls.uniform(int(r), int(n))
            if "graph" in obj:
                return cls.graphic(obj["graph"])
            return cls(int(obj["ground"]), obj["bases"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad matroid encoding: {exc}") from exc

    def to_json(self) -> dict:
        return {"ground": self.ground, "bases": sorted(_elems(b) for b in self.bases)}

    def __repr__(self):
        return f"Matroid(ground={self.ground}, rank={self.full_rank}, bases={len(self.bases)})"

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return hash((self.ground, self.bases))

    # rank and closure ----------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.ground) - 1

    @property
    def d(self) -> int:
        """Rank minus one (dimension of the projective linear space)."""
        return self.full_rank - 1

    def rank(self, subset) -> int:
        m = subset if isinstance(subset, int) else _mask(subset)
        r = self._rank_cache.get(m)
        if r is None:
            r = max(_popcount(m & b) for b in self.bases)
            self._rank_cache[m] = r
        return r

    def closure(self, subset) -> int:
        m = subset if isinstance(subset, int) else _mask(subset)
        r = self.rank(m)
        for e in range(self.ground):
            if not m >> e & 1 and self.rank(m | (1 << e)) == r:
                m |= 1 << e
        return m

    def is_flat(self, subset) -> bool:
        m = subset if isinstance(subset, int) else _mask(subset)
        return self.closure(m) == m

    def loops(self) -> list[int]:
        return _elems(self.closure(0))

    @cached_property
    def flat_lattice(self) -> "FlatLattice":
        return FlatLattice(self)


class FlatLattice:
    """Flats ordered by inclusion, bottom (the closure of the empty set) first."""

    def __init__(self, M: Matroid):
        self.matroid = M
        bottom = M.closure(0)
        seen = {bottom}
        frontier = [bottom]
        covers = set()
        while frontier:
            nxt = []
            for F in frontier:
                for e in range(M.ground):
                    if not F >> e & 1:
                        G = M.closure(F | (1 << e))
                        covers.add((F, G))
                        if G not in seen:
                            seen.add(G)
                            nxt.append(G)
            frontier = nxt
        self.flats = sorted(seen, key=lambda f: (M.rank(f), _elems(f)))
        self.index = {f: i for i, f in enumerate(self.flats)}
        self.ranks = [M.rank(f) for f in self.flats]
        self.poset = FinitePoset(
            len(self.flats), [(self.index[a], self.index[b]) for a, b in covers], [tuple(_elems(f)) for f in self.flats]
        )
        self.bottom = 0
        self.top = self.index[M.full_mask]
        self.mobius0 = {f: self.poset.mobius(self.bottom, i) for i, f in enumerate(self.flats)}

    def __len__(self):
        return len(self.flats)

    def as_sets(self) -> list[frozenset]:
        return [frozenset(_elems(f)) for f in self.flats]

    def proper(self) -> list[int]:
        return [f for f in self.flats if f != self.matroid.full_mask]

    def nonempty_proper(self) -> list[int]:
        return [f for f in self.flats if f not in (self.flats[self.bottom], self.matroid.full_mask)]

    def covers_of(self, F: int) -> list[int]:
        i = self.index[F]
        return [self.flats[y] for x, y in self.poset.covers if x == i]


def flats(M: Matroid) -> FlatLattice:
    return M.flat_lattice


def char_poly(M: Matroid) -> UnivarPoly:
    """``sum mu(0, I) q^(d - r(I))`` over proper flats ``I``."""
    L = M.flat_lattice
    d = M.d
    terms: dict = {}
    for F in L.proper():
        e = d - M.rank(F)
        terms[(e,)] = terms.get((e,), 0) + L.mobius0[F]
    return UnivarPoly(terms, ("q",))


def classical_char_poly(M: Matroid) -> UnivarPoly:
    """``sum mu(0, I) q^(r(E) - r(I))`` over all flats (the textbook
    characteristic polynomial)."""
    L = M.flat_lattice
    terms: dict = {}
    for F in L.flats:
        e = M.full_rank - M.rank(F)
        terms[(e,)] = terms.get((e,), 0) + L.mobius0[F]
    return UnivarPoly(terms, ("q",))


def complement_class(M: Matroid) -> UnivarPoly:
    """Class of the projective hyperplane-arrangement complement as a
    polynomial in ``L``: ``(L chi(L) - chi(1)) / (L - 1)``."""
    if M.loops():
        raise LoopError(f"matroid has loops {M.loops()}; the arrangement complement is empty")
    chi = char_poly(M).rename("L")
    Lg = UnivarPoly.gen("L")
    num = Lg * chi - int(chi(1))
    return exact_divide(num, Lg - 1)


def complement_euler(M: Matroid) -> int:
    """``chi(1) + chi'(1)``, the Euler characteristic of the complement."""
    chi = char_poly(M)
    return int(chi(1)) + int(chi.derivative()(1))


# ---------------------------------------------------------------------------
# Bergman fans
# ---------------------------------------------------------------------------


class BergmanFan:
    """Fine subdivision of the Bergman fan: one ray per flat strictly
    between bottom and top, one cone per chain of such flats.

    Ray vectors live in ``Z^(n+1)/(1,...,1)`` written in the coordinates
    ``e_1..e_n`` (so ``e_0 = -(e_1 + ... + e_n)``).
    """

    def __init__(self, M: Matroid):
        self.matroid = M
        L = M.flat_lattice
        self.ray_flats = L.nonempty_proper()
        self.rays = {F: self.ray_vector(F) for F in self.ray_flats}
        self._pos = {F: i for i, F in enumerate(self.ray_flats)}
        comparable = {
            (a, b) for a in self.ray_flats for b in self.ray_flats if a != b and (a & b in (a, b))
        }
        cones = [()]
        frontier = [()]
        while frontier:
            nxt = []
            for c in frontier:
                start = c[-1] + 1 if c else 0
                for j in range(start, len(self.ray_flats)):
                    F = self.ray_flats[j]
                    if all((self.ray_flats[i], F) in comparable for i in c):
                        nxt.append(c + (j,))
            cones.extend(nxt)
            frontier = nxt
        # ray_flats are sorted by rank so index order within a cone is a flag
        self.cones = cones

    def ray_vector(self, F: int) -> tuple[int, ...]:
        n = self.matroid.ground - 1
        v = [0] * n
        for i in _elems(F):
            if i == 0:
                v = [x - 1 for x in v]
            else:
                v[i - 1] += 1
        return tuple(v)

    @property
    def ambient_dim(self) -> int:
        return self.matroid.ground - 1

    @property
    def dim(self) -> int:
        return self.matroid.d

    def maximal_cones(self) -> list[tuple[int, ...]]:
        return [c for c in self.cones if len(c) == self.dim]

    def cone_flats(self, cone) -> list[frozenset]:
        return [frozenset(_elems(self.ray_flats[i])) for i in cone]

    def cone_rays(self, cone) -> list[tuple[int, ...]]:
        return [self.rays[self.ray_flats[i]] for i in cone]

    def is_closed_under_subchains(self) -> bool:
        s = set(self.cones)
        return all(sub in s for c in s for k in range(len(c)) for sub in itertools.combinations(c, k))

    def to_json(self) -> dict:
        return {
            "rays": [{"flat": _elems(F), "vector": list(self.rays[F])} for F in self.ray_flats],
            "cones": [list(c) for c in self.cones],
            "maximal": [list(c) for c in self.maximal_cones()],
        }


def bergman_fan(M: Matroid) -> BergmanFan:
    return BergmanFan(M)


def count_maximal_flags(M: Matroid) -> int:
    """Maximal chains bottom < F_1 < ... < top in the lattice of flats."""
    L = M.flat_lattice
    ways = {L.flats[L.bottom]: 1}
    for F in L.flats[1:]:
        i = L.index[F]
        ways[F] = sum(ways[L.flats[x]] for x, y in L.poset.covers if y == i)
    return ways[M.full_mask]


def mobius_via_link(M: Matroid, I) -> int:
    """``mu(0, I)`` as the reduced Euler characteristic of a link in the
    Bergman fan.

    The cone of a saturated flag ``I = F_k < F_(k+1) < ... < F_d`` running
    up to a coatom has, as its link, the order complex of the flats strictly
    between the bottom and ``I``.
    """
    mask = I if isinstance(I, int) else _mask(I)
    if not M.is_flat(mask):
        raise NotAFlat(f"{_elems(mask)} is not a flat")
    if M.rank(mask) == 0:
        raise NotAFlat("expected a flat of positive rank")
    L = M.flat_lattice
    fan = bergman_fan(M)
    flag = []
    F = mask
    while F != M.full_mask:
        flag.append(F)
        F = L.covers_of(F)[0]
    flag_idx = {fan._pos[G] for G in flag if G in fan._pos}
    # rays that extend the flag to a larger cone
    link_rays = [
        G for G in fan.ray_flats
        if fan._pos[G] not in flag_idx and all(G & H in (G, H) for H in flag)
    ]
    pos = {G: i for i, G in enumerate(link_rays)}
    rel = [(pos[a], pos[b]) for a in link_rays for b in link_rays if a != b and a & b == a]
    return order_complex_reduced_euler(FinitePoset(len(link_rays), rel))


def rank_two(s: int) -> Matroid:
    """Rank-two matroid with ``s`` parallel-free points (``U(2, s)``)."""
    return Matroid.uniform(2, s)
