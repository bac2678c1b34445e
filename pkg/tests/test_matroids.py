import itertools
import json
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import matroid_corpus
from tropical_nearby.errors import InvalidMatroid, LoopError, NotAFlat, ParseError
from tropical_nearby.exact_math import UnivarPoly
from tropical_nearby.matroids import (
    Matroid,
    bergman_fan,
    char_poly,
    classical_char_poly,
    complement_class,
    complement_euler,
    count_maximal_flags,
    flats,
    mobius_via_link,
    rank_two,
)

CORPUS = matroid_corpus()
NAMES = sorted(CORPUS)


def q(*cs):
    return UnivarPoly.from_coeffs(cs, "q")


def L(*cs):
    return UnivarPoly.from_coeffs(cs, "L")


def brute_rank(M, S):
    return max(len(set(S) & set(b)) for b in M.to_json()["bases"])


def brute_flats(M):
    E = range(M.ground)
    out = []
    for k in range(M.ground + 1):
        for S in itertools.combinations(E, k):
            r = brute_rank(M, S)
            if all(brute_rank(M, S + (e,)) > r for e in E if e not in S):
                out.append(frozenset(S))
    return out


def brute_mobius_from_bottom(fl):
    mu = {}
    for F in sorted(fl, key=len):
        below = [G for G in fl if G < F]
        mu[F] = 1 if not below else -sum(mu[G] for G in below)
    return mu


# examples ------------------------------------------------------------------


def test_flats_examples():
    assert sorted(map(sorted, flats(Matroid.uniform(2, 3)).as_sets())) == [[], [0], [0, 1, 2], [1], [2]]
    assert flats(Matroid.uniform(1, 1)).as_sets() == [frozenset(), frozenset({0})]
    assert len(flats(Matroid.uniform(3, 3))) == 8


def test_char_poly_examples():
    for s in range(2, 8):
        assert char_poly(rank_two(s)) == q(-s, 1)
        assert complement_class(rank_two(s)) == L(1 - s, 1)
    assert char_poly(Matroid.uniform(1, 1)) == q(1)
    assert char_poly(Matroid.uniform(3, 3)) == q(3, -3, 1)
    assert complement_class(Matroid.uniform(2, 3)) == L(-2, 1)
    assert complement_class(Matroid.uniform(1, 1)) == L(1)


def test_bergman_examples():
    B = bergman_fan(Matroid.uniform(2, 3))
    assert len(B.ray_flats) == 3
    assert all(len(c) <= 1 for c in B.cones)
    B3 = bergman_fan(Matroid.uniform(3, 3))
    assert len(B3.maximal_cones()) == 6
    assert all(len(B3.cone_flats(c)[0]) == 1 and len(B3.cone_flats(c)[1]) == 2 for c in B3.maximal_cones())
    B1 = bergman_fan(Matroid.uniform(1, 1))
    assert B1.ray_flats == [] and B1.cones == [()]


def test_bergman_rays_sum_in_quotient():
    # e_0 is minus the sum of the other basis vectors in Z^{n+1}/(1,...,1)
    B = bergman_fan(Matroid.uniform(2, 4))
    total = [0] * 3
    for F in B.ray_flats:
        total = [a + b for a, b in zip(total, B.ray_vector(F))]
    assert total == [0, 0, 0]


def test_mobius_via_link_examples():
    assert mobius_via_link(Matroid.uniform(2, 3), {0}) == -1
    assert mobius_via_link(Matroid.uniform(3, 3), {0, 1}) == 1
    M = CORPUS["Fano"]
    for atom in range(7):
        assert mobius_via_link(M, {atom}) == -1
    with pytest.raises(NotAFlat):
        mobius_via_link(Matroid.uniform(3, 4), {0, 1, 2})
    with pytest.raises(NotAFlat):
        mobius_via_link(Matroid.uniform(3, 4), set())


def test_errors():
    with pytest.raises(InvalidMatroid):
        Matroid(4, [[0, 1], [2, 3]])
    with pytest.raises(LoopError):
        complement_class(Matroid(2, [[0]]))
    with pytest.raises(ParseError):
        Matroid.from_json({"ground": 3})


def test_json_round_trip():
    for M in CORPUS.values():
        assert Matroid.from_json(json.loads(json.dumps(M.to_json()))) == M
    assert Matroid.from_json({"uniform": [2, 4]}) == Matroid.uniform(2, 4)
    assert Matroid.from_json({"graph": [[0, 1], [1, 2], [0, 2]]}) == Matroid.uniform(2, 3)


# corpus against brute force ------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_flats_and_mobius_brute(name):
    M = CORPUS[name]
    fl = brute_flats(M)
    FL = flats(M)
    assert sorted(map(sorted, FL.as_sets())) == sorted(map(sorted, fl))
    mu = brute_mobius_from_bottom(fl)
    for F, m in zip(FL.as_sets(), (FL.mobius0[f] for f in FL.flats)):
        assert mu[F] == m


@pytest.mark.parametrize("name", NAMES)
def test_link_lemma(name):
    M = CORPUS[name]
    FL = flats(M)
    for F in FL.flats:
        if M.rank(F) > 0:
            assert mobius_via_link(M, F) == FL.mobius0[F]


@pytest.mark.parametrize("name", NAMES)
def test_char_poly_relations(name):
    M = CORPUS[name]
    chi = char_poly(M)
    FL = flats(M)
    classical = classical_char_poly(M)
    assert chi.degree == M.d and chi.coeff(M.d) == 1
    assert classical == q(0, 1) * chi + FL.mobius0[M.full_mask]
    if not M.loops():
        cls = complement_class(M)
        assert cls.rename("q") * q(-1, 1) == classical
        assert int(cls(1)) == complement_euler(M) == int(chi(1)) + int(chi.derivative()(1))


@pytest.mark.parametrize("r, n", [(1, 1), (2, 3), (2, 5), (3, 5), (3, 6), (4, 7), (3, 9)])
def test_uniform_classical_formula(r, n):
    expected = sum(((-1) ** i * comb(n, i) * (q(*([0] * (r - i) + [1])) - 1) for i in range(r)), q())
    assert classical_char_poly(Matroid.uniform(r, n)) == expected


def _colorings(vertices, edges, k):
    return sum(
        all(c[a] != c[b] for a, b in edges)
        for c in itertools.product(range(k), repeat=vertices)
    )


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (3, [(0, 1), (0, 1), (1, 2), (0, 2)]),
        (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        (5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
    ],
)
def test_graphic_matches_chromatic_polynomial(vertices, edges):
    M = Matroid.graphic(edges)
    classical = classical_char_poly(M)
    components = vertices - M.full_rank
    for k in range(1, 6):
        assert _colorings(vertices, edges, k) == k**components * classical(k)


@pytest.mark.parametrize("name", NAMES)
def test_bergman_structure(name):
    M = CORPUS[name]
    B = bergman_fan(M)
    assert B.is_closed_under_subchains()
    assert len(B.maximal_cones()) == count_maximal_flags(M)
    for c in B.maximal_cones():
        assert len(c) == M.d
        fl = B.cone_flats(c)
        assert all(a < b for a, b in zip(fl, fl[1:]))
    # every cone extends to a maximal one
    maxes = [set(c) for c in B.maximal_cones()]
    assert all(any(set(c) <= m for m in maxes) for c in B.cones)


def test_uniform_flag_counts():
    for r, n in [(2, 5), (3, 6), (4, 7)]:
        assert count_maximal_flags(Matroid.uniform(r, n)) == factorial(n) // factorial(n - r + 1)
    assert count_maximal_flags(CORPUS["Fano"]) == 21


# random matroids: truncations of uniform and of graphic matroids ------------------


@st.composite
def random_graphs(draw):
    n = draw(st.integers(2, 5))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=7))
    return n, edges


@settings(max_examples=40, deadline=None)
@given(random_graphs())
def test_rank_axioms_on_graphic(graph):
    n, edges = graph
    M = Matroid.graphic(edges)
    E = range(M.ground)
    subsets = [frozenset(s) for k in range(M.ground + 1) for s in itertools.combinations(E, k)]
    for S in subsets[:64]:
        r = M.rank(S)
        assert 0 <= r <= len(S)
        assert r == brute_rank(M, S)
        for T in subsets[:64]:
            assert M.rank(S | T) + M.rank(S & T) <= r + M.rank(T)
            if S <= T:
                assert r <= M.rank(T)
    assert M.rank(frozenset(E)) == M.d + 1


@settings(max_examples=30, deadline=None)
@given(random_graphs())
def test_link_lemma_random(graph):
    n, edges = graph
    M = Matroid.graphic(edges)
    FL = flats(M)
    for F in FL.flats:
        if M.rank(F) > 0:
            assert mobius_via_link(M, F) == FL.mobius0[F]
    if not M.loops():
        assert complement_class(M).rename("q") * q(-1, 1) == classical_char_poly(M)
