import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphdef.certify import (
    validate_h_factor,
    validate_hamilton_cycle,
    validate_kr_factor,
    validate_spanning_copy,
)
from graphdef.constructions import RFactorParams, ex1_factor, ex2_band, ex2_factor, ex_h_prime
from graphdef.enumeration import enumerate_graphs
from graphdef.errors import GraphInputError
from graphdef.factors import (
    HAMILTON,
    KR,
    FactorCertificate,
    degree_sequence_condition,
    find_spanning_copy,
    h_factor,
    hajnal_szemeredi_guarantee,
    hamilton_cycle,
    kr_factor,
)
from graphdef.graph import (
    build,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
    star,
)
from oracles import contains_spanning, edge_set, h_factor_oracle, hamilton_oracle, kr_oracle
from strategies import graphs


def test_k6_two_triangles():
    cert = kr_factor(complete(6), 3)
    assert cert.kind == KR
    assert cert.tiles == ((0, 1, 2), (3, 4, 5))


def test_ex1_9_0_3_has_no_triangle_factor():
    assert kr_factor(ex1_factor(RFactorParams(9, 0, 3)), 3) is None


def test_k33_is_triangle_free():
    k33 = build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)])
    assert kr_factor(k33, 3) is None
    assert kr_factor(complete_bipartite(3, 3), 3) is None


def test_joined_ex1_9_3_3_has_no_factor():
    g = join(ex1_factor(RFactorParams(9, 3, 3)), 3)
    assert kr_factor(g, 3) is None
    assert not kr_oracle(g.n, edge_set(g), 3)


def test_kr_divisibility():
    assert kr_factor(complete(7), 3) is None
    with pytest.raises(ValueError):
        kr_factor(complete(4), 1)


def test_kr_is_deterministic_lowest_first():
    cert = kr_factor(cycle(6), 2)
    assert cert.tiles == ((0, 1), (2, 3), (4, 5))


@given(graphs(max_n=9), st.sampled_from([2, 3, 4]))
def test_kr_against_oracle(g, r):
    cert = kr_factor(g, r)
    assert (cert is not None) == kr_oracle(g.n, edge_set(g), r)
    if cert is not None:
        assert validate_kr_factor(g, cert.tiles, r)


@given(graphs(max_n=6), st.integers(0, 6), st.sampled_from([3, 4]))
def test_kr_on_joins_against_oracle(g, t, r):
    j = join(g, t)
    cert = kr_factor(j, r)
    assert (cert is not None) == kr_oracle(j.n, edge_set(j), r)
    if cert is not None:
        assert validate_kr_factor(j, cert.tiles, r)


def test_kr_monotone_under_edge_addition():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.choice([6, 8])
        r = rng.choice([2, 3, 4]) if n == 8 else rng.choice([2, 3])
        g = build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
        before = kr_factor(g, r) is not None
        missing = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
        if not missing:
            continue
        h = build(n, g.edges() + [rng.choice(missing)])
        assert not before or kr_factor(h, r) is not None


def test_certificate_json_round_trip():
    cert = kr_factor(complete(6), 3)
    assert FactorCertificate.from_json(cert.to_json()) == cert
    assert cert.tile_of(4) == (3, 4, 5)
    with pytest.raises(KeyError):
        cert.tile_of(9)


def test_h_factor_matching_in_c4():
    cert = h_factor(cycle(4), complete(2))
    assert cert is not None and len(cert.tiles) == 2
    assert validate_h_factor(cycle(4), cert.tiles, complete(2))


def test_h_factor_edge_in_k22():
    g = complete_bipartite(2, 2)
    cert = h_factor(g, complete_bipartite(1, 1))
    assert validate_h_factor(g, cert.tiles, complete(2))


@pytest.mark.parametrize("n,t", [(7, 2), (8, 1), (5, 1), (10, 2)])
def test_ex_h_prime_joined_has_no_cherry_factor(n, t):
    g = join(ex_h_prime(n, t, 2), t)
    assert h_factor(g, star(2)) is None


def test_h_factor_non_induced_tiles():
    # a triangle contains a spanning path even though the path is not induced
    cert = h_factor(complete(6), path(3))
    assert validate_h_factor(complete(6), cert.tiles, path(3))


@given(graphs(max_n=8), st.sampled_from(["K2", "P3", "K3", "K13", "C4", "2K1"]))
def test_h_factor_against_oracle(g, name):
    h = {
        "K2": complete(2),
        "P3": path(3),
        "K3": complete(3),
        "K13": star(3),
        "C4": cycle(4),
        "2K1": empty(2),
    }[name]
    cert = h_factor(g, h)
    assert (cert is not None) == h_factor_oracle(g.n, edge_set(g), h.n, edge_set(h))
    if cert is not None:
        assert validate_h_factor(g, cert.tiles, h)


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_spanning_copy_against_oracle(h, g):
    if h.n != g.n:
        return
    image = find_spanning_copy(h, g)
    assert (image is not None) == contains_spanning(g.n, edge_set(g), h.n, edge_set(h))
    if image is not None:
        assert validate_spanning_copy(g, image, h)


def test_hamilton_c7():
    cert = hamilton_cycle(cycle(7))
    assert cert.kind == HAMILTON
    assert cert.tiles[0] in ((0, 1, 2, 3, 4, 5, 6), (0, 6, 5, 4, 3, 2, 1))


def test_hamilton_star_absent():
    assert hamilton_cycle(star(3)) is None


def test_hamilton_independent_set_obstruction():
    assert hamilton_cycle(join(empty(4), 3)) is None
    assert hamilton_cycle(join(empty(4), 4)) is not None


def test_hamilton_needs_three_vertices():
    with pytest.raises(GraphInputError):
        hamilton_cycle(complete(2))


@given(graphs(min_n=3, max_n=8))
def test_hamilton_against_oracle(g):
    cert = hamilton_cycle(g)
    assert (cert is not None) == hamilton_oracle(g.n, edge_set(g))
    if cert is not None:
        assert validate_hamilton_cycle(g, cert.tiles[0])


@given(graphs(min_n=1, max_n=6), st.integers(0, 3))
def test_hamilton_on_joins_against_oracle(g, t):
    j = join(g, t)
    if j.n < 3 or j.n > 8:
        return
    assert (hamilton_cycle(j) is not None) == hamilton_oracle(j.n, edge_set(j))


def test_hamilton_disconnected():
    assert hamilton_cycle(disjoint_union(complete(3), complete(3))) is None


def test_hs_examples():
    assert hajnal_szemeredi_guarantee(complete(6), 3)
    assert not hajnal_szemeredi_guarantee(cycle(6), 3)
    assert not hajnal_szemeredi_guarantee(join(ex2_factor(RFactorParams(9, 0, 3)), 0), 3)


@pytest.mark.parametrize("n,r", [(4, 2), (6, 2), (6, 3), (4, 4)])
def test_hs_implies_factor(n, r):
    for g in enumerate_graphs(n):
        if hajnal_szemeredi_guarantee(g, r):
            assert kr_factor(g, r) is not None


def test_degree_sequence_condition_examples():
    for n in range(2, 12, 2):
        assert degree_sequence_condition(complete(n), Fraction(1, 2))
    for n in range(3, 12):
        assert degree_sequence_condition(complete(n), Fraction(1, 10))
    assert not degree_sequence_condition(empty(6), Fraction(1, 10))


@pytest.mark.parametrize("n,t", [(10, 1), (10, 2), (12, 3), (9, 4)])
def test_degree_sequence_condition_fails_at_t(n, t):
    g = join(ex2_band(n, t), t)
    gamma = Fraction(1, 100)
    assert not degree_sequence_condition(g, gamma)
    d = sorted(g.degrees())
    assert d[t - 1] == t < t + gamma * (n + t)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_degree_sequence_condition_odd_complete(n):
    # the last index i = (n-1)/2 needs n-1 >= i + gamma*n, i.e. gamma <= (n-1)/(2n)
    edge = Fraction(n - 1, 2 * n)
    assert degree_sequence_condition(complete(n), edge)
    assert not degree_sequence_condition(complete(n), edge + Fraction(1, 10**9))
    assert not degree_sequence_condition(complete(n), Fraction(1, 2))


def test_degree_sequence_condition_is_exact():
    # K_{3,3}: d_i = 3 for i = 1, 2; i = 2 is binding, 3 >= 2 + 6*gamma
    g = complete_bipartite(3, 3)
    assert degree_sequence_condition(g, Fraction(1, 6))
    assert not degree_sequence_condition(g, Fraction(1, 6) + Fraction(1, 10**9))
