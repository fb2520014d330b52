import random

import pytest
from hypothesis import given, settings, strategies as st

from chgraphs import census
from chgraphs.graphs import (
    Geometry,
    Graph,
    affine_polar,
    complement,
    complete,
    complete_multipartite,
    cross,
    cycle,
    disjoint_union,
    folded_cube,
    gq,
    grid,
    halved,
    halved_cube,
    hypercube,
    icosahedron,
    johnson,
    line_graph,
    orbital_graphs,
    parse_edge_list,
    parse_generators,
    parse_graph6,
    petersen,
    projective_plane_incidence,
    write_generators,
    write_graph6,
)


# -- Graph basics -----------------------------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, edges=[(0, 0)])  # loop
    with pytest.raises(ValueError):
        Graph(2, edges=[(0, 5)])  # out of range
    with pytest.raises(ValueError):
        Graph(3, adj=[1, 0, 0])  # asymmetric adjacency (and a loop at 0)
    with pytest.raises(ValueError):
        Graph(2, labels=["a", "a"])  # duplicate labels


def test_components_and_bipartition():
    g = disjoint_union(cycle(4), 2)
    assert not g.is_connected()
    assert len(g.components()) == 2
    sides = cycle(6).bipartition()
    assert sides is not None and bin(sides[0]).count("1") == 3
    assert cycle(5).bipartition() is None


def test_induced_and_relabel():
    g = petersen()
    sub = g.induced([0, 1, 2, 3])
    assert sub.n == 4
    perm = tuple(reversed(range(10)))
    assert census.is_isomorphic(g, g.relabel(perm))


# -- named constructions ----------------------------------------------------


def test_basic_families():
    assert complete(5).edge_count() == 10
    assert cycle(7).is_regular() == (True, 2)
    assert complete_multipartite(3, 2).is_regular() == (True, 4)
    assert grid(3, 4).n == 12 and grid(3, 4).is_regular() == (True, 5)
    assert cross(3, 3).is_regular() == (True, 4)
    assert johnson(5, 2).is_regular() == (True, 6)


def test_cube_family():
    assert hypercube(4).is_regular() == (True, 4)
    assert census.girth(hypercube(3)) == 4
    assert folded_cube(4).is_regular() == (True, 4)
    fc5 = folded_cube(5)
    assert census.parameters(fc5).srg == (16, 5, 0, 2)  # Clebsch complement
    hc5 = halved_cube(5)
    assert census.parameters(hc5).srg == (16, 10, 6, 6)  # Clebsch
    # halved of a bipartite double cover agrees with halved_cube
    assert census.is_isomorphic(halved(hypercube(5), 0), hc5)


def test_petersen_and_icosahedron():
    assert census.parameters(petersen()).srg == (10, 3, 0, 1)
    ico = census.parameters(icosahedron())
    assert ico.valency == 5 and ico.n == 12 and ico.intersection_array == ((5, 2, 1), (1, 2, 5))


def test_line_graph():
    lg = line_graph(petersen())
    assert lg.n == 15 and lg.is_regular() == (True, 4)
    assert census.girth(lg) == 3


# -- geometries -------------------------------------------------------------


def test_geometry_validation():
    with pytest.raises(ValueError):
        Geometry(4, [(0, 1, 2), (0, 1, 3)])  # two lines through {0,1}
    geo = Geometry(4, [(0, 1), (2, 3)])
    assert geo.point_graph().edge_count() == 2


@pytest.mark.parametrize(
    "kind,q,s,t",
    [
        ("W3", 2, 2, 2),
        ("W3", 3, 3, 3),
        ("W3", 4, 4, 4),
        ("Q4", 3, 3, 3),
        ("Q5minus", 2, 2, 4),
        ("Q5minus", 3, 3, 9),
        ("H3", 2, 4, 2),
    ],
)
def test_gq_orders(kind, q, s, t):
    geo = gq(kind, q)
    assert geo.validate_gq() == (s, t)
    assert geo.num_points == (s + 1) * (s * t + 1)
    assert len(geo.lines) == (t + 1) * (s * t + 1)


def test_gq_point_graph_parameters():
    for q in (2, 3, 4):
        rep = census.parameters(gq("Q5minus", q).point_graph())
        assert rep.srg == (q**4 + q**3 + q + 1, q**3 + q, q - 1, q**2 + 1)


def test_gq_unsupported_q():
    with pytest.raises(ValueError):
        gq("Q5minus", 7)
    with pytest.raises(ValueError):
        gq("nonsense", 2)


def test_gq_duality():
    w = gq("W3", 2)
    d = w.dual()
    assert d.validate_gq() == (2, 2)
    assert census.is_isomorphic(w.incidence_graph(), d.incidence_graph())


def test_incidence_graph_girth():
    # generalised quadrangle: girth 8; projective plane: girth 6
    assert census.girth(gq("W3", 2).incidence_graph()) == 8
    assert census.girth(projective_plane_incidence(2)) == 6
    heawood = projective_plane_incidence(2)
    assert heawood.n == 14 and heawood.is_regular() == (True, 3)


def test_affine_polar_parameters():
    rep = census.parameters(affine_polar(2, 2, "+"))
    assert rep.srg == (16, 9, 4, 6)
    rep = census.parameters(affine_polar(2, 2, "-"))
    assert rep.srg == (16, 5, 0, 2)
    rep = census.parameters(affine_polar(3, 2, "-"))
    assert rep.srg == (64, 27, 10, 12)
    rep = census.parameters(affine_polar(3, 2, "+"))
    assert rep.srg == (64, 35, 18, 20)


def test_schlafli_complement():
    rep = census.parameters(complement(gq("Q5minus", 2).point_graph()))
    assert rep.srg == (27, 16, 10, 8)


# -- orbital graphs ---------------------------------------------------------


def test_orbital_graphs_of_dihedral_action():
    n = 7
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((-i) % n for i in range(n))
    graphs, skipped = orbital_graphs([rot, refl], n)
    assert skipped == 0
    assert [g.degree(0) for g in graphs] == [2, 2, 2]
    assert census.is_isomorphic(graphs[0], cycle(7))


def test_orbital_graphs_require_transitivity():
    with pytest.raises(ValueError):
        orbital_graphs([(0, 1, 2)], 3)


# -- file formats -----------------------------------------------------------


def test_graph6_known_values():
    # petersen's canonical graph6 string round-trips
    s = write_graph6(petersen())
    assert parse_graph6(s) == petersen()
    assert parse_graph6(">>graph6<<" + s) == petersen()
    assert write_graph6(complete(3)) == "Bw"
    assert parse_graph6("Bw") == complete(3)


def test_graph6_large_header():
    g = cycle(70)
    assert parse_graph6(write_graph6(g)) == g


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("B\x19")
    # too-short body
    with pytest.raises(ValueError):
        parse_graph6("E")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 24), st.data())
def test_graph6_round_trip_random(n, data):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if data.draw(st.booleans()):
                edges.append((u, v))
    g = Graph(n, edges=edges)
    assert parse_graph6(write_graph6(g)) == g


def test_edge_list_round_trip():
    g = grid(3, 3)
    text = "".join(f"{u} {v}\n" for u, v in g.edges())
    assert parse_edge_list(text) == g
    with pytest.raises(ValueError):
        parse_edge_list("1 2 3\n")
    with pytest.raises(ValueError):
        parse_edge_list("")


def test_generator_format_round_trip():
    perms = [(1, 2, 0, 3), (0, 1, 3, 2)]
    meta = {"name": "sample", "order": "12"}
    text = write_generators(4, perms, meta)
    degree, parsed, parsed_meta = parse_generators(text)
    assert degree == 4 and parsed == perms
    assert parsed_meta["name"] == "sample" and parsed_meta["order"] == "12"


def test_generator_format_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_generators("0 1 2\n")  # missing header
    with pytest.raises(ValueError):
        parse_generators("degree 3\n0 1\n")  # wrong length
    with pytest.raises(ValueError):
        parse_generators("degree 3\n0 0 2\n")  # not a bijection


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 9), st.integers(1, 4), st.integers(0, 10_000))
def test_generator_round_trip_random(degree, count, seed):
    rng = random.Random(seed)
    perms = []
    for _ in range(count):
        p = list(range(degree))
        rng.shuffle(p)
        perms.append(tuple(p))
    _, parsed, _ = parse_generators(write_generators(degree, perms))
    assert parsed == perms
