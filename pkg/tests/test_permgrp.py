import random
from itertools import permutations

import pytest

from chgraphs import permgrp
from chgraphs.permgrp import (
    GroupChain,
    automorphism_group,
    identity,
    pinv,
    pmul,
    pointwise_stabilizer,
    set_transporter,
    tuple_transporter,
)
from chgraphs.graphs import (
    Graph,
    complete,
    cycle,
    grid,
    hypercube,
    johnson,
    petersen,
)

from conftest import enumerate_group


def brute_order(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen), seen


def random_perm(degree, rng):
    p = list(range(degree))
    rng.shuffle(p)
    return tuple(p)


def test_pmul_applies_left_then_right():
    a = (1, 2, 0)  # 0->1->2->0
    b = (0, 2, 1)  # swap 1,2
    ab = pmul(a, b)
    for x in range(3):
        assert ab[x] == b[a[x]]


def test_inverse():
    rng = random.Random(0)
    for _ in range(20):
        p = random_perm(9, rng)
        assert pmul(p, pinv(p)) == identity(9)


def test_order_matches_brute_force_on_random_groups():
    rng = random.Random(7)
    for trial in range(30):
        degree = rng.randint(3, 8)
        gens = [random_perm(degree, rng) for _ in range(rng.randint(1, 3))]
        expected, elements = brute_order(gens, degree)
        G = GroupChain(gens, degree)
        assert G.order == expected
        for g in gens:
            assert G.contains(g)
        # membership agrees with the enumerated element set
        for _ in range(10):
            assert G.contains(G.random_element(rng))
        outsider = random_perm(degree, rng)
        assert G.contains(outsider) == (outsider in elements)


def test_symmetric_and_cyclic_groups():
    n = 6
    sym = GroupChain([(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)], n)
    assert sym.order == 720
    cyc = GroupChain([tuple(range(1, n)) + (0,)], n)
    assert cyc.order == 6


def test_known_order_shortcut_agrees():
    gens = [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]
    full = GroupChain(gens, 5)
    assert full.order == 120
    hinted = GroupChain(gens, 5, known_order=120)
    assert hinted.order == 120
    assert sorted(hinted.base) != [] and hinted.contains((2, 1, 0, 3, 4))


def test_pointwise_stabilizer_matches_brute_force():
    rng = random.Random(3)
    for _ in range(15):
        degree = rng.randint(4, 7)
        gens = [random_perm(degree, rng) for _ in range(2)]
        G = GroupChain(gens, degree)
        _, elements = brute_order(gens, degree)
        pts = tuple(rng.sample(range(degree), rng.randint(1, 2)))
        S = pointwise_stabilizer(G, pts)
        expected = {e for e in elements if all(e[p] == p for p in pts)}
        assert S.order == len(expected)
        for g in S.strong_generators:
            assert g in expected


def test_set_transporter_exhaustive():
    rng = random.Random(11)
    for _ in range(15):
        degree = rng.randint(4, 7)
        gens = [random_perm(degree, rng) for _ in range(2)]
        G = GroupChain(gens, degree)
        _, elements = brute_order(gens, degree)
        for _ in range(6):
            A = frozenset(rng.sample(range(degree), rng.randint(1, 3)))
            B = frozenset(rng.sample(range(degree), len(A)))
            expected = any(frozenset(e[a] for a in A) == B for e in elements)
            got = set_transporter(G, A, B)
            assert (got is not None) == expected
            if got is not None:
                assert frozenset(got[a] for a in A) == B


def test_tuple_transporter_exhaustive():
    rng = random.Random(13)
    for _ in range(15):
        degree = rng.randint(4, 7)
        gens = [random_perm(degree, rng) for _ in range(2)]
        G = GroupChain(gens, degree)
        _, elements = brute_order(gens, degree)
        for _ in range(6):
            src = tuple(rng.sample(range(degree), rng.randint(1, 3)))
            dst = tuple(rng.sample(range(degree), len(src)))
            expected = any(tuple(e[s] for s in src) == dst for e in elements)
            got = tuple_transporter(G, src, dst)
            assert (got is not None) == expected
            if got is not None:
                assert tuple(got[s] for s in src) == dst


@pytest.mark.parametrize(
    "g,order",
    [
        (complete(5), 120),
        (cycle(6), 12),
        (petersen(), 120),
        (hypercube(4), 384),
        (grid(3, 3), 72),
        (johnson(5, 2), 120),
    ],
)
def test_automorphism_groups_of_named_graphs(g, order):
    A = automorphism_group(g)
    assert A.order == order
    for p in A.strong_generators:
        for u, v in g.edges():
            assert g.has_edge(p[u], p[v])


def test_automorphism_group_equals_brute_force_on_small_graphs():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(3, 6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges=edges)
        expected = sum(
            1
            for p in permutations(range(n))
            if all(g.has_edge(p[u], p[v]) == g.has_edge(u, v) for u in range(n) for v in range(u + 1, n))
        )
        assert automorphism_group(g).order == expected


def test_automorphism_search_respects_vertex_bound():
    with pytest.raises(ValueError):
        automorphism_group(complete(5), max_vertices=4)


def test_orders_stable_under_base_hint_permutations():
    g = petersen()
    A = automorphism_group(g)
    gens = A.strong_generators
    for hint in [(), (3, 1, 4), (9, 8, 7, 6), tuple(range(10))]:
        assert GroupChain(gens, 10, base_hint=hint).order == 120


def test_orders_stable_under_relabeling():
    rng = random.Random(23)
    g = johnson(5, 2)
    order = automorphism_group(g).order
    for _ in range(5):
        perm = random_perm(g.n, rng)
        assert automorphism_group(g.relabel(perm)).order == order


def test_enumerated_elements_match_order():
    G = GroupChain([(1, 2, 0, 3), (0, 1, 3, 2)], 4)
    assert len(enumerate_group(G)) == G.order


def test_stabilizer_transitivity_queries():
    g = petersen()
    A = automorphism_group(g)
    S = pointwise_stabilizer(A, (0,))
    nbrs = list(permgrp.orbit(S, min(x for x in range(1, 10) if g.has_edge(0, x))))
    assert permgrp.is_transitive_on(S, [v for v in range(10) if g.has_edge(0, v)])
    assert set(nbrs) == {v for v in range(10) if g.has_edge(0, v)}
