"""Shared corpora and helpers for the test suite."""

import random

import pytest

from chgraphs import census, permgrp
from chgraphs.graphs import Graph


def connected_graphs_up_to(max_n):
    """All connected graphs on <= max_n vertices, one per isomorphism class.

    Grown by vertex addition: every connected graph on n vertices arises from
    a connected graph on n-1 vertices by attaching a new vertex to a nonempty
    neighbourhood.  Deduplication is fingerprint-first, then exact.
    """
    levels = [[Graph(1)]]
    for n in range(2, max_n + 1):
        buckets = {}
        for g in levels[-1]:
            for mask in range(1, 1 << g.n):
                edges = list(g.edges()) + [(v, g.n) for v in range(g.n) if mask >> v & 1]
                h = Graph(n, edges=edges)
                key = census._fingerprint(h)
                for known in buckets.setdefault(key, []):
                    if census.is_isomorphic(h, known):
                        break
                else:
                    buckets[key].append(h)
        levels.append([g for bucket in buckets.values() for g in bucket])
    return [g for level in levels for g in level]


def random_connected_graph(n, rng):
    while True:
        p = rng.uniform(0.2, 0.7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        try:
            g = Graph(n, edges=edges)
        except ValueError:
            continue
        if g.is_connected():
            return g


@pytest.fixture(scope="session")
def corpus7():
    corpus = connected_graphs_up_to(7)
    # known counts of connected graphs per order: 1, 1, 2, 6, 21, 112, 853
    assert len(corpus) == 996
    return corpus


@pytest.fixture(scope="session")
def random89():
    rng = random.Random(20240819)
    return [random_connected_graph(rng.choice((8, 9)), rng) for _ in range(200)]


def enumerate_group(G):
    """All elements of a GroupChain by closure over its strong generators."""
    ident = permgrp.identity(G.degree)
    out = {ident}
    frontier = [ident]
    gens = G.strong_generators
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = permgrp.pmul(x, g)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(out) == G.order
    return sorted(out)


def definition_kch(g, aut_elements, k):
    """Definition-level k-CH oracle by exhaustive scan.

    For every pair of ordered tuples of distinct vertices that induce
    isomorphic connected subgraphs (same positional adjacency pattern),
    some automorphism must map one tuple onto the other.
    """
    tuples_by_pattern = {}
    connected_sets = [[] for _ in range(k + 1)]

    def grow(subset, mask):
        m = len(subset)
        connected_sets[m].append(tuple(sorted(subset)))
        if m == k:
            return
        reach = 0
        for v in subset:
            reach |= g.adj[v]
        for v in range(g.n):
            if reach >> v & 1 and not mask >> v & 1 and v > subset[0]:
                grow(subset + [v], mask | 1 << v)

    for v in range(g.n):
        grow([v], 1 << v)

    from itertools import permutations

    for m in range(1, k + 1):
        seen = set()
        for s in connected_sets[m]:
            if s in seen:
                continue
            seen.add(s)
            for t in permutations(s):
                pattern = tuple(
                    g.adj[t[i]] >> t[j] & 1 for i in range(m) for j in range(i + 1, m)
                )
                tuples_by_pattern.setdefault((m, pattern), []).append(t)

    for (_, _), tuples in tuples_by_pattern.items():
        orbit = set()
        base = tuples[0]
        for a in aut_elements:
            orbit.add(tuple(a[v] for v in base))
        for t in tuples:
            if t not in orbit:
                return False
    return True
