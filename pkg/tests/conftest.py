import random
from fractions import Fraction

import pytest

from zetawalk import Digraph, WeightAssignment, build_digraph, symmetric_digraph
from zetawalk.algebra import QQ


def random_rational(rng, allow_negative=True) -> Fraction:
    nums = [x for x in range(-10, 11) if x] if allow_negative else list(range(1, 11))
    return Fraction(rng.choice(nums), rng.randint(1, 10))


def random_weights(rng, d: Digraph) -> WeightAssignment:
    n = d.arc_count
    return WeightAssignment.from_maps(
        d,
        {i: random_rational(rng) for i in range(n)},
        {i: random_rational(rng) for i in range(n)},
        field=QQ,
    )


def random_digraph(rng, max_vertices=4, max_arcs=10) -> Digraph:
    nv = rng.randint(1, max_vertices)
    na = rng.randint(1, max_arcs)
    return build_digraph(nv, [(rng.randrange(nv), rng.randrange(nv)) for _ in range(na)])


def random_multigraph(rng, max_vertices=4, max_edges=6) -> Digraph:
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(1, max_edges)
    return symmetric_digraph(nv, [(rng.randrange(nv), rng.randrange(nv)) for _ in range(ne)])


def random_connected_graph(rng, min_vertices=2, max_vertices=6, max_edges=10) -> Digraph:
    """Random connected simple loopless graph: spanning tree plus extra edges."""
    nv = rng.randint(min_vertices, max_vertices)
    edges = set()
    order = list(range(nv))
    rng.shuffle(order)
    for i in range(1, nv):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((min(u, v), max(u, v)))
    candidates = [(u, v) for u in range(nv) for v in range(u + 1, nv) if (u, v) not in edges]
    rng.shuffle(candidates)
    for pair in candidates:
        if len(edges) >= max_edges or rng.random() < 0.5:
            break
        edges.add(pair)
    return symmetric_digraph(nv, sorted(edges))


def random_probability(rng, g: Digraph) -> dict[int, Fraction]:
    probs = {}
    for v in range(g.vertex_count):
        out = g.out_arcs(v)
        raw = [Fraction(rng.randint(1, 9)) for _ in out]
        total = sum(raw)
        for a, r in zip(out, raw):
            probs[a] = r / total
    return probs


@pytest.fixture
def rng():
    return random.Random(20240817)
