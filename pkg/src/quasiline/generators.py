"""Seeded instance generators for the test and acceptance suites.

Both generators are pure functions of their seed.  Composition instances
are built so the rounding budget holds by construction: the nontrivial
edges are oriented to spread tails (keeping D(H) small) and one hub is
pumped with trivial strips until its clique reaches 9*D(H)^2, which
makes omega(G) large enough for round_all's structural check.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .composition import Strip, StripComposition, compose, normalize
from .errors import InputError
from .graphs import Graph, Multigraph
from .interval import CircularIntervalRep
from .stripcolour import _maximal_arcs


def gen_circular_interval(seed: int, n: int, arc_length: tuple[int, int] = (2, 4),
                          num_arcs: Optional[int] = None,
                          ) -> tuple[Graph, CircularIntervalRep]:
    """A random circular interval graph with its ground-truth representation."""
    if n < 1:
        raise InputError("n must be positive")
    lo, hi = arc_length
    if not 1 <= lo <= hi <= n:
        raise InputError(f"arc lengths must fit 1 <= {lo} <= {hi} <= {n}")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)  # order[pos] = vertex, so recognition can't cheat
    m = num_arcs if num_arcs is not None else n
    arcs = []
    for _ in range(m):
        start = rng.randrange(n)
        length = rng.randint(lo, hi)
        arcs.append((start, (start + length - 1) % n))
    edges = set()
    for a, b in arcs:
        span = (b - a) % n + 1
        pos = [(a + i) % n for i in range(span)]
        for i in range(len(pos)):
            for j in range(i + 1, len(pos)):
                u, v = perm[pos[i]], perm[pos[j]]
                edges.add((min(u, v), max(u, v)))
    g = Graph.from_edges(n, sorted(edges))
    rep = CircularIntervalRep(tuple(perm), _maximal_arcs(arcs, n))
    if not rep.is_valid_for(g):
        raise InputError("generator produced an inconsistent representation")
    return g, rep


def _gen_strip(rng: random.Random, length: int, x: int, y: int) -> Strip:
    """A random canonical nontrivial strip with at least one interior vertex."""
    if length < x + y + 1:
        raise InputError(f"strip length {length} too short for ends {x},{y}")
    ranges = [(0, max(x - 1, rng.randint(x - 1, min(length - y - 1, x + 1))))]
    while ranges[-1][1] < length - 1:
        a_prev, b_prev = ranges[-1]
        start = rng.randint(min(a_prev + 1, b_prev), b_prev)
        end = rng.randint(b_prev + 1, min(length - 1, b_prev + 3))
        ranges.append((start, end))
    # the last range must contain all of Y
    a_last, b_last = ranges[-1]
    ranges[-1] = (min(a_last, length - y), length - 1)
    return Strip.from_ranges(length, ranges, x, y)


def gen_composition(seed: int, h_size: int = 3, h_extra_edges: int = 2,
                    nontrivial_edges: int = 1,
                    strip_length: tuple[int, int] = (6, 9),
                    end_clique_sizes: tuple[int, int] = (1, 3),
                    ) -> StripComposition:
    """A seeded canonical strip composition, normalized, budget-safe."""
    if h_size < 2:
        raise InputError("h_size must be at least 2")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    for v in range(1, h_size):  # random spanning tree: H stays connected
        edges.append((rng.randrange(v), v))
    for _ in range(h_extra_edges):
        u = rng.randrange(h_size)
        v = rng.randrange(h_size)
        while v == u:
            v = rng.randrange(h_size)
        edges.append((u, v))
    if nontrivial_edges > len(edges):
        raise InputError("more nontrivial edges requested than H has edges")
    nontrivial = sorted(rng.sample(range(len(edges)), nontrivial_edges))

    # orient nontrivial edges to spread tails, keeping D(H) small
    out_count = [0] * h_size
    for e in nontrivial:
        u, v = edges[e]
        if out_count[v] < out_count[u]:
            edges[e] = (v, u)
        out_count[edges[e][0]] += 1
    d_max = max(out_count) if out_count else 0

    strips: list[Strip] = []
    for e in range(len(edges)):
        if e in nontrivial:
            lo, hi = strip_length
            length = rng.randint(lo, hi)
            smax = max(1, min(end_clique_sizes[1], (length - 1) // 2))
            x = rng.randint(max(1, end_clique_sizes[0]), smax)
            y = rng.randint(max(1, end_clique_sizes[0]), smax)
            strips.append(_gen_strip(rng, length, x, y))
        else:
            strips.append(Strip.single_vertex())

    # pump one hub with trivial strips until omega >= 9*D(H)^2 is certain
    need = 9 * d_max * d_max
    if need and edges:
        hub_load = [0] * h_size
        for e, (u, v) in enumerate(edges):
            hub_load[u] += strips[e].x_size if u != v else \
                strips[e].x_size + strips[e].y_size
            if u != v:
                hub_load[v] += strips[e].y_size
        target = max(range(h_size), key=lambda v: (hub_load[v], -v))
        while hub_load[target] < need:
            other = rng.randrange(h_size)
            while other == target:
                other = rng.randrange(h_size)
            edges.append((target, other))
            strips.append(Strip.single_vertex())
            hub_load[target] += 1
    h = Multigraph(h_size, tuple(edges))
    _, comp = compose(h, strips)
    return normalize(comp)
