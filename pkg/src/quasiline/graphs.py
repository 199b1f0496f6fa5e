"""Core graph types and cheap verifiers.

Vertices are dense integers 0..n-1; labels are carried as metadata only.
All types are immutable after construction, so they are safe to share
between threads and safe to use as dict keys where hashable.

The heavy exact solvers live in :mod:`quasiline.exact`; this module only
holds representations plus the linear-time checks (colouring
verification, quasi-line test, connectivity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: symmetric, irreflexive adjacency."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = None

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            if len(labels) != n:
                raise InputError("label count does not match vertex count")
            labels = tuple(labels)
        return Graph(n, tuple(frozenset(s) for s in nbrs), labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def adj_bits(self) -> list[int]:
        """Adjacency as bitmasks; used by the exact solvers."""
        return [sum(1 << w for w in a) for a in self.adj]

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph(self.n, tuple(frozenset(full - a - {v})
                                   for v, a in enumerate(self.adj)), self.labels)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on `vertices`, renumbered in the given order."""
        idx = {v: i for i, v in enumerate(vertices)}
        if len(idx) != len(vertices):
            raise InputError("duplicate vertices in induced-subgraph request")
        vs = set(vertices)
        adj = tuple(frozenset(idx[w] for w in self.adj[v] if w in vs)
                    for v in vertices)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in vertices)
        return Graph(len(vertices), adj, labels)

    def with_edges_added(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        es = set(map(frozenset, self.edges()))
        es.update(frozenset(e) for e in extra)
        return Graph.from_edges(self.n, [tuple(sorted(e)) for e in es], self.labels)

    def with_edges_removed(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        drop = {frozenset(e) for e in gone}
        keep = [e for e in self.edges() if frozenset(e) not in drop]
        return Graph.from_edges(self.n, keep, self.labels)

    def without_vertex(self, v: int) -> tuple["Graph", list[int]]:
        """Delete a vertex; returns the new graph and old-index map."""
        keep = [u for u in range(self.n) if u != v]
        return self.induced(keep), keep

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, w) for i, u in enumerate(vs) for w in vs[i + 1:])

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, w) for i, u in enumerate(vs) for w in vs[i + 1:])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in sorted(self.adj[v]):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabelled(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation: vertex v moves to position perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("not a permutation")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges():
            adj[perm[u]].add(perm[v])
            adj[perm[v]].add(perm[u])
        labels = None
        if self.labels is not None:
            labels = tuple(l for _, l in sorted(zip(perm, self.labels)))
        return Graph(self.n, tuple(frozenset(a) for a in adj), labels)


@dataclass(frozen=True)
class Multigraph:
    """Directed multigraph with parallel edges and loops.

    Edge identity is the index into `edges`; each entry is (tail, head).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"multigraph edge {e}=({u},{v}) out of range")

    def out_edges(self, v: int) -> list[int]:
        return [e for e, (u, _) in enumerate(self.edges) if u == v]

    def in_edges(self, v: int) -> list[int]:
        return [e for e, (_, w) in enumerate(self.edges) if w == v]

    def loops(self) -> list[int]:
        return [e for e, (u, w) in enumerate(self.edges) if u == w]

    def line_graph(self) -> Graph:
        """L(H): one vertex per edge, adjacent iff the edges share an endpoint."""
        m = len(self.edges)
        pairs = []
        for a in range(m):
            ta, ha = self.edges[a]
            for b in range(a + 1, m):
                tb, hb = self.edges[b]
                if {ta, ha} & {tb, hb}:
                    pairs.append((a, b))
        return Graph.from_edges(m, pairs)


@dataclass(frozen=True)
class Colouring:
    """Integer colouring: one small nonnegative colour id per vertex."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.assignment):
            raise InputError("colour ids must be nonnegative")

    @property
    def palette_size(self) -> int:
        return len(set(self.assignment))

    def colour_of(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            out.setdefault(c, []).append(v)
        return out

    def renamed(self, mapping: dict[int, int]) -> "Colouring":
        return Colouring(tuple(mapping[c] for c in self.assignment))


def verify_colouring(g: Graph, c: Colouring) -> bool:
    """True iff `c` assigns every vertex of `g` and no edge is monochromatic."""
    if len(c.assignment) != g.n:
        raise InputError(
            f"colouring covers {len(c.assignment)} vertices, graph has {g.n}")
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges())


def is_quasi_line(g: Graph) -> bool:
    """True iff every neighbourhood is coverable by two cliques.

    Equivalent test: the complement of the subgraph induced on each open
    neighbourhood is bipartite.
    """
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if not _complement_bipartite(g, nb):
            return False
    return True


def _complement_bipartite(g: Graph, vertices: list[int]) -> bool:
    k = len(vertices)
    colour = [-1] * k
    vset = {u: i for i, u in enumerate(vertices)}
    for s in range(k):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            i = stack.pop()
            u = vertices[i]
            for w in vertices:
                if w == u or g.has_edge(u, w):
                    continue
                j = vset[w]
                if colour[j] == -1:
                    colour[j] = 1 - colour[i]
                    stack.append(j)
                elif colour[j] == colour[i]:
                    return False
    return True


@dataclass(frozen=True)
class Bounds:
    """The quantities the pipeline budgets against.

    t = floor(chi_f + 3*sqrt(chi_f)) is the integer palette target and is
    recomputed exactly from the rational chi_f.  The intermediate budget
    t' = chi_f + sqrt(omega)/3 is irrational in general, so it is kept in
    (chi_f, omega) form and compared by squaring; `leq_t_prime` is the
    exact predicate "x <= t'".
    """

    omega: int
    chi_f: Fraction
    t: int = field(init=False)

    def __post_init__(self):
        if self.omega < 0 or self.chi_f < 0:
            raise InputError("bounds must be nonnegative")
        if Fraction(self.omega) > self.chi_f:
            raise InputError(f"omega={self.omega} exceeds chi_f={self.chi_f}")
        object.__setattr__(self, "t", floor_plus_3sqrt(self.chi_f))

    def leq_t_prime(self, x: Fraction) -> bool:
        """Exact test x <= chi_f + sqrt(omega)/3 for rational x."""
        d = x - self.chi_f
        if d <= 0:
            return True
        return 9 * d * d <= self.omega

    def t_prime_float(self) -> float:
        return float(self.chi_f) + math.sqrt(self.omega) / 3.0


def floor_plus_3sqrt(chi_f: Fraction) -> int:
    """floor(chi_f + 3*sqrt(chi_f)) computed without floating point.

    k <= chi_f + 3*sqrt(chi_f)  iff  k <= chi_f or (k-chi_f)^2 <= 9*chi_f.
    """
    if chi_f < 0:
        raise InputError("chi_f must be nonnegative")
    k = int(chi_f)  # floor for nonnegative Fraction
    while True:
        nxt = k + 1
        d = Fraction(nxt) - chi_f
        if d <= 0 or d * d <= 9 * chi_f:
            k = nxt
        else:
            return k
