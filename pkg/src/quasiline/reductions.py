"""Robustness reductions: low degree, clique cutsets, homogeneous pairs.

Clique cutsets are found through a minimal triangulation (MCS-M): every
clique minimal separator of G appears among the "madj" sets produced by
the scan, so checking each recorded set for being a clique in G that
disconnects G is a complete detector.

A homogeneous pair of cliques (A, B) is nonlinear exactly when the cross
edges contain the induced-C4 pattern a1~a2, b1~b2, a2~b1, a1~b2 with
a1/b1 and a2/b2 non-adjacent.  Detection seeds that four-vertex pattern
and grows (A, B) by forced moves: an outside vertex seeing part of A
must be complete to B and join it (and symmetrically), so the growth
either reaches a valid pair or refutes the seed.

The reduction keeps, of the A-B cross edges, exactly those avoiding a
Koenig cover of the bipartite complement: the complement's maximum
matching size is unchanged, which is the only invariant a colouring
sees, and the surviving pattern is complete bipartite between two
subsets, hence C4-free.  Any colouring of the reduced graph transfers
back by re-matching the shared colours inside the original complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ContractViolationError, InputError
from .graphs import Colouring, Graph, is_quasi_line, verify_colouring
from .matching import koenig_cover, max_bipartite_matching


def find_low_degree(g: Graph, t: int) -> Optional[int]:
    """A vertex of degree < t, lowest index first, or None."""
    for v in range(g.n):
        if g.degree(v) < t:
            return v
    return None


def _mcs_m(g: Graph) -> list[tuple[int, frozenset[int]]]:
    """MCS-M scan; returns (vertex, madj set) pairs in visit order.

    madj(v) = unnumbered u reachable from v through unnumbered interior
    vertices of weight strictly below weight(u).  Computed as a minimax
    relaxation: d[u] = min over v-u paths of the maximum interior weight.
    """
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    out = []
    inf = n + 1
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]),
                key=lambda u: (weight[u], -u))
        d = [inf] * n
        for w in g.adj[v]:
            if not numbered[w]:
                d[w] = -1  # direct edge: no interior vertices
        changed = True
        while changed:
            changed = False
            for x in range(n):
                if numbered[x] or x == v or d[x] >= inf:
                    continue
                through = max(d[x], weight[x])
                for y in g.adj[x]:
                    if numbered[y] or y == v:
                        continue
                    if through < d[y]:
                        d[y] = through
                        changed = True
        madj = frozenset(u for u in range(n)
                         if not numbered[u] and u != v and d[u] < weight[u])
        for u in madj:
            weight[u] += 1
        numbered[v] = True
        out.append((v, madj))
    return out


def find_clique_cutset(g: Graph) -> Optional[tuple[list[int], list[list[int]]]]:
    """A clique cutset with the parts it separates, or None.

    Parts include the cutset itself, so they can be coloured independently
    and glued by permuting colours on the (clique) cutset.
    """
    if not g.is_connected():
        raise InputError("clique cutset search expects a connected graph")
    if g.n <= 2:
        return None
    seen: set[frozenset[int]] = set()
    for _, madj in _mcs_m(g):
        if not madj or madj in seen:
            continue
        seen.add(madj)
        s = sorted(madj)
        if len(s) >= g.n - 1 or not g.is_clique(s):
            continue
        rest = [v for v in range(g.n) if v not in madj]
        sub = g.induced(rest)
        comps = sub.components()
        if len(comps) >= 2:
            parts = [sorted(s + [rest[i] for i in comp]) for comp in comps]
            return s, parts
    return None


@dataclass(frozen=True)
class HomogeneousPair:
    """Disjoint cliques (A, B), |A u B| >= 3, every outside vertex complete
    or anticomplete to each of A and B."""

    a: frozenset[int]
    b: frozenset[int]

    def validate(self, g: Graph) -> None:
        if not self.a or not self.b or (self.a & self.b):
            raise InputError("pair must be disjoint and nonempty")
        if len(self.a) + len(self.b) < 3:
            raise InputError("|A u B| must be at least 3")
        if not g.is_clique(sorted(self.a)) or not g.is_clique(sorted(self.b)):
            raise InputError("A and B must be cliques")
        for v in range(g.n):
            if v in self.a or v in self.b:
                continue
            for side in (self.a, self.b):
                hits = len(g.adj[v] & side)
                if hits not in (0, len(side)):
                    raise InputError(
                        f"vertex {v} sees {hits} of {len(side)} in one side")

    def is_nonlinear(self, g: Graph) -> bool:
        return self._c4_pattern(g) is not None

    def _c4_pattern(self, g: Graph) -> Optional[tuple[int, int, int, int]]:
        av, bv = sorted(self.a), sorted(self.b)
        for i, a1 in enumerate(av):
            for a2 in av[i + 1:]:
                for j, b1 in enumerate(bv):
                    for b2 in bv[j + 1:]:
                        for x1, x2 in ((a1, a2), (a2, a1)):
                            if g.has_edge(x2, b1) and g.has_edge(x1, b2) and \
                                    not g.has_edge(x1, b1) and not g.has_edge(x2, b2):
                                return x1, x2, b1, b2
        return None


def find_nonlinear_homogeneous_pair(g: Graph) -> Optional[HomogeneousPair]:
    """A nonlinear homogeneous pair of cliques, or None."""
    edges = g.edges()
    for a1, a2 in edges:
        for b1, b2 in edges:
            if len({a1, a2, b1, b2}) != 4:
                continue
            for x1, x2 in ((a1, a2), (a2, a1)):
                for y1, y2 in ((b1, b2), (b2, b1)):
                    if g.has_edge(x2, y1) and g.has_edge(x1, y2) and \
                            not g.has_edge(x1, y1) and not g.has_edge(x2, y2):
                        pair = _grow_pair(g, {x1, x2}, {y1, y2})
                        if pair is not None:
                            return pair
    return None


def _grow_pair(g: Graph, a: set[int], b: set[int]) -> Optional[HomogeneousPair]:
    while True:
        changed = False
        for v in range(g.n):
            if v in a or v in b:
                continue
            hits_a = len(g.adj[v] & a)
            hits_b = len(g.adj[v] & b)
            partial_a = 0 < hits_a < len(a)
            partial_b = 0 < hits_b < len(b)
            if partial_a and partial_b:
                return None
            if partial_a:
                if hits_b != len(b):
                    return None
                b.add(v)
                changed = True
            elif partial_b:
                if hits_a != len(a):
                    return None
                a.add(v)
                changed = True
        if not changed:
            break
    pair = HomogeneousPair(frozenset(a), frozenset(b))
    try:
        pair.validate(g)
    except InputError:
        return None
    return pair if pair.is_nonlinear(g) else None


@dataclass(frozen=True)
class HomogeneousPairReduction:
    """Rebuild recipe: how to lift a colouring of g' back to g."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    removed: tuple[tuple[int, int], ...]
    original_graph: Graph

    def extend(self, reduced_colouring: Colouring) -> Colouring:
        g = self.original_graph
        c = list(reduced_colouring.assignment)
        cols_a = sorted({c[v] for v in self.a})
        cols_b = sorted({c[v] for v in self.b})
        shared = sorted(set(cols_a) & set(cols_b))
        comp_adj = {u: [w for w in self.b if not g.has_edge(u, w)] for u in self.a}
        match = max_bipartite_matching(list(self.a), comp_adj)
        pairs = sorted(match.items())[:len(shared)]
        if len(pairs) < len(shared):
            raise ContractViolationError(
                "not enough non-adjacent pairs to host the shared colours")
        taken_a = [u for u, _ in pairs]
        taken_b = [w for _, w in pairs]
        for col, u, w in zip(shared, taken_a, taken_b):
            c[u] = col
            c[w] = col
        rest_a = [u for u in self.a if u not in taken_a]
        rest_b = [w for w in self.b if w not in taken_b]
        for u, col in zip(rest_a, [x for x in cols_a if x not in shared]):
            c[u] = col
        for w, col in zip(rest_b, [x for x in cols_b if x not in shared]):
            c[w] = col
        out = Colouring(tuple(c))
        if not verify_colouring(g, out):
            raise ContractViolationError("homogeneous-pair rebuild is improper")
        return out


def reduce_homogeneous_pair(g: Graph, pair: HomogeneousPair,
                            ) -> tuple[Graph, HomogeneousPairReduction]:
    """A proper subgraph g' with chi(g') = chi(g), plus the rebuild recipe."""
    pair.validate(g)
    if not pair.is_nonlinear(g):
        raise InputError("pair is linear; reduction applies to nonlinear pairs")
    a, b = sorted(pair.a), sorted(pair.b)
    comp_adj = {u: [w for w in b if not g.has_edge(u, w)] for u in a}
    match = max_bipartite_matching(a, comp_adj)
    cover_a, cover_b = koenig_cover(a, b, comp_adj, match)
    keep_a = [u for u in a if u not in cover_a]
    keep_b = [w for w in b if w not in cover_b]
    survivors = {(u, w) for u in keep_a for w in keep_b}
    removed = tuple(sorted(
        (u, w) for u in a for w in b
        if g.has_edge(u, w) and (u, w) not in survivors))
    if not removed:
        raise ContractViolationError(
            "nonlinear pair admitted no edge removal; detection is broken")
    g2 = g.with_edges_removed(removed)
    if not is_quasi_line(g2):
        raise ContractViolationError("reduced graph is not quasi-line")
    return g2, HomogeneousPairReduction(tuple(a), tuple(b), removed, g)


@dataclass(frozen=True)
class ReductionStep:
    """One undoable pipeline reduction; replaying the stack rebuilds G."""

    kind: str  # "low-degree" | "clique-cutset" | "homogeneous-pair"
    data: tuple
