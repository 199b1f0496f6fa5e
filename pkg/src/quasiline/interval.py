"""Linear and circular interval representations: recognition and colouring.

A linear interval (proper interval) order is a vertex order in which
every closed neighbourhood occupies consecutive positions.  Recognition
works by forcing: fix a candidate leftmost vertex, then the next vertex
is always the unplaced neighbour of the current end whose placed
neighbourhood is the longest suffix, with nested closed neighbourhoods
breaking ties.  For a twin-free connected proper interval graph the
correct seed forces the true order, and ties only arise between true
twins, so trying every seed is a complete recognizer.  The circular case
seeds an ordered adjacent pair and forces the chain around the circle,
allowing the wrapped prefix of the order as extra neighbours.

Either way the result is never trusted: a representation is returned
only if re-deriving the adjacency from its ranges reproduces the input
graph exactly, so an accepted representation is always valid.

Colouring a circular interval graph targets ceil(chi_f) colours with an
exact budgeted search; feasibility at that budget is a theorem for this
class, so failure raises a contract violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ContractViolationError, InputError
from .exact import k_colouring
from .graphs import Colouring, Graph


@dataclass(frozen=True)
class LinearIntervalRep:
    """order[i] = vertex at position i; cliques are inclusive position ranges."""

    order: tuple[int, ...]
    cliques: tuple[tuple[int, int], ...]

    def adjacency(self) -> set[frozenset[int]]:
        pairs: set[frozenset[int]] = set()
        for a, b in self.cliques:
            for i in range(a, b + 1):
                for j in range(i + 1, b + 1):
                    pairs.add(frozenset((self.order[i], self.order[j])))
        return pairs

    def is_valid_for(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        return self.adjacency() == {frozenset(e) for e in g.edges()}


@dataclass(frozen=True)
class CircularIntervalRep:
    """Cyclic order plus arcs.

    An arc (a, b) covers positions a..b inclusive, wrapping past the end
    when a > b.  Wrap-free representations have a <= b in every arc.
    """

    order: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]

    def arc_positions(self, arc: tuple[int, int]) -> list[int]:
        n = len(self.order)
        a, b = arc
        if a <= b:
            return list(range(a, b + 1))
        return list(range(a, n)) + list(range(0, b + 1))

    def adjacency(self) -> set[frozenset[int]]:
        pairs: set[frozenset[int]] = set()
        for arc in self.arcs:
            pos = self.arc_positions(arc)
            for i in range(len(pos)):
                for j in range(i + 1, len(pos)):
                    pairs.add(frozenset((self.order[pos[i]], self.order[pos[j]])))
        return pairs

    def is_valid_for(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        return self.adjacency() == {frozenset(e) for e in g.edges()}

    def is_wrap_free(self) -> bool:
        return all(a <= b for a, b in self.arcs)


def serialize_rep(rep: CircularIntervalRep) -> str:
    """Stage-dump text form: vertices and positions are 1-based."""
    lines = ["order: " + " ".join(str(v + 1) for v in rep.order)]
    lines.extend(f"arc: {a + 1} {b + 1}" for a, b in rep.arcs)
    return "\n".join(lines) + "\n"


def _force_chain_linear(g: Graph, seed: int, vertices: list[int]) -> Optional[list[int]]:
    """Forced placement left to right starting from `seed`; None if stuck."""
    closed = {v: g.adj[v] | {v} for v in vertices}
    placed = [seed]
    pos = {seed: 0}
    unplaced = set(vertices) - {seed}
    while unplaced:
        last = placed[-1]
        best = None
        best_key = None
        for w in sorted(unplaced & g.adj[last]):
            ps = sorted(pos[x] for x in g.adj[w] if x in pos)
            # placed neighbours must be a contiguous suffix ending at `last`
            if ps != list(range(ps[0], len(placed))):
                continue
            key = ps[0]
            if best is None or key < best_key:
                best, best_key = w, key
            elif key == best_key:
                if closed[w] < closed[best]:
                    best = w
                elif not (closed[best] <= closed[w] or closed[w] <= closed[best]):
                    return None  # incomparable ties: not an interval order from here
        if best is None:
            return None
        pos[best] = len(placed)
        placed.append(best)
        unplaced.discard(best)
    return placed


def _neighbourhoods_consecutive(g: Graph, order: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        ps = sorted(pos[w] for w in g.adj[v] | {v})
        if ps != list(range(ps[0], ps[0] + len(ps))):
            return False
    return True


def _ranges_from_order(g: Graph, order: list[int]) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    reach = []
    for i, v in enumerate(order):
        rs = [pos[w] for w in g.adj[v]] + [i]
        reach.append(max(rs))
    ranges = []
    for i in range(n):
        if i == 0 or reach[i - 1] < reach[i]:
            ranges.append((i, reach[i]))
    return ranges


def recognize_linear_interval(g: Graph) -> Optional[LinearIntervalRep]:
    """A valid linear interval representation, or None."""
    if g.n == 0:
        return LinearIntervalRep((), ())
    full_order: list[int] = []
    for comp in g.components():
        found = None
        for seed in comp:
            order = _force_chain_linear(g, seed, comp)
            if order is not None and _neighbourhoods_consecutive(g, order):
                found = order
                break
        if found is None:
            return None
        full_order.extend(found)
    rep = LinearIntervalRep(tuple(full_order),
                            tuple(_ranges_from_order(g, full_order)))
    if not rep.is_valid_for(g):
        return None
    return rep


def _clique_runs(g: Graph, order: list[int]) -> list[tuple[int, int]]:
    """Maximal circular runs of consecutive positions that induce cliques."""
    n = len(order)
    lengths = []
    for i in range(n):
        ln = 1
        while ln < n:
            v = order[(i + ln) % n]
            if all(g.has_edge(v, order[(i + j) % n]) for j in range(ln)):
                ln += 1
            else:
                break
        lengths.append(ln)
    runs = []
    possets = []
    for i in range(n):
        posset = frozenset((i + j) % n for j in range(lengths[i]))
        runs.append((i, (i + lengths[i] - 1) % n))
        possets.append(posset)
    keep = []
    for i in range(n):
        if not any(j != i and possets[i] < possets[j] for j in range(n)) \
                and possets[i] not in [possets[j] for j in keep]:
            keep.append(i)
    return [runs[i] for i in sorted(keep)]


def _cyclic_order_valid(g: Graph, order: list[int]) -> bool:
    """Every edge must sit inside some consecutive circular clique run."""
    n = len(order)
    covered: set[frozenset[int]] = set()
    for i in range(n):
        run = [order[i]]
        for step in range(1, n):
            v = order[(i + step) % n]
            if all(g.has_edge(v, u) for u in run):
                for u in run:
                    covered.add(frozenset((u, v)))
                run.append(v)
            else:
                break
    return all(frozenset(e) in covered for e in g.edges())


def _force_chain_cyclic(g: Graph, v1: int, v2: int,
                        node_cap: int) -> Optional[list[int]]:
    """DFS around the circle from the seeded consecutive pair (v1, v2).

    A candidate's placed neighbours must form a suffix of the placed order
    plus an optional wrapped prefix.  The next vertex is almost always the
    candidate with the longest suffix, but a vertex destined for the end
    of the circle can look identical early on (its forward run wraps onto
    the placed prefix), so the search branches over the narrow ambiguous
    set: minimal suffix-start candidates plus the full-coverage ones.
    """
    budget = [node_cap]

    def candidates(placed: list[int], pos: dict[int, int],
                   unplaced: set[int]) -> list[tuple[int, int]]:
        last = placed[-1]
        k = len(placed)
        out = []
        for w in sorted(unplaced & g.adj[last]):
            ps = {pos[x] for x in g.adj[w] if x in pos}
            suffix_start = k - 1
            while suffix_start - 1 >= 0 and suffix_start - 1 in ps:
                suffix_start -= 1
            prefix = {p for p in ps if p < suffix_start}
            if ps != prefix | set(range(suffix_start, k)):
                continue
            if prefix != set(range(len(prefix))):
                continue  # wrapped part must be a prefix of the order
            out.append((suffix_start, w))
        return out

    def dfs(placed: list[int], pos: dict[int, int],
            unplaced: set[int]) -> Optional[list[int]]:
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        if not unplaced:
            return placed if _cyclic_order_valid(g, placed) else None
        cands = candidates(placed, pos, unplaced)
        if not cands:
            return None
        min_key = min(key for key, _ in cands)
        branch = [w for key, w in cands if key == min_key or key == 0]
        for w in branch:
            placed.append(w)
            pos[w] = len(placed) - 1
            unplaced.discard(w)
            found = dfs(placed, pos, unplaced)
            if found is not None:
                return found
            unplaced.add(w)
            del pos[w]
            placed.pop()
        return None

    return dfs([v1, v2], {v1: 0, v2: 1}, set(range(g.n)) - {v1, v2})


def recognize_circular_interval(g: Graph) -> Optional[CircularIntervalRep]:
    """A valid circular interval representation, or None.

    Wrap-free representations are preferred: if the graph is a linear
    interval graph, its linear order is returned with line-style arcs.
    """
    linear = recognize_linear_interval(g)
    if linear is not None:
        rep = CircularIntervalRep(linear.order, linear.cliques)
        return rep if rep.is_valid_for(g) else None
    if not g.is_connected():
        return None  # disconnected circular interval graphs are linear
    from .graphs import is_quasi_line
    if not is_quasi_line(g):
        return None  # circular interval graphs are quasi-line
    node_cap = 60 * g.n + 200
    for v1 in range(g.n):
        for v2 in sorted(g.adj[v1]):
            order = _force_chain_cyclic(g, v1, v2, node_cap)
            if order is None:
                continue
            rep = CircularIntervalRep(tuple(order), tuple(_clique_runs(g, order)))
            if rep.is_valid_for(g):
                return rep
    return None


def colour_circular_interval(g: Graph, rep: CircularIntervalRep) -> Colouring:
    """An optimal colouring with exactly ceil(chi_f(g)) colours.

    chi = ceil(chi_f) holds for every circular interval graph, so the
    budgeted exact search must succeed; a miss is a contract violation.
    """
    from .fractional import fractional_chromatic

    if not rep.is_valid_for(g):
        raise InputError("representation does not match the graph")
    if g.n == 0:
        return Colouring(())
    chi_f, _ = fractional_chromatic(g)
    k = -(-chi_f.numerator // chi_f.denominator)  # ceil of a Fraction
    witness = k_colouring(g, k)
    if witness is None:
        raise ContractViolationError(
            f"circular interval graph not {k}-colourable; ceil(chi_f)={k}")
    return witness
