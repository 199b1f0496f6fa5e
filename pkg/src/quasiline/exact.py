"""Exact combinatorial oracles: chromatic number and clique number.

These are the ground-truth solvers the rest of the pipeline leans on.
Instances are desk scale (<= ~60 vertices), so exactness is cheap; what
matters is that a negative answer means "no solution exists", never
"gave up".  A configured node limit separates the two outcomes: hitting
it raises ResourceLimitError instead of returning a verdict.

Chromatic search is DSATUR-ordered branch and bound over bitmask
adjacency, seeded with an exact maximum clique (computed by a
Tomita-style branch and bound with a greedy-colouring bound).
"""

from __future__ import annotations

from typing import Optional

from .errors import InputError, QuasilineError, ResourceLimitError
from .graphs import Colouring, Graph

DEFAULT_NODE_LIMIT = 5_000_000


class InfeasibleAtBudget(QuasilineError):
    """The graph has no colouring within the requested budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"no proper colouring with at most {budget} colours")


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: Optional[int]):
        self.nodes = 0
        self.limit = limit if limit is not None else DEFAULT_NODE_LIMIT

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise ResourceLimitError(
                f"exact search exceeded node limit of {self.limit}")


def max_clique(g: Graph, node_limit: Optional[int] = None) -> list[int]:
    """An exact maximum clique, as a sorted vertex list."""
    if g.n == 0:
        return []
    bits = g.adj_bits()
    counter = _Counter(node_limit)
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    best: list[int] = []

    def greedy_classes(p: int) -> list[tuple[int, int]]:
        # (vertex, colour-class index), class index non-decreasing
        out = []
        classes: list[int] = []
        for v in order:
            if not (p >> v) & 1:
                continue
            placed = False
            for i, mask in enumerate(classes):
                if not (mask & bits[v]):
                    classes[i] |= 1 << v
                    out.append((v, i))
                    placed = True
                    break
            if not placed:
                classes.append(1 << v)
                out.append((v, len(classes) - 1))
        out.sort(key=lambda t: t[1])
        return out

    def expand(r: list[int], p: int):
        nonlocal best
        counter.tick()
        if p == 0:
            if len(r) > len(best):
                best = r[:]
            return
        seq = greedy_classes(p)
        for v, ci in reversed(seq):
            if len(r) + ci + 1 <= len(best):
                return
            r.append(v)
            expand(r, p & bits[v])
            r.pop()
            p &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(best)


def exact_clique_number(g: Graph, node_limit: Optional[int] = None) -> int:
    """omega(g), exactly."""
    return len(max_clique(g, node_limit))


def _dsatur_greedy(g: Graph) -> Colouring:
    bits = g.adj_bits()
    n = g.n
    colour = [-1] * n
    sat = [0] * n  # bitmask of colours present in the neighbourhood
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] == -1),
                key=lambda u: (bin(sat[u]).count("1"), len(g.adj[u]), -u))
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colour[v] = c
        for w in range(n):
            if (bits[v] >> w) & 1:
                sat[w] |= 1 << c
    return Colouring(tuple(colour))


def k_colouring(g: Graph, k: int,
                node_limit: Optional[int] = None) -> Optional[Colouring]:
    """A proper colouring with at most k colours, or None if none exists.

    None is a definitive verdict: the search space was exhausted.
    """
    if k < 0:
        raise InputError("colour budget must be nonnegative")
    if g.n == 0:
        return Colouring(())
    if k == 0:
        return None
    bits = g.adj_bits()
    n = g.n
    counter = _Counter(node_limit)

    clique = max_clique(g, node_limit)
    if len(clique) > k:
        return None

    colour = [-1] * n
    sat = [0] * n
    used = 0
    for i, v in enumerate(clique):
        colour[v] = i
        used = i + 1
        for w in range(n):
            if (bits[v] >> w) & 1:
                sat[w] |= 1 << i

    uncoloured = [v for v in range(n) if colour[v] == -1]

    def search(used: int, remaining: int) -> bool:
        counter.tick()
        if remaining == 0:
            return True
        # DSATUR: most saturated first, then highest degree, then lowest index
        v = max((u for u in uncoloured if colour[u] == -1),
                key=lambda u: (bin(sat[u]).count("1"), len(g.adj[u]), -u))
        cap = min(k, used + 1)
        allowed = ~sat[v] & ((1 << cap) - 1)
        while allowed:
            c = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            colour[v] = c
            touched = []
            for w in range(n):
                if (bits[v] >> w) & 1 and not (sat[w] >> c) & 1:
                    sat[w] |= 1 << c
                    touched.append(w)
            if search(max(used, c + 1), remaining - 1):
                return True
            colour[v] = -1
            for w in touched:
                sat[w] &= ~(1 << c)
        return False

    if search(used, len(uncoloured)):
        return Colouring(tuple(colour))
    return None


def exact_chromatic(g: Graph, budget: Optional[int] = None,
                    node_limit: Optional[int] = None) -> tuple[int, Colouring]:
    """chi(g) with a witness colouring.

    With a budget, raises InfeasibleAtBudget as soon as chi(g) > budget is
    certain.  A ResourceLimitError means neither verdict was reached.
    """
    if g.n == 0:
        raise InputError("exact_chromatic requires a nonempty graph")
    lb = exact_clique_number(g, node_limit)
    greedy = _dsatur_greedy(g)
    ub = greedy.palette_size
    if budget is not None and budget < lb:
        raise InfeasibleAtBudget(budget)
    if lb == ub:
        return ub, greedy
    k = lb
    while True:
        if budget is not None and k > budget:
            raise InfeasibleAtBudget(budget)
        if k >= ub:
            return ub, greedy
        witness = k_colouring(g, k, node_limit)
        if witness is not None:
            return k, witness
        k += 1
