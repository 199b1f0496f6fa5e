"""Exact fractional chromatic number by column generation.

The master LP asks for nonnegative weights on stable sets covering each
vertex with total weight exactly 1, minimising the total weight.  The
restricted master starts from the singleton stable sets (an identity
basis), and pricing asks an exact branch-and-bound solver for a
maximum-weight stable set under the current duals; any set of weight
more than 1 enters the pool.  When no such set exists the duals are
feasible for the full dual LP and the restricted optimum is chi_f.

Because the optimum is read off a simplex basis, the positive classes
are incidence-independent and number at most |V| (a basic solution).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Optional, Sequence

from .errors import ContractViolationError, InputError
from .graphs import Graph
from .lp import ONE, PoolSimplex, gaussian_rank


@dataclass(frozen=True)
class FractionalColouring:
    """Weighted stable-set family covering every vertex with weight exactly 1."""

    classes: tuple[tuple[frozenset[int], Fraction], ...]
    total: Fraction

    def coverage(self, v: int) -> Fraction:
        return sum((w for s, w in self.classes if v in s), Fraction(0))

    def validate(self, g: Graph) -> None:
        """Exact validity check; raises ContractViolationError on failure."""
        for s, w in self.classes:
            if w <= 0:
                raise ContractViolationError("nonpositive class weight")
            if not g.is_stable(sorted(s)):
                raise ContractViolationError(f"class {sorted(s)} is not stable")
        for v in range(g.n):
            if self.coverage(v) != 1:
                raise ContractViolationError(
                    f"vertex {v} covered with weight {self.coverage(v)} != 1")
        if sum((w for _, w in self.classes), Fraction(0)) != self.total:
            raise ContractViolationError("total weight mismatch")

    def incidence_rows(self, n: int) -> list[list[Fraction]]:
        return [[ONE if v in s else Fraction(0) for v in range(n)]
                for s, _ in self.classes]


def _sorted_classes(entries) -> tuple[tuple[frozenset[int], Fraction], ...]:
    return tuple(sorted(entries, key=lambda t: tuple(sorted(t[0]))))


def max_weight_stable_set(g: Graph, weights: Sequence[Fraction] | Mapping[int, Fraction],
                          ) -> frozenset[int]:
    """An exact maximum-weight stable set under nonnegative weights.

    Branch and bound over bitmasks with a greedy clique-cover bound
    (each clique of the cover contributes at most its heaviest vertex),
    which is what makes dense quasi-line instances fast.
    """
    if isinstance(weights, Mapping):
        w = [Fraction(weights.get(v, 0)) for v in range(g.n)]
    else:
        w = [Fraction(x) for x in weights]
        if len(w) != g.n:
            raise InputError("weight vector length mismatch")
    if any(x < 0 for x in w):
        raise InputError("weights must be nonnegative")
    if g.n == 0:
        return frozenset()
    denom = lcm(*[x.denominator for x in w]) if w else 1
    wi = [int(x * denom) for x in w]
    bits = g.adj_bits()
    order = sorted(range(g.n), key=lambda v: (-wi[v], v))

    best_set = 0
    best_val = -1

    def cover_bound(p: int) -> int:
        # greedy clique cover of p; bound = sum of per-clique maxima
        total = 0
        rest = p
        while rest:
            v = next(u for u in order if (rest >> u) & 1)
            clique = 1 << v
            cand = rest & bits[v]
            while cand:
                u = next(x for x in order if (cand >> x) & 1)
                clique |= 1 << u
                cand &= bits[u]
            total += wi[v]  # order is weight-descending: v is the max
            rest &= ~clique
        return total

    def bb(p: int, cur_set: int, cur_val: int):
        nonlocal best_set, best_val
        if cur_val > best_val:
            best_val, best_set = cur_val, cur_set
        if not p:
            return
        if cur_val + cover_bound(p) <= best_val:
            return
        v = next(u for u in order if (p >> u) & 1)
        bb(p & ~bits[v] & ~(1 << v), cur_set | (1 << v), cur_val + wi[v])
        bb(p & ~(1 << v), cur_set, cur_val)

    bb((1 << g.n) - 1, 0, 0)
    return frozenset(v for v in range(g.n) if (best_set >> v) & 1)


def fractional_chromatic(g: Graph) -> tuple[Fraction, FractionalColouring]:
    """Exact chi_f(g) and an optimal basic fractional colouring."""
    if g.n == 0:
        raise InputError("fractional_chromatic requires a nonempty graph")
    lp = PoolSimplex([ONE] * g.n)
    pool: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()

    def add(s: frozenset[int]):
        col = [ONE if v in s else Fraction(0) for v in range(g.n)]
        lp.add_column(col, ONE)
        pool.append(s)
        seen.add(s)

    for v in range(g.n):
        add(frozenset((v,)))

    while True:
        total = lp.solve()
        y = lp.duals()
        clamped = [x if x > 0 else Fraction(0) for x in y]
        s = max_weight_stable_set(g, clamped)
        candidate = frozenset(v for v in s if y[v] > 0)
        value = sum((y[v] for v in candidate), Fraction(0))
        if value <= 1:
            break
        if candidate in seen:
            raise ContractViolationError("pricing returned an existing column")
        add(candidate)

    entries = [(pool[j], w) for j, w in sorted(lp.solution().items())]
    fc = FractionalColouring(_sorted_classes(entries),
                             sum((w for _, w in entries), Fraction(0)))
    fc.validate(g)
    if fc.total != total:
        raise ContractViolationError("objective does not match class weights")
    if len(fc.classes) > g.n:
        raise ContractViolationError("basic solution has more classes than vertices")
    if gaussian_rank(fc.incidence_rows(g.n)) != len(fc.classes):
        raise ContractViolationError("basic solution classes are dependent")
    return total, fc


@dataclass(frozen=True)
class Overlap:
    """Per-h-edge weight of colour classes meeting both end-cliques."""

    values: tuple[Fraction, ...]

    def __getitem__(self, e: int) -> Fraction:
        return self.values[e]

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.values)

    def floors(self) -> tuple[int, ...]:
        return tuple(w.numerator // w.denominator for w in self.values)


def compute_overlaps(fc: FractionalColouring, comp) -> Overlap:
    """w_e = total weight of classes meeting both X_e and Y_e, per edge."""
    values = []
    for e in range(len(comp.h.edges)):
        xs = comp.x_vertices(e)
        ys = comp.y_vertices(e)
        w = sum((wt for s, wt in fc.classes if (s & xs) and (s & ys)), Fraction(0))
        if not 0 <= w <= min(len(xs), len(ys)):
            raise ContractViolationError(f"overlap {w} out of range on edge {e}")
        if comp.strips[e].trivial and w != 1:
            raise ContractViolationError(
                f"trivial edge {e} must have overlap 1, got {w}")
        values.append(w)
    return Overlap(tuple(values))
