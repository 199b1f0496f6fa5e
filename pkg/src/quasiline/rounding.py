"""Rounding a fractional colouring so every strip overlap is integral.

One rounding pass handles a set E1 of nontrivial H-edges no two of which
leave the same H-vertex.  For each such edge the pass picks classes
meeting both end-cliques of total weight exactly frac(w_e) (splitting
one class in two if needed), removes their X_e vertex, and refills the
lost coverage with fresh classes.  The refill lays each edge's removed
(vertex, weight) pairs on the half-open interval [0, frac_e) and cuts at
the union of all breakpoints: the class for a segment holds, for every
edge still active there, the X_e vertex active on that segment.  The
X_e's of E1 are pairwise disjoint with no edges between them, so these
classes are stable, and the added weight is max_e frac_e < 1.

Edges are grouped into passes by an out-edge labelling with D(H) labels
(no two edges out of one vertex share a label), so the total growth is
at most D(H), which the robustness budget caps at sqrt(omega)/3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .composition import StripComposition
from .errors import ContractViolationError, InputError, StructuralError
from .fractional import FractionalColouring, Overlap, compute_overlaps
from .graphs import Bounds, Multigraph


@dataclass(frozen=True)
class OutEdgeLabelling:
    """label[e] in 1..d_max for nontrivial edges, None for trivial ones;
    no two edges out of one vertex share a label."""

    label: tuple[Optional[int], ...]
    d_of: tuple[int, ...]
    d_max: int

    def edges_with_label(self, ell: int) -> list[int]:
        return [e for e, l in enumerate(self.label) if l == ell]


def label_out_edges(h: Multigraph, trivial: Sequence[bool]) -> OutEdgeLabelling:
    """Greedy labelling: enumerate the nontrivial edges out of each vertex."""
    if len(trivial) != len(h.edges):
        raise InputError("trivial-flag count does not match edge count")
    label: list[Optional[int]] = [None] * len(h.edges)
    d_of = [0] * h.n
    for v in range(h.n):
        nxt = 1
        for e in h.out_edges(v):
            if trivial[e]:
                continue
            label[e] = nxt
            nxt += 1
        d_of[v] = nxt - 1
    return OutEdgeLabelling(tuple(label), tuple(d_of),
                            max(d_of) if d_of else 0)


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def round_class(fc: FractionalColouring, e1: Sequence[int],
                comp: StripComposition, overlaps: Overlap) -> FractionalColouring:
    """Floor w_e for every e in E1 at the cost of at most max frac(w_e) < 1."""
    tails = [comp.h.edges[e][0] for e in e1]
    if len(set(tails)) != len(tails):
        raise InputError("two E1 edges leave the same H-vertex")
    for e in e1:
        if comp.strips[e].trivial:
            raise InputError(f"edge {e} is trivial; E1 must be nontrivial edges")

    classes: list[tuple[frozenset[int], Fraction]] = list(fc.classes)
    removed: dict[int, list[tuple[int, Fraction]]] = {}
    fracs: dict[int, Fraction] = {}

    for e in sorted(e1):
        frac_e = _frac(overlaps[e])
        if frac_e == 0:
            continue
        fracs[e] = frac_e
        xs, ys = comp.x_vertices(e), comp.y_vertices(e)
        todo = frac_e
        schedule: list[tuple[int, Fraction]] = []
        out: list[tuple[frozenset[int], Fraction]] = []
        for s, w in classes:
            if todo > 0 and (s & xs) and (s & ys):
                take = min(w, todo)
                (x,) = sorted(s & xs)  # X_e is a clique: exactly one vertex
                schedule.append((x, take))
                out.append((s - {x}, take))
                if w > take:  # split the class; the remainder keeps x
                    out.append((s, w - take))
                todo -= take
            else:
                out.append((s, w))
        if todo != 0:
            raise ContractViolationError(
                f"could not collect weight {frac_e} of both-end classes on edge {e}")
        removed[e] = schedule
        classes = out

    if not fracs:
        return fc

    # shared refill: one family of stable sets covers every edge's losses
    breakpoints = {Fraction(0)}
    for e, schedule in removed.items():
        acc = Fraction(0)
        for _, w in schedule:
            acc += w
            breakpoints.add(acc)
    cuts = sorted(breakpoints)
    for lo, hi in zip(cuts, cuts[1:]):
        members = []
        for e in sorted(fracs):
            if fracs[e] > lo:
                acc = Fraction(0)
                for x, w in removed[e]:
                    if acc <= lo < acc + w:
                        members.append(x)
                        break
                    acc += w
        if not members:
            continue
        if not comp.graph.is_stable(members):
            raise ContractViolationError(
                f"refill class {members} is not stable; X_e's must be anticomplete")
        classes.append((frozenset(members), hi - lo))

    merged: dict[frozenset[int], Fraction] = {}
    for s, w in classes:
        if w != 0 and s:
            merged[s] = merged.get(s, Fraction(0)) + w
    entries = sorted(merged.items(), key=lambda t: tuple(sorted(t[0])))
    total = sum((w for _, w in entries), Fraction(0))
    result = FractionalColouring(tuple(entries), total)
    result.validate(comp.graph)
    if result.total > fc.total + 1:
        raise ContractViolationError("rounding pass added a full colour or more")
    return result


def round_all(fc: FractionalColouring, comp: StripComposition,
              bounds: Bounds) -> FractionalColouring:
    """Apply one rounding pass per label class; every overlap ends integral.

    Requires a normalized composition (|X_e| <= |Y_e|) whose rounding
    budget fits: D(H) <= sqrt(omega)/3, i.e. 9*D(H)^2 <= omega.
    """
    for e, s in enumerate(comp.strips):
        if s.x_size > s.y_size:
            raise InputError(f"edge {e} not normalized: |X|={s.x_size} > |Y|={s.y_size}")
    trivial = [s.trivial for s in comp.strips]
    labelling = label_out_edges(comp.h, trivial)
    d = labelling.d_max
    if 9 * d * d > bounds.omega:
        raise StructuralError(
            f"D(H)={d} exceeds sqrt(omega)/3 with omega={bounds.omega}; "
            "the composition is not robust enough to round")
    original = compute_overlaps(fc, comp)
    current = fc
    for ell in range(1, d + 1):
        e1 = labelling.edges_with_label(ell)
        overlaps = compute_overlaps(current, comp)
        current = round_class(current, e1, comp, overlaps)
    final = compute_overlaps(current, comp)
    if not final.is_integral():
        raise ContractViolationError("rounding left a fractional overlap")
    for e in range(len(comp.strips)):
        want = original[e] if comp.strips[e].trivial \
            else Fraction(original.floors()[e])
        if final[e] != want:
            raise ContractViolationError(
                f"overlap on edge {e} is {final[e]}, expected {want}")
    if not bounds.leq_t_prime(current.total):
        raise ContractViolationError(
            f"rounded total {current.total} exceeds t'(G)")
    return current
