"""Hub-graph colouring via contraction to a line graph.

Every strip contracts to a clique S'_e of size |X_e|+|Y_e|-w_e whose
first |X_e| vertices form X'_e and last |Y_e| form Y'_e, overlapping in
w_e shared vertices.  The contracted graph G' is the line graph of the
multigraph H' obtained by adding a vertex v_e per H-edge and putting
w_e parallel edges x_e-y_e, |X_e|-w_e edges x_e-v_e and |Y_e|-w_e edges
y_e-v_e.  A fractional colouring of G transfers to G' with the same
total weight, certifying chi_f(G') <= t'(G) and hence chi(G') <= t(G);
an exact search within budget t therefore must succeed.

Lifting a G'-colouring back to the hub graph matches the w_e shared
colours of each strip onto non-adjacent X_e/Y_e pairs (a matching in the
bipartite complement), and the final merge renames each strip colouring
onto the hub palette by colour type: both-end to both-end, X-only to
X-only, Y-only to Y-only, and interior-only colours to palette colours
unused on the ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .composition import StripComposition
from .errors import ContractViolationError, InputError
from .exact import exact_clique_number, k_colouring
from .fractional import FractionalColouring, Overlap
from .graphs import Colouring, Graph, Multigraph, verify_colouring
from .matching import max_bipartite_matching


@dataclass(frozen=True)
class Contraction:
    """G' = L(H') plus the S'_e/X'_e/Y'_e bookkeeping per H-edge."""

    gprime: Graph
    hprime: Multigraph
    sprime: tuple[tuple[int, ...], ...]  # per edge: [X-only | shared | Y-only]
    w: tuple[int, ...]
    x_sizes: tuple[int, ...]
    y_sizes: tuple[int, ...]

    def xprime(self, e: int) -> tuple[int, ...]:
        return self.sprime[e][:self.x_sizes[e]]

    def yprime(self, e: int) -> tuple[int, ...]:
        return self.sprime[e][len(self.sprime[e]) - self.y_sizes[e]:]


def contract(comp: StripComposition, overlaps: Overlap) -> "Contraction":
    """Contract every strip to its clique S'_e and build H' and G'=L(H')."""
    if not overlaps.is_integral():
        raise InputError("contract requires integral overlaps")
    h = comp.h
    n_hprime = h.n + len(h.edges)  # one fresh vertex v_e per edge
    hp_edges: list[tuple[int, int]] = []
    sprime: list[tuple[int, ...]] = []
    ws: list[int] = []
    for e, (tail, head) in enumerate(h.edges):
        s = comp.strips[e]
        w = int(overlaps[e])
        if not 0 <= w <= min(s.x_size, s.y_size):
            raise InputError(f"overlap {w} out of range on edge {e}")
        ve = h.n + e
        block = []
        for _ in range(s.x_size - w):
            block.append(len(hp_edges))
            hp_edges.append((tail, ve))
        for _ in range(w):
            block.append(len(hp_edges))
            hp_edges.append((tail, head))
        for _ in range(s.y_size - w):
            block.append(len(hp_edges))
            hp_edges.append((head, ve))
        sprime.append(tuple(block))
        ws.append(w)
    hprime = Multigraph(n_hprime, tuple(hp_edges))
    gprime = hprime.line_graph()
    contraction = Contraction(gprime, hprime, tuple(sprime), tuple(ws),
                              tuple(s.x_size for s in comp.strips),
                              tuple(s.y_size for s in comp.strips))
    for e in range(len(h.edges)):
        block = contraction.sprime[e]
        s = comp.strips[e]
        if len(block) != s.x_size + s.y_size - ws[e]:
            raise ContractViolationError(f"|S'_{e}| wrong")
        if not gprime.is_clique(block):
            raise ContractViolationError(f"S'_{e} is not a clique in G'")
        shared = set(contraction.xprime(e)) & set(contraction.yprime(e))
        if len(shared) != ws[e]:
            raise ContractViolationError(f"|X'_{e} n Y'_{e}| != w_e")
    return contraction


def transfer_fractional(fc: FractionalColouring, contraction: Contraction,
                        comp: StripComposition) -> FractionalColouring:
    """Carry a fractional colouring of G over to G', preserving the total.

    Per strip, the classes meeting both ends cover the shared S'_e
    vertices, X-only classes the X'_e-only vertices, Y-only classes the
    Y'_e-only ones.  Classes are split at slot boundaries so that every
    G'-vertex is covered with weight exactly 1.
    """
    lanes: dict[tuple[int, str], Fraction] = {}
    slots: dict[tuple[int, str], tuple[int, ...]] = {}
    for e in range(len(comp.strips)):
        xo = tuple(v for v in contraction.xprime(e)
                   if v not in contraction.yprime(e))
        sh = tuple(v for v in contraction.xprime(e)
                   if v in contraction.yprime(e))
        yo = tuple(v for v in contraction.yprime(e)
                   if v not in contraction.xprime(e))
        slots[(e, "x")], slots[(e, "both")], slots[(e, "y")] = xo, sh, yo
        for cat in ("x", "both", "y"):
            lanes[(e, cat)] = Fraction(0)

    out: dict[frozenset[int], Fraction] = {}
    for s, weight in fc.classes:
        starts: dict[tuple[int, str], Fraction] = {}
        for e in range(len(comp.strips)):
            hit_x = bool(s & comp.x_vertices(e))
            hit_y = bool(s & comp.y_vertices(e))
            if hit_x and hit_y:
                cat = "both"
            elif hit_x:
                cat = "x"
            elif hit_y:
                cat = "y"
            else:
                continue
            starts[(e, cat)] = lanes[(e, cat)]
            lanes[(e, cat)] += weight
        offsets = {Fraction(0), weight}
        for lane, pos in starts.items():
            k = pos.numerator // pos.denominator + 1
            while Fraction(k) < pos + weight:
                offsets.add(Fraction(k) - pos)
                k += 1
        cuts = sorted(offsets)
        for lo, hi in zip(cuts, cuts[1:]):
            members = []
            for lane, pos in starts.items():
                slot = int(pos + lo)  # floor: slot index this atom covers
                if slot >= len(slots[lane]):
                    raise ContractViolationError(
                        f"lane {lane} overflows its slots; overlaps not integral?")
                members.append(slots[lane][slot])
            key = frozenset(members)
            out[key] = out.get(key, Fraction(0)) + (hi - lo)

    entries = tuple(sorted(out.items(), key=lambda t: tuple(sorted(t[0]))))
    total = sum((w for _, w in entries), Fraction(0))
    result = FractionalColouring(entries, total)
    result.validate(contraction.gprime)
    if result.total != fc.total:
        raise ContractViolationError(
            f"transfer changed the total weight: {result.total} != {fc.total}")
    return result


def colour_gprime(contraction: Contraction, budget: int,
                  node_limit: Optional[int] = None) -> Colouring:
    """Exact colouring of G' with at most `budget` colours.

    chi(G') <= t(G) is guaranteed whenever chi_f(G') <= t'(G), so a miss
    within the budget is a contract violation, not a quality loss.
    """
    g = contraction.gprime
    if g.n == 0:
        return Colouring(())
    lb = exact_clique_number(g, node_limit)
    for k in range(lb, budget + 1):
        witness = k_colouring(g, k, node_limit)
        if witness is not None:
            return witness
    raise ContractViolationError(
        f"G' admits no colouring within budget {budget}")


def lift_to_hub(cg: Colouring, contraction: Contraction, comp: StripComposition,
                overlaps: Overlap) -> dict[int, int]:
    """Colour the hub vertices of G so each edge shares exactly w_e colours.

    Returns {composed-graph vertex: colour} over all end-clique vertices.
    The shared colours of each strip land on a matching of non-adjacent
    X_e/Y_e pairs in the complement; everything else is type-preserving.
    """
    if not verify_colouring(contraction.gprime, cg):
        raise InputError("G' colouring is not proper")
    hub: dict[int, int] = {}
    for e in range(len(comp.strips)):
        w = contraction.w[e]
        cx = sorted({cg.assignment[v] for v in contraction.xprime(e)})
        cy = sorted({cg.assignment[v] for v in contraction.yprime(e)})
        shared = sorted(set(cx) & set(cy))
        if len(shared) != w:
            raise ContractViolationError(
                f"G' colouring shares {len(shared)} colours on edge {e}, not {w}")
        xs = sorted(comp.x_vertices(e))
        ys = sorted(comp.y_vertices(e))
        if comp.strips[e].trivial:
            hub[xs[0]] = shared[0]
            continue
        comp_adj = {u: [v for v in ys if not comp.graph.has_edge(u, v)]
                    for u in xs}
        match = max_bipartite_matching(xs, comp_adj)
        pairs = sorted(match.items())[:w]
        if len(pairs) < w:
            raise ContractViolationError(
                f"complement of X_{e} x Y_{e} has no matching of size {w}")
        taken_x = [u for u, _ in pairs]
        taken_y = [v for _, v in pairs]
        for col, u, v in zip(shared, taken_x, taken_y):
            hub[u] = col
            hub[v] = col
        for u, col in zip([u for u in xs if u not in taken_x],
                          [c for c in cx if c not in shared]):
            hub[u] = col
        for v, col in zip([v for v in ys if v not in taken_y],
                          [c for c in cy if c not in shared]):
            hub[v] = col
    hub_vs = comp.hub_vertex_list()
    induced = comp.graph.induced(hub_vs)
    check = Colouring(tuple(hub[v] for v in hub_vs))
    if not verify_colouring(induced, check):
        raise ContractViolationError("lifted hub colouring is improper")
    return hub


def merge(hub: Mapping[int, int], strip_cols: Mapping[int, Colouring],
          comp: StripComposition, palette: int) -> Colouring:
    """Combine the hub colouring with per-strip colourings into one.

    Per strip, a bijection renames strip colours to hub colours of the
    same type; interior-only strip colours go to palette colours unused
    on that strip's end-cliques, in increasing order.  End-clique
    vertices keep their renamed strip colours, which is sound because
    end-clique vertices are interchangeable outside their strip.
    """
    final = [-1] * comp.graph.n
    for e in range(len(comp.strips)):
        s = comp.strips[e]
        ce = strip_cols[e]
        if len(ce.assignment) != s.graph.n:
            raise InputError(f"strip colouring for edge {e} has wrong length")
        x_local, y_local = set(s.x_local()), set(s.y_local())
        sx = {ce.assignment[v] for v in x_local}
        sy = {ce.assignment[v] for v in y_local}
        sboth = sorted(sx & sy)
        sxo = sorted(sx - sy)
        syo = sorted(sy - sx)
        sn = sorted(set(ce.assignment) - sx - sy)
        hx = {hub[v] for v in comp.x_vertices(e)}
        hy = {hub[v] for v in comp.y_vertices(e)}
        hboth = sorted(hx & hy)
        hxo = sorted(hx - hy)
        hyo = sorted(hy - hx)
        if (len(sboth), len(sxo), len(syo)) != (len(hboth), len(hxo), len(hyo)):
            raise InputError(
                f"edge {e}: strip/hub colour type counts disagree: "
                f"{(len(sboth), len(sxo), len(syo))} vs "
                f"{(len(hboth), len(hxo), len(hyo))}")
        unused = [c for c in range(palette) if c not in hx and c not in hy]
        if len(sn) > len(unused):
            raise InputError(f"edge {e}: not enough spare palette colours")
        mapping = dict(zip(sboth, hboth))
        mapping.update(zip(sxo, hxo))
        mapping.update(zip(syo, hyo))
        mapping.update(zip(sn, unused))
        for local, target in enumerate(comp.embed[e]):
            final[target] = mapping[ce.assignment[local]]
    out = Colouring(tuple(final))
    if not verify_colouring(comp.graph, out):
        raise ContractViolationError("merged colouring is improper")
    if out.palette_size > palette:
        raise ContractViolationError("merged colouring exceeds the palette")
    return out
