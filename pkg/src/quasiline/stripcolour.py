"""Colouring a strip with a prescribed end-clique overlap.

To k-colour a strip S_e so that exactly r colours appear in both
end-cliques, append three cliques V_A, V_C, V_B (sizes |X|-r,
k-|X|-|Y|+r, |Y|-r) to the right of the strip and complete the three
index windows Y u V_A u V_C, V_A u V_C u V_B and V_C u V_B u X into
cliques; the last window wraps around, so the auxiliary graph F_e is a
circular interval graph.  Any proper colouring of F_e with at most k
colours, restricted to the strip, has exactly r both-end colours: fewer
would starve the clique V_C, more would starve V_A u V_C u V_B.

Failure to k-colour F_e means no fractional k-colouring of the strip
with overlap r exists, which the pipeline guarantees upstream, so it is
reported as a contract violation rather than handled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import Strip
from .errors import ContractViolationError, SpecError
from .exact import k_colouring
from .graphs import Colouring, Graph
from .interval import CircularIntervalRep


@dataclass(frozen=True)
class StripColourSpec:
    """Palette size k and required both-end overlap r.

    Feasibility beyond nonnegative window sizes (e.g. k >= omega(S_e), or
    the existence of a fractional k-colouring with overlap r) is not
    checked here; an infeasible but size-valid spec surfaces as a budget
    failure when F_e is coloured.
    """

    k: int
    r: int


def _window_sizes(strip: Strip, spec: StripColourSpec) -> tuple[int, int, int]:
    x, y = strip.x_size, strip.y_size
    va = x - spec.r
    vc = spec.k - x - y + spec.r
    vb = y - spec.r
    if spec.r < 0 or va < 0 or vb < 0 or vc < 0:
        raise SpecError(
            f"infeasible spec k={spec.k}, r={spec.r} for |X|={x}, |Y|={y}: "
            f"window sizes ({va}, {vc}, {vb}) must be nonnegative")
    return va, vc, vb


def build_Fe(strip: Strip, spec: StripColourSpec) -> tuple[Graph, CircularIntervalRep]:
    """The auxiliary circular interval graph, with its representation.

    Vertices 0..n-1 are the strip's own (local) vertices; the blocks
    V_A, V_C, V_B follow in that order.
    """
    va, vc, vb = _window_sizes(strip, spec)
    n = strip.graph.n
    total = n + va + vc + vb
    a_block = list(range(n, n + va))
    c_block = list(range(n + va, n + va + vc))
    b_block = list(range(n + va + vc, total))

    edges = set(map(tuple, map(sorted, strip.graph.edges())))

    def complete(block: list[int]):
        for i, u in enumerate(block):
            for v in block[i + 1:]:
                edges.add((min(u, v), max(u, v)))

    x_vs = list(strip.x_local())
    y_vs = list(strip.y_local())
    complete(y_vs + a_block + c_block)   # I_X
    complete(a_block + c_block + b_block)  # I_C
    complete(c_block + b_block + x_vs)   # I_Y (wraps around the circle)
    fe = Graph.from_edges(total, sorted(edges))

    # positions: strip order first, then the A, C, B blocks
    order = tuple(strip.rep.order) + tuple(a_block) + tuple(c_block) + tuple(b_block)
    arcs = [(a, b) for a, b in strip.rep.cliques]
    pa, pc, pb = n, n + va, n + va + vc  # block start positions
    if vc + va > 0:
        arcs.append((n - strip.y_size, pb - 1))          # I_X
    if va + vc + vb >= 2:
        arcs.append((pa, total - 1))                     # I_C
    arcs.append((pc, strip.x_size - 1) if vc + vb > 0
                else (0, strip.x_size - 1))              # I_Y
    cleaned = _maximal_arcs(arcs, total)
    rep = CircularIntervalRep(order, cleaned)
    if not rep.is_valid_for(fe):
        raise ContractViolationError("constructed F_e representation is invalid")
    return fe, rep


def _maximal_arcs(arcs: list[tuple[int, int]], n: int) -> tuple[tuple[int, int], ...]:
    def positions(arc):
        a, b = arc
        if a <= b:
            return frozenset(range(a, b + 1))
        return frozenset(range(a, n)) | frozenset(range(0, b + 1))

    pos = [positions(a) for a in arcs]
    keep = []
    for i, p in enumerate(pos):
        if any(p < q for q in pos):
            continue
        if p in [pos[j] for j in keep]:
            continue
        keep.append(i)
    return tuple(sorted(arcs[i] for i in keep))


def colour_strip(strip: Strip, spec: StripColourSpec) -> Colouring:
    """A proper k-colouring of the strip with exactly r both-end colours.

    Colours are renamed to 0..k-1 with the both-end colours first, then
    X-only, then Y-only, then the rest; stable for the merge step.
    """
    fe, _ = build_Fe(strip, spec)
    witness = k_colouring(fe, spec.k)
    if witness is None:
        raise ContractViolationError(
            f"F_e is not {spec.k}-colourable: no fractional {spec.k}-colouring "
            f"of the strip with overlap {spec.r} exists")
    n = strip.graph.n
    local = witness.assignment[:n]
    x_cols = {local[v] for v in strip.x_local()}
    y_cols = {local[v] for v in strip.y_local()}
    both = sorted(x_cols & y_cols)
    if len(both) != spec.r:
        raise ContractViolationError(
            f"F_e colouring yields {len(both)} shared colours, wanted {spec.r}")
    ordered = (both + sorted(x_cols - set(both)) + sorted(y_cols - set(both))
               + sorted(set(local) - x_cols - y_cols))
    rename = {c: i for i, c in enumerate(ordered)}
    return Colouring(tuple(rename[c] for c in local))
