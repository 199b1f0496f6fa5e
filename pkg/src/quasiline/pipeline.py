"""The end-to-end colouring algorithm.

A raw quasi-line graph is reduced until robust: strip a low-degree
vertex, reduce a nonlinear homogeneous pair, or split on a clique
cutset, repeated to a fixed point in that order.  t(G) is computed once
from the original graph and reused throughout; every reduction produces
subgraphs, and chi_f only ever shrinks on subgraphs, so the original
budget remains valid.  A robust graph is then either a recognizable
circular interval graph (coloured optimally with ceil(chi_f) colours) or
must be a composition of strips (given as input, or recovered by the
limited detector), coloured by the six-step pipeline: fractional
colouring, overlap rounding, contraction, G' colouring, hub lift,
per-strip colouring, merge.

Composition input skips the reductions: they would invalidate the
supplied decomposition, and the six-step machinery only needs the
rounding budget D(H) <= sqrt(omega)/3, which is checked exactly.  If
that budget fails, the expanded graph re-enters the generic path.
"""

from __future__ import annotations

from typing import Optional, Union

from .composition import StripComposition, detect_strip_decomposition, normalize
from .errors import (ContractViolationError, DecompositionRequiredError,
                     InputError, StructuralError)
from .exact import exact_clique_number
from .fractional import FractionalColouring, compute_overlaps, fractional_chromatic
from .graphs import Bounds, Colouring, Graph, is_quasi_line, verify_colouring
from .hubcolour import colour_gprime, contract, lift_to_hub, merge, transfer_fractional
from .interval import colour_circular_interval, recognize_circular_interval
from .reductions import (find_clique_cutset, find_low_degree,
                         find_nonlinear_homogeneous_pair, reduce_homogeneous_pair)
from .rounding import round_all
from .stripcolour import StripColourSpec, colour_strip


def compute_bounds(g: Graph) -> tuple[Bounds, FractionalColouring]:
    chi_f, fc = fractional_chromatic(g)
    omega = exact_clique_number(g)
    return Bounds(omega, chi_f), fc


def colour_quasi_line(inp: Union[Graph, StripComposition]) -> Colouring:
    """A proper colouring with at most t(G) = floor(chi_f + 3 sqrt(chi_f))
    colours, where chi_f is exact and taken from the original input graph."""
    if isinstance(inp, StripComposition):
        comp = normalize(inp)
        g = comp.graph
        if g.n == 0:
            return Colouring(())
        bounds, fc = compute_bounds(g)
        try:
            colouring = colour_composition(comp, fc, bounds)
        except StructuralError:
            # rounding budget failed: composition too degenerate, treat as raw
            colouring = _colour_graph(g, bounds.t)
    else:
        g = inp
        if g.n == 0:
            return Colouring(())
        if not is_quasi_line(g):
            raise InputError("input graph is not quasi-line")
        bounds, _ = compute_bounds(g)
        colouring = _colour_graph(g, bounds.t)
    if not verify_colouring(g, colouring):
        raise ContractViolationError("pipeline produced an improper colouring")
    if colouring.palette_size > bounds.t:
        raise ContractViolationError(
            f"pipeline used {colouring.palette_size} colours, budget {bounds.t}")
    return colouring


def colour_composition(comp: StripComposition, fc: FractionalColouring,
                       bounds: Bounds) -> Colouring:
    """Steps 2-6 on a given decomposition: round, contract, colour, merge."""
    rounded = round_all(fc, comp, bounds)
    overlaps = compute_overlaps(rounded, comp)
    contraction = contract(comp, overlaps)
    certificate = transfer_fractional(rounded, contraction, comp)
    if not bounds.leq_t_prime(certificate.total):
        raise ContractViolationError("G' certificate exceeds t'(G)")
    cg = colour_gprime(contraction, bounds.t)
    hub = lift_to_hub(cg, contraction, comp, overlaps)
    strip_cols: dict[int, Colouring] = {}
    for e, strip in enumerate(comp.strips):
        if strip.trivial:
            strip_cols[e] = Colouring((0,))
        else:
            spec = StripColourSpec(k=bounds.t, r=int(overlaps[e]))
            strip_cols[e] = colour_strip(strip, spec)
    return merge(hub, strip_cols, comp, palette=bounds.t)


def _colour_graph(g: Graph, t: int) -> Colouring:
    """Recursive reduce-and-colour with the fixed original budget t."""
    if g.n == 0:
        return Colouring(())
    if g.n == 1:
        return Colouring((0,))

    v = find_low_degree(g, t)
    if v is not None:
        sub, keep = g.without_vertex(v)
        inner = _colour_graph(sub, t)
        used = {inner.assignment[keep.index(u)] for u in sorted(g.adj[v])}
        colour = next(c for c in range(t) if c not in used)
        assignment = [0] * g.n
        for i, u in enumerate(keep):
            assignment[u] = inner.assignment[i]
        assignment[v] = colour
        return Colouring(tuple(assignment))

    pair = find_nonlinear_homogeneous_pair(g)
    if pair is not None:
        sub, recipe = reduce_homogeneous_pair(g, pair)
        return recipe.extend(_colour_graph(sub, t))

    if not g.is_connected():
        assignment = [0] * g.n
        for comp_vertices in g.components():
            inner = _colour_graph(g.induced(comp_vertices), t)
            for i, u in enumerate(comp_vertices):
                assignment[u] = inner.assignment[i]
        return Colouring(tuple(assignment))

    cut = find_clique_cutset(g)
    if cut is not None:
        _, parts = cut
        return _colour_parts(g, parts, t)

    # robust: dispatch on structure
    rep = recognize_circular_interval(g)
    if rep is not None:
        return colour_circular_interval(g, rep)
    comp = detect_strip_decomposition(g)
    if comp is not None:
        bounds, fc = compute_bounds(comp.graph)
        inner = colour_composition(normalize(comp), fc, bounds)
        # the detector preserves vertex identity, so carry colours over 1:1
        return inner
    raise DecompositionRequiredError(
        "robust graph is neither a recognizable circular interval graph nor "
        "decomposable by the limited detector; supply a composition file")


def _colour_parts(g: Graph, parts: list[list[int]], t: int) -> Colouring:
    """Colour clique-cutset parts independently and glue on the cutset."""
    assignment: list[Optional[int]] = [None] * g.n
    for part in parts:
        inner = _colour_graph(g.induced(part), t)
        fixed = {u: assignment[u] for u in part if assignment[u] is not None}
        if not fixed:
            for i, u in enumerate(part):
                assignment[u] = inner.assignment[i]
            continue
        mapping: dict[int, int] = {}
        for i, u in enumerate(part):
            if u in fixed:
                mapping[inner.assignment[i]] = fixed[u]
        taken = set(mapping.values())
        spare = iter(c for c in range(t) if c not in taken)
        for i, u in enumerate(part):
            c = inner.assignment[i]
            if c not in mapping:
                mapping[c] = next(spare)
                taken.add(mapping[c])
        for i, u in enumerate(part):
            assignment[u] = mapping[inner.assignment[i]]
    return Colouring(tuple(assignment))  # type: ignore[arg-type]
