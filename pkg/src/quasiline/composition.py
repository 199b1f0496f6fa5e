"""Strip compositions: the structured input the pipeline colours.

A composition is an underlying directed multigraph H plus one linear
interval strip (S_e, X_e, Y_e) per H-edge; the composed graph is the
disjoint union of the strips with each hub clique C_v (the union of the
end-cliques assigned to an H-vertex v) completed into a clique.

Compositions are first-class input via a small text format, because the
published strip-decomposition algorithms are out of scope here; the
bundled detector only recovers line graphs (Krausz-style, through the
root-graph reconstruction) and single-strip proper interval graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CompositionError, ParseError
from .graphs import Bounds, Graph, Multigraph
from .interval import LinearIntervalRep, recognize_linear_interval


@dataclass(frozen=True)
class Strip:
    """Linear interval strip: S_e with end-cliques X (leftmost) and Y (rightmost)."""

    graph: Graph
    rep: LinearIntervalRep
    x_size: int
    y_size: int

    @property
    def trivial(self) -> bool:
        return self.graph.n == 1 and self.x_size == 1 and self.y_size == 1

    def x_local(self) -> tuple[int, ...]:
        return self.rep.order[:self.x_size]

    def y_local(self) -> tuple[int, ...]:
        return self.rep.order[self.graph.n - self.y_size:]

    def validate(self, edge_name: str = "?") -> None:
        g = self.graph
        if g.n == 0:
            raise CompositionError(f"strip {edge_name}: empty strip")
        if not (1 <= self.x_size <= g.n and 1 <= self.y_size <= g.n):
            raise CompositionError(f"strip {edge_name}: end-clique sizes out of range")
        if not self.rep.is_valid_for(g):
            raise CompositionError(
                f"strip {edge_name}: representation does not match the strip graph")
        if not g.is_clique(self.x_local()):
            raise CompositionError(f"strip {edge_name}: X is not a clique")
        if not g.is_clique(self.y_local()):
            raise CompositionError(f"strip {edge_name}: Y is not a clique")
        if self.trivial:
            return
        if set(self.x_local()) & set(self.y_local()):
            raise CompositionError(
                f"strip {edge_name}: non-trivial strip with overlapping end-cliques")
        if not g.is_connected():
            raise CompositionError(f"strip {edge_name}: non-trivial strip disconnected")

    def reversed_strip(self) -> "Strip":
        """Mirror left/right; the strip graph itself is unchanged."""
        n = self.graph.n
        order = tuple(reversed(self.rep.order))
        cliques = tuple(sorted((n - 1 - b, n - 1 - a) for a, b in self.rep.cliques))
        return Strip(self.graph, LinearIntervalRep(order, cliques),
                     self.y_size, self.x_size)

    @staticmethod
    def from_ranges(n: int, ranges: Sequence[tuple[int, int]],
                    x_size: int, y_size: int) -> "Strip":
        """Strip whose left-to-right order is the vertex order 0..n-1."""
        edges = set()
        for a, b in ranges:
            if not (0 <= a <= b < n):
                raise CompositionError(f"range ({a},{b}) out of bounds for n={n}")
            for i in range(a, b + 1):
                for j in range(i + 1, b + 1):
                    edges.add((i, j))
        g = Graph.from_edges(n, sorted(edges))
        rep = recognize_linear_interval(g)
        if rep is None:
            raise CompositionError("ranges do not describe a linear interval graph")
        # keep the declared order; re-derive maximal ranges for it
        rep = LinearIntervalRep(tuple(range(n)), _maximal_ranges(g, n))
        if not rep.is_valid_for(g):
            raise CompositionError("ranges are not consistent with the declared order")
        return Strip(g, rep, x_size, y_size)

    @staticmethod
    def single_vertex() -> "Strip":
        g = Graph.from_edges(1, [])
        return Strip(g, LinearIntervalRep((0,), ((0, 0),)), 1, 1)


def _maximal_ranges(g: Graph, n: int) -> tuple[tuple[int, int], ...]:
    reach = []
    for i in range(n):
        rs = [w for w in g.adj[i]] + [i]
        reach.append(max(rs))
    out = []
    for i in range(n):
        if i == 0 or reach[i - 1] < reach[i]:
            out.append((i, reach[i]))
    return tuple(out)


@dataclass(frozen=True)
class StripComposition:
    """A composed graph together with all its bookkeeping."""

    h: Multigraph
    strips: tuple[Strip, ...]
    graph: Graph
    embed: tuple[tuple[int, ...], ...]  # embed[e][local vertex] = composed vertex

    def x_vertices(self, e: int) -> frozenset[int]:
        return frozenset(self.embed[e][v] for v in self.strips[e].x_local())

    def y_vertices(self, e: int) -> frozenset[int]:
        return frozenset(self.embed[e][v] for v in self.strips[e].y_local())

    def strip_vertices(self, e: int) -> frozenset[int]:
        return frozenset(self.embed[e])

    def hub_clique(self, v: int) -> frozenset[int]:
        out: set[int] = set()
        for e, (tail, head) in enumerate(self.h.edges):
            if tail == v:
                out |= self.x_vertices(e)
            if head == v:
                out |= self.y_vertices(e)
        return frozenset(out)

    def hub_vertex_list(self) -> list[int]:
        out: set[int] = set()
        for v in range(self.h.n):
            out |= self.hub_clique(v)
        return sorted(out)

    def nontrivial_edges(self) -> list[int]:
        return [e for e in range(len(self.strips)) if not self.strips[e].trivial]


def compose(h: Multigraph, strips: Sequence[Strip],
            embed: Optional[Sequence[Sequence[int]]] = None,
            require_canonical: bool = True) -> tuple[Graph, StripComposition]:
    """Build the composed graph from H and one strip per H-edge."""
    if len(strips) != len(h.edges):
        raise CompositionError(
            f"{len(h.edges)} edges in H but {len(strips)} strips supplied")
    for e, strip in enumerate(strips):
        strip.validate(edge_name=str(e))
        if require_canonical and not strip.trivial:
            pass  # validate() already enforced the canonical shape
    total = sum(s.graph.n for s in strips)
    if embed is None:
        offsets = []
        acc = 0
        for s in strips:
            offsets.append(acc)
            acc += s.graph.n
        embed_t = tuple(tuple(offsets[e] + v for v in range(strips[e].graph.n))
                        for e in range(len(strips)))
    else:
        embed_t = tuple(tuple(em) for em in embed)
        flat = [v for em in embed_t for v in em]
        if sorted(flat) != list(range(total)):
            raise CompositionError("embedding is not a bijection onto 0..n-1")
        if any(len(embed_t[e]) != strips[e].graph.n for e in range(len(strips))):
            raise CompositionError("embedding length mismatch with strip size")
    edges: set[tuple[int, int]] = set()
    for e, s in enumerate(strips):
        for u, v in s.graph.edges():
            a, b = embed_t[e][u], embed_t[e][v]
            edges.add((min(a, b), max(a, b)))
    comp = StripComposition(h, tuple(strips),
                            Graph.from_edges(total, sorted(edges)), embed_t)
    for hv in range(h.n):
        cv = sorted(comp.hub_clique(hv))
        for i in range(len(cv)):
            for j in range(i + 1, len(cv)):
                edges.add((cv[i], cv[j]))
    g = Graph.from_edges(total, sorted(edges))
    comp = StripComposition(h, tuple(strips), g, embed_t)
    return g, comp


def hub_graph(c: StripComposition) -> Graph:
    """G_h: the induced subgraph on the union of all hub cliques."""
    return c.graph.induced(c.hub_vertex_list())


def normalize(c: StripComposition, require_loopless: bool = False) -> StripComposition:
    """Reorient every edge so |X_e| <= |Y_e|; reports loops when asked."""
    if require_loopless and c.h.loops():
        raise CompositionError(f"loops in underlying multigraph: {c.h.loops()}")
    new_edges = []
    new_strips = []
    for e, (tail, head) in enumerate(c.h.edges):
        s = c.strips[e]
        if s.x_size > s.y_size:
            new_edges.append((head, tail))
            new_strips.append(s.reversed_strip())
        else:
            new_edges.append((tail, head))
            new_strips.append(s)
    h2 = Multigraph(c.h.n, tuple(new_edges), c.h.labels)
    g2, comp2 = compose(h2, new_strips, embed=c.embed)
    if g2.edges() != c.graph.edges():
        raise CompositionError("normalisation changed the composed graph")
    return comp2


@dataclass(frozen=True)
class RobustnessViolation:
    kind: str  # "disconnected" | "low-degree" | "clique-cutset" | "homogeneous-pair"
    witness: tuple

    def __str__(self):
        return f"{self.kind}: {self.witness}"


def check_robust(g: Graph, bounds: Bounds) -> list[RobustnessViolation]:
    """Empty list iff g is robust: connected, min degree >= t(G), no clique
    cutset, no nonlinear homogeneous pair of cliques."""
    from .reductions import find_clique_cutset, find_nonlinear_homogeneous_pair

    out: list[RobustnessViolation] = []
    if not g.is_connected():
        out.append(RobustnessViolation(
            "disconnected", tuple(tuple(c) for c in g.components())))
    for v in range(g.n):
        if g.degree(v) < bounds.t:
            out.append(RobustnessViolation("low-degree", (v, g.degree(v))))
    if g.is_connected():
        cut = find_clique_cutset(g)
        if cut is not None:
            clique, parts = cut
            out.append(RobustnessViolation(
                "clique-cutset", (tuple(clique), tuple(tuple(p) for p in parts))))
    pair = find_nonlinear_homogeneous_pair(g)
    if pair is not None:
        out.append(RobustnessViolation(
            "homogeneous-pair", (tuple(sorted(pair.a)), tuple(sorted(pair.b)))))
    return out


def _twin_classes(g: Graph) -> list[list[int]]:
    by_closed: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        by_closed.setdefault(g.adj[v] | {v}, []).append(v)
    return sorted(by_closed.values(), key=lambda c: c[0])


def _line_graph_root(g: Graph) -> Optional[tuple[Multigraph, list[tuple[int, int]]]]:
    """If g = L(H) for a loopless multigraph H, return H and, per g-vertex,
    the pair of H-vertices of its edge.  True twins are collapsed first so
    parallel edges come back as twin classes."""
    import networkx as nx

    classes = _twin_classes(g)
    reps = [c[0] for c in classes]
    class_of = {v: i for i, c in enumerate(classes) for v in c}
    gc = g.induced(reps)  # vertex i of gc = class i (reps sorted by class)

    if gc.n == 1:
        cells: list[tuple[int, ...]] = [(0,), ()]
        ends = {0: (0, 1)}
    else:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(gc.n))
        nxg.add_edges_from(gc.edges())
        try:
            root = nx.inverse_line_graph(nxg)
        except nx.NetworkXError:
            return None
        cell_list = sorted(tuple(sorted(c for c in cell if c is not None))
                           for cell in root.nodes())
        cell_index = {cell: i for i, cell in enumerate(cell_list)}
        member: dict[int, list[int]] = {v: [] for v in range(gc.n)}
        for cell, idx in cell_index.items():
            for v in cell:
                member[v].append(idx)
        ends = {}
        fresh = len(cell_list)
        for v in range(gc.n):
            cs = member[v]
            if len(cs) == 2:
                ends[v] = (cs[0], cs[1])
            elif len(cs) == 1:
                ends[v] = (cs[0], fresh)
                fresh += 1
            else:
                return None
        cells = list(cell_list) + [() for _ in range(fresh - len(cell_list))]
    n_h = max(max(p) for p in ends.values()) + 1
    h_edges = []
    vertex_ends = []
    for v in range(g.n):
        a, b = ends[class_of[v]]
        h_edges.append((a, b))
        vertex_ends.append((a, b))
    h = Multigraph(n_h, tuple(h_edges))
    if h.line_graph().edges() != g.edges():
        return None
    return h, vertex_ends


def detect_strip_decomposition(g: Graph) -> Optional[StripComposition]:
    """Best effort: recovers line graphs (trivial strips over the root
    multigraph) and single-strip proper interval graphs; None otherwise."""
    if g.n == 0 or not g.is_connected():
        return None
    root = _line_graph_root(g)
    if root is not None:
        h, _ = root
        strips = [Strip.single_vertex() for _ in range(g.n)]
        embed = [(v,) for v in range(g.n)]
        composed, comp = compose(h, strips, embed=embed)
        if composed.edges() == g.edges():
            return comp
    rep = recognize_linear_interval(g)
    if rep is not None and g.n >= 2:
        strip = Strip(g, rep, 1, 1)
        if not strip.trivial:
            h = Multigraph(2, ((0, 1),))
            composed, comp = compose(h, [strip], embed=[tuple(range(g.n))])
            if composed.edges() == g.edges():
                return comp
    return None


# ---------------------------------------------------------------------------
# composition text format

def parse_composition(text: str) -> StripComposition:
    lines = text.splitlines()
    i = 0
    n_lines = len(lines)

    def current() -> tuple[int, list[str]]:
        nonlocal i
        while i < n_lines:
            stripped = lines[i].strip()
            if stripped and not stripped.startswith("c"):
                return i + 1, stripped.split()
            i += 1
        return n_lines, []

    line_no, parts = current()
    if parts != ["multigraph"]:
        raise ParseError("expected 'multigraph' section header", line_no)
    i += 1
    names: list[str] = []
    edge_ids: list[str] = []
    edge_ends: list[tuple[int, int]] = []
    while True:
        line_no, parts = current()
        if not parts or parts[0] == "strip":
            break
        if parts[0] == "vertex" and len(parts) == 2:
            if parts[1] in names:
                raise ParseError(f"duplicate vertex {parts[1]!r}", line_no)
            names.append(parts[1])
        elif parts[0] == "edge" and len(parts) == 4:
            eid, tail, head = parts[1], parts[2], parts[3]
            if eid in edge_ids:
                raise ParseError(f"duplicate edge id {eid!r}", line_no)
            if tail not in names or head not in names:
                raise ParseError(f"unknown endpoint in edge {eid!r}", line_no)
            edge_ids.append(eid)
            edge_ends.append((names.index(tail), names.index(head)))
        else:
            raise ParseError(f"unrecognized line {lines[i]!r}", line_no)
        i += 1
    strips_by_id: dict[str, Strip] = {}
    while True:
        line_no, parts = current()
        if not parts:
            break
        if parts[0] != "strip" or len(parts) != 2:
            raise ParseError(f"expected strip header, got {lines[i]!r}", line_no)
        eid = parts[1]
        if eid not in edge_ids:
            raise ParseError(f"strip for unknown edge {eid!r}", line_no)
        if eid in strips_by_id:
            raise ParseError(f"duplicate strip for edge {eid!r}", line_no)
        i += 1
        line_no, parts = current()
        if parts and parts[0] == "trivial":
            strips_by_id[eid] = Strip.single_vertex()
            i += 1
            continue
        fields: dict[str, int] = {}
        ranges: list[tuple[int, int]] = []
        while True:
            line_no, parts = current()
            if not parts or parts[0] in ("strip",):
                break
            if parts[0] in ("n", "xsize", "ysize") and len(parts) == 2:
                fields[parts[0]] = int(parts[1])
            elif parts[0] == "clique" and len(parts) == 3:
                a, b = int(parts[1]), int(parts[2])
                if a < 1 or b < a:
                    raise ParseError(f"bad clique range {lines[i]!r}", line_no)
                ranges.append((a - 1, b - 1))
            else:
                raise ParseError(f"unrecognized line {lines[i]!r}", line_no)
            i += 1
        missing = {"n", "xsize", "ysize"} - set(fields)
        if missing:
            raise ParseError(f"strip {eid!r} missing {sorted(missing)}", line_no)
        n, xs, ys = fields["n"], fields["xsize"], fields["ysize"]
        if xs + ys > n:
            raise ParseError(f"strip {eid!r}: overlapping end-cliques", line_no)
        try:
            strips_by_id[eid] = Strip.from_ranges(n, ranges, xs, ys)
        except CompositionError as exc:
            raise ParseError(f"strip {eid!r}: {exc}", line_no)
    missing_strips = [eid for eid in edge_ids if eid not in strips_by_id]
    if missing_strips:
        raise ParseError(f"no strip given for edges {missing_strips}")
    h = Multigraph(len(names), tuple(edge_ends), tuple(names))
    _, comp = compose(h, [strips_by_id[eid] for eid in edge_ids])
    return comp


def serialize_composition(c: StripComposition) -> str:
    names = list(c.h.labels) if c.h.labels else [f"v{i}" for i in range(c.h.n)]
    out = ["multigraph"]
    out.extend(f"vertex {nm}" for nm in names)
    for e, (tail, head) in enumerate(c.h.edges):
        out.append(f"edge e{e} {names[tail]} {names[head]}")
    for e, s in enumerate(c.strips):
        out.append(f"strip e{e}")
        if s.trivial:
            out.append("trivial")
            continue
        out.append(f"n {s.graph.n}")
        out.append(f"xsize {s.x_size}")
        out.append(f"ysize {s.y_size}")
        pos = {v: p for p, v in enumerate(s.rep.order)}
        gpos = Graph.from_edges(s.graph.n,
                                [(pos[u], pos[v]) for u, v in s.graph.edges()])
        for a, b in _maximal_ranges(gpos, s.graph.n):
            out.append(f"clique {a + 1} {b + 1}")
    return "\n".join(out) + "\n"
