"""DIMACS-like text I/O for graphs and colourings.

Graph format: comment lines "c ...", one header "p edge <n> <m>", then m
edge lines "e <u> <v>" with 1-based vertex indices.  Colouring format:
one header "s <palette-size>" then lines "v <vertex> <colour>" with
1-based vertices and 0-based colours.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Colouring, Graph


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line_no)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed problem line {line!r}", line_no)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed problem line {line!r}", line_no)
            if n < 0 or m < 0:
                raise ParseError("negative counts in problem line", line_no)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", line_no)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", line_no)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range in {line!r}", line_no)
            if u == v:
                raise ParseError(f"self-loop in {line!r}", line_no)
            key = frozenset((u, v))
            if key in seen:
                raise ParseError(f"duplicate edge in {line!r}", line_no)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise ParseError("missing problem line")
    if m != len(edges):
        raise ParseError(f"problem line declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_colouring(text: str, n: int) -> Colouring:
    assignment: dict[int, int] = {}
    declared = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if len(parts) != 2:
                raise ParseError(f"malformed size line {line!r}", line_no)
            declared = int(parts[1])
        elif parts[0] == "v":
            if len(parts) != 3:
                raise ParseError(f"malformed vertex line {line!r}", line_no)
            v, c = int(parts[1]), int(parts[2])
            if not 1 <= v <= n:
                raise ParseError(f"vertex index out of range in {line!r}", line_no)
            if v - 1 in assignment:
                raise ParseError(f"vertex {v} coloured twice", line_no)
            if c < 0:
                raise ParseError(f"negative colour in {line!r}", line_no)
            assignment[v - 1] = c
        else:
            raise ParseError(f"unrecognized line {line!r}", line_no)
    if len(assignment) != n:
        raise ParseError(f"colouring covers {len(assignment)} of {n} vertices")
    col = Colouring(tuple(assignment[v] for v in range(n)))
    if declared is not None and declared != col.palette_size:
        raise ParseError(
            f"declared palette size {declared} != actual {col.palette_size}")
    return col


def serialize_colouring(c: Colouring) -> str:
    lines = [f"s {c.palette_size}"]
    lines.extend(f"v {v + 1} {col}" for v, col in enumerate(c.assignment))
    return "\n".join(lines) + "\n"
