"""Immutable simple undirected graphs and the edge-list text format.

Vertices are dense integers 0..n-1 so that isolated vertices are
representable and membership tests can use bitmasks. The file format:

    c optional comment lines anywhere
    p ds <n> <m>
    e <u> <v>          (exactly m of these, 0 <= u,v < n, u != v)

Duplicate edge lines and both orientations of an edge collapse to a
single edge; self-loops are rejected. Serialization writes each edge
with u < v, sorted lexicographically.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError, RangeError, ValidationError


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Immutable after construction; all queries are pure reads, so
    instances are safe to share across concurrent workers.
    `closed_masks[v]` is N[v] (v and its neighbors) as a bitmask.
    """

    __slots__ = ("n", "m", "adj", "closed_masks", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise RangeError(f"vertex count must be >= 0, got {n}")
        seen: set[tuple[int, int]] = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise RangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        masks = []
        for v in range(n):
            mask = 1 << v
            for u in nbrs[v]:
                mask |= 1 << u
            masks.append(mask)
        self.closed_masks = tuple(masks)
        self.full_mask = (1 << n) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def mask_of(g: Graph, ids: Iterable[int]) -> int:
    """Bitmask of a vertex collection, validating ranges."""
    mask = 0
    for v in ids:
        if not 0 <= v < g.n:
            raise RangeError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def ids_of(mask: int) -> tuple[int, ...]:
    """Sorted vertex ids set in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """N[v]: the vertex v together with its neighbors, sorted."""
    if not 0 <= v < g.n:
        raise RangeError(f"vertex {v} out of range for n={g.n}")
    return tuple(sorted(g.adj[v] + (v,)))


def is_dominating(g: Graph, dominating: Iterable[int], targets: Iterable[int] | None = None) -> bool:
    """True iff every target lies in the closed neighborhood of the set.

    `targets` defaults to all vertices.
    """
    covered = 0
    for v in dominating:
        if not 0 <= v < g.n:
            raise RangeError(f"vertex {v} out of range for n={g.n}")
        covered |= g.closed_masks[v]
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    return tmask & ~covered == 0


def validate(g: Graph) -> None:
    """Re-check every structural invariant; raises ValidationError.

    Covers adjacency symmetry over all pairs, strictly increasing
    neighbor lists, absence of self-loops, and the edge-count identity.
    """
    if len(g.adj) != g.n:
        raise ValidationError("adjacency length does not match vertex count")
    degree_sum = 0
    for v in range(g.n):
        row = g.adj[v]
        degree_sum += len(row)
        for i, u in enumerate(row):
            if not 0 <= u < g.n:
                raise ValidationError(f"neighbor {u} of {v} out of range")
            if u == v:
                raise ValidationError(f"self-loop at vertex {v}")
            if i > 0 and row[i - 1] >= u:
                raise ValidationError(f"adjacency of {v} not strictly increasing")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (v in g.adj[u]) != (u in g.adj[v]):
                raise ValidationError(f"asymmetric adjacency between {u} and {v}")
    if degree_sum != 2 * g.m:
        raise ValidationError("edge count does not match adjacency lists")


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format; see the module docstring.

    Raises ParseError (malformed line), RangeError (id out of range)
    or ValidationError (self-loop), each tagged with the line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = m_declared = None
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "ds":
                raise ParseError(f"expected 'p ds <n> <m>', got {line!r}", lineno)
            try:
                n, m_declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0 or m_declared < 0:
                raise ParseError("negative counts in header", lineno)
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
        if edge_lines >= m_declared:
            raise ParseError(f"more than {m_declared} edge lines", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(f"line {lineno}: endpoint out of range in {line!r}")
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop {line!r}")
        edges.append((u, v))
        edge_lines += 1
    if n is None:
        raise ParseError("missing 'p ds <n> <m>' header")
    if edge_lines != m_declared:
        raise ParseError(f"header declares {m_declared} edges, found {edge_lines}")
    g = Graph(n, edges)
    validate(g)
    return g


def serialize_graph(g: Graph) -> str:
    lines = [f"p ds {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
