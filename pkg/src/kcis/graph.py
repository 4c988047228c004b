"""Simple undirected graphs: construction, parsing, components."""

from __future__ import annotations

from typing import Iterable, Sequence


class ParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency lists are stored sorted ascending, without self-loops or
    duplicates; ``m`` is the edge count and ``adj_mask[v]`` the neighbor
    set of ``v`` as a bitmask (bit ``u`` set iff ``{u, v}`` is an edge).
    """

    __slots__ = ("n", "m", "adj", "adj_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj_mask = tuple(masks)
        self.adj = tuple(tuple(_bits_ascending(mask)) for mask in masks)
        self.m = sum(mask.bit_count() for mask in masks) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def validate(self) -> None:
        """Check the structural invariants; raises AssertionError on breakage."""
        assert len(self.adj) == self.n
        for u, nbrs in enumerate(self.adj):
            assert list(nbrs) == sorted(set(nbrs)), f"adjacency of {u} not sorted/unique"
            assert u not in nbrs, f"self-loop at {u}"
            for v in nbrs:
                assert u in self.adj[v], f"edge ({u}, {v}) not symmetric"
        assert self.m * 2 == sum(len(nbrs) for nbrs in self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits_ascending(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse an edge-list document into a Graph.

    Lines are blank, ``#`` comments, or two whitespace-separated
    non-negative integers ``u v``.  An optional first non-comment line
    ``p <n> <m>`` (DIMACS-style; a format word such as ``p edge n m`` is
    tolerated) fixes the vertex count; otherwise n = max label + 1.
    DIMACS inputs numbered 1..n are shifted to 0..n-1 when the header
    is present and the labels would otherwise overflow it.  Duplicate
    edges collapse silently; self-loops are rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared_n: int | None = None
    raw_edges: list[tuple[int, int, int]] = []  # (u, v, line number)
    saw_data = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if parts[0] == "p":
            if saw_data or declared_n is not None:
                raise ParseError("header must precede all edges", lineno)
            args = parts[1:]
            if args and not args[0].lstrip("-").isdigit():
                args = args[1:]  # skip DIMACS format word
            if len(args) != 2:
                raise ParseError(f"malformed header {stripped!r}", lineno)
            declared_n = _parse_label(args[0], lineno)
            _parse_label(args[1], lineno)  # edge count, informational
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {stripped!r}", lineno)
        u = _parse_label(parts[0], lineno)
        v = _parse_label(parts[1], lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        saw_data = True
        raw_edges.append((u, v, lineno))

    if declared_n is None:
        n = 1 + max((max(u, v) for u, v, _ in raw_edges), default=-1)
        return Graph(n, [(u, v) for u, v, _ in raw_edges])

    n = declared_n
    labels = [l for u, v, _ in raw_edges for l in (u, v)]
    if labels and max(labels) == n and min(labels) >= 1:
        # 1-based DIMACS numbering: shift down.
        raw_edges = [(u - 1, v - 1, ln) for u, v, ln in raw_edges]
    for u, v, lineno in raw_edges:
        if u >= n or v >= n:
            raise ParseError(f"edge ({u}, {v}) exceeds declared vertex count {n}", lineno)
    return Graph(n, [(u, v) for u, v, _ in raw_edges])


def _parse_label(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative label: {value}", lineno)
    return value


def load_graph(path: str) -> Graph:
    with open(path, "rb") as handle:
        return parse_edge_list(handle.read())


def connected_components(g: Graph) -> list[list[int]]:
    """Partition the vertices into maximal connected sets.

    Each component is sorted ascending; the list is ordered by smallest
    member (which equals discovery order when scanning labels upward).
    """
    seen = [False] * g.n
    components: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        components.append(comp)
    return components
