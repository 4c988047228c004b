"""Vertex orderings: the DFS preorder that fixes the set comparison order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class VertexOrdering:
    """Bijection between the vertices of one component and ranks 0..size-1.

    ``rank[v]`` is the position of vertex ``v`` (-1 for vertices outside
    the ordered component); ``vertex_at[r]`` is its inverse.  Orderings
    produced by :func:`dfs_ordering` are genuine DFS preorders, which is
    what the enumeration engines rely on; arbitrary orders can be built
    with :func:`ordering_from_sequence` for experiments that deliberately
    break that property.
    """

    rank: tuple[int, ...]
    vertex_at: tuple[int, ...]
    root: int

    @property
    def size(self) -> int:
        return len(self.vertex_at)

    def rank_of(self, v: int) -> int:
        r = self.rank[v]
        if r < 0:
            raise ValueError(f"vertex {v} is outside the ordered component")
        return r

    def is_dfs_preorder(self, g: Graph) -> bool:
        """True iff this order is a DFS preorder of g's component of root.

        Replays a DFS: a preorder is depth-first exactly when each vertex
        after the root is adjacent to the deepest not-yet-exhausted vertex
        on the current ancestor path.
        """
        if not self.vertex_at or self.vertex_at[0] != self.root:
            return False
        path = [self.root]
        in_order = set(self.vertex_at)
        for v in self.vertex_at[1:]:
            while path and self.rank[v] not in (self.rank[w] for w in g.adj[path[-1]]):
                if v in g.adj[path[-1]]:
                    break
                path.pop()
            if not path or v not in g.adj[path[-1]]:
                return False
            path.append(v)
        return in_order == set(self.vertex_at)


def dfs_ordering(g: Graph, root: int) -> VertexOrdering:
    """DFS preorder from root, exploring neighbors in ascending label order.

    Covers exactly the connected component containing root, so the result
    is deterministic for a given graph and root.
    """
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} out of range for n={g.n}")
    rank = [-1] * g.n
    order = [root]
    rank[root] = 0
    stack = [(root, iter(g.adj[root]))]
    while stack:
        v, nbrs = stack[-1]
        for w in nbrs:
            if rank[w] < 0:
                rank[w] = len(order)
                order.append(w)
                stack.append((w, iter(g.adj[w])))
                break
        else:
            stack.pop()
    return VertexOrdering(rank=tuple(rank), vertex_at=tuple(order), root=root)


def ordering_from_sequence(n: int, sequence: Sequence[int], root: int | None = None) -> VertexOrdering:
    """Ordering with ``sequence[r]`` at rank r; no DFS property is implied."""
    if sorted(sequence) != sorted(set(sequence)):
        raise ValueError("ordering sequence has duplicates")
    rank = [-1] * n
    for r, v in enumerate(sequence):
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range for n={n}")
        rank[v] = r
    return VertexOrdering(rank=tuple(rank), vertex_at=tuple(sequence), root=root if root is not None else sequence[0])


def identity_ordering(n: int) -> VertexOrdering:
    """Ranks equal to labels: compares vertex sets by their raw labels."""
    return ordering_from_sequence(n, range(n))
