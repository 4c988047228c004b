"""Deterministic graph families for benchmarks and verification runs."""

from __future__ import annotations

import random

from .graph import Graph


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (i, j) is labeled i*cols + j."""
    _require(rows >= 1 and cols >= 1, f"grid needs positive dimensions, got {rows}x{cols}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), reproducible from the seed.

    Pairs (i, j), i < j, are examined in ascending order with one RNG
    draw each, so a given (n, p, seed) always yields the same graph.
    """
    _require(n >= 1, f"gnp needs n >= 1, got {n}")
    _require(0.0 <= p <= 1.0, f"gnp needs p in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return Graph(n, edges)


def counterexample_path(n: int, k: int) -> Graph:
    """Path whose labels appear in order 0..k-1, n-1, k..n-2 along the path.

    This is the labeling under which the exchange neighborhood loses its
    "some neighbor is lexicographically smaller" guarantee when vertex
    labels are compared directly instead of through a DFS order.
    Requires n > 2k + 1.
    """
    _require(k >= 1, f"counterexample path needs k >= 1, got {k}")
    _require(n > 2 * k + 1, f"counterexample path needs n > 2k+1, got n={n}, k={k}")
    order = list(range(k)) + [n - 1] + list(range(k, n - 1))
    return Graph(n, [(order[i], order[i + 1]) for i in range(n - 1)])


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "star": (star_graph, 1),
    "grid": (grid_graph, 2),
    "counterexample_path": (counterexample_path, 2),
}


def generate_graph(spec: str, seed: int | None = None) -> Graph:
    """Build a graph from a family descriptor like ``path:6`` or ``gnp:30:0.1:7``.

    Arguments are colon-separated; hyphens and underscores in the family
    name are interchangeable.  For ``gnp`` the trailing seed argument may
    be omitted and supplied via ``seed`` instead.
    """
    parts = spec.split(":")
    name = parts[0].replace("-", "_").lower()
    args = parts[1:]
    if name == "gnp":
        if len(args) == 2 and seed is not None:
            args = args + [str(seed)]
        if len(args) != 3:
            raise ValueError(f"gnp needs n:p[:seed], got {spec!r}")
        return gnp_graph(_int_arg(args[0], spec), _float_arg(args[1], spec), _int_arg(args[2], spec))
    if name not in _FAMILIES:
        raise ValueError(f"unknown graph family {parts[0]!r}")
    fn, arity = _FAMILIES[name]
    if len(args) != arity:
        raise ValueError(f"{name} needs {arity} argument(s), got {spec!r}")
    return fn(*(_int_arg(a, spec) for a in args))


def _int_arg(token: str, spec: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"bad integer {token!r} in generator spec {spec!r}") from None


def _float_arg(token: str, spec: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"bad number {token!r} in generator spec {spec!r}") from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)
