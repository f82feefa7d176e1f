"""Brute-force chromatic symmetric function for small graphs.

Independent of the closed-form expansions: sums over edge subsets, sizes the
connected components with a union-find, and converts the resulting power-sum
terms to the elementary basis.  Intended as an oracle, so clarity wins over
speed and the edge count is hard-capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .compositions import Partition
from .efun import EFunction, p_partition_to_e
from .parallel import resolve_workers, run_chunked, split_ranges

DEFAULT_EDGE_BUDGET = 30


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError(f"vertex_count must be >= 1, got {self.vertex_count}")
        seen = set()
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))


def path_graph(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got n={n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def spider_graph(legs: Sequence[int]) -> Graph:
    """Paths of the given lengths sharing one common end vertex (vertex 0)."""
    if not legs:
        raise ValueError("spider needs at least one leg")
    if any(l < 1 for l in legs):
        raise ValueError(f"leg lengths must be positive, got {list(legs)}")
    edges = []
    next_vertex = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, next_vertex))
            prev = next_vertex
            next_vertex += 1
    return Graph(next_vertex, tuple(edges))


def _component_sizes(n: int, edges: Sequence[tuple[int, int]]) -> Partition:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    sizes: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def _signed_counts(args: tuple) -> dict[Partition, int]:
    # Partial sum over a contiguous range of edge-subset bitmasks.
    n, edges, lo, hi = args
    counts: dict[Partition, int] = {}
    for mask in range(lo, hi):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        lam = _component_sizes(n, chosen)
        sign = -1 if len(chosen) % 2 else 1
        counts[lam] = counts.get(lam, 0) + sign
    return counts


def csf_subset_expansion(graph: Graph, workers: int | None = 1,
                         budget: int = DEFAULT_EDGE_BUDGET) -> EFunction:
    """Chromatic symmetric function of ``graph`` in the elementary basis.

    Sums (-1)^|S| p_{lambda(S)} over all edge subsets S, where lambda(S) lists
    the component sizes of the spanning subgraph, then converts to the e-basis.
    Raises when the edge count exceeds ``budget`` (enumeration is 2^|E|).
    """
    m = len(graph.edges)
    if m > budget:
        raise ValueError(f"graph has {m} edges, above the enumeration budget {budget}")
    total = 1 << m
    pieces = split_ranges(total, resolve_workers(workers))
    chunks = [(graph.vertex_count, graph.edges, lo, hi) for lo, hi in pieces]
    counts: dict[Partition, int] = {}
    for partial in run_chunked(_signed_counts, chunks, workers):
        for lam, c in partial.items():
            counts[lam] = counts.get(lam, 0) + c
    out = EFunction.zero()
    for lam in sorted(counts, key=lambda p: (len(p), p)):
        if counts[lam]:
            out = out + p_partition_to_e(lam) * counts[lam]
    return out


def parse_graph_file(text: str) -> Graph:
    """Graph text format: first line the vertex count, then one ``u v`` edge per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError:
        raise ValueError("malformed graph file") from None
    return Graph(n, tuple(edges))
