"""Shared helpers for the test suite."""

from __future__ import annotations

from itertools import combinations

from bdom import Graph, build_graph


def is_connected(n: int, edges) -> bool:
    if n == 0:
        return False
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def connected_labeled_graphs(max_n: int) -> list[Graph]:
    """Every connected labeled graph on 1..max_n vertices, edges in
    lexicographic canonical order."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if is_connected(n, edges):
                out.append(build_graph(n, edges))
    return out
