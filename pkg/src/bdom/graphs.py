"""Graphs, orientations, and broadcast signal reception.

Vertices are dense integer ids 0..n-1.  A Graph keeps its edges in a
canonical order (insertion order, endpoints normalized to u < v); that
order is the index space for orientation bit-vectors: bit k = 0 orients
edge k from its low endpoint to its high endpoint, bit k = 1 the other
way around.  There are 2^|E| orientations and they are enumerated by
treating the bit-vector as a binary integer, bit k = (index >> k) & 1.

A Digraph stores one arc per oriented edge.  Anti-parallel arc pairs
are allowed (that is how an undirected graph is re-expressed for the
directed machinery); same-direction duplicates and loops are not.

Signal model: a tower at v sends strength t - d(v, w) to every vertex w
at directed distance d(v, w) < t, including strength t to itself.  The
reception at w is the sum over towers.  Distances come from
breadth-first search truncated at depth t - 1, cached per (digraph, t);
unreachable pairs are absent from the maps rather than set to a
sentinel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    InvalidVertex,
    LengthMismatch,
    LoopEdge,
    ParseError,
)


@dataclass(frozen=True)
class Params:
    """Transmission strength t and required reception r, both >= 1.

    r <= t is what makes domination feasible, but it is checked by the
    solver entry points, not here: reception itself is well defined for
    any positive pair.
    """

    t: int
    r: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.r < 1:
            raise ValueError(f"t and r must be positive, got ({self.t}, {self.r})")


class Graph:
    """Undirected simple graph with a canonical edge order."""

    __slots__ = ("n", "edges", "adjacency", "_dist_cache", "_digraph")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        self._dist_cache: dict[int, tuple[dict[int, int], ...]] = {}
        self._digraph: Digraph | None = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def bounded_distances(self, horizon: int) -> tuple[dict[int, int], ...]:
        """Per-source maps {w: d(v, w)} restricted to d < horizon."""
        cached = self._dist_cache.get(horizon)
        if cached is None:
            cached = tuple(
                _bfs(self.adjacency, v, horizon) for v in range(self.n)
            )
            self._dist_cache[horizon] = cached
        return cached

    def as_digraph(self) -> "Digraph":
        """The doubly-directed equivalent: each edge becomes two opposite arcs."""
        if self._digraph is None:
            arcs: list[tuple[int, int]] = []
            for u, v in self.edges:
                arcs.append((u, v))
                arcs.append((v, u))
            self._digraph = Digraph(self.n, arcs)
        return self._digraph


class Digraph:
    """Directed graph without loops or same-direction parallel arcs."""

    __slots__ = ("n", "out_adjacency", "in_adjacency", "_dist_cache")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        out_adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidVertex(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateEdge(f"parallel arc ({u}, {v})")
            seen.add((u, v))
            out_adj[u].append(v)
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            out_adj[u].sort()
            for v in out_adj[u]:
                in_adj[v].append(u)
        self.n = n
        self.out_adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(a) for a in out_adj
        )
        self.in_adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in in_adj
        )
        self._dist_cache: dict[int, tuple[dict[int, int], ...]] = {}

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in self.out_adjacency[u]
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.out_adjacency == other.out_adjacency
        )

    def __hash__(self) -> int:
        return hash((self.n, self.out_adjacency))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sum(map(len, self.out_adjacency))})"

    def bounded_distances(self, horizon: int) -> tuple[dict[int, int], ...]:
        cached = self._dist_cache.get(horizon)
        if cached is None:
            cached = tuple(
                _bfs(self.out_adjacency, v, horizon) for v in range(self.n)
            )
            self._dist_cache[horizon] = cached
        return cached


def _bfs(
    adjacency: Sequence[Sequence[int]], source: int, horizon: int
) -> dict[int, int]:
    """Distances from source strictly below horizon."""
    dist = {source: 0}
    if horizon <= 1:
        return dist
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du + 1 >= horizon:
            continue
        for w in adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def build_graph(n: int, edge_list: Iterable[Iterable[int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Endpoint pairs are normalized to (u, v) with u < v; the canonical
    edge order is the input order after normalization.
    """
    if n < 0:
        raise InvalidVertex(f"vertex count must be nonnegative, got {n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        a, b = pair
        if not (0 <= a < n) or not (0 <= b < n):
            raise InvalidVertex(f"edge ({a}, {b}) out of range for n={n}")
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


# ---- orientations ----------------------------------------------------------

Bits = Sequence[int]


def normalize_bits(bits: Bits | str, expected_length: int) -> tuple[int, ...]:
    """Accept '0101' strings or 0/1 sequences; enforce the edge count."""
    if isinstance(bits, str):
        try:
            values = tuple(int(ch) for ch in bits.strip())
        except ValueError as exc:
            raise LengthMismatch(f"not a bit string: {bits!r}") from exc
    else:
        values = tuple(int(b) for b in bits)
    if len(values) != expected_length:
        raise LengthMismatch(
            f"expected {expected_length} orientation bits, got {len(values)}"
        )
    if any(b not in (0, 1) for b in values):
        raise LengthMismatch(f"orientation bits must be 0/1, got {values}")
    return values


def bits_from_index(index: int, length: int) -> tuple[int, ...]:
    """Bit-vector for enumeration index: bit k = (index >> k) & 1."""
    return tuple((index >> k) & 1 for k in range(length))


def index_from_bits(bits: Bits) -> int:
    return sum(b << k for k, b in enumerate(bits))


def orient(graph: Graph, bits: Bits | str) -> Digraph:
    """Orientation of graph: bit k = 0 means edge k runs low id -> high id."""
    values = normalize_bits(bits, len(graph.edges))
    arcs = [
        (v, u) if b else (u, v) for (u, v), b in zip(graph.edges, values)
    ]
    return Digraph(graph.n, arcs)


def transpose(d: Digraph) -> Digraph:
    """Reverse every arc.  An involution: transpose(transpose(d)) == d."""
    return Digraph(d.n, ((v, u) for u, v in d.arcs))


# ---- reception -------------------------------------------------------------


def bounded_distances(d: Digraph, horizon: int) -> tuple[dict[int, int], ...]:
    """Per-source directed distances strictly below horizon.

    Vertices with no directed path from the source are absent (their
    distance is infinite, and a tower there would contribute nothing).
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    return d.bounded_distances(horizon)


def _check_towers(n: int, towers: Iterable[int]) -> frozenset[int]:
    ts = frozenset(towers)
    for v in ts:
        if not (0 <= v < n):
            raise InvalidVertex(f"tower {v} out of range for n={n}")
    return ts


def reception(d: Digraph, towers: Iterable[int], t: int) -> list[int]:
    """Directed reception at every vertex: sum of t - d(v, w) over towers v."""
    ts = _check_towers(d.n, towers)
    dist = d.bounded_distances(t)
    rec = [0] * d.n
    for v in ts:
        for w, dw in dist[v].items():
            rec[w] += t - dw
    return rec


def reception_undirected(g: Graph, towers: Iterable[int], t: int) -> list[int]:
    """Reception on an undirected graph (signal flows both ways)."""
    ts = _check_towers(g.n, towers)
    dist = g.bounded_distances(t)
    rec = [0] * g.n
    for v in ts:
        for w, dw in dist[v].items():
            rec[w] += t - dw
    return rec


def is_dominating(d: Digraph, towers: Iterable[int], p: Params) -> bool:
    """True iff every vertex receives at least r."""
    rec = reception(d, towers, p.t)
    return all(x >= p.r for x in rec)


# ---- text formats -----------------------------------------------------------
#
# .ug (undirected): first line "n m", then m lines "u v"; canonical edge
# order is line order.  .dg (directed): same framing, lines are arcs
# u -> v.  Lines starting with '#' are comments; blank lines ignored.


def _payload_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def _parse_header(lines: list[str], kind: str) -> tuple[int, int]:
    if not lines:
        raise ParseError(f"empty {kind} input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"{kind} header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"{kind} header must be integers: {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ParseError(f"{kind} header values must be nonnegative: {lines[0]!r}")
    if len(lines) - 1 != m:
        raise ParseError(
            f"{kind} declares {m} lines but has {len(lines) - 1}"
        )
    return n, m


def _parse_pairs(lines: list[str], kind: str) -> list[tuple[int, int]]:
    pairs = []
    for line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{kind} line must be 'u v', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"{kind} line must be integers: {line!r}") from exc
    return pairs


def parse_ug(text: str) -> Graph:
    lines = _payload_lines(text)
    n, _ = _parse_header(lines, ".ug")
    return build_graph(n, _parse_pairs(lines[1:], ".ug"))


def format_ug(g: Graph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_dg(text: str) -> Digraph:
    lines = _payload_lines(text)
    n, _ = _parse_header(lines, ".dg")
    return Digraph(n, _parse_pairs(lines[1:], ".dg"))


def format_dg(d: Digraph) -> str:
    arcs = d.arcs
    out = [f"{d.n} {len(arcs)}"]
    out.extend(f"{u} {v}" for u, v in arcs)
    return "\n".join(out) + "\n"
